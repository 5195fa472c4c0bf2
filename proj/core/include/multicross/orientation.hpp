#pragma once

#include <vector>

#include "multicross/diagram.hpp"

namespace multicross {

enum class FaceColor : unsigned char { white, black };

inline FaceColor other(FaceColor c) { return c == FaceColor::white ? FaceColor::black : FaceColor::white; }

struct Coloring {
  std::vector<FaceColor> color;  // per face id
  int white = 0;
  int black = 0;
};

// Orientation of every edge: orientation[e] is the end index (0 or 1) the
// edge points away from, i.e. the directed edge is dart 2e + orientation[e].
using Orientation = std::vector<unsigned char>;

inline Dart directed_dart(const Orientation& o, int edge) { return 2 * edge + o[edge]; }

// Edge in this slot points away from the crossing.
inline bool slot_is_out(const MulticrossingDiagram& d, const Orientation& o, SlotRef s) {
  return d.end_index_at(s) == o[d.edge_at(s)];
}

struct OrientedColoredDiagram {
  MulticrossingDiagram diagram;
  Orientation orientation;
  Coloring coloring;
};

// Proper 2-coloring of the faces (no two faces sharing an edge alike).
// Exactly two exist; the one coloring the face that contains the
// lowest-numbered dart white is returned. Planar even-degree maps always
// admit one; Errc::not_bipartite signals a corrupt map.
Coloring checkerboard_color(const MulticrossingDiagram& d);

// Orients every edge of an odd-order diagram so that each face boundary is
// coherently oriented, white faces one way round and black faces the other
// (Errc::even_order_crossing if any crossing has even order).
OrientedColoredDiagram impose_piecewise_natural(const MulticrossingDiagram& d);

struct NaturalityWitness {
  bool natural = false;
  // When !natural: slots (slot, slot+1) of this crossing are both directed
  // in or both directed out.
  SlotRef vertex;
};

// An orientation is piecewise-natural iff every face boundary is coherent,
// which holds iff edge directions alternate in-out around every vertex.
// This checks the vertex-alternation form and produces a witness corner on
// failure. Defined for any diagram, any orientation.
NaturalityWitness is_piecewise_natural(const MulticrossingDiagram& d, const Orientation& o);

Orientation reversed(Orientation o);

// Canonical orientation of the underlying link: each strand component is
// directed starting from its lowest-numbered edge. Always succeeds.
Orientation orient_components(const MulticrossingDiagram& d);

// Color with at least half the faces; white on a tie.
FaceColor majority_color(const Coloring& c);

}  // namespace multicross
