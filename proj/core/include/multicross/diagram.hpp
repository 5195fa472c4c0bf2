#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multicross/errors.hpp"

namespace multicross {

// A multicrossing diagram is a connected planar map in which every vertex
// (crossing) has even degree 2m: m strands pass straight through each
// crossing, the strand entering at slot s leaving at slot s+m, and the m
// strands are stacked by a height permutation (1 = bottom, m = top).
//
// Slots at a crossing are numbered 0..2m-1 in counterclockwise order.
// An edge joins exactly two slots (possibly of the same crossing).
//
// Text format (MPD), one crossing per line:
//     X e1 e2 ... e_2m | l1 l2 ... lm
// where e_i is the edge label at slot i-1 and l_s the level of the strand
// occupying slots (s-1, s-1+m). Lines starting with '#' are comments.
// A line consisting of the single token 'O' adds a crossing-free unknotted
// circle component; such circles cannot be mixed with crossings.

// Directed half-edge. Dart 2e runs from edge_ends(e)[0] to edge_ends(e)[1],
// dart 2e+1 the other way.
using Dart = int;

inline Dart opposite(Dart d) { return d ^ 1; }
inline int dart_edge(Dart d) { return d >> 1; }

struct SlotRef {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct Crossing {
  std::vector<int> edges;   // edge id per slot, counterclockwise, size 2m
  std::vector<int> levels;  // size m; levels[s] = height of strand at slots (s, s+m)

  int order() const { return static_cast<int>(levels.size()); }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Face {
  std::vector<Dart> boundary;  // cyclic, in traversal order
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;  // size 2E

  int count() const { return static_cast<int>(faces.size()); }
};

class MulticrossingDiagram {
 public:
  MulticrossingDiagram() = default;

  // Validates and canonicalizes. Edge ids must already be dense 0..E-1.
  // Throws Error on violation of any structural invariant.
  static MulticrossingDiagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0);

  // Parses MPD text. Edge labels are arbitrary positive integers and are
  // renumbered densely in first-occurrence order.
  static MulticrossingDiagram parse(std::string_view text);

  // Canonical MPD text: crossings in stored order, edges renumbered 1..E in
  // first-occurrence order, single spaces, one trailing newline per line.
  std::string serialize() const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edge_ends_.size()); }
  int free_loop_count() const { return free_loops_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_[c]; }

  const std::array<SlotRef, 2>& edge_ends(int e) const { return edge_ends_[e]; }

  // Which end (0 or 1) of its edge sits in this slot.
  int end_index_at(SlotRef s) const;
  int edge_at(SlotRef s) const { return crossings_[s.crossing].edges[s.slot]; }

  SlotRef dart_tail(Dart d) const { return edge_ends_[dart_edge(d)][d & 1]; }
  SlotRef dart_head(Dart d) const { return edge_ends_[dart_edge(d)][(d & 1) ^ 1]; }
  // The dart leaving through this slot.
  Dart dart_out_of(SlotRef s) const { return out_dart_[dart_index_base_[s.crossing] + s.slot]; }
  // The dart arriving through this slot.
  Dart dart_into(SlotRef s) const { return opposite(dart_out_of(s)); }

  // Faces of the planar map: orbits of "arrive at a slot, leave through the
  // next slot clockwise". Computed once at construction.
  const FaceSet& faces() const { return faces_; }

  // Number of closed strands r(L), free circles included.
  int component_count() const { return component_count_; }
  // Strand component containing a given edge.
  int component_of_edge(int e) const { return component_of_edge_[e]; }

  // Common crossing order, or nullopt for mixed-order diagrams.
  std::optional<int> uniform_order() const;
  bool all_orders_odd() const;

  // Equality of canonical forms: same crossings in the same order with the
  // same levels, edges compared under first-occurrence renumbering.
  friend bool operator==(const MulticrossingDiagram& a, const MulticrossingDiagram& b) {
    return a.free_loops_ == b.free_loops_ && a.serialize() == b.serialize();
  }

 private:
  void build_tables();  // edge_ends_, out darts, faces, components; validates

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;

  // derived
  std::vector<std::array<SlotRef, 2>> edge_ends_;
  std::vector<int> dart_index_base_;  // per crossing, offset into out_dart_
  std::vector<Dart> out_dart_;
  FaceSet faces_;
  std::vector<int> component_of_edge_;
  int component_count_ = 0;
};

// Face sitting in the corner between slots j and j+1 (mod 2m) of a crossing.
int corner_face(const MulticrossingDiagram& d, int crossing, int corner);

}  // namespace multicross
