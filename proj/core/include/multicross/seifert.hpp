#pragma once

#include <optional>
#include <vector>

#include "multicross/diagram.hpp"
#include "multicross/orientation.hpp"

namespace multicross {

struct SeifertCircle {
  // Directed darts in travel order; empty for a crossing-free circle.
  std::vector<Dart> darts;
  // Color of the face this circle traces, when a coloring is supplied and
  // the circle coincides with a face boundary.
  std::optional<FaceColor> bounded_face_color;
};

struct SeifertState {
  std::vector<SeifertCircle> circles;
  int count() const { return static_cast<int>(circles.size()); }
};

// Orientation-respecting smoothing of a 2-crossing diagram: at every
// crossing each incoming strand end is joined to the outgoing end of the
// other strand. The orientation must direct each strand consistently
// through every crossing (Errc::not_oriented otherwise); the diagram must
// have uniform order 2 (or no crossings at all).
SeifertState smooth(const MulticrossingDiagram& d, const Orientation& o);

// Same, also attributing to each circle the color of the face it traces.
SeifertState smooth(const MulticrossingDiagram& d, const Orientation& o, const Coloring& coloring);

// Genus of the surface Seifert's algorithm builds from a connected diagram
// with n crossings, s circles and r link components: (2 + n - s - r) / 2.
// Errc::non_integer_genus if the inputs have the wrong parity (impossible
// for values measured on an actual diagram).
long long canonical_genus(long long n, long long s, long long r);

long long genus_of_diagram(const MulticrossingDiagram& d, const Orientation& o);

}  // namespace multicross
