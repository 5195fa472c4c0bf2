#include "multicross/orientation.hpp"

#include <algorithm>

namespace multicross {

Coloring checkerboard_color(const MulticrossingDiagram& d) {
  const FaceSet& fs = d.faces();
  Coloring result;
  result.color.assign(fs.count(), FaceColor::white);
  if (fs.count() == 0) return result;

  std::vector<int> state(fs.count(), -1);  // -1 unvisited, else 0/1
  // Anchor: the face containing the dart that leaves slot 0 of crossing 0
  // (the smallest (crossing, slot) tail) is white.
  int anchor = fs.face_of_dart[d.dart_out_of(SlotRef{0, 0})];
  state[anchor] = 0;
  std::vector<int> queue = {anchor};
  size_t qi = 0;
  while (qi < queue.size()) {
    int f = queue[qi++];
    for (Dart dart : fs.faces[f].boundary) {
      int g = fs.face_of_dart[opposite(dart)];
      if (state[g] == -1) {
        state[g] = 1 - state[f];
        queue.push_back(g);
      } else if (state[g] == state[f]) {
        fail(Errc::not_bipartite, "face adjacency graph is not bipartite");
      }
    }
  }
  for (int f = 0; f < fs.count(); ++f) {
    if (state[f] == -1) fail(Errc::internal, "face graph traversal missed a face");
    result.color[f] = state[f] == 0 ? FaceColor::white : FaceColor::black;
    (result.color[f] == FaceColor::white ? result.white : result.black)++;
  }
  return result;
}

OrientedColoredDiagram impose_piecewise_natural(const MulticrossingDiagram& d) {
  for (size_t ci = 0; ci < d.crossings().size(); ++ci)
    if (d.crossing(static_cast<int>(ci)).order() % 2 == 0)
      fail(Errc::even_order_crossing,
           "crossing " + std::to_string(ci) + " has even order; piecewise-natural orientations need odd order");
  if (d.crossing_count() == 0)
    fail(Errc::even_order_crossing, "diagram has no crossings to orient");

  Coloring coloring = checkerboard_color(d);
  const FaceSet& fs = d.faces();

  // Each edge borders one white and one black face (its two darts lie in the
  // two). Directing every edge along its black-side dart makes each black
  // face boundary run with the orientation and each white face against it,
  // i.e. faces are coherent with opposite handedness by color.
  Orientation o(d.edge_count(), 0);
  for (int e = 0; e < d.edge_count(); ++e) {
    FaceColor c0 = coloring.color[fs.face_of_dart[2 * e]];
    FaceColor c1 = coloring.color[fs.face_of_dart[2 * e + 1]];
    if (c0 == c1) fail(Errc::internal, "edge borders two faces of one color");
    o[e] = c0 == FaceColor::black ? 0 : 1;
  }

  // The construction must give in-out alternation at every vertex and a
  // consistent through-direction on each strand (slots s and s+m differ in
  // parity exactly because m is odd).
  NaturalityWitness w = is_piecewise_natural(d, o);
  if (!w.natural) fail(Errc::internal, "constructed orientation fails in-out alternation");
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const Crossing& c = d.crossing(ci);
    int m = c.order();
    for (int s = 0; s < m; ++s)
      if (slot_is_out(d, o, {ci, s}) == slot_is_out(d, o, {ci, s + m}))
        fail(Errc::internal, "strand through-orientation inconsistent");
  }

  return OrientedColoredDiagram{d, std::move(o), std::move(coloring)};
}

NaturalityWitness is_piecewise_natural(const MulticrossingDiagram& d, const Orientation& o) {
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    int deg = 2 * d.crossing(ci).order();
    for (int s = 0; s < deg; ++s) {
      if (slot_is_out(d, o, {ci, s}) == slot_is_out(d, o, {ci, (s + 1) % deg}))
        return {false, SlotRef{ci, s}};
    }
  }
  return {true, SlotRef{}};
}

Orientation reversed(Orientation o) {
  for (auto& dir : o) dir ^= 1;
  return o;
}

Orientation orient_components(const MulticrossingDiagram& d) {
  Orientation o(d.edge_count(), 0);
  std::vector<bool> done(d.edge_count(), false);
  for (int e0 = 0; e0 < d.edge_count(); ++e0) {
    if (done[e0]) continue;
    // Follow the strand forward from e0's end 1, assigning directions.
    int e = e0;
    int heading_end = 1;  // travelling towards edge_ends(e)[heading_end]
    do {
      done[e] = true;
      o[e] = static_cast<unsigned char>(heading_end ^ 1);
      SlotRef at = d.edge_ends(e)[heading_end];
      const Crossing& c = d.crossing(at.crossing);
      int m = c.order();
      SlotRef exit{at.crossing, (at.slot + m) % (2 * m)};
      int e2 = d.edge_at(exit);
      heading_end = d.end_index_at(exit) ^ 1;
      e = e2;
    } while (e != e0);
  }
  return o;
}

FaceColor majority_color(const Coloring& c) {
  return c.black > c.white ? FaceColor::black : FaceColor::white;
}

}  // namespace multicross
