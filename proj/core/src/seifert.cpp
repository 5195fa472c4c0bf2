#include "multicross/seifert.hpp"

#include <algorithm>
#include <unordered_set>

namespace multicross {

namespace {

void require_oriented_two_diagram(const MulticrossingDiagram& d, const Orientation& o) {
  if (o.size() != static_cast<size_t>(d.edge_count()))
    fail(Errc::not_oriented, "orientation covers " + std::to_string(o.size()) + " of " +
                                 std::to_string(d.edge_count()) + " edges");
  if (d.crossing_count() == 0) return;
  auto m = d.uniform_order();
  if (!m || *m != 2) fail(Errc::not_oriented, "smoothing requires a uniform 2-crossing diagram");
  for (int ci = 0; ci < d.crossing_count(); ++ci)
    for (int s = 0; s < 2; ++s)
      if (slot_is_out(d, o, {ci, s}) == slot_is_out(d, o, {ci, s + 2}))
        fail(Errc::not_oriented, "strand through crossing " + std::to_string(ci) + " is not consistently directed");
}

// The two smoothing corners of an oriented 2-crossing are the corners whose
// two slots carry one inbound and one outbound strand end; they are opposite
// each other. Returns the partner slot of s.
int smoothing_partner(const MulticrossingDiagram& d, const Orientation& o, int ci, int s) {
  bool out_here = slot_is_out(d, o, {ci, s});
  int next = (s + 1) % 4;
  if (slot_is_out(d, o, {ci, next}) != out_here) return next;
  return (s + 3) % 4;
}

}  // namespace

SeifertState smooth(const MulticrossingDiagram& d, const Orientation& o) {
  require_oriented_two_diagram(d, o);

  SeifertState state;
  for (int i = 0; i < d.free_loop_count(); ++i) state.circles.push_back({});

  std::vector<bool> visited(d.edge_count(), false);
  for (int e0 = 0; e0 < d.edge_count(); ++e0) {
    if (visited[e0]) continue;
    SeifertCircle circle;
    int e = e0;
    do {
      visited[e] = true;
      Dart dart = directed_dart(o, e);
      circle.darts.push_back(dart);
      SlotRef arrive = d.dart_head(dart);
      int s2 = smoothing_partner(d, o, arrive.crossing, arrive.slot);
      SlotRef depart{arrive.crossing, s2};
      if (!slot_is_out(d, o, depart)) fail(Errc::internal, "smoothing partner is not outbound");
      e = d.edge_at(depart);
    } while (e != e0);
    state.circles.push_back(std::move(circle));
  }
  return state;
}

SeifertState smooth(const MulticrossingDiagram& d, const Orientation& o, const Coloring& coloring) {
  SeifertState state = smooth(d, o);
  const FaceSet& fs = d.faces();

  // A circle traces a face boundary exactly when its dart set equals the
  // face's orbit (all darts with the orientation) or the orbit of the
  // opposite darts (all against). Either way it bounds that face.
  for (SeifertCircle& circle : state.circles) {
    if (circle.darts.empty()) continue;
    for (Dart probe : {circle.darts[0], opposite(circle.darts[0])}) {
      int f = fs.face_of_dart[probe];
      const std::vector<Dart>& boundary = fs.faces[f].boundary;
      if (boundary.size() != circle.darts.size()) continue;
      std::unordered_set<Dart> face_darts(boundary.begin(), boundary.end());
      bool all = true;
      for (Dart dart : circle.darts) {
        Dart want = probe == circle.darts[0] ? dart : opposite(dart);
        if (!face_darts.count(want)) {
          all = false;
          break;
        }
      }
      if (all) {
        circle.bounded_face_color = coloring.color[f];
        break;
      }
    }
  }
  return state;
}

long long canonical_genus(long long n, long long s, long long r) {
  long long numerator = 2 + n - s - r;
  if (numerator % 2 != 0)
    fail(Errc::non_integer_genus, "2 + n - s - r = " + std::to_string(numerator) + " is odd");
  return numerator / 2;
}

long long genus_of_diagram(const MulticrossingDiagram& d, const Orientation& o) {
  SeifertState state = smooth(d, o);
  return canonical_genus(d.crossing_count(), state.count(), d.component_count());
}

}  // namespace multicross
