#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace multicross::test {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int brute_circle_count(const MulticrossingDiagram& d, const Orientation& o) {
  // elements: edge ends, 2e + end index
  Dsu dsu(2 * d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) dsu.unite(2 * e, 2 * e + 1);
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    int deg = 2 * d.crossing(ci).order();
    for (int s = 0; s < deg; ++s) {
      int s2 = (s + 1) % deg;
      SlotRef a{ci, s}, b{ci, s2};
      if (slot_is_out(d, o, a) != slot_is_out(d, o, b))
        dsu.unite(2 * d.edge_at(a) + d.end_index_at(a), 2 * d.edge_at(b) + d.end_index_at(b));
    }
  }
  std::set<int> roots;
  for (int x = 0; x < 2 * d.edge_count(); ++x) roots.insert(dsu.find(x));
  return static_cast<int>(roots.size()) + d.free_loop_count();
}

bool faces_coherent_oracle(const MulticrossingDiagram& d, const Orientation& o) {
  for (const Face& face : d.faces().faces) {
    bool first_with = (face.boundary.front() & 1) == o[dart_edge(face.boundary.front())];
    for (Dart dart : face.boundary)
      if (((dart & 1) == o[dart_edge(dart)]) != first_with) return false;
  }
  return true;
}

std::vector<std::vector<FaceColor>> enumerate_colorings(const MulticrossingDiagram& d) {
  int f = d.faces().count();
  std::vector<std::vector<FaceColor>> result;
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    bool ok = true;
    for (int e = 0; e < d.edge_count() && ok; ++e) {
      int fa = d.faces().face_of_dart[2 * e];
      int fb = d.faces().face_of_dart[2 * e + 1];
      if (((mask >> fa) & 1) == ((mask >> fb) & 1)) ok = false;
    }
    if (!ok) continue;
    std::vector<FaceColor> coloring(f);
    for (int i = 0; i < f; ++i) coloring[i] = (mask >> i) & 1 ? FaceColor::black : FaceColor::white;
    result.push_back(std::move(coloring));
  }
  return result;
}

int trace_component_count(const MulticrossingDiagram& d) {
  std::set<std::pair<int, int>> visited;  // (crossing, slot)
  int components = 0;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    int deg = 2 * d.crossing(ci).order();
    for (int s = 0; s < deg; ++s) {
      if (visited.count({ci, s})) continue;
      ++components;
      int c = ci, slot = s;
      while (!visited.count({c, slot})) {
        visited.insert({c, slot});
        int m = d.crossing(c).order();
        int mate = (slot + m) % (2 * m);
        visited.insert({c, mate});
        SlotRef here{c, mate};
        int e = d.edge_at(here);
        const auto& ends = d.edge_ends(e);
        SlotRef next = ends[0] == here ? ends[1] : ends[0];
        c = next.crossing;
        slot = next.slot;
      }
    }
  }
  return components + d.free_loop_count();
}

TangleAnalysis analyze_tangle(const OrientedColoredDiagram& host, const DecompositionTangle& tangle) {
  TangleAnalysis result;
  int m = 2 * tangle.k + 1;
  int ports = 2 * m;
  int arcs = static_cast<int>(tangle.arcs.size());

  // pairwise-once
  std::set<std::pair<int, int>> pairs;
  for (const TangleNode& node : tangle.nodes) pairs.insert({node.strand_a, node.strand_b});
  result.pairwise_once =
      static_cast<int>(tangle.nodes.size()) == m * (m - 1) / 2 && static_cast<int>(pairs.size()) == m * (m - 1) / 2;

  // inbound = the arc end where travel arrives, flipped for strands that
  // enter at the far port
  auto arc_end_inbound = [&](int arc, int end) {
    bool travel_arrives_at_to = true;  // arcs are stored from -> to in travel order
    bool along_travel = tangle.strand_enters_first[tangle.arcs[arc].strand];
    bool arrives_here = (end == 1) == travel_arrives_at_to;
    return along_travel ? arrives_here : !arrives_here;
  };

  // Smoothing: join arc ends across in/out corners of every node.
  Dsu dsu(2 * arcs);
  for (int a = 0; a < arcs; ++a) dsu.unite(2 * a, 2 * a + 1);
  for (size_t ni = 0; ni < tangle.nodes.size(); ++ni) {
    const TangleNode& node = tangle.nodes[ni];
    auto end_at_slot = [&](int s) {
      int arc = node.arc_at_slot[s];
      const TangleArc& ta = tangle.arcs[arc];
      int end = (!ta.from.at_port && ta.from.node == static_cast<int>(ni) && ta.from.slot == s) ? 0 : 1;
      return std::pair<int, int>{arc, end};
    };
    for (int s = 0; s < 4; ++s) {
      auto [a1, e1] = end_at_slot(s);
      auto [a2, e2] = end_at_slot((s + 1) % 4);
      if (arc_end_inbound(a1, e1) != arc_end_inbound(a2, e2)) dsu.unite(2 * a1 + e1, 2 * a2 + e2);
    }
  }
  std::map<int, bool> has_port;
  std::map<int, std::vector<int>> members;
  for (int a = 0; a < arcs; ++a)
    for (int e = 0; e < 2; ++e) {
      int root = dsu.find(2 * a + e);
      members[root].push_back(a);
      const TangleEnd& end = e == 0 ? tangle.arcs[a].from : tangle.arcs[a].to;
      if (end.at_port) has_port[root] = true;
    }
  std::vector<std::vector<int>> circles;
  for (auto& [root, arcs_of] : members) {
    if (has_port.count(root)) {
      ++result.open_strands;
    } else {
      std::sort(arcs_of.begin(), arcs_of.end());
      arcs_of.erase(std::unique(arcs_of.begin(), arcs_of.end()), arcs_of.end());
      circles.push_back(arcs_of);
    }
  }
  result.closed_circles = static_cast<int>(circles.size());

  // Faces of the tangle together with its boundary circle. Vertices are the
  // nodes (4 slots ccw) and the ports (degree 3: boundary arc onward, strand
  // stub inward, boundary arc backward, in ccw order). Arc ids: strand arcs,
  // then boundary arcs (id arcs + p runs from port p to port p+1).
  int total_arcs = arcs + ports;
  struct VertexRef {
    int vertex, index;
  };
  std::vector<std::vector<std::pair<int, int>>> rotation;  // (arc, end) ccw per vertex
  rotation.resize(tangle.nodes.size() + ports);
  for (size_t ni = 0; ni < tangle.nodes.size(); ++ni) {
    for (int s = 0; s < 4; ++s) {
      int arc = tangle.nodes[ni].arc_at_slot[s];
      const TangleArc& ta = tangle.arcs[arc];
      int end = (!ta.from.at_port && ta.from.node == static_cast<int>(ni) && ta.from.slot == s) ? 0 : 1;
      rotation[ni].push_back({arc, end});
    }
  }
  for (int p = 0; p < ports; ++p) {
    int v = static_cast<int>(tangle.nodes.size()) + p;
    int stub = tangle.port_arc[p];
    int stub_end = tangle.arcs[stub].from.at_port && tangle.arcs[stub].from.port == p ? 0 : 1;
    rotation[v].push_back({arcs + p, 0});                     // boundary arc to port p+1
    rotation[v].push_back({stub, stub_end});                  // inward
    rotation[v].push_back({arcs + (p + ports - 1) % ports, 1});  // boundary arc from port p-1
  }
  std::vector<VertexRef> end_pos(2 * total_arcs, {-1, -1});
  for (size_t v = 0; v < rotation.size(); ++v)
    for (size_t i = 0; i < rotation[v].size(); ++i) {
      auto [arc, end] = rotation[v][i];
      end_pos[2 * arc + end] = {static_cast<int>(v), static_cast<int>(i)};
    }

  // dart 2a runs from end 0 to end 1
  auto next_dart = [&](int dart) {
    int arc = dart >> 1;
    int head_end = (dart & 1) ^ 1;
    VertexRef at = end_pos[2 * arc + head_end];
    int deg = static_cast<int>(rotation[at.vertex].size());
    auto [arc2, end2] = rotation[at.vertex][(at.index + deg - 1) % deg];
    return 2 * arc2 + end2;  // leaves away from end2
  };
  std::vector<int> face_of(2 * total_arcs, -1);
  std::vector<std::vector<int>> face_darts;
  for (int d0 = 0; d0 < 2 * total_arcs; ++d0) {
    if (face_of[d0] != -1) continue;
    int id = static_cast<int>(face_darts.size());
    face_darts.push_back({});
    int dart = d0;
    do {
      face_of[dart] = id;
      face_darts[id].push_back(dart);
      dart = next_dart(dart);
    } while (dart != d0);
  }

  // 2-color the disk faces, anchored at the gap behind port 0 with the
  // target color. Only strand arcs mediate adjacency: the face outside the
  // boundary circle is an artifact of closing the disk and stays uncolored.
  int faces = static_cast<int>(face_darts.size());
  int outer = face_of[2 * arcs + 1];  // right of the ccw boundary arc at port 0
  std::vector<int> color(faces, -1);
  color[face_of[2 * arcs]] = 0;  // inner side of boundary arc port0 -> port1: target
  std::vector<int> queue = {face_of[2 * arcs]};
  size_t qi = 0;
  while (qi < queue.size()) {
    int f = queue[qi++];
    for (int dart : face_darts[f]) {
      if ((dart >> 1) >= arcs) continue;  // not across the boundary circle
      int g = face_of[dart ^ 1];
      if (g == outer) return result;      // defect: a strand arc on the outer face
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        return result;  // defect: not checkerboard-colorable
      }
    }
  }
  for (int f = 0; f < faces; ++f)
    if (f != outer && color[f] == -1) return result;  // defect: disk dual not connected

  // Gap faces must match the host's corner colors around the crossing.
  const MulticrossingDiagram& host_d = host.diagram;
  result.boundary_colors_consistent = true;
  for (int p = 0; p < ports; ++p) {
    int corner = (tangle.anchor_slot + p) % ports;
    FaceColor expected = host.coloring.color[corner_face(host_d, tangle.crossing, corner)];
    int got = color[face_of[2 * (arcs + p)]];
    bool is_target = got == 0;
    if ((expected == tangle.target) != is_target) result.boundary_colors_consistent = false;
  }

  // Every closed circle must trace the boundary of a target-colored face.
  result.circles_all_target = true;
  for (const std::vector<int>& circle : circles) {
    bool matched = false;
    for (int f = 0; f < faces && !matched; ++f) {
      if (face_darts[f].size() != circle.size()) continue;
      std::set<int> face_arcs;
      for (int dart : face_darts[f]) face_arcs.insert(dart >> 1);
      if (std::set<int>(circle.begin(), circle.end()) == face_arcs && color[f] == 0) matched = true;
    }
    if (!matched) result.circles_all_target = false;
  }
  return result;
}

namespace {

// random non-crossing perfect matching of an even run of slots
void random_matching(std::mt19937& rng, int lo, int hi, std::vector<std::pair<int, int>>& out) {
  if (lo >= hi) return;
  int count = (hi - lo + 1) / 2;
  std::uniform_int_distribution<int> pick(0, count - 1);
  int partner = lo + 1 + 2 * pick(rng);
  out.push_back({lo, partner});
  random_matching(rng, lo + 1, partner - 1, out);
  random_matching(rng, partner + 1, hi, out);
}

}  // namespace

MulticrossingDiagram random_odd_diagram(std::mt19937& rng, int k, int n) {
  int m = 2 * k + 1;
  std::vector<Crossing> crossings(n);
  int next_edge = 0;
  for (int i = 0; i < n; ++i) {
    crossings[i].edges.assign(2 * m, -1);
    crossings[i].levels.resize(m);
    std::iota(crossings[i].levels.begin(), crossings[i].levels.end(), 1);
    std::shuffle(crossings[i].levels.begin(), crossings[i].levels.end(), rng);
  }
  for (int i = 0; i < n; ++i) {
    int e = next_edge++;
    crossings[i].edges[0] = e;
    crossings[(i + 1) % n].edges[m] = e;
  }
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, int>> pairs;
    random_matching(rng, 1, m - 1, pairs);
    random_matching(rng, m + 1, 2 * m - 1, pairs);
    for (auto [a, b] : pairs) {
      int e = next_edge++;
      crossings[i].edges[a] = e;
      crossings[i].edges[b] = e;
    }
  }
  return MulticrossingDiagram::from_crossings(std::move(crossings));
}

Orientation random_orientation(std::mt19937& rng, const MulticrossingDiagram& d) {
  Orientation o(d.edge_count());
  std::uniform_int_distribution<int> bit(0, 1);
  for (auto& dir : o) dir = static_cast<unsigned char>(bit(rng));
  return o;
}

unsigned test_seed() {
  if (const char* env = std::getenv("MULTICROSS_SEED")) return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  return 0xC0FFEEu;
}

}  // namespace multicross::test
