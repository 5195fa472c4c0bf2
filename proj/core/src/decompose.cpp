#include "multicross/decompose.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace multicross {

// A (2k+1)-crossing is replaced by a tangle in which every pair of strands
// crosses exactly once. Rotate the crossing so that the target-colored
// region sits on the upper left of strand 1 and label strands 1..2k+1
// counterclockwise; each strand runs from port j-1 ("top") to port j-1+m
// ("bottom"). The perturbation is encoded by the order in which each strand
// meets the others on its way down:
//
//   strands 1..3:    first strands 4, 5, ..., m, then the other two of 1..3
//   strands 4..m:    first 3, 2, 1, then m, m-1, ..., 4 (skipping itself)
//
// Walking around a sub-crossing of strands i and j, the four arc directions
// are the four port directions of i and j, whose counterclockwise order is
// given by the port keys themselves. That fixes the whole tangle as a
// combinatorial map; no coordinates are involved.
//
// With the orientations a piecewise-natural diagram induces (strand
// directions alternate in-out around the crossing), smoothing this tangle
// closes up exactly k*k circles, every one tracing a face that the extended
// checkerboard coloring paints in the target color. The structure mirrors
// the inductive construction behind that count: the three lowest-numbered
// strands close the innermost triangle, and each later pair of strands adds
// the next odd number of circles along the two ladders it forms against its
// predecessors. The test suite verifies the circle count, the color, and
// planarity against an independent smoothing oracle for k up to 6.

namespace {

std::vector<std::vector<int>> meet_orders(int m) {
  std::vector<std::vector<int>> order(m + 1);
  for (int i = 1; i <= m; ++i) {
    if (i <= 3) {
      for (int j = 4; j <= m; ++j) order[i].push_back(j);
      for (int j = 1; j <= 3; ++j)
        if (j != i) order[i].push_back(j);
    } else {
      for (int j = 3; j >= 1; --j) order[i].push_back(j);
      for (int j = m; j >= 4; --j)
        if (j != i) order[i].push_back(j);
    }
  }
  return order;
}

}  // namespace

std::vector<DecompositionTangle::Sub> DecompositionTangle::sub_crossings() const {
  std::vector<Sub> subs;
  subs.reserve(nodes.size());
  for (const TangleNode& n : nodes) subs.push_back({n.strand_a, n.strand_b, n.over_strand});
  return subs;
}

DecompositionTangle decompose_crossing(const OrientedColoredDiagram& ocd, int crossing, FaceColor target) {
  const MulticrossingDiagram& d = ocd.diagram;
  const Crossing& c = d.crossing(crossing);
  int m = c.order();
  if (m % 2 == 0)
    fail(Errc::even_order, "crossing " + std::to_string(crossing) + " has even order " + std::to_string(m));
  if (ocd.orientation.size() != static_cast<size_t>(d.edge_count()))
    fail(Errc::not_oriented, "host diagram is not oriented");
  int deg = 2 * m;

  DecompositionTangle tangle;
  tangle.k = (m - 1) / 2;
  tangle.crossing = crossing;
  tangle.target = target;

  // Anchor on the first corner of the target color; rotating it to the top
  // puts the target region on the upper left of strand 1.
  int s0 = -1;
  for (int s = 0; s < deg && s0 < 0; ++s)
    if (ocd.coloring.color[corner_face(d, crossing, s)] == target) s0 = s;
  if (s0 < 0) fail(Errc::internal, "no corner of the target color");
  tangle.anchor_slot = s0;
  tangle.port_to_slot.resize(deg);
  for (int i = 0; i < deg; ++i) tangle.port_to_slot[i] = (s0 + i) % deg;

  tangle.strand_enters_first.assign(m + 1, false);
  tangle.strand_level.assign(m + 1, 0);
  for (int j = 1; j <= m; ++j) {
    int slot = tangle.port_to_slot[j - 1];
    tangle.strand_enters_first[j] = !slot_is_out(d, ocd.orientation, {crossing, slot});
    tangle.strand_level[j] = c.levels[slot % m];
  }

  std::vector<std::vector<int>> order = meet_orders(m);

  // Nodes in canonical (a, b) order. The counterclockwise slot order around
  // a node is the order of the four port-direction keys: key j-1 points at
  // strand j's top port, key j-1+m at its bottom port.
  std::map<std::pair<int, int>, int> node_id;
  std::map<std::pair<int, int>, std::array<std::pair<int, int>, 4>> node_dirs;  // (strand, key)
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      std::array<std::pair<int, int>, 4> dirs = {{{i, i - 1}, {i, i - 1 + m}, {j, j - 1}, {j, j - 1 + m}}};
      std::sort(dirs.begin(), dirs.end(), [](auto a, auto b) { return a.second < b.second; });
      node_dirs[{i, j}] = dirs;
      TangleNode node;
      node.strand_a = i;
      node.strand_b = j;
      node.over_strand = tangle.strand_level[i] > tangle.strand_level[j] ? i : j;
      node.arc_at_slot = {-1, -1, -1, -1};
      node.strand_at_parity = {dirs[0].first, dirs[1].first};
      node_id[{i, j}] = static_cast<int>(tangle.nodes.size());
      tangle.nodes.push_back(node);
    }
  }

  // Arcs along each strand in travel (top-to-bottom) order.
  tangle.arcs_of_strand.assign(m + 1, {});
  tangle.port_arc.assign(deg, -1);
  auto node_at = [&](int i, int j) { return node_id.at({std::min(i, j), std::max(i, j)}); };
  std::vector<std::vector<int>> travel_pos(m + 1, std::vector<int>(m + 1, -1));
  for (int i = 1; i <= m; ++i)
    for (size_t q = 0; q < order[i].size(); ++q) travel_pos[i][order[i][q]] = static_cast<int>(q);

  for (int i = 1; i <= m; ++i) {
    for (size_t q = 0; q <= order[i].size(); ++q) {
      TangleArc arc;
      arc.strand = i;
      if (q == 0) {
        arc.from = TangleEnd{true, i - 1, -1, -1};
        tangle.port_arc[i - 1] = static_cast<int>(tangle.arcs.size());
      } else {
        arc.from = TangleEnd{false, -1, node_at(i, order[i][q - 1]), -1};
      }
      if (q == order[i].size()) {
        arc.to = TangleEnd{true, i - 1 + m, -1, -1};
        tangle.port_arc[i - 1 + m] = static_cast<int>(tangle.arcs.size());
      } else {
        arc.to = TangleEnd{false, -1, node_at(i, order[i][q]), -1};
      }
      tangle.arcs_of_strand[i].push_back(static_cast<int>(tangle.arcs.size()));
      tangle.arcs.push_back(arc);
    }
  }

  // Hook arc ends into node slots: the slot whose direction points at the
  // strand's top port carries the earlier arc (its tail end), the opposite
  // slot the later one.
  for (auto& [key, id] : node_id) {
    TangleNode& node = tangle.nodes[id];
    const auto& dirs = node_dirs.at(key);
    for (int s = 0; s < 4; ++s) {
      auto [strand, dirkey] = dirs[s];
      bool towards_top = dirkey == strand - 1;
      int other = strand == key.first ? key.second : key.first;
      int pos = travel_pos[strand][other];
      int arc = towards_top ? tangle.arcs_of_strand[strand][pos] : tangle.arcs_of_strand[strand][pos + 1];
      node.arc_at_slot[s] = arc;
      TangleArc& a = tangle.arcs[arc];
      TangleEnd& end = towards_top ? a.to : a.from;
      end.node = id;
      end.slot = s;
    }
  }
  return tangle;
}

DecomposedDiagram decompose_diagram(const OrientedColoredDiagram& ocd, Target target) {
  const MulticrossingDiagram& d = ocd.diagram;
  auto order = d.uniform_order();
  if (!order) fail(Errc::unsupported_parameter, "decomposition requires a uniform-order diagram");
  if (*order % 2 == 0) fail(Errc::even_order, "decomposition requires odd order, got " + std::to_string(*order));
  int m = *order;
  int k = (m - 1) / 2;
  int n = d.crossing_count();

  FaceColor color = target == Target::white   ? FaceColor::white
                    : target == Target::black ? FaceColor::black
                                              : majority_color(ocd.coloring);

  std::vector<DecompositionTangle> tangles;
  tangles.reserve(n);
  for (int ci = 0; ci < n; ++ci) tangles.push_back(decompose_crossing(ocd, ci, color));

  // New vertex ids: tangles in crossing order, nodes in canonical order.
  std::vector<int> node_base(n, 0);
  int total_nodes = 0;
  for (int ci = 0; ci < n; ++ci) {
    node_base[ci] = total_nodes;
    total_nodes += static_cast<int>(tangles[ci].nodes.size());
  }

  // New edge ids: the original edges keep 0..E-1 (each shortened to run
  // between the outermost sub-crossings of its two tangles), internal arcs
  // follow in (crossing, arc) order.
  int next_edge = d.edge_count();
  std::vector<std::vector<int>> arc_edge(n);
  for (int ci = 0; ci < n; ++ci) {
    arc_edge[ci].assign(tangles[ci].arcs.size(), -1);
    for (size_t a = 0; a < tangles[ci].arcs.size(); ++a) {
      const TangleArc& arc = tangles[ci].arcs[a];
      if (!arc.from.at_port && !arc.to.at_port) arc_edge[ci][a] = next_edge++;
    }
  }
  // Stub arcs adopt the id of the original edge at their port.
  for (int ci = 0; ci < n; ++ci) {
    for (int port = 0; port < 2 * m; ++port) {
      int slot = tangles[ci].port_to_slot[port];
      arc_edge[ci][tangles[ci].port_arc[port]] = d.edge_at({ci, slot});
    }
  }

  std::vector<Crossing> crossings(total_nodes);
  for (int ci = 0; ci < n; ++ci) {
    for (size_t ni = 0; ni < tangles[ci].nodes.size(); ++ni) {
      const TangleNode& node = tangles[ci].nodes[ni];
      Crossing& out = crossings[node_base[ci] + ni];
      out.edges.resize(4);
      for (int s = 0; s < 4; ++s) out.edges[s] = arc_edge[ci][node.arc_at_slot[s]];
      int over_parity = node.strand_at_parity[0] == node.over_strand ? 0 : 1;
      out.levels = over_parity == 0 ? std::vector<int>{2, 1} : std::vector<int>{1, 2};
    }
  }

  DecomposedDiagram result;
  // from_crossings re-validates everything, the Euler check included.
  result.diagram = MulticrossingDiagram::from_crossings(std::move(crossings));
  result.target = color;
  result.k = k;
  result.original_crossings = n;
  result.original_white = ocd.coloring.white;
  result.original_black = ocd.coloring.black;

  // Orientation. For internal arcs, travel order is port j-1 -> port j-1+m;
  // the strand's actual direction flips that when it enters at the far port.
  // For the kept original edges, carry the original direction across by
  // locating the new end that replaced the original tail slot.
  const int new_edge_count = result.diagram.edge_count();
  Orientation new_o(new_edge_count, 0);
  auto inner_end = [&](int ci, int port) {
    const DecompositionTangle& t = tangles[ci];
    const TangleArc& stub = t.arcs[t.port_arc[port]];
    const TangleEnd& end = stub.from.at_port ? stub.to : stub.from;
    return SlotRef{node_base[ci] + end.node, end.slot};
  };
  for (int e = 0; e < d.edge_count(); ++e) {
    SlotRef old_tail = d.edge_ends(e)[ocd.orientation[e]];
    const DecompositionTangle& t = tangles[old_tail.crossing];
    int port = 0;
    while (t.port_to_slot[port] != old_tail.slot) ++port;
    SlotRef tail = inner_end(old_tail.crossing, port);
    if (result.diagram.edge_at(tail) != e) fail(Errc::internal, "stub relocation failed");
    new_o[e] = static_cast<unsigned char>(result.diagram.end_index_at(tail));
  }
  for (int ci = 0; ci < n; ++ci) {
    const DecompositionTangle& t = tangles[ci];
    for (size_t a = 0; a < t.arcs.size(); ++a) {
      const TangleArc& arc = t.arcs[a];
      if (arc.from.at_port || arc.to.at_port) continue;
      int e = arc_edge[ci][a];
      SlotRef tail_slot = t.strand_enters_first[arc.strand]
                              ? SlotRef{node_base[ci] + arc.from.node, arc.from.slot}
                              : SlotRef{node_base[ci] + arc.to.node, arc.to.slot};
      new_o[e] = static_cast<unsigned char>(result.diagram.end_index_at(tail_slot));
    }
  }
  result.orientation = std::move(new_o);

  // Coloring, anchored so that the face continuing an original face keeps
  // its color: original dart 0 survives as a dart of (new) edge 0.
  {
    const FaceSet& fs = result.diagram.faces();
    SlotRef old_tail0 = d.edge_ends(0)[0];
    const DecompositionTangle& t = tangles[old_tail0.crossing];
    int port = 0;
    while (t.port_to_slot[port] != old_tail0.slot) ++port;
    SlotRef new_tail0 = inner_end(old_tail0.crossing, port);
    if (result.diagram.edge_at(new_tail0) != 0) fail(Errc::internal, "anchor relocation failed");
    Dart new_dart0 = 2 * 0 + result.diagram.end_index_at(new_tail0);
    FaceColor anchor_color = ocd.coloring.color[d.faces().face_of_dart[0]];

    Coloring col;
    col.color.assign(fs.count(), FaceColor::white);
    std::vector<int> state(fs.count(), -1);
    int f0 = fs.face_of_dart[new_dart0];
    state[f0] = anchor_color == FaceColor::white ? 0 : 1;
    std::vector<int> queue = {f0};
    size_t qi = 0;
    while (qi < queue.size()) {
      int f = queue[qi++];
      for (Dart dart : fs.faces[f].boundary) {
        int g = fs.face_of_dart[opposite(dart)];
        if (state[g] == -1) {
          state[g] = 1 - state[f];
          queue.push_back(g);
        } else if (state[g] == state[f]) {
          fail(Errc::not_bipartite, "refined face graph is not bipartite");
        }
      }
    }
    for (int f = 0; f < fs.count(); ++f) {
      col.color[f] = state[f] == 0 ? FaceColor::white : FaceColor::black;
      (col.color[f] == FaceColor::white ? col.white : col.black)++;
    }
    result.coloring = std::move(col);
  }

  return result;
}

}  // namespace multicross
