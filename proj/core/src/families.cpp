#include "multicross/families.hpp"

#include <algorithm>
#include <numeric>

namespace multicross {

MulticrossingDiagram necklace(int k, int n, std::vector<int> levels) {
  if (k < 1 || n < 1) fail(Errc::unsupported_parameter, "necklace needs k >= 1, n >= 1");
  int m = 2 * k + 1;
  if (levels.empty()) {
    levels.resize(m);
    std::iota(levels.begin(), levels.end(), 1);
  }
  std::vector<Crossing> crossings(n);
  int next_edge = 0;
  for (int i = 0; i < n; ++i) {
    crossings[i].edges.assign(2 * m, -1);
    crossings[i].levels = levels;
  }
  // connectors: slot 0 of crossing i to slot m of crossing i+1
  for (int i = 0; i < n; ++i) {
    int e = next_edge++;
    crossings[i].edges[0] = e;
    crossings[(i + 1) % n].edges[m] = e;
  }
  // local loops on the remaining slots
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s + 1 < m; s += 2) {
      int e = next_edge++;
      crossings[i].edges[s] = e;
      crossings[i].edges[s + 1] = e;
    }
    for (int s = m + 1; s + 1 < 2 * m; s += 2) {
      int e = next_edge++;
      crossings[i].edges[s] = e;
      crossings[i].edges[s + 1] = e;
    }
  }
  return MulticrossingDiagram::from_crossings(std::move(crossings));
}

MulticrossingDiagram petal(std::vector<int> levels) {
  int m = static_cast<int>(levels.size());
  if (m < 3 || m % 2 == 0) fail(Errc::unsupported_parameter, "petal diagrams need odd order >= 3");
  Crossing c;
  c.levels = std::move(levels);
  c.edges.resize(2 * m);
  for (int s = 0; s < 2 * m; s += 2) {
    c.edges[s] = s / 2;
    c.edges[s + 1] = s / 2;
  }
  return MulticrossingDiagram::from_crossings({std::move(c)});
}

MulticrossingDiagram nested_loops3(std::vector<int> levels) {
  Crossing c;
  c.levels = std::move(levels);
  c.edges = {0, 1, 2, 2, 1, 0};
  return MulticrossingDiagram::from_crossings({std::move(c)});
}

OrientedDiagram braid_closure(int width, const std::vector<int>& word) {
  if (width < 2) fail(Errc::unsupported_parameter, "braid width must be at least 2");
  if (word.empty()) fail(Errc::unsupported_parameter, "braid word must be nonempty");

  // Crossing slots, counterclockwise with the braid flowing downward:
  // 0 = top-right, 1 = top-left, 2 = bottom-left, 3 = bottom-right.
  // Strand pairs are (0,2) and (1,3); a positive letter puts the strand
  // entering top-left on top.
  std::vector<Crossing> crossings;
  crossings.reserve(word.size());
  struct Dangling {
    int crossing = -1, slot = -1;
  };
  std::vector<Dangling> open(width);         // below the rows built so far
  std::vector<Dangling> first_use(width);    // uppermost attachment per position
  std::vector<bool> used(width, false);
  int next_edge = 0;
  std::vector<std::pair<SlotRef, SlotRef>> edges;  // (from, to) in flow order

  auto attach = [&](int position, int crossing, int slot) {
    if (!used[position]) {
      used[position] = true;
      first_use[position] = {crossing, slot};
    } else {
      edges.push_back({{open[position].crossing, open[position].slot}, {crossing, slot}});
      ++next_edge;
    }
  };

  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= width) fail(Errc::unsupported_parameter, "braid letter out of range");
    int c = static_cast<int>(crossings.size());
    crossings.push_back({{-1, -1, -1, -1}, letter > 0 ? std::vector<int>{1, 2} : std::vector<int>{2, 1}});
    attach(i - 1, c, 1);  // top-left from position i
    attach(i, c, 0);      // top-right from position i+1
    open[i - 1] = {c, 2};
    open[i] = {c, 3};
  }
  for (int pos = 0; pos < width; ++pos) {
    if (!used[pos]) fail(Errc::unsupported_parameter, "braid word leaves position " + std::to_string(pos + 1) + " idle");
    edges.push_back({{open[pos].crossing, open[pos].slot}, {first_use[pos].crossing, first_use[pos].slot}});
    ++next_edge;
  }

  Orientation o(edges.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    crossings[edges[e].first.crossing].edges[edges[e].first.slot] = static_cast<int>(e);
    crossings[edges[e].second.crossing].edges[edges[e].second.slot] = static_cast<int>(e);
  }
  MulticrossingDiagram d = MulticrossingDiagram::from_crossings(std::move(crossings));
  // from_crossings stores ends in scan order; point each edge at its flow tail
  for (size_t e = 0; e < edges.size(); ++e)
    o[e] = d.edge_ends(static_cast<int>(e))[0] == edges[e].first ? 0 : 1;
  return {std::move(d), std::move(o)};
}

OrientedDiagram torus2(int q) {
  if (q < 2) fail(Errc::unsupported_parameter, "torus2 needs q >= 2");
  return braid_closure(2, std::vector<int>(q, 1));
}

OrientedDiagram grid_diagram(const std::vector<int>& xs, const std::vector<int>& os) {
  int n = static_cast<int>(xs.size());
  if (n < 2 || os.size() != xs.size()) fail(Errc::unsupported_parameter, "grid needs matching xs/os, size >= 2");
  std::vector<int> xcol(n, -1), ocol(n, -1);  // row -> column of its marker
  for (int c = 0; c < n; ++c) {
    if (xs[c] < 0 || xs[c] >= n || os[c] < 0 || os[c] >= n || xs[c] == os[c])
      fail(Errc::unsupported_parameter, "grid markers out of range");
    if (xcol[xs[c]] != -1 || ocol[os[c]] != -1) fail(Errc::unsupported_parameter, "grid row used twice");
    xcol[xs[c]] = c;
    ocol[os[c]] = c;
  }

  // Crossings: vertical segment of column c meets horizontal segment of row
  // r when each passes strictly through the other. Slots counterclockwise:
  // 0 = east, 1 = north, 2 = west, 3 = south; vertical passes over.
  struct Cross {
    int col, row, id;
  };
  std::vector<Cross> crossing_list;
  std::vector<std::vector<std::pair<int, int>>> on_column(n), on_row(n);  // (coord, id)
  for (int c = 0; c < n; ++c) {
    int rlo = std::min(xs[c], os[c]), rhi = std::max(xs[c], os[c]);
    for (int r = rlo + 1; r < rhi; ++r) {
      int clo = std::min(xcol[r], ocol[r]), chi = std::max(xcol[r], ocol[r]);
      if (c > clo && c < chi) {
        int id = static_cast<int>(crossing_list.size());
        crossing_list.push_back({c, r, id});
        on_column[c].push_back({r, id});
        on_row[r].push_back({c, id});
      }
    }
  }
  if (crossing_list.empty()) fail(Errc::unsupported_parameter, "grid has no crossings");
  for (auto& v : on_column) std::sort(v.begin(), v.end());
  for (auto& v : on_row) std::sort(v.begin(), v.end());

  std::vector<Crossing> crossings(crossing_list.size());
  for (auto& c : crossings) {
    c.edges.assign(4, -1);
    c.levels = {1, 2};  // horizontal strand (slots 0,2) under
  }

  // Walk forward from every outbound crossing slot to the next inbound one,
  // turning at X and O cells. Verticals run X -> O, horizontals O -> X.
  std::vector<std::pair<SlotRef, SlotRef>> edges;
  auto next_on = [&](const std::vector<std::pair<int, int>>& line, int coord, int dir) -> int {
    // nearest crossing id strictly beyond coord in direction dir, or -1
    if (dir > 0) {
      for (const auto& [x, id] : line)
        if (x > coord) return id;
    } else {
      for (auto it = line.rbegin(); it != line.rend(); ++it)
        if (it->first < coord) return it->second;
    }
    return -1;
  };

  for (const Cross& start : crossing_list) {
    for (bool vertical : {true, false}) {
      // outbound direction of this strand at this crossing
      int dir, slot;
      if (vertical) {
        dir = os[start.col] > xs[start.col] ? 1 : -1;  // towards O
        slot = dir > 0 ? 1 : 3;
      } else {
        dir = xcol[start.row] > ocol[start.row] ? 1 : -1;  // towards X
        slot = dir > 0 ? 0 : 2;
      }
      SlotRef from{start.id, slot};
      // march until the next crossing, switching segments at markers
      bool vert = vertical;
      int col = start.col, row = start.row, d = dir;
      int at = vert ? row : col;
      while (true) {
        const auto& line = vert ? on_column[col] : on_row[row];
        int hit = next_on(line, at, d);
        if (hit != -1) {
          int in_slot = vert ? (d > 0 ? 3 : 1) : (d > 0 ? 2 : 0);
          edges.push_back({from, {hit, in_slot}});
          break;
        }
        if (vert) {
          // reach the O cell of this column, turn onto its row
          row = os[col];
          d = xcol[row] > ocol[row] ? 1 : -1;
          at = col;
          vert = false;
        } else {
          // reach the X cell of this row, turn onto its column
          col = xcol[row];
          d = os[col] > xs[col] ? 1 : -1;
          at = row;
          vert = true;
        }
      }
    }
  }

  for (size_t e = 0; e < edges.size(); ++e) {
    crossings[edges[e].first.crossing].edges[edges[e].first.slot] = static_cast<int>(e);
    crossings[edges[e].second.crossing].edges[edges[e].second.slot] = static_cast<int>(e);
  }
  MulticrossingDiagram d = MulticrossingDiagram::from_crossings(std::move(crossings));
  Orientation o(edges.size());
  for (size_t e = 0; e < edges.size(); ++e)
    o[e] = d.edge_ends(static_cast<int>(e))[0] == edges[e].first ? 0 : 1;
  return {std::move(d), std::move(o)};
}

}  // namespace multicross
