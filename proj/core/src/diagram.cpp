#include "multicross/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace multicross {

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

// Splits one physical line into whitespace-separated tokens, dropping '#'
// comments. Columns are 1-based byte offsets.
void tokenize_line(std::string_view line, int line_no, std::vector<Token>& out) {
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
    i = j;
  }
}

long long parse_int(const Token& t) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    fail(Errc::malformed_line, "expected an integer, got '" + std::string(t.text) + "'", t.line, t.column);
  return value;
}

}  // namespace

int MulticrossingDiagram::end_index_at(SlotRef s) const {
  int e = edge_at(s);
  return edge_ends_[e][0] == s ? 0 : 1;
}

std::optional<int> MulticrossingDiagram::uniform_order() const {
  if (crossings_.empty()) return std::nullopt;
  int m = crossings_.front().order();
  for (const Crossing& c : crossings_)
    if (c.order() != m) return std::nullopt;
  return m;
}

bool MulticrossingDiagram::all_orders_odd() const {
  for (const Crossing& c : crossings_)
    if (c.order() % 2 == 0) return false;
  return !crossings_.empty();
}

MulticrossingDiagram MulticrossingDiagram::from_crossings(std::vector<Crossing> crossings, int free_loops) {
  MulticrossingDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.build_tables();
  return d;
}

void MulticrossingDiagram::build_tables() {
  if (crossings_.empty() && free_loops_ == 0)
    fail(Errc::malformed_line, "empty diagram: no crossings and no circles");
  if (!crossings_.empty() && free_loops_ > 0)
    fail(Errc::disconnected, "crossing-free circles cannot coexist with crossings");

  // Per-crossing shape checks.
  for (size_t ci = 0; ci < crossings_.size(); ++ci) {
    const Crossing& c = crossings_[ci];
    int m = c.order();
    if (m < 2)
      fail(Errc::malformed_line, "crossing " + std::to_string(ci) + " has order < 2");
    if (c.edges.size() != static_cast<size_t>(2 * m))
      fail(Errc::malformed_line, "crossing " + std::to_string(ci) + " has wrong slot count");
    std::vector<bool> seen(m, false);
    for (int level : c.levels) {
      if (level < 1 || level > m || seen[level - 1])
        fail(Errc::bad_level_permutation,
             "levels of crossing " + std::to_string(ci) + " are not a permutation of 1.." + std::to_string(m));
      seen[level - 1] = true;
    }
  }

  // Edge endpoints: every edge id must occur exactly twice.
  int max_edge = -1;
  for (const Crossing& c : crossings_)
    for (int e : c.edges) max_edge = std::max(max_edge, e);
  int edge_count = max_edge + 1;
  edge_ends_.assign(edge_count, {SlotRef{}, SlotRef{}});
  std::vector<int> occurrences(edge_count, 0);
  for (size_t ci = 0; ci < crossings_.size(); ++ci) {
    const Crossing& c = crossings_[ci];
    for (size_t s = 0; s < c.edges.size(); ++s) {
      int e = c.edges[s];
      if (e < 0) fail(Errc::malformed_line, "negative edge id");
      if (occurrences[e] == 2)
        fail(Errc::edge_used_thrice, "edge " + std::to_string(e + 1) + " used more than twice");
      edge_ends_[e][occurrences[e]++] = SlotRef{static_cast<int>(ci), static_cast<int>(s)};
    }
  }
  for (int e = 0; e < edge_count; ++e)
    if (occurrences[e] != 2)
      fail(Errc::edge_used_once, "edge " + std::to_string(e + 1) + " used " + std::to_string(occurrences[e]) +
                                     " time(s), expected exactly 2");

  // Out-dart table.
  dart_index_base_.assign(crossings_.size(), 0);
  int total_slots = 0;
  for (size_t ci = 0; ci < crossings_.size(); ++ci) {
    dart_index_base_[ci] = total_slots;
    total_slots += 2 * crossings_[ci].order();
  }
  out_dart_.assign(total_slots, -1);
  for (int e = 0; e < edge_count; ++e) {
    for (int end = 0; end < 2; ++end) {
      SlotRef s = edge_ends_[e][end];
      out_dart_[dart_index_base_[s.crossing] + s.slot] = 2 * e + end;
    }
  }

  // Connectivity of the crossing graph.
  if (!crossings_.empty()) {
    std::vector<bool> visited(crossings_.size(), false);
    std::vector<int> stack = {0};
    visited[0] = true;
    while (!stack.empty()) {
      int ci = stack.back();
      stack.pop_back();
      for (int e : crossings_[ci].edges) {
        for (const SlotRef& end : edge_ends_[e]) {
          if (!visited[end.crossing]) {
            visited[end.crossing] = true;
            stack.push_back(end.crossing);
          }
        }
      }
    }
    if (!std::all_of(visited.begin(), visited.end(), [](bool b) { return b; }))
      fail(Errc::disconnected, "diagram is not connected");
  }

  // Faces: orbit of dart -> dart leaving the slot clockwise-next to its head.
  faces_.faces.clear();
  faces_.face_of_dart.assign(2 * edge_count, -1);
  for (Dart start = 0; start < 2 * edge_count; ++start) {
    if (faces_.face_of_dart[start] != -1) continue;
    Face face;
    int id = static_cast<int>(faces_.faces.size());
    Dart d = start;
    do {
      faces_.face_of_dart[d] = id;
      face.boundary.push_back(d);
      SlotRef head = dart_head(d);
      int deg = 2 * crossings_[head.crossing].order();
      d = dart_out_of(SlotRef{head.crossing, (head.slot + deg - 1) % deg});
    } while (d != start);
    faces_.faces.push_back(std::move(face));
  }

  // Euler characteristic: V - E + F = 2 exactly for a connected planar map.
  if (!crossings_.empty()) {
    long long euler = static_cast<long long>(crossings_.size()) - edge_count + faces_.count();
    if (euler != 2)
      fail(Errc::non_planar, "rotation system is not planar (V-E+F = " + std::to_string(euler) + ", expected 2)");
  }

  // Strand components: slot s joins slot s+m through the crossing, edges join
  // their two ends.
  component_of_edge_.assign(edge_count, -1);
  component_count_ = 0;
  for (int e0 = 0; e0 < edge_count; ++e0) {
    if (component_of_edge_[e0] != -1) continue;
    int id = component_count_++;
    std::vector<int> stack = {e0};
    component_of_edge_[e0] = id;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      for (const SlotRef& end : edge_ends_[e]) {
        const Crossing& c = crossings_[end.crossing];
        int m = c.order();
        int mate_slot = (end.slot + m) % (2 * m);
        int e2 = c.edges[mate_slot];
        if (component_of_edge_[e2] == -1) {
          component_of_edge_[e2] = id;
          stack.push_back(e2);
        }
      }
    }
  }
  component_count_ += free_loops_;
}

MulticrossingDiagram MulticrossingDiagram::parse(std::string_view text) {
  std::vector<Crossing> crossings;
  int free_loops = 0;
  std::unordered_map<long long, int> edge_id;  // label -> dense id
  std::unordered_map<long long, Token> first_use;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::vector<Token> tokens;
    tokenize_line(line, line_no, tokens);
    if (tokens.empty()) continue;

    if (tokens[0].text == "O") {
      if (tokens.size() != 1)
        fail(Errc::malformed_line, "'O' takes no arguments", tokens[1].line, tokens[1].column);
      ++free_loops;
      continue;
    }
    if (tokens[0].text != "X")
      fail(Errc::malformed_line, "expected 'X' or 'O', got '" + std::string(tokens[0].text) + "'", tokens[0].line,
           tokens[0].column);

    size_t bar = 0;
    for (size_t i = 1; i < tokens.size(); ++i)
      if (tokens[i].text == "|") {
        bar = i;
        break;
      }
    if (bar == 0)
      fail(Errc::malformed_line, "missing '|' between edges and levels", line_no, tokens.back().column);

    size_t edge_tokens = bar - 1;
    size_t level_tokens = tokens.size() - bar - 1;
    if (level_tokens < 2 || edge_tokens != 2 * level_tokens)
      fail(Errc::malformed_line,
           "crossing of order m needs 2m edge labels and m levels (m >= 2); got " + std::to_string(edge_tokens) +
               " edges, " + std::to_string(level_tokens) + " levels",
           line_no, tokens[0].column);

    Crossing c;
    for (size_t i = 1; i < bar; ++i) {
      long long label = parse_int(tokens[i]);
      if (label <= 0)
        fail(Errc::malformed_line, "edge labels must be positive", tokens[i].line, tokens[i].column);
      auto [it, inserted] = edge_id.try_emplace(label, static_cast<int>(edge_id.size()));
      if (inserted) first_use.insert({label, tokens[i]});
      c.edges.push_back(it->second);
    }
    for (size_t i = bar + 1; i < tokens.size(); ++i) {
      long long level = parse_int(tokens[i]);
      if (level < 1 || level > static_cast<long long>(level_tokens))
        fail(Errc::bad_level_permutation, "level out of range 1.." + std::to_string(level_tokens), tokens[i].line,
             tokens[i].column);
      c.levels.push_back(static_cast<int>(level));
    }
    crossings.push_back(std::move(c));
  }

  // Report single-use edges at their point of first use.
  std::vector<int> occurrences(edge_id.size(), 0);
  for (const Crossing& c : crossings)
    for (int e : c.edges) ++occurrences[e];
  for (const auto& [label, id] : edge_id) {
    if (occurrences[id] == 1) {
      const Token& t = first_use.at(label);
      fail(Errc::edge_used_once, "edge " + std::to_string(label) + " used only once", t.line, t.column);
    }
  }

  return from_crossings(std::move(crossings), free_loops);
}

std::string MulticrossingDiagram::serialize() const {
  std::vector<int> relabel(edge_count(), 0);
  int next = 0;
  for (const Crossing& c : crossings_)
    for (int e : c.edges)
      if (relabel[e] == 0) relabel[e] = ++next;

  std::ostringstream out;
  for (const Crossing& c : crossings_) {
    out << 'X';
    for (int e : c.edges) out << ' ' << relabel[e];
    out << " |";
    for (int level : c.levels) out << ' ' << level;
    out << '\n';
  }
  for (int i = 0; i < free_loops_; ++i) out << "O\n";
  return out.str();
}

int corner_face(const MulticrossingDiagram& d, int crossing, int corner) {
  int deg = 2 * d.crossing(crossing).order();
  // The face occupying the corner between slots j and j+1 is the one whose
  // boundary arrives through slot j+1.
  return d.faces().face_of_dart[d.dart_into(SlotRef{crossing, (corner + 1) % deg})];
}

}  // namespace multicross
