#include "multicross/alexander.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace multicross {

namespace {

// Dense polynomial in t over the integers; p[i] is the t^i coefficient.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Exact division; Bareiss guarantees divisibility in Z[t].
Poly divexact(Poly a, const Poly& b) {
  if (b.empty()) fail(Errc::internal, "polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) fail(Errc::internal, "inexact polynomial division");
  Poly q(a.size() - b.size() + 1, BigInt(0));
  const BigInt& lead = b.back();
  for (size_t i = q.size(); i-- > 0;) {
    BigInt top = a[i + b.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) fail(Errc::internal, "inexact polynomial division");
    q[i] = top / lead;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (const BigInt& c : a)
    if (c != 0) fail(Errc::internal, "inexact polynomial division");
  trim(q);
  return q;
}

// Fraction-free elimination; exact determinant of a square matrix over Z[t].
Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  size_t n = m.size();
  if (n == 0) return Poly{BigInt(1)};
  int sign = 1;
  Poly prev{BigInt(1)};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].empty()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = divexact(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (sign < 0)
    for (BigInt& c : det) c = -c;
  return det;
}

void require_oriented_two_diagram(const MulticrossingDiagram& d, const Orientation& o) {
  if (o.size() != static_cast<size_t>(d.edge_count()))
    fail(Errc::not_oriented, "orientation does not cover every edge");
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    if (d.crossing(ci).order() != 2)
      fail(Errc::not_oriented, "alexander requires a uniform 2-crossing diagram");
    for (int s = 0; s < 2; ++s)
      if (slot_is_out(d, o, {ci, s}) == slot_is_out(d, o, {ci, s + 2}))
        fail(Errc::not_oriented, "strand through crossing " + std::to_string(ci) + " is not consistently directed");
  }
}

}  // namespace

LaurentPolynomial alexander(const MulticrossingDiagram& d, const Orientation& o) {
  require_oriented_two_diagram(d, o);
  int n = d.crossing_count();
  if (n == 0) {
    // Round unknot diagram; several circles form a split (hence trivial-
    // polynomial) unlink.
    return d.component_count() == 1 ? LaurentPolynomial::term(0, 1) : LaurentPolynomial{};
  }

  // Arcs: unite the two over-strand edges at each crossing; under-strand
  // edges stay cut there.
  std::vector<int> arc(d.edge_count());
  std::iota(arc.begin(), arc.end(), 0);
  auto find = [&](int e) {
    while (arc[e] != e) e = arc[e] = arc[arc[e]];
    return e;
  };
  for (int ci = 0; ci < n; ++ci) {
    const Crossing& c = d.crossing(ci);
    int over_slot = c.levels[0] == 2 ? 0 : 1;
    arc[find(c.edges[over_slot])] = find(c.edges[over_slot + 2]);
  }
  std::vector<int> arc_id(d.edge_count(), -1);
  int arcs = 0;
  for (int e = 0; e < d.edge_count(); ++e)
    if (find(e) == e) arc_id[e] = arcs++;
  if (arcs > n) return {};  // a component never passes under: the link splits

  // One relation row per crossing. With o the over arc, i the inbound and
  // u the outbound under arc:
  //   positive crossing:  (1-t)*o + t*i - u
  //   negative crossing:  (1-t)*o + i - t*u
  // A crossing is positive when the over strand leaves through the slot one
  // step counterclockwise from the under strand's exit.
  const Poly one{BigInt(1)};
  const Poly t{BigInt(0), BigInt(1)};
  const Poly one_minus_t{BigInt(1), BigInt(-1)};
  std::vector<std::vector<Poly>> matrix(n, std::vector<Poly>(arcs));
  auto add_to = [](Poly& cell, const Poly& v, bool negate) {
    if (cell.size() < v.size()) cell.resize(v.size(), BigInt(0));
    for (size_t i = 0; i < v.size(); ++i) cell[i] += negate ? BigInt(-v[i]) : v[i];
    trim(cell);
  };
  for (int ci = 0; ci < n; ++ci) {
    const Crossing& c = d.crossing(ci);
    int over_slot = c.levels[0] == 2 ? 0 : 1;
    int under_slot = over_slot ^ 1;
    int over_exit = slot_is_out(d, o, {ci, over_slot}) ? over_slot : over_slot + 2;
    int under_exit = slot_is_out(d, o, {ci, under_slot}) ? under_slot : under_slot + 2;
    int under_entry = (under_exit + 2) % 4;
    bool positive = over_exit == (under_exit + 1) % 4;

    int col_over = arc_id[find(c.edges[over_slot])];
    int col_in = arc_id[find(c.edges[under_entry])];
    int col_out = arc_id[find(c.edges[under_exit])];

    add_to(matrix[ci][col_over], one_minus_t, false);
    add_to(matrix[ci][col_in], positive ? t : one, false);
    add_to(matrix[ci][col_out], positive ? one : t, true);
  }

  // Delete the last row and column, take the exact determinant.
  matrix.pop_back();
  for (auto& row : matrix) row.pop_back();
  Poly det = bareiss_determinant(std::move(matrix));

  LaurentPolynomial result;
  for (size_t i = 0; i < det.size(); ++i) result.set(static_cast<int>(i), det[i]);
  return result.normalized();
}

int span(const LaurentPolynomial& p) { return p.span(); }

}  // namespace multicross
