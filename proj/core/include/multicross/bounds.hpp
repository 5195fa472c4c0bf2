#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multicross/errors.hpp"

namespace multicross {

// Lower and upper bounds on the n-crossing number c_n(L), evaluated from
// classical invariants. Crossing numbers are integers, so every lower bound
// is reported with the ceiling applied; the raw rational is kept alongside.

struct BoundValue {
  std::string source;
  long long numerator = 0;
  long long denominator = 1;
  long long value = 0;  // ceiling of the ratio for lower bounds, exact for uppers
};

// c_{2k+1}(L) >= (2g + r - 1) / k^2, rounded up.
long long thm1_bound(long long genus, long long components, long long k);

// c_{2k+1}(L) >= span(alexander) / k^2; never exceeds thm1_bound on
// consistent data, with equality for alternating links.
long long alexander_span_bound(long long span_delta, long long k);

// c_n(L) >= 2 c_2(L) / (n(n-1)).
long long trivial_bound(long long c2, long long n);

// c_n(K) >= span<K> / (floor(n^2/2) + 4n - 8); defined for n >= 3.
long long kauffman_span_bound(long long span_bracket, long long n);

// c_{2k+1}(T_{p,q}) >= (p-1)(q-1) / k^2, rounded up.
long long torus_thm1_bound(long long p, long long q, long long k);

// c_4(T_{2,4t+1}) = c_4(T_{2,4t+3}) = t+1, exactly. residue is q mod 4.
long long c4_torus2(long long t, int residue);

// Upper bound on c_5(T_{2,t}): ceil(t/4) for even t, floor((t+1)/3) for odd
// t >= 5. Odd t = 3 is rejected: the piecewise form would give 1 there
// while c_5(T_{2,3}) = 2 is known, so no value is reported.
long long c5_upper_torus2(long long t);

struct BoundQuery {
  int n = 2;  // target crossing multiplicity
  std::optional<std::pair<long long, long long>> torus;  // (p, q)
  std::optional<long long> genus;
  std::optional<long long> components;
  std::optional<long long> span_delta;
  std::optional<long long> c2;
  std::optional<long long> span_bracket;
  bool assume_monotone = false;
};

struct BoundResult {
  std::optional<long long> lower, upper;
  std::vector<BoundValue> lower_bounds, upper_bounds;  // everything evaluated
  std::vector<std::string> lower_sources, upper_sources;  // attributions of the max / min
  // Narrowing valid only under the conjecture c_n >= c_{n+1}; absent unless
  // requested, never replaces the unconditional interval.
  std::optional<long long> conjectural_lower, conjectural_upper;
  std::vector<std::string> conjectural_sources;
};

// Max of the applicable lower bounds, min of the applicable uppers.
// Errc::inconsistent_bounds when lower > upper without the conjecture.
BoundResult combine(const BoundQuery& query);

}  // namespace multicross
