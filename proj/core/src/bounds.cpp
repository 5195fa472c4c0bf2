#include "multicross/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace multicross {

namespace {

long long ceil_div(long long a, long long b) {
  // nonnegative numerators only
  return (a + b - 1) / b;
}

void check_nonneg(long long v, const char* what) {
  if (v < 0) fail(Errc::unsupported_parameter, std::string(what) + " must be nonnegative");
}

}  // namespace

long long thm1_bound(long long genus, long long components, long long k) {
  check_nonneg(genus, "genus");
  if (components < 1) fail(Errc::unsupported_parameter, "component count must be at least 1");
  if (k < 1) fail(Errc::unsupported_parameter, "k must be positive");
  return ceil_div(2 * genus + components - 1, k * k);
}

long long alexander_span_bound(long long span_delta, long long k) {
  check_nonneg(span_delta, "span");
  if (k < 1) fail(Errc::unsupported_parameter, "k must be positive");
  return ceil_div(span_delta, k * k);
}

long long trivial_bound(long long c2, long long n) {
  check_nonneg(c2, "c2");
  if (n < 2) fail(Errc::unsupported_parameter, "n must be at least 2");
  return ceil_div(2 * c2, n * (n - 1));
}

long long kauffman_span_bound(long long span_bracket, long long n) {
  check_nonneg(span_bracket, "span");
  if (n < 3) fail(Errc::denominator_nonpositive, "bracket-span bound needs n >= 3");
  return ceil_div(span_bracket, (n * n) / 2 + 4 * n - 8);
}

long long torus_thm1_bound(long long p, long long q, long long k) {
  if (p < 2 || q < 2) fail(Errc::unsupported_parameter, "torus parameters must be at least 2");
  if (k < 1) fail(Errc::unsupported_parameter, "k must be positive");
  return ceil_div((p - 1) * (q - 1), k * k);
}

long long c4_torus2(long long t, int residue) {
  check_nonneg(t, "t");
  if (residue != 1 && residue != 3) fail(Errc::unsupported_parameter, "residue must be 1 or 3");
  return t + 1;
}

long long c5_upper_torus2(long long t) {
  if (t < 2) fail(Errc::unsupported_parameter, "t must be at least 2");
  if (t % 2 == 0) return ceil_div(t, 4);
  if (t == 3)
    fail(Errc::unsupported_parameter,
         "no upper bound is reported for T(2,3): the odd-case formula would undercut the known value");
  return (t + 1) / 3;
}

BoundResult combine(const BoundQuery& query) {
  if (query.n < 2) fail(Errc::unsupported_parameter, "n must be at least 2");
  bool any = query.torus || query.genus || query.span_delta || query.c2 || query.span_bracket;
  if (!any) fail(Errc::unsupported_parameter, "no invariants supplied");

  long long p = 0, q = 0;
  if (query.torus) {
    p = query.torus->first;
    q = query.torus->second;
    if (p > q) std::swap(p, q);
    if (p < 2 || q < 2) fail(Errc::unsupported_parameter, "torus parameters must be at least 2");
  }

  // All bounds applicable at multiplicity nn.
  auto lowers_at = [&](int nn) {
    std::vector<BoundValue> out;
    long long k = (nn - 1) / 2;
    bool odd = nn % 2 == 1;
    if (query.torus && odd) {
      if (std::gcd(p, q) == 1 || p == 2)
        out.push_back({"eq2", (p - 1) * (q - 1), k * k, torus_thm1_bound(p, q, k)});
    }
    if (query.genus && odd) {
      long long r = query.components.value_or(1);
      out.push_back({"thm1", 2 * *query.genus + r - 1, k * k, thm1_bound(*query.genus, r, k)});
    }
    if (query.span_delta && odd)
      out.push_back({"alexander-span", *query.span_delta, k * k, alexander_span_bound(*query.span_delta, k)});
    if (query.c2)
      out.push_back({"trivial", 2 * *query.c2, static_cast<long long>(nn) * (nn - 1), trivial_bound(*query.c2, nn)});
    if (query.span_bracket && nn >= 3) {
      long long denom = (static_cast<long long>(nn) * nn) / 2 + 4 * nn - 8;
      out.push_back({"kauffman", *query.span_bracket, denom, kauffman_span_bound(*query.span_bracket, nn)});
    }
    return out;
  };
  auto uppers_at = [&](int nn) {
    std::vector<BoundValue> out;
    if (query.torus && p == 2) {
      if (nn == 4 && q % 2 == 1) {
        long long t = q % 4 == 1 ? (q - 1) / 4 : (q - 3) / 4;
        out.push_back({"c4", t + 1, 1, c4_torus2(t, static_cast<int>(q % 4))});
      }
      if (nn == 5 && q != 3) {
        long long v = c5_upper_torus2(q);
        out.push_back({"thm13", v, 1, v});
      }
    }
    return out;
  };

  BoundResult result;
  result.lower_bounds = lowers_at(query.n);
  result.upper_bounds = uppers_at(query.n);
  // Adams' exact c_4 value is a lower bound too.
  if (query.torus && p == 2 && query.n == 4 && q % 2 == 1) {
    std::vector<BoundValue> exact;
    for (const BoundValue& u : result.upper_bounds)
      if (u.source == "c4") exact.push_back(u);
    result.lower_bounds.insert(result.lower_bounds.end(), exact.begin(), exact.end());
  }

  for (const BoundValue& b : result.lower_bounds)
    if (!result.lower || b.value > *result.lower) result.lower = b.value;
  for (const BoundValue& b : result.upper_bounds)
    if (!result.upper || b.value < *result.upper) result.upper = b.value;
  for (const BoundValue& b : result.lower_bounds)
    if (result.lower && b.value == *result.lower) result.lower_sources.push_back(b.source);
  for (const BoundValue& b : result.upper_bounds)
    if (result.upper && b.value == *result.upper) result.upper_sources.push_back(b.source);

  if (result.lower && result.upper && *result.lower > *result.upper)
    fail(Errc::inconsistent_bounds, "lower bound " + std::to_string(*result.lower) + " exceeds upper bound " +
                                        std::to_string(*result.upper));

  if (query.assume_monotone) {
    // c_n >= c_{n+1}: upper bounds at smaller multiplicities apply here,
    // lower bounds at larger ones do.
    result.conjectural_lower = result.lower;
    result.conjectural_upper = result.upper;
    for (int nn = 2; nn <= query.n + 8; ++nn) {
      if (nn < query.n) {
        for (const BoundValue& b : uppers_at(nn)) {
          if (!result.conjectural_upper || b.value < *result.conjectural_upper) {
            result.conjectural_upper = b.value;
            result.conjectural_sources = {b.source + "@n" + std::to_string(nn) + "+monotonicity"};
          }
        }
        if (nn == 2 && query.c2) {
          if (!result.conjectural_upper || *query.c2 < *result.conjectural_upper) {
            result.conjectural_upper = *query.c2;
            result.conjectural_sources = {"c2+monotonicity"};
          }
        }
      }
      if (nn > query.n) {
        for (const BoundValue& b : lowers_at(nn)) {
          if (!result.conjectural_lower || b.value > *result.conjectural_lower) {
            result.conjectural_lower = b.value;
            result.conjectural_sources.push_back(b.source + "@n" + std::to_string(nn) + "+monotonicity");
          }
        }
      }
    }
  }
  return result;
}

}  // namespace multicross
