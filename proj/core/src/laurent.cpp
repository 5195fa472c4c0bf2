#include "multicross/laurent.hpp"

#include <sstream>
#include <vector>

namespace multicross {

bool LaurentPolynomial::palindromic() const {
  if (coeff_.empty()) return true;
  int lo = min_exponent(), hi = max_exponent();
  // sign fixed by the outermost pair
  BigInt a = at(lo), b = at(hi);
  int sign = a == b ? 1 : (a == -b ? -1 : 0);
  if (sign == 0) return false;
  for (int i = 0; lo + i <= hi - i; ++i)
    if (at(lo + i) != sign * at(hi - i)) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (coeff_.empty()) return {};
  int shift = -(span() / 2) - min_exponent();
  bool negate = coeff_.rbegin()->second < 0;
  LaurentPolynomial out;
  for (const auto& [e, c] : coeff_) out.set(e + shift, negate ? BigInt(-c) : c);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (coeff_.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (const auto& [e, c] : coeff_) {
    if (!first) s << " + ";
    s << c.str() << "*t^" << e;
    first = false;
  }
  return s.str();
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.coeff_)
    for (const auto& [eb, cb] : b.coeff_) out.add(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.coeff_) out.add(e, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.coeff_) out.add(e, -c);
  return out;
}

}  // namespace multicross
