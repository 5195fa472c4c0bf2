#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace multicross {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer Laurent polynomial. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial term(int exponent, BigInt coefficient) {
    LaurentPolynomial p;
    p.set(exponent, std::move(coefficient));
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  void set(int exponent, BigInt value) {
    if (value == 0)
      coeff_.erase(exponent);
    else
      coeff_[exponent] = std::move(value);
  }
  void add(int exponent, const BigInt& value) {
    auto it = coeff_.try_emplace(exponent, 0).first;
    it->second += value;
    if (it->second == 0) coeff_.erase(it);
  }
  BigInt at(int exponent) const {
    auto it = coeff_.find(exponent);
    return it == coeff_.end() ? BigInt(0) : it->second;
  }

  int min_exponent() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }
  int max_exponent() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }
  // max exponent - min exponent; 0 for the zero and constant polynomials.
  int span() const { return coeff_.empty() ? 0 : max_exponent() - min_exponent(); }

  BigInt evaluate_at_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : coeff_) sum += c;
    return sum;
  }

  // Coefficient sequence equal to its reverse up to one global sign.
  bool palindromic() const;

  // Multiplies by +-t^j so the minimum exponent becomes -floor(span/2) and
  // the leading coefficient is positive. Span is unchanged.
  LaurentPolynomial normalized() const;

  // "c*t^e + c*t^e + ..." lowest exponent first; "0" for the zero polynomial.
  std::string to_string() const;

  const std::map<int, BigInt>& coefficients() const { return coeff_; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.coeff_ == b.coeff_; }

 private:
  std::map<int, BigInt> coeff_;
};

}  // namespace multicross
