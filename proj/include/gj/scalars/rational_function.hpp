#pragma once

#include <complex>
#include <string>

#include "json.hpp"

#include "gj/scalars/laurent.hpp"

namespace gj {

/// Rational function in T = q^{-s/2}, kept as T^e * N(T) / D(T) with N, D
/// coprime ordinary polynomials, N(0) != 0 and D(0) = 1. The numerator is
/// stored with the shift folded in.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Cyclotomic& c, int q = 0);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly num, LaurentPoly den = LaurentPoly(Cyclotomic(1L)), int q = 0);
  static RationalFunction monomial(const Cyclotomic& c, int exponent, int q = 0);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  int base() const { return q_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction inverse() const;
  /// T -> c * T^sign.
  RationalFunction substitute(const Cyclotomic& c, int sign) const;
  /// Power series coefficients of T^k for k in [lo, hi].
  std::vector<Cyclotomic> expand(int lo, int hi) const;
  /// Numeric value at a complex T.
  std::complex<double> evaluate(std::complex<double> t) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_{Cyclotomic(1L)};
  int q_ = 0;
  void normalize();
  int merge_base(int other) const;
};

/// Cross-multiplied exact equality.
bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);

nlohmann::json to_json(const LaurentPoly& p);
/// {num: {exponent: coeff}, den: {...}, base_q, variable, text}.
nlohmann::json to_json(const RationalFunction& r);

}  // namespace gj
