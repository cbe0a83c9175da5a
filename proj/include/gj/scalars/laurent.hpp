#pragma once

#include <string>
#include <vector>

#include "gj/scalars/cyclotomic.hpp"

namespace gj {

/// Laurent polynomial in T with cyclotomic coefficients.
/// Trimmed at both ends; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const Cyclotomic& c, int exponent);
  static LaurentPoly from_coefficients(int low, std::vector<Cyclotomic> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Cyclotomic coeff(int exponent) const;
  const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }

  LaurentPoly shifted(int by) const;
  LaurentPoly scaled(const Cyclotomic& c) const;
  /// T -> c * T^sign, sign = +1 or -1.
  LaurentPoly substitute(const Cyclotomic& c, int sign) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  int low_ = 0;
  std::vector<Cyclotomic> coeffs_;
  void trim();
};

/// Ordinary polynomial division over the cyclotomic field; both arguments
/// must have low() >= 0. Returns {quotient, remainder}.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of two ordinary polynomials (low() == 0).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

}  // namespace gj
