#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "gj/scalars/cyclotomic.hpp"

namespace gj {

/// Element of Q(i)[pi, 1/pi]: pi exponent -> Gaussian rational.
class PiNumber {
 public:
  PiNumber() = default;
  PiNumber(const Cyclotomic& c, int pi_exponent = 0);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  std::complex<double> value() const;

  PiNumber& operator+=(const PiNumber& o);
  friend PiNumber operator+(PiNumber a, const PiNumber& b) { return a += b; }
  friend PiNumber operator*(const PiNumber& a, const PiNumber& b);
  friend bool operator==(const PiNumber& a, const PiNumber& b) { return a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  std::map<int, Cyclotomic> terms_;
};

/// x -> P(x) exp(-pi x^2) with coefficients of P in Q(i)[pi, 1/pi].
class RealSchwartzFn {
 public:
  RealSchwartzFn() = default;
  explicit RealSchwartzFn(std::vector<PiNumber> coeffs);
  static RealSchwartzFn gaussian();
  /// x^k exp(-pi x^2).
  static RealSchwartzFn monomial(int k);
  /// H_k(sqrt(2 pi) x) exp(-pi x^2), physicists' Hermite; a Fourier eigenfunction.
  static RealSchwartzFn hermite(int k);

  const std::vector<PiNumber>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  RealSchwartzFn even_part() const;
  RealSchwartzFn odd_part() const;

  std::complex<double> operator()(double x) const;

  RealSchwartzFn& operator+=(const RealSchwartzFn& o);
  RealSchwartzFn scaled(const PiNumber& c) const;
  friend RealSchwartzFn operator+(RealSchwartzFn a, const RealSchwartzFn& b) { return a += b; }
  friend bool operator==(const RealSchwartzFn& a, const RealSchwartzFn& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  std::vector<PiNumber> c_;
  void trim();
};

/// int f(y) exp(2 pi i x y) dy, exactly.
RealSchwartzFn fourier_real(const RealSchwartzFn& f);
RealSchwartzFn reflect(const RealSchwartzFn& f);

}  // namespace gj
