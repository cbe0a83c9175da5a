#pragma once

#include <string>
#include <vector>

#include "gj/scalars/cyclotomic.hpp"

namespace gj {

/// Q_p with residue cardinality q = p and psi of conductor Z_p.
struct PAdicContext {
  int p = 2;
  int q() const { return p; }
  static constexpr const char* psi_convention = "conductor Z_p: psi(x) = exp(2 pi i {x}_p)";
  explicit PAdicContext(int prime);
};

bool is_prime(long long n);

/// v and |x| = q^{-v}.
struct NormMonomial {
  int valuation = 0;
  BigRational norm;
};

/// Throws EngineError(Zero) on x = 0.
NormMonomial norm_monomial(const BigRational& x, int p);

/// psi(x) = zeta_{p^m}^a with a / p^m the p-fractional part of x.
Cyclotomic psi_value(const BigRational& x, int p);
inline Cyclotomic psi_value(const BigRational& x, const PAdicContext& ctx) { return psi_value(x, ctx.p); }

/// (m, a) with psi(x) = zeta_{p^m}^a; m = 0 when x is p-integral.
std::pair<int, BigInt> psi_exponent(const BigRational& x, int p);

class PAdicMatrix {
 public:
  PAdicMatrix() = default;
  explicit PAdicMatrix(int n);
  PAdicMatrix(int n, std::vector<BigRational> entries);
  static PAdicMatrix identity(int n);
  static PAdicMatrix scalar(int n, const BigRational& c);
  static PAdicMatrix diagonal(const std::vector<BigRational>& d);
  static PAdicMatrix from_rows(const std::vector<std::vector<BigRational>>& rows);

  int size() const { return n_; }
  BigRational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const BigRational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<BigRational>& entries() const { return a_; }

  BigRational det() const;
  BigRational trace() const;
  /// Minimum entry valuation (kInfiniteValuation for the zero matrix).
  int valuation(int p) const;
  bool is_zero() const;

  PAdicMatrix operator*(const PAdicMatrix& o) const;
  PAdicMatrix operator+(const PAdicMatrix& o) const;
  PAdicMatrix operator-(const PAdicMatrix& o) const;
  PAdicMatrix operator-() const;
  PAdicMatrix scaled(const BigRational& c) const;
  PAdicMatrix transpose() const;
  friend bool operator==(const PAdicMatrix& a, const PAdicMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<BigRational> a_;
};

/// Throws EngineError(Singular) when det = 0.
PAdicMatrix mat_invert(const PAdicMatrix& g);

/// tr(a b) without forming the product.
BigRational trace_product(const PAdicMatrix& a, const PAdicMatrix& b);

}  // namespace gj
