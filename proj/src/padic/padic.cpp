#include "gj/padic/padic.hpp"

#include <sstream>

#include "gj/error.hpp"

namespace gj {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PAdicContext::PAdicContext(int prime) : p(prime) {
  if (!is_prime(prime)) throw EngineError(ErrorKind::InvalidInput, "p must be prime, got " + std::to_string(prime));
}

NormMonomial norm_monomial(const BigRational& x, int p) {
  if (x == 0) throw EngineError(ErrorKind::Zero, "zero has no multiplicative norm");
  const int v = valuation(x, p);
  return {v, prime_power(p, -v)};
}

std::pair<int, BigInt> psi_exponent(const BigRational& x, int p) {
  const int v = valuation(x, p);
  if (v >= 0) return {0, BigInt(0)};
  const int m = -v;
  const BigInt pm = ipow(BigInt(p), static_cast<unsigned>(m));
  // x = num / (p^m u): a = num * u^{-1} mod p^m
  const BigInt u = x.get_den() / pm;
  BigInt uinv;
  mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), pm.get_mpz_t());
  BigInt a = (x.get_num() * uinv) % pm;
  if (a < 0) a += pm;
  return {m, a};
}

Cyclotomic psi_value(const BigRational& x, int p) {
  const auto [m, a] = psi_exponent(x, p);
  if (m == 0) return Cyclotomic(1L);
  return Cyclotomic::root(p, m, a.get_si());
}

PAdicMatrix::PAdicMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), BigRational(0)) {}

PAdicMatrix::PAdicMatrix(int n, std::vector<BigRational> entries) : n_(n), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != n * n) throw EngineError(ErrorKind::InvalidInput, "matrix entry count mismatch");
  for (auto& x : a_) x.canonicalize();
}

PAdicMatrix PAdicMatrix::identity(int n) { return scalar(n, 1); }

PAdicMatrix PAdicMatrix::scalar(int n, const BigRational& c) {
  PAdicMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

PAdicMatrix PAdicMatrix::diagonal(const std::vector<BigRational>& d) {
  PAdicMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

PAdicMatrix PAdicMatrix::from_rows(const std::vector<std::vector<BigRational>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<BigRational> e;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw EngineError(ErrorKind::InvalidInput, "matrix must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  return PAdicMatrix(n, std::move(e));
}

BigRational PAdicMatrix::det() const {
  // Gaussian elimination over Q.
  std::vector<BigRational> m = a_;
  BigRational d = 1;
  auto at = [&](int i, int j) -> BigRational& { return m[static_cast<std::size_t>(i * n_ + j)]; };
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (at(r, c) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n_; ++j) std::swap(at(piv, j), at(c, j));
      d = -d;
    }
    d *= at(c, c);
    for (int r = c + 1; r < n_; ++r) {
      if (at(r, c) == 0) continue;
      const BigRational f = at(r, c) / at(c, c);
      for (int j = c; j < n_; ++j) at(r, j) -= f * at(c, j);
    }
  }
  return d;
}

BigRational PAdicMatrix::trace() const {
  BigRational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

int PAdicMatrix::valuation(int p) const {
  int v = kInfiniteValuation;
  for (const auto& x : a_) v = std::min(v, gj::valuation(x, p));
  return v;
}

bool PAdicMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

PAdicMatrix PAdicMatrix::operator*(const PAdicMatrix& o) const {
  PAdicMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

PAdicMatrix PAdicMatrix::operator+(const PAdicMatrix& o) const {
  PAdicMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

PAdicMatrix PAdicMatrix::operator-(const PAdicMatrix& o) const {
  PAdicMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

PAdicMatrix PAdicMatrix::operator-() const { return scaled(-1); }

PAdicMatrix PAdicMatrix::scaled(const BigRational& c) const {
  PAdicMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

PAdicMatrix PAdicMatrix::transpose() const {
  PAdicMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

std::string PAdicMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

PAdicMatrix mat_invert(const PAdicMatrix& g) {
  const int n = g.size();
  PAdicMatrix a = g, inv = PAdicMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) { piv = r; break; }
    if (piv < 0) throw EngineError(ErrorKind::Singular, "matrix is singular");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const BigRational s = 1 / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const BigRational f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

BigRational trace_product(const PAdicMatrix& a, const PAdicMatrix& b) {
  BigRational t = 0;
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a(i, k) != 0 && b(k, i) != 0) t += a(i, k) * b(k, i);
  return t;
}

}  // namespace gj
