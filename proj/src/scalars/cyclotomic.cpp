#include "gj/scalars/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "gj/error.hpp"

namespace gj {

long long int_pow(long long base, int exponent) {
  long long r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

long long phi_prime_power(int p, int m) {
  if (m == 0) return 1;
  return int_pow(p, m - 1) * (p - 1);
}

namespace {

using Poly = std::vector<BigRational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, BigRational(0));
  const BigRational lead = b.back();
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    const BigRational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
  }
  trim(a);
  return {q, a};
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly cyclotomic_poly(int p, int m) {
  const long long step = int_pow(p, m - 1);
  Poly f(static_cast<std::size_t>(step * (p - 1) + 1), BigRational(0));
  for (int j = 0; j < p; ++j) f[static_cast<std::size_t>(j * step)] = 1;
  return f;
}

// Inverse of a modulo the irreducible f over Q.
Poly inverse_mod(Poly a, const Poly& f) {
  trim(a);
  Poly r0 = f, r1 = a, s0{}, s1{BigRational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw EngineError(ErrorKind::Zero, "cyclotomic element is not invertible");
  const BigRational c = r0[0];
  auto [q, rem] = divmod(s0, f);
  for (auto& x : rem) x /= c;
  return rem;
}

// Reduce a group-ring vector of length p^M to the power basis of length phi(p^M).
std::vector<BigRational> reduce_group_ring(std::vector<BigRational> g, int p, int M) {
  const long long N = int_pow(p, M);
  const long long phi = phi_prime_power(p, M);
  if (static_cast<long long>(g.size()) < N) g.resize(static_cast<std::size_t>(N), BigRational(0));
  if (M >= 1) {
    const long long step = int_pow(p, M - 1);
    for (long long idx = N - 1; idx >= phi; --idx) {
      BigRational c = g[static_cast<std::size_t>(idx)];
      if (c == 0) continue;
      const long long r = idx - phi;
      for (int j = 0; j <= p - 2; ++j) g[static_cast<std::size_t>(r + j * step)] -= c;
      g[static_cast<std::size_t>(idx)] = 0;
    }
  }
  g.resize(static_cast<std::size_t>(phi));
  return g;
}

std::vector<BigRational> group_ring_mul(const std::vector<BigRational>& a,
                                        const std::vector<BigRational>& b, int p, int M) {
  const long long N = int_pow(p, M);
  std::vector<BigRational> r(static_cast<std::size_t>(N), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[(i + j) % static_cast<std::size_t>(N)] += a[i] * b[j];
    }
  }
  return reduce_group_ring(std::move(r), p, M);
}

bool all_zero(const std::vector<BigRational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

/// Arithmetic happens on a common (prime, level) lift; results are normalized
/// back to minimal level.
struct CyclotomicWork {
  int p = 0;
  int M = 0;
  std::vector<BigRational> re;
  std::vector<BigRational> im;

  static std::pair<int, int> common(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) {
      throw std::domain_error("cyclotomic numbers over different primes cannot be combined");
    }
    const int p = a.p_ != 0 ? a.p_ : b.p_;
    int M = std::max(a.m_, b.m_);
    return {p, M};
  }

  static CyclotomicWork lift(const Cyclotomic& x, int P, int M) {
    CyclotomicWork w;
    w.p = P;
    w.M = M;
    if (P == 0) {
      w.re = x.re_;
      w.im = x.im_;
      return w;
    }
    const auto phi = static_cast<std::size_t>(phi_prime_power(P, M));
    w.re.assign(phi, BigRational(0));
    if (P != 2) w.im.assign(phi, BigRational(0));
    if (x.p_ == 0) {
      w.re[0] = x.re_[0];
      if (x.im_[0] != 0) {
        if (P == 2) {
          // i = zeta_{2^M}^{2^{M-2}}, M >= 3 here.
          w.re[static_cast<std::size_t>(int_pow(2, M - 2))] += x.im_[0];
        } else {
          w.im[0] = x.im_[0];
        }
      }
      return w;
    }
    const long long stride = int_pow(P, M - x.m_);
    for (std::size_t j = 0; j < x.re_.size(); ++j) w.re[j * static_cast<std::size_t>(stride)] = x.re_[j];
    if (P != 2) {
      for (std::size_t j = 0; j < x.im_.size(); ++j) w.im[j * static_cast<std::size_t>(stride)] = x.im_[j];
    }
    return w;
  }

  Cyclotomic normalize() && {
    Cyclotomic out;
    if (p == 0) {
      out.re_ = std::move(re);
      out.im_ = std::move(im);
      return out;
    }
    auto compressible = [&](const std::vector<BigRational>& v) {
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0 && j % static_cast<std::size_t>(p) != 0) return false;
      return true;
    };
    auto compress = [&](std::vector<BigRational>& v) {
      std::vector<BigRational> c(static_cast<std::size_t>(phi_prime_power(p, M - 1)), BigRational(0));
      for (std::size_t j = 0; j < c.size(); ++j) c[j] = v[j * static_cast<std::size_t>(p)];
      v = std::move(c);
    };
    if (p == 2) {
      while (M >= 3 && compressible(re)) {
        compress(re);
        --M;
      }
      if (M >= 3) {
        out.p_ = 2;
        out.m_ = M;
        out.re_ = std::move(re);
        out.im_.clear();
        return out;
      }
      out.re_ = {re[0]};
      out.im_ = {M == 2 ? re[1] : BigRational(0)};
      return out;
    }
    while (M >= 1 && compressible(re) && compressible(im)) {
      compress(re);
      compress(im);
      --M;
    }
    if (M == 0) {
      out.re_ = {re[0]};
      out.im_ = {im[0]};
      return out;
    }
    out.p_ = p;
    out.m_ = M;
    out.re_ = std::move(re);
    out.im_ = std::move(im);
    return out;
  }
};

Cyclotomic::Cyclotomic() : re_{BigRational(0)}, im_{BigRational(0)} {}
Cyclotomic::Cyclotomic(const BigRational& value) : re_{value}, im_{BigRational(0)} { re_[0].canonicalize(); }
Cyclotomic::Cyclotomic(long value) : re_{BigRational(value)}, im_{BigRational(0)} {}

Cyclotomic Cyclotomic::gaussian(const BigRational& re, const BigRational& im) {
  Cyclotomic z;
  z.re_[0] = re;
  z.im_[0] = im;
  z.re_[0].canonicalize();
  z.im_[0].canonicalize();
  return z;
}

Cyclotomic Cyclotomic::imaginary_unit() { return gaussian(0, 1); }

Cyclotomic Cyclotomic::root(int p, int level, long long a) {
  if (level < 0) throw EngineError(ErrorKind::InvalidInput, "negative cyclotomic level");
  const long long N = int_pow(p, level);
  long long e = a % N;
  if (e < 0) e += N;
  std::vector<BigRational> g(static_cast<std::size_t>(N), BigRational(0));
  g[static_cast<std::size_t>(e)] = 1;
  return from_group_ring(p, level, std::move(g));
}

Cyclotomic Cyclotomic::from_group_ring(int p, int level, std::vector<BigRational> re,
                                       std::vector<BigRational> im) {
  for (auto& x : re) x.canonicalize();
  for (auto& x : im) x.canonicalize();
  if (level == 0) {
    CyclotomicWork w{0, 0, {re.empty() ? BigRational(0) : re[0]},
                     {(im.empty() || p == 2) ? BigRational(0) : im[0]}};
    return std::move(w).normalize();
  }
  CyclotomicWork w;
  w.p = p;
  w.M = level;
  w.re = reduce_group_ring(std::move(re), p, level);
  if (p != 2) {
    w.im = im.empty() ? std::vector<BigRational>(w.re.size(), BigRational(0))
                      : reduce_group_ring(std::move(im), p, level);
  }
  return std::move(w).normalize();
}

bool Cyclotomic::is_zero() const { return p_ == 0 && re_[0] == 0 && im_[0] == 0; }

bool Cyclotomic::is_rational() const { return p_ == 0 && im_[0] == 0; }

BigRational Cyclotomic::rational() const {
  if (!is_rational()) throw EngineError(ErrorKind::InvalidInput, "cyclotomic value is not rational: " + to_string());
  return re_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  auto [P, M] = CyclotomicWork::common(*this, o);
  if (P == 0) {
    re_[0] += o.re_[0];
    im_[0] += o.im_[0];
    return *this;
  }
  if (P == 2 && M < 3) M = 3;
  auto a = CyclotomicWork::lift(*this, P, M);
  const auto b = CyclotomicWork::lift(o, P, M);
  for (std::size_t j = 0; j < a.re.size(); ++j) a.re[j] += b.re[j];
  for (std::size_t j = 0; j < a.im.size(); ++j) a.im[j] += b.im[j];
  *this = std::move(a).normalize();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.re_) x = -x;
  for (auto& x : r.im_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  auto [P, M] = CyclotomicWork::common(*this, o);
  if (P == 0) {
    const BigRational a = re_[0], b = im_[0], c = o.re_[0], d = o.im_[0];
    re_[0] = a * c - b * d;
    im_[0] = a * d + b * c;
    return *this;
  }
  if (P == 2 && M < 3) M = 3;
  const auto a = CyclotomicWork::lift(*this, P, M);
  const auto b = CyclotomicWork::lift(o, P, M);
  CyclotomicWork r;
  r.p = P;
  r.M = M;
  if (P == 2) {
    r.re = group_ring_mul(a.re, b.re, P, M);
  } else {
    auto ac = group_ring_mul(a.re, b.re, P, M);
    auto bd = group_ring_mul(a.im, b.im, P, M);
    auto ad = group_ring_mul(a.re, b.im, P, M);
    auto bc = group_ring_mul(a.im, b.re, P, M);
    r.re.resize(ac.size());
    r.im.resize(ac.size());
    for (std::size_t j = 0; j < ac.size(); ++j) {
      r.re[j] = ac[j] - bd[j];
      r.im[j] = ad[j] + bc[j];
    }
  }
  *this = std::move(r).normalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw EngineError(ErrorKind::Zero, "inverse of zero");
  if (p_ == 0) {
    const BigRational n = re_[0] * re_[0] + im_[0] * im_[0];
    return gaussian(re_[0] / n, -im_[0] / n);
  }
  const Poly f = cyclotomic_poly(p_, m_);
  if (p_ == 2) {
    CyclotomicWork w{2, m_, inverse_mod(re_, f), {}};
    w.re.resize(static_cast<std::size_t>(phi_prime_power(2, m_)), BigRational(0));
    return std::move(w).normalize();
  }
  // (A + iB)^{-1} = (A - iB) / (A^2 + B^2); A^2 + B^2 != 0 since i is not in Q(zeta_{p^m}).
  auto a2 = group_ring_mul(re_, re_, p_, m_);
  auto b2 = group_ring_mul(im_, im_, p_, m_);
  for (std::size_t j = 0; j < a2.size(); ++j) a2[j] += b2[j];
  auto ninv = inverse_mod(a2, f);
  ninv.resize(re_.size(), BigRational(0));
  CyclotomicWork w;
  w.p = p_;
  w.M = m_;
  w.re = group_ring_mul(re_, ninv, p_, m_);
  w.im = group_ring_mul(im_, ninv, p_, m_);
  for (auto& x : w.im) x = -x;
  return std::move(w).normalize();
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::pow(long long exponent) const {
  Cyclotomic base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Cyclotomic r(1L);
  while (e) {
    if (e & 1ULL) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (p_ == 0) return gaussian(re_[0], -im_[0]);
  const long long N = int_pow(p_, m_);
  std::vector<BigRational> g(static_cast<std::size_t>(N), BigRational(0));
  std::vector<BigRational> h;
  for (std::size_t j = 0; j < re_.size(); ++j) g[static_cast<std::size_t>((N - static_cast<long long>(j)) % N)] = re_[j];
  if (p_ != 2) {
    h.assign(static_cast<std::size_t>(N), BigRational(0));
    for (std::size_t j = 0; j < im_.size(); ++j)
      h[static_cast<std::size_t>((N - static_cast<long long>(j)) % N)] = -im_[j];
  }
  return from_group_ring(p_, m_, std::move(g), std::move(h));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.p_ == b.p_ && a.m_ == b.m_ && a.re_ == b.re_ && a.im_ == b.im_;
}

std::complex<double> Cyclotomic::embed(int digits) const {
  if (digits < 1 || digits > 15) throw EngineError(ErrorKind::InvalidInput, "embed precision must be 1..15 digits");
  using LD = long double;
  std::complex<LD> re_sum = 0, im_sum = 0;
  const long long N = p_ == 0 ? 1 : int_pow(p_, m_);
  for (std::size_t j = 0; j < re_.size(); ++j) {
    if (re_[j] == 0 && (j >= im_.size() || im_[j] == 0)) continue;
    const LD angle = 2 * std::numbers::pi_v<LD> * static_cast<LD>(static_cast<long long>(j) % N) / static_cast<LD>(N);
    const std::complex<LD> w(std::cos(angle), std::sin(angle));
    re_sum += static_cast<LD>(re_[j].get_d()) * w;
    if (j < im_.size()) im_sum += static_cast<LD>(im_[j].get_d()) * w;
  }
  const std::complex<LD> v = re_sum + std::complex<LD>(0, 1) * im_sum;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::string Cyclotomic::to_string() const {
  const long long N = p_ == 0 ? 1 : int_pow(p_, m_);
  auto part = [&](const std::vector<BigRational>& v) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      if (any) os << (v[j] < 0 ? " - " : " + ");
      else if (v[j] < 0) os << "-";
      any = true;
      const BigRational a = abs(v[j]);
      if (j == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << "z" << N;
        if (j != 1) os << "^" << j;
      }
    }
    return os.str();
  };
  const std::string re_text = part(re_);
  const std::string im_text = part(im_);
  if (im_text.empty()) return re_text.empty() ? "0" : re_text;
  return (re_text.empty() ? "" : re_text + " + ") + "i*(" + im_text + ")";
}

Cyclotomic root_of_unity(int p, int level, long long a) { return Cyclotomic::root(p, level, a); }

Cyclotomic cyc_conjugate(const Cyclotomic& z) { return z.conjugate(); }

std::complex<double> embed_complex(const Cyclotomic& z, int digits) { return z.embed(digits); }

Cyclotomic sqrt_prime(int p) {
  if (p == 2) return Cyclotomic::root(2, 3, 1) + Cyclotomic::root(2, 3, -1);
  Cyclotomic g;
  for (int x = 1; x < p; ++x) {
    long long r = 1;
    for (int k = 0; k < (p - 1) / 2; ++k) r = (r * x) % p;
    g += Cyclotomic::root(p, 1, x) * Cyclotomic(r == 1 ? 1L : -1L);
  }
  if (p % 4 == 1) return g;
  return Cyclotomic::gaussian(0, -1) * g;
}

}  // namespace gj
