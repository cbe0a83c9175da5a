#include "gj/archimedean/real_schwartz.hpp"

#include <cmath>
#include <numbers>

namespace gj {

PiNumber::PiNumber(const Cyclotomic& c, int pi_exponent) {
  if (!c.is_zero()) terms_[pi_exponent] = c;
}

std::complex<double> PiNumber::value() const {
  std::complex<double> v = 0;
  for (const auto& [e, c] : terms_) v += c.embed() * std::pow(std::numbers::pi, e);
  return v;
}

PiNumber& PiNumber::operator+=(const PiNumber& o) {
  for (const auto& [e, c] : o.terms_) {
    Cyclotomic s = terms_.count(e) ? terms_[e] + c : c;
    if (s.is_zero()) terms_.erase(e);
    else terms_[e] = s;
  }
  return *this;
}

PiNumber operator*(const PiNumber& a, const PiNumber& b) {
  PiNumber out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out += PiNumber(ca * cb, ea + eb);
  return out;
}

std::string PiNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (e != 0) s += "*pi^" + std::to_string(e);
  }
  return s;
}

RealSchwartzFn::RealSchwartzFn(std::vector<PiNumber> coeffs) : c_(std::move(coeffs)) { trim(); }

void RealSchwartzFn::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RealSchwartzFn RealSchwartzFn::gaussian() { return monomial(0); }

RealSchwartzFn RealSchwartzFn::monomial(int k) {
  std::vector<PiNumber> c(static_cast<std::size_t>(k + 1));
  c[static_cast<std::size_t>(k)] = PiNumber(Cyclotomic(1L));
  return RealSchwartzFn(std::move(c));
}

namespace {

// d/dx of P(x) exp(-pi x^2) is (P' - 2 pi x P) exp(-pi x^2).
std::vector<PiNumber> gaussian_derivative(const std::vector<PiNumber>& p) {
  std::vector<PiNumber> out(p.size() + 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] += p[k] * PiNumber(Cyclotomic(static_cast<long>(k)));
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] += p[k] * PiNumber(Cyclotomic(-2L), 1);
  return out;
}

}  // namespace

RealSchwartzFn RealSchwartzFn::hermite(int k) {
  // H_k(sqrt(2 pi) x) e^{-pi x^2} via H_{j+1}(u) = 2u H_j(u) - 2j H_{j-1}(u) with u^2 = 2 pi x^2;
  // sqrt(2 pi) is avoided by rescaling H_j by (2 pi)^{-j/2}, which keeps coefficients in Q[pi].
  std::vector<PiNumber> prev, cur{PiNumber(Cyclotomic(1L))};
  for (int j = 0; j < k; ++j) {
    // G_j(x) = (2 pi)^{-j/2} H_j(sqrt(2 pi) x): G_{j+1} = 2x G_j - (j / pi) G_{j-1}
    std::vector<PiNumber> next(cur.size() + 1);
    for (std::size_t e = 0; e < cur.size(); ++e) next[e + 1] += cur[e] * PiNumber(Cyclotomic(2L));
    for (std::size_t e = 0; e < prev.size(); ++e) next[e] += prev[e] * PiNumber(Cyclotomic(static_cast<long>(-j)), -1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RealSchwartzFn(std::move(cur));
}

RealSchwartzFn RealSchwartzFn::even_part() const {
  std::vector<PiNumber> c = c_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = PiNumber();
  return RealSchwartzFn(std::move(c));
}

RealSchwartzFn RealSchwartzFn::odd_part() const {
  std::vector<PiNumber> c = c_;
  for (std::size_t k = 0; k < c.size(); k += 2) c[k] = PiNumber();
  return RealSchwartzFn(std::move(c));
}

std::complex<double> RealSchwartzFn::operator()(double x) const {
  const double g = std::exp(-std::numbers::pi * x * x);
  if (g == 0) return 0;
  std::complex<double> acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].value();
  return acc * g;
}

RealSchwartzFn& RealSchwartzFn::operator+=(const RealSchwartzFn& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

RealSchwartzFn RealSchwartzFn::scaled(const PiNumber& c) const {
  std::vector<PiNumber> out;
  for (const auto& a : c_) out.push_back(a * c);
  return RealSchwartzFn(std::move(out));
}

std::string RealSchwartzFn::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "[" + c_[k].to_string() + "]*x^" + std::to_string(k);
  }
  return (s.empty() ? "0" : s) + " * exp(-pi x^2)";
}

RealSchwartzFn fourier_real(const RealSchwartzFn& f) {
  // F(y^k g)(x) = (2 pi i)^{-k} (d/dx)^k g(x)
  RealSchwartzFn out;
  std::vector<PiNumber> deriv{PiNumber(Cyclotomic(1L))};
  const PiNumber step(Cyclotomic::gaussian(0, BigRational(-1) / BigRational(2)), -1);  // 1 / (2 pi i)
  PiNumber scale(Cyclotomic(1L));
  for (int k = 0; k <= f.degree(); ++k) {
    const PiNumber& a = f.coefficients()[static_cast<std::size_t>(k)];
    if (!a.is_zero()) out += RealSchwartzFn(deriv).scaled(a * scale);
    deriv = gaussian_derivative(deriv);
    scale = scale * step;
  }
  return out;
}

RealSchwartzFn reflect(const RealSchwartzFn& f) {
  std::vector<PiNumber> c = f.coefficients();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = c[k] * PiNumber(Cyclotomic(-1L));
  return RealSchwartzFn(std::move(c));
}

}  // namespace gj
