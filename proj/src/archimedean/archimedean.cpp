#include "gj/archimedean/archimedean.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <cstdio>

#include "gj/archimedean/special.hpp"
#include "gj/error.hpp"

namespace gj {

namespace {

struct Part {
  double value = 0, error = 0, l1 = 0;
};

template <class F>
Part integrate_half_line(F f, const QuadratureConfig& cfg) {
  boost::math::quadrature::tanh_sinh<double> near(static_cast<std::size_t>(cfg.max_refinements));
  boost::math::quadrature::exp_sinh<double> far(static_cast<std::size_t>(cfg.max_refinements));
  Part a, b;
  a.value = near.integrate(f, 0.0, 1.0, cfg.rel_tol, &a.error, &a.l1);
  auto shifted = [&f](double t) { return f(1.0 + t); };
  b.value = far.integrate(shifted, cfg.rel_tol, &b.error, &b.l1);
  return {a.value + b.value, a.error + b.error, a.l1 + b.l1};
}

}  // namespace

QuadratureResult zeta_real(const RealSchwartzFn& phi, const RealCharacter& chi, std::complex<double> s,
                           const QuadratureConfig& cfg) {
  if (s.real() <= 0) throw EngineError(ErrorKind::InvalidInput, "zeta_real needs Re(s) > 0");
  const double sign = chi.delta % 2 == 0 ? 1.0 : -1.0;
  const std::complex<double> w = s + std::complex<double>(0, chi.tau) - 1.0;
  auto integrand = [&](double x) -> std::complex<double> {
    if (x <= 0) return 0;
    return (phi(x) + sign * phi(-x)) * std::exp(w * std::log(x));
  };
  Part re = integrate_half_line([&](double x) { return integrand(x).real(); }, cfg);
  Part im = integrate_half_line([&](double x) { return integrand(x).imag(); }, cfg);
  QuadratureResult out{{re.value, im.value}, std::hypot(re.error, im.error), re.l1 + im.l1};
  const double target = std::max(cfg.abs_tol, cfg.rel_tol * out.l1);
  if (!std::isfinite(out.error) || out.error > 1e3 * target)
    throw EngineError(ErrorKind::ToleranceNotMet, "quadrature error estimate " + std::to_string(out.error));
  return out;
}

std::complex<double> gamma_real(const RealCharacter& chi, std::complex<double> s, const RealSchwartzFn& phi,
                                const QuadratureConfig& cfg) {
  QuadratureResult den = zeta_real(phi, chi, s, cfg);
  if (std::abs(den.value) < 1e-6 * std::max(den.l1, 1e-300))
    throw EngineError(ErrorKind::NearZeroDenominator, "Z(phi, s, chi) is numerically zero");
  QuadratureResult num = zeta_real(fourier_real(phi), chi.inverse(), 1.0 - s, cfg);
  return num.value / den.value;
}

std::complex<double> gamma_real_oracle(const RealCharacter& chi, std::complex<double> s) {
  const std::complex<double> w = s + std::complex<double>(0, chi.tau);
  if (chi.delta % 2 == 0) return gamma_R(1.0 - w) / gamma_R(w);
  return std::complex<double>(0, 1) * gamma_R(2.0 - w) / gamma_R(1.0 + w);
}

std::vector<SweepRow> arch_sweep(const RealCharacter& chi, const RealSchwartzFn& phi, const QuadratureConfig& cfg) {
  std::vector<SweepRow> rows;
  for (auto s : cfg.s_grid) {
    SweepRow r;
    r.s = s;
    r.gamma = gamma_real(chi, s, phi, cfg);
    r.oracle = gamma_real_oracle(chi, s);
    r.abs_err = std::abs(r.gamma - r.oracle);
    rows.push_back(r);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "s_re,s_im,gamma_re,gamma_im,oracle_re,oracle_im,abs_err\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.6e\n", r.s.real(), r.s.imag(),
                  r.gamma.real(), r.gamma.imag(), r.oracle.real(), r.oracle.imag(), r.abs_err);
    out += buf;
  }
  return out;
}

}  // namespace gj
