#include "doctest.h"

#include <cmath>

#include "gj/archimedean/archimedean.hpp"
#include "gj/archimedean/special.hpp"
#include "gj/error.hpp"

using namespace gj;

namespace {

const double kPi = std::acos(-1.0);

double gamma_r_real(double s) { return std::pow(kPi, -s / 2) * std::tgamma(s / 2); }

PiNumber i_pow(int k) {
  const Cyclotomic i = Cyclotomic::imaginary_unit();
  return PiNumber(i.pow(k));
}

}  // namespace

TEST_CASE("complex Gamma against tgamma and the reflection formula") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 20.0, -0.5, -2.7}) {
    const double ref = std::tgamma(x);
    CHECK(std::abs(complex_gamma({x, 0}).real() - ref) <= 1e-13 * std::abs(ref));
  }
  for (std::complex<double> z : {std::complex<double>(0.3, 0.4), {0.8, -1.7}, {-1.2, 0.6}, {3.1, 2.2}}) {
    const auto lhs = complex_gamma(z) * complex_gamma(1.0 - z);
    const auto rhs = kPi / std::sin(kPi * z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    // Gamma(z + 1) = z Gamma(z)
    CHECK(std::abs(complex_gamma(z + 1.0) - z * complex_gamma(z)) <= 1e-12 * std::abs(complex_gamma(z + 1.0)));
  }
  CHECK(std::abs(gamma_R({1, 0}) - 1.0) < 1e-14);
}

TEST_CASE("exact Fourier transform") {
  for (int k = 0; k <= 6; ++k) {
    const auto f = RealSchwartzFn::monomial(k);
    CHECK(fourier_real(fourier_real(f)) == reflect(f));
    const auto h = RealSchwartzFn::hermite(k);
    CHECK(fourier_real(h) == h.scaled(i_pow(k)));
  }
  CHECK(fourier_real(RealSchwartzFn::gaussian()) == RealSchwartzFn::gaussian());
  const auto mixed = RealSchwartzFn::monomial(3) + RealSchwartzFn::monomial(2).scaled(PiNumber(Cyclotomic(2L), -1));
  CHECK(mixed.even_part() + mixed.odd_part() == mixed);
  CHECK(reflect(mixed.odd_part()) == mixed.odd_part().scaled(PiNumber(Cyclotomic(-1L))));
  // pointwise against direct quadrature-free values
  CHECK(std::abs(RealSchwartzFn::monomial(2)(0.7) - 0.49 * std::exp(-kPi * 0.49)) < 1e-15);
  CHECK(std::abs(RealSchwartzFn::gaussian()(1e5)) == 0.0);
}

TEST_CASE("real zeta integrals") {
  const RealCharacter triv{0, 0}, sgn{1, 0};
  for (double s : {0.3, 0.5, 1.0, 2.2}) {
    const auto z0 = zeta_real(RealSchwartzFn::gaussian(), triv, {s, 0});
    CHECK(std::abs(z0.value - gamma_r_real(s)) < 1e-9 * gamma_r_real(s));
    const auto z1 = zeta_real(RealSchwartzFn::monomial(1), sgn, {s, 0});
    CHECK(std::abs(z1.value - gamma_r_real(s + 1)) < 1e-9 * gamma_r_real(s + 1));
    // parity kills the mismatched pairs
    CHECK(std::abs(zeta_real(RealSchwartzFn::gaussian(), sgn, {s, 0}).value) < 1e-12);
    CHECK(std::abs(zeta_real(RealSchwartzFn::monomial(1), triv, {s, 0}).value) < 1e-12);
  }
  // |x|^{i tau} shifts s
  const auto zt = zeta_real(RealSchwartzFn::gaussian(), RealCharacter{0, 0.7}, {0.4, 0});
  CHECK(std::abs(zt.value - gamma_R({0.4, 0.7})) < 1e-9);
}

TEST_CASE("real gamma factors") {
  for (double s : {0.3, 0.5, 0.7}) {
    const double ref = gamma_r_real(1 - s) / gamma_r_real(s);
    CHECK(std::abs(gamma_real({0, 0}, {s, 0}, RealSchwartzFn::gaussian()) - ref) < 1e-8);
    CHECK(std::abs(gamma_real_oracle({0, 0}, {s, 0}) - ref) < 1e-13);
    const double ref1 = gamma_r_real(2 - s) / gamma_r_real(1 + s);
    CHECK(std::abs(gamma_real({1, 0}, {s, 0}, RealSchwartzFn::monomial(1)) - std::complex<double>(0, ref1)) < 1e-8);
  }
  const auto phi = RealSchwartzFn::monomial(2) + RealSchwartzFn::gaussian();
  for (const RealCharacter chi : {RealCharacter{0, 0}, RealCharacter{0, 0.3}, RealCharacter{1, -0.2}}) {
    const auto f = chi.delta ? RealSchwartzFn::monomial(3) + RealSchwartzFn::monomial(1) : phi;
    for (std::complex<double> s : {std::complex<double>(0.3, 0), {0.4, 0.2}, {0.6, -0.1}}) {
      const auto g = gamma_real(chi, s, f);
      CHECK(std::abs(g - gamma_real_oracle(chi, s)) < 1e-7);
      const auto dual = g * gamma_real(chi.inverse(), 1.0 - s, f);
      CHECK(std::abs(dual - (chi.delta ? -1.0 : 1.0)) < 1e-7);
    }
  }
  CHECK_THROWS_AS(gamma_real({1, 0}, {0.5, 0}, RealSchwartzFn::gaussian()), EngineError);
}

TEST_CASE("sweep output is deterministic") {
  const auto a = arch_sweep({0, 0}, RealSchwartzFn::gaussian());
  const auto b = arch_sweep({0, 0}, RealSchwartzFn::gaussian());
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].gamma == b[i].gamma);
    CHECK(a[i].abs_err < 1e-7);
  }
  const std::string csv = sweep_csv(a);
  CHECK(csv.rfind("s_re,s_im,gamma_re,gamma_im,oracle_re,oracle_im,abs_err\n", 0) == 0);
}
