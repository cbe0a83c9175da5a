#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gj/archimedean/real_schwartz.hpp"

namespace gj {

/// x -> sign(x)^delta |x|^{i tau}.
struct RealCharacter {
  int delta = 0;
  double tau = 0;
  RealCharacter inverse() const { return {delta, -tau}; }
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_refinements = 15;
  std::vector<std::complex<double>> s_grid{{0.3, 0}, {0.5, 0}, {0.7, 0}, {0.4, 0.2}, {0.4, -0.1}};
};

struct QuadratureResult {
  std::complex<double> value;
  double error = 0;
  double l1 = 0;
};

/// int_{R^x} phi(x) chi(x) |x|^s dx / |x|; needs Re(s) > 0. Throws ToleranceNotMet.
QuadratureResult zeta_real(const RealSchwartzFn& phi, const RealCharacter& chi, std::complex<double> s,
                           const QuadratureConfig& cfg = {});

/// Z(phi^, 1 - s, chi^{-1}) / Z(phi, s, chi). Throws NearZeroDenominator.
std::complex<double> gamma_real(const RealCharacter& chi, std::complex<double> s, const RealSchwartzFn& phi,
                                const QuadratureConfig& cfg = {});

/// Gamma_R quotient: Gamma_R(1-w)/Gamma_R(w) for delta = 0 and
/// i Gamma_R(2-w)/Gamma_R(1+w) for delta = 1, with w = s + i tau.
std::complex<double> gamma_real_oracle(const RealCharacter& chi, std::complex<double> s);

struct SweepRow {
  std::complex<double> s, gamma, oracle;
  double abs_err = 0;
};

std::vector<SweepRow> arch_sweep(const RealCharacter& chi, const RealSchwartzFn& phi, const QuadratureConfig& cfg = {});
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace gj
