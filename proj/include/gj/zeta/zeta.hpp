#pragma once

#include <string>
#include <vector>

#include "gj/integrate/integrate.hpp"
#include "gj/report/report.hpp"
#include "gj/zeta/character.hpp"

namespace gj {

struct ZetaResult {
  RationalFunction value;
  Windows windows;
  std::string phi_fingerprint;
};

/// Z(phi, s, chi o det) = sum_k T^{2k} q^{kn} int_{v(det)=k} phi chi(det) dg.
ZetaResult zeta_integral(const SchwartzBruhatFn& phi, const MultiplicativeCharacter& chi,
                         const IntegrationConfig& cfg = {});
/// Z(phi, n - s, chi o det) as its own series: sum_k T^{-2k} int_{v(det)=k} phi chi(det) dg.
ZetaResult zeta_integral_reflected(const SchwartzBruhatFn& phi, const MultiplicativeCharacter& chi,
                                   const IntegrationConfig& cfg = {});

struct GammaResult {
  RationalFunction gamma;
  ZetaResult numerator;    // Z(phi^, n - s, chi^{-1})
  ZetaResult denominator;  // Z(phi, s, chi)
};

/// Throws ZeroDenominator when Z(phi, s, chi) vanishes identically.
GammaResult gamma_factor(const MultiplicativeCharacter& chi, int n, const SchwartzBruhatFn& phi,
                         const IntegrationConfig& cfg = {});

Report phi_independence_check(const MultiplicativeCharacter& chi, int n, const std::vector<SchwartzBruhatFn>& phis,
                              const IntegrationConfig& cfg = {});

/// R(s) -> R(n - s), i.e. T -> q^{-n/2} T^{-1}.
RationalFunction reflect_s(const RationalFunction& r, int n, int p);
/// R(s) -> R(s + s0), i.e. T -> q^{-s0/2} T.
RationalFunction shift_s(const RationalFunction& r, int s0, int p);

/// gamma(s, chi) * gamma(n - s, chi^{-1}) against chi(-1)^n.
Report duality_check(const MultiplicativeCharacter& chi, int n, const SchwartzBruhatFn& phi,
                     const IntegrationConfig& cfg = {});
/// gamma(s, chi |.|^{s0}) against gamma(s + s0, chi).
Report twist_shift_check(const MultiplicativeCharacter& chi, int n, int s0, const SchwartzBruhatFn& phi,
                         const IntegrationConfig& cfg = {});

/// prod_{j<n} gamma_1(s - j, chi); informational comparison only.
RationalFunction gl1_product(const MultiplicativeCharacter& chi, int n, const IntegrationConfig& cfg = {});

}  // namespace gj
