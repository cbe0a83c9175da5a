#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gj/report/report.hpp"
#include "gj/zeta/zeta.hpp"

namespace gj {

enum class KernelMode { Direct, Inverse };

/// |det g|^alpha psi(tr(epsilon g^{+-1})) d^x g with alpha = alpha2 / 2.
struct TwistedDistribution {
  int n = 1;
  int alpha2 = 0;
  int epsilon = 1;
  KernelMode mode = KernelMode::Direct;

  friend bool operator==(const TwistedDistribution&, const TwistedDistribution&) = default;
  std::string to_string() const;
};

nlohmann::json to_json(const TwistedDistribution& d);

TwistedDistribution gj_delta(int n);
TwistedDistribution cstar_gamma(int n);
TwistedDistribution tilde(const TwistedDistribution& d);
/// (alpha, eps, INVERSE) -> (n - alpha, -eps, DIRECT) and back.
TwistedDistribution closed_form_inverse(const TwistedDistribution& d);
/// (alpha, eps, INVERSE) -> (n + alpha, -eps, DIRECT) and back. Diagnostic.
TwistedDistribution corrected_inverse(const TwistedDistribution& d);
TwistedDistribution det_twist(const TwistedDistribution& d, int beta2);

Report verify_relation(int n);

struct SpectralResult {
  RationalFunction value;
  Windows windows;
};

/// (D * chi(det)|det|^s)(x) / (chi(det x)|det x|^s), computed through g = xy.
SpectralResult spectral_action(const TwistedDistribution& d, const MultiplicativeCharacter& chi, const PAdicMatrix& x,
                               const IntegrationConfig& cfg = {});

Report verify_bk_identity(const MultiplicativeCharacter& chi, int n, const std::vector<SchwartzBruhatFn>& phis,
                          const std::vector<PAdicMatrix>& xs, const IntegrationConfig& cfg = {});

/// Spectral action of D times that of closed_form_inverse(D) against 1, per chi.
/// details carry the same product for corrected_inverse(D).
Report verify_inverse_weak(const TwistedDistribution& d, const std::vector<MultiplicativeCharacter>& chis,
                           const IntegrationConfig& cfg = {});

}  // namespace gj
