#include "gj/distributions/distributions.hpp"

#include "gj/error.hpp"

namespace gj {

namespace {

std::string half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

std::string TwistedDistribution::to_string() const {
  return "(" + half(alpha2) + ", " + (epsilon > 0 ? "+1" : "-1") + ", " +
         (mode == KernelMode::Direct ? "DIRECT" : "INVERSE") + ")";
}

nlohmann::json to_json(const TwistedDistribution& d) {
  return {{"n", d.n},
          {"alpha", half(d.alpha2)},
          {"epsilon", d.epsilon},
          {"mode", d.mode == KernelMode::Direct ? "DIRECT" : "INVERSE"}};
}

TwistedDistribution gj_delta(int n) { return {n, 2 * n, 1, KernelMode::Direct}; }

TwistedDistribution cstar_gamma(int n) { return {n, n + 1, 1, KernelMode::Inverse}; }

TwistedDistribution tilde(const TwistedDistribution& d) {
  TwistedDistribution out = d;
  out.epsilon = -d.epsilon;
  return out;
}

TwistedDistribution closed_form_inverse(const TwistedDistribution& d) {
  TwistedDistribution out = d;
  out.alpha2 = 2 * d.n - d.alpha2;
  out.epsilon = -d.epsilon;
  out.mode = d.mode == KernelMode::Inverse ? KernelMode::Direct : KernelMode::Inverse;
  return out;
}

TwistedDistribution corrected_inverse(const TwistedDistribution& d) {
  TwistedDistribution out = d;
  out.alpha2 = d.mode == KernelMode::Inverse ? d.alpha2 + 2 * d.n : d.alpha2 - 2 * d.n;
  out.epsilon = -d.epsilon;
  out.mode = d.mode == KernelMode::Inverse ? KernelMode::Direct : KernelMode::Inverse;
  return out;
}

TwistedDistribution det_twist(const TwistedDistribution& d, int beta2) {
  TwistedDistribution out = d;
  out.alpha2 += beta2;
  return out;
}

Report verify_relation(int n) {
  if (n < 1) throw EngineError(ErrorKind::InvalidInput, "verify_relation: n >= 1");
  Report r;
  r.claim = "det_twist(closed_form_inverse(tilde(cstar_gamma(n))), (n+1)/2) = gj_delta(n)";
  r.parameters = {{"n", n}};
  TwistedDistribution g = cstar_gamma(n);
  TwistedDistribution t = tilde(g);
  TwistedDistribution inv = closed_form_inverse(t);
  TwistedDistribution out = det_twist(inv, n + 1);
  r.details["chain"] = {g.to_string(), t.to_string(), inv.to_string(), out.to_string()};
  r.lhs = to_json(out);
  r.rhs = to_json(gj_delta(n));
  r.verdict = out == gj_delta(n) ? Verdict::Pass : Verdict::Fail;
  return r;
}

SpectralResult spectral_action(const TwistedDistribution& d, const MultiplicativeCharacter& chi, const PAdicMatrix& x,
                               const IntegrationConfig& cfg) {
  const int n = d.n, p = chi.prime();
  if (x.size() != n) throw EngineError(ErrorKind::InvalidInput, "spectral_action: point has the wrong size");
  if (d.epsilon != 1 && d.epsilon != -1) throw EngineError(ErrorKind::InvalidInput, "epsilon must be +1 or -1");
  const BigRational det = x.det();
  if (det == 0) throw EngineError(ErrorKind::SingularPoint, "spectral_action at a singular point");
  cfg.validate();

  // g = x y: DIRECT integrates psi(tr(eps x y)) chi^{-1}(det y) |det y|^{alpha-s},
  // INVERSE (h = y^{-1}) integrates psi(tr(eps x^{-1} h)) chi(det h) |det h|^{s-alpha}.
  const bool direct = d.mode == KernelMode::Direct;
  const PAdicMatrix b = (direct ? x : mat_invert(x)).scaled(BigRational(d.epsilon));
  const MultiplicativeCharacter inner = direct ? chi.inverse() : chi;
  const FunctionFamily family = whole_space(b, p);
  const auto opt = cfg.rationalize_options(n, chi.conductor());
  const int zero_window = cfg.zero_window_for(n, chi.conductor());
  const Cyclotomic rq = sqrt_prime(p);

  SpectralResult out;
  auto build = [&](int k_hi) {
    Windows w;
    ShellValues sv = stabilized_shells(family, inner, k_hi, zero_window, cfg, &w);
    out.windows = w;
    ShellSeries s;
    s.k_lo = sv.k_lo;
    s.weight = direct ? -2 : 2;
    s.q = p;
    for (int k = sv.k_lo; k <= k_hi; ++k) {
      Cyclotomic v = sv.at(k);
      if (!v.is_zero()) v *= Cyclotomic(prime_power(p, k * n)) * rq.pow(static_cast<long long>(direct ? -k : k) * d.alpha2);
      s.entries.push_back(v);
    }
    return s;
  };
  const int vb = b.valuation(p);
  const int k_hi0 = -n * vb + rationalize_window(opt);
  RationalFunction series = rationalize_growing(build, k_hi0, opt, cfg.extensions);

  const int v = valuation(det, p);
  const Cyclotomic pre = char_eval(chi, det).inverse() * rq.pow(-static_cast<long long>(v) * d.alpha2);
  out.value = series * RationalFunction::monomial(pre, -2 * v, p);
  return out;
}

Report verify_bk_identity(const MultiplicativeCharacter& chi, int n, const std::vector<SchwartzBruhatFn>& phis,
                          const std::vector<PAdicMatrix>& xs, const IntegrationConfig& cfg) {
  if (phis.empty() || xs.empty()) throw EngineError(ErrorKind::InvalidInput, "verify_bk_identity: empty lists");
  Report r;
  r.claim = "spectral action of the generating distribution equals gamma(s, chi o det)";
  r.parameters = {{"p", chi.prime()}, {"n", n}, {"chi", to_json(chi)}, {"distribution", to_json(gj_delta(n))}};
  nlohmann::json lhs = nlohmann::json::array(), rhs = nlohmann::json::array();
  std::vector<RationalFunction> values, gammas;
  for (const auto& x : xs) {
    SpectralResult s = spectral_action(gj_delta(n), chi, x, cfg);
    r.windows.merge(s.windows);
    lhs.push_back({{"x", matrix_to_json(x)}, {"value", to_json(s.value)}});
    values.push_back(s.value);
  }
  for (const auto& phi : phis) {
    try {
      GammaResult g = gamma_factor(chi, n, phi, cfg);
      r.windows.merge(g.denominator.windows);
      rhs.push_back({{"phi", g.denominator.phi_fingerprint}, {"gamma", to_json(g.gamma)}});
      gammas.push_back(g.gamma);
    } catch (const EngineError& e) {
      if (e.kind() != ErrorKind::ZeroDenominator) throw;
      r.notes.push_back(std::string("skipped phi: ") + e.what());
    }
  }
  if (gammas.empty()) throw EngineError(ErrorKind::AllDegenerate, "every phi gave a vanishing zeta integral");
  r.verdict = Verdict::Pass;
  for (const auto& v : values)
    for (const auto& g : gammas)
      if (!ratfun_equal(v, g)) r.verdict = Verdict::Fail;
  r.lhs = lhs;
  r.rhs = rhs;
  return r;
}

Report verify_inverse_weak(const TwistedDistribution& d, const std::vector<MultiplicativeCharacter>& chis,
                           const IntegrationConfig& cfg) {
  if (d.mode != KernelMode::Inverse) throw EngineError(ErrorKind::InvalidInput, "verify_inverse_weak needs an INVERSE kernel");
  Report r;
  const TwistedDistribution inv = closed_form_inverse(d);
  const TwistedDistribution fixed = corrected_inverse(d);
  r.claim = "spectral(D) * spectral(closed_form_inverse(D)) = 1 (weak, spectral)";
  r.parameters = {{"distribution", to_json(d)}, {"inverse", to_json(inv)}};
  nlohmann::json lhs = nlohmann::json::array(), diag = nlohmann::json::array();
  const PAdicMatrix id = PAdicMatrix::identity(d.n);
  for (const auto& chi : chis) {
    SpectralResult a = spectral_action(d, chi, id, cfg);
    SpectralResult b = spectral_action(inv, chi, id, cfg);
    SpectralResult c = spectral_action(fixed, chi, id, cfg);
    r.windows.merge(a.windows);
    r.windows.merge(b.windows);
    r.windows.merge(c.windows);
    const RationalFunction one(Cyclotomic(1L), chi.prime());
    RationalFunction prod = a.value * b.value;
    RationalFunction prod_fixed = a.value * c.value;
    const bool ok = ratfun_equal(prod, one);
    if (!ok) r.verdict = Verdict::Fail;
    lhs.push_back({{"chi", to_json(chi)},
                   {"spectral", to_json(a.value)},
                   {"spectral_inverse", to_json(b.value)},
                   {"product", to_json(prod)},
                   {"verdict", ok ? "PASS" : "FAIL"}});
    diag.push_back({{"chi", chi.label},
                    {"corrected_inverse", to_json(fixed)},
                    {"product", to_json(prod_fixed)},
                    {"is_one", ratfun_equal(prod_fixed, one)}});
  }
  r.lhs = lhs;
  r.rhs = to_json(RationalFunction(Cyclotomic(1L), chis.empty() ? 0 : chis[0].prime()));
  r.details["corrected_inverse_diagnostic"] = diag;
  return r;
}

}  // namespace gj
