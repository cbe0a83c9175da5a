#include "gj/zeta/zeta.hpp"

#include "gj/error.hpp"

namespace gj {

namespace {

ZetaResult zeta_series(const SchwartzBruhatFn& phi, const MultiplicativeCharacter& chi, const IntegrationConfig& cfg,
                       bool reflected) {
  cfg.validate();
  const int n = phi.n(), p = phi.prime();
  ZetaResult out;
  out.phi_fingerprint = fingerprint(to_json(phi));
  if (phi.empty()) {
    out.value = RationalFunction(Cyclotomic(), p);
    return out;
  }
  const int ms = phi.support_exponent();
  const auto opt = cfg.rationalize_options(n, chi.conductor());
  auto build = [&](int k_hi) {
    ShellValues sv = compute_shells(phi, chi, k_hi, cfg);
    ShellSeries s;
    s.k_lo = sv.k_lo;
    s.weight = reflected ? -2 : 2;
    s.q = p;
    for (int k = sv.k_lo; k <= k_hi; ++k) {
      Cyclotomic v = sv.at(k);
      // |det|^{n-s} d^x g = |det|^{-s} dg, so the reflected side stays additive
      if (!reflected) v *= Cyclotomic(prime_power(p, k * n));
      s.entries.push_back(v);
    }
    out.windows = Windows{sv.k_lo, k_hi, ms, ms, out.windows.cells + sv.cells};
    return s;
  };
  out.value = rationalize_growing(build, -n * ms + rationalize_window(opt), opt, cfg.extensions);
  return out;
}

nlohmann::json gamma_json(const GammaResult& g) {
  return {{"gamma", to_json(g.gamma)},
          {"phi", g.denominator.phi_fingerprint},
          {"zeta", to_json(g.denominator.value)},
          {"zeta_dual", to_json(g.numerator.value)}};
}

}  // namespace

ZetaResult zeta_integral(const SchwartzBruhatFn& phi, const MultiplicativeCharacter& chi,
                         const IntegrationConfig& cfg) {
  return zeta_series(phi, chi, cfg, false);
}

ZetaResult zeta_integral_reflected(const SchwartzBruhatFn& phi, const MultiplicativeCharacter& chi,
                                   const IntegrationConfig& cfg) {
  return zeta_series(phi, chi, cfg, true);
}

GammaResult gamma_factor(const MultiplicativeCharacter& chi, int n, const SchwartzBruhatFn& phi,
                         const IntegrationConfig& cfg) {
  if (phi.n() != n || phi.prime() != chi.prime())
    throw EngineError(ErrorKind::InvalidInput, "gamma_factor: size or prime mismatch");
  GammaResult g;
  g.denominator = zeta_integral(phi, chi, cfg);
  if (g.denominator.value.is_zero())
    throw EngineError(ErrorKind::ZeroDenominator,
                      "Z(phi, s, chi) vanishes identically; pick a phi that does not cancel against chi, "
                      "e.g. an indicator of 1 + p^c M_n(Z_p)");
  g.numerator = zeta_integral_reflected(fourier(phi), chi.inverse(), cfg);
  g.gamma = g.numerator.value / g.denominator.value;
  return g;
}

Report phi_independence_check(const MultiplicativeCharacter& chi, int n, const std::vector<SchwartzBruhatFn>& phis,
                              const IntegrationConfig& cfg) {
  Report r;
  r.claim = "gamma(s, chi o det) from the functional equation does not depend on phi";
  r.parameters = {{"p", chi.prime()}, {"n", n}, {"chi", to_json(chi)}};
  std::vector<GammaResult> ok;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& phi : phis) {
    try {
      GammaResult g = gamma_factor(chi, n, phi, cfg);
      r.windows.merge(g.denominator.windows);
      r.windows.merge(g.numerator.windows);
      all.push_back(gamma_json(g));
      ok.push_back(std::move(g));
    } catch (const EngineError& e) {
      if (e.kind() == ErrorKind::ZeroDenominator) {
        r.notes.push_back(std::string("skipped phi: ") + e.what());
        all.push_back({{"phi", fingerprint(to_json(phi))}, {"error", e.what()}});
      } else if (e.inconclusive()) {
        r.verdict = Verdict::Inconclusive;
        r.notes.push_back(e.what());
        all.push_back({{"phi", fingerprint(to_json(phi))}, {"error", e.what()}});
      } else {
        throw;
      }
    }
  }
  if (ok.empty() && r.verdict != Verdict::Inconclusive)
    throw EngineError(ErrorKind::AllDegenerate, "every phi gave a vanishing zeta integral");
  if (ok.size() == 1) r.notes.push_back("only one usable phi; independence holds trivially");
  for (std::size_t i = 1; i < ok.size(); ++i)
    if (!ratfun_equal(ok[0].gamma, ok[i].gamma)) r.verdict = Verdict::Fail;
  if (!ok.empty()) r.lhs = to_json(ok[0].gamma);
  r.rhs = all;
  return r;
}

RationalFunction reflect_s(const RationalFunction& r, int n, int p) {
  return r.substitute(sqrt_prime(p).pow(-n), -1);
}

RationalFunction shift_s(const RationalFunction& r, int s0, int p) {
  return r.substitute(sqrt_prime(p).pow(-s0), 1);
}

Report duality_check(const MultiplicativeCharacter& chi, int n, const SchwartzBruhatFn& phi,
                     const IntegrationConfig& cfg) {
  Report r;
  r.claim = "gamma(s, chi o det) * gamma(n - s, chi^{-1} o det) = chi(-1)^n";
  r.parameters = {{"p", chi.prime()}, {"n", n}, {"chi", to_json(chi)}};
  const int p = chi.prime();
  GammaResult a = gamma_factor(chi, n, phi, cfg);
  GammaResult b = gamma_factor(chi.inverse(), n, fourier(phi), cfg);
  for (const auto* g : {&a, &b}) {
    r.windows.merge(g->denominator.windows);
    r.windows.merge(g->numerator.windows);
  }
  RationalFunction prod = a.gamma * reflect_s(b.gamma, n, p);
  RationalFunction expected(char_eval(chi, BigRational(-1)).pow(n), p);
  r.lhs = to_json(prod);
  r.rhs = to_json(expected);
  r.verdict = ratfun_equal(prod, expected) ? Verdict::Pass : Verdict::Fail;
  return r;
}

Report twist_shift_check(const MultiplicativeCharacter& chi, int n, int s0, const SchwartzBruhatFn& phi,
                         const IntegrationConfig& cfg) {
  Report r;
  const int p = chi.prime();
  r.claim = "gamma(s, chi |det|^{s0}) = gamma(s + s0, chi)";
  r.parameters = {{"p", p}, {"n", n}, {"s0", s0}, {"chi", to_json(chi)}};
  MultiplicativeCharacter twisted = chi.twisted_at_p(Cyclotomic(prime_power(p, -s0)));
  GammaResult a = gamma_factor(twisted, n, phi, cfg);
  GammaResult b = gamma_factor(chi, n, phi, cfg);
  r.windows.merge(a.denominator.windows);
  r.windows.merge(b.denominator.windows);
  RationalFunction shifted = shift_s(b.gamma, s0, p);
  r.lhs = to_json(a.gamma);
  r.rhs = to_json(shifted);
  r.verdict = ratfun_equal(a.gamma, shifted) ? Verdict::Pass : Verdict::Fail;
  return r;
}

RationalFunction gl1_product(const MultiplicativeCharacter& chi, int n, const IntegrationConfig& cfg) {
  const int p = chi.prime();
  // 1 + p^c Z_p never cancels against chi
  SchwartzBruhatFn phi = chi.is_unramified()
                             ? SchwartzBruhatFn::ball(1, p, 0)
                             : SchwartzBruhatFn::coset(PAdicMatrix::identity(1), p, chi.conductor());
  RationalFunction g1 = gamma_factor(chi, 1, phi, cfg).gamma;
  RationalFunction out(Cyclotomic(1L), p);
  for (int j = 0; j < n; ++j) out *= shift_s(g1, -j, p);
  return out;
}

}  // namespace gj
