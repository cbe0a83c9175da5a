// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "gj/distributions/distributions.hpp"
#include "gj/error.hpp"

using namespace gj;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<json> reports;  // compared across thread counts
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

cli::RunSpec spec(const std::string& command, int p, int n, const std::string& chi, int threads) {
  cli::RunSpec s;
  s.command = command;
  s.p = p;
  s.n = n;
  s.chi = chi;
  s.cfg.threads = threads;
  return s;
}

// Stirling series after shifting Re z past 10; independent of the engine's Lanczos Gamma.
std::complex<double> stirling_gamma(std::complex<double> z) {
  std::complex<double> shift = 1.0;
  while (z.real() < 10) {
    shift *= z;
    z += 1.0;
  }
  const double pi = std::acos(-1.0);
  const std::complex<double> z2 = z * z;
  const std::complex<double> series =
      1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z2 * z2 * z) - 1.0 / (1680.0 * z2 * z2 * z2 * z);
  return std::exp((z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + series) / shift;
}

IntegrationConfig cfg_for(int threads) {
  IntegrationConfig c;
  c.threads = threads;
  return c;
}

// (1 - a T^2) / (1 - a^{-1} q^{-1} T^{-2})
RationalFunction tate(int p, const Cyclotomic& a) {
  return RationalFunction(LaurentPoly::from_coefficients(0, {1, 0, -a}),
                          LaurentPoly::from_coefficients(-2, {-a.inverse() * Cyclotomic(BigRational(1, p)), 0, 1}), p);
}

std::vector<SchwartzBruhatFn> default_phis(int n, int p, const MultiplicativeCharacter& chi) {
  std::vector<std::string> names;
  const int c = chi.conductor();
  if (c == 0) names = {"unit_ball", "scaled_ball(1)", "shifted_ball(1,1)"};
  else names = {"shifted_ball(1," + std::to_string(c) + ")", "shifted_ball(1," + std::to_string(c + 1) + ")",
                "shifted_ball(-1," + std::to_string(c) + ")"};
  std::vector<SchwartzBruhatFn> out;
  for (const auto& s : names) out.push_back(cli::parse_phi(s, n, p));
  return out;
}

Outcome c1(int threads) {
  Outcome o;
  auto s = spec("fourier-selftest", 2, 1, "trivial", threads);
  s.count = 200;
  const auto r = cli::run(s);
  o.require(r.exit_code == 0, "self-test failed: " + r.report["lhs"].dump());
  o.reports.push_back(cli::strip_meta(r.report));
  return o;
}

Outcome c2(int threads) {
  Outcome o;
  const std::vector<std::pair<int, std::string>> cases{{2, "trivial"}, {3, "trivial"}, {3, "unramified"}};
  for (const auto& [p, kind] : cases) {
    const auto chi = test_character(p, kind);
    const auto expected = tate(p, chi.value_at_p());
    const auto phis = default_phis(1, p, chi);
    for (const auto& phi : phis)
      o.require(ratfun_equal(gamma_factor(chi, 1, phi, cfg_for(threads)).gamma, expected),
                "p=" + std::to_string(p) + " " + kind + " phi " + fingerprint(to_json(phi)));
    const auto r = cli::run(spec("gamma", p, 1, kind, threads));
    o.require(r.exit_code == 0, "cli gamma exit");
    o.require(r.report["lhs"] == to_json(expected), "cli gamma value p=" + std::to_string(p));
    o.reports.push_back(cli::strip_meta(r.report));
    o.reports.push_back(phi_independence_check(chi, 1, phis, cfg_for(threads)).to_json());
  }
  return o;
}

Outcome c3(int threads) {
  Outcome o;
  const int p = 2;
  const auto chi = test_character(p, "ramified");
  const auto phis = default_phis(1, p, chi);
  const auto ind = phi_independence_check(chi, 1, phis, cfg_for(threads));
  o.require(ind.verdict == Verdict::Pass, "phi independence");
  o.reports.push_back(ind.to_json());
  const auto g = gamma_factor(chi, 1, phis.front(), cfg_for(threads)).gamma;
  o.require(g.denominator().high() == 0 && g.numerator().low() == g.numerator().high(), "not a monomial");
  if (o.pass) {
    const Cyclotomic coeff = g.numerator().coefficients().front() / g.denominator().coefficients().front();
    const double w = 2 * std::log(std::abs(coeff.embed())) / std::log(static_cast<double>(p));
    o.require(std::abs(w - std::round(w)) < 1e-10, "modulus not a half-integral power of q");
    std::ostringstream os;
    os << "gamma = " << g.to_string() << ", w = " << std::lround(w) << ", conductor " << chi.conductor();
    o.note = os.str();
  }
  return o;
}

Outcome c4(int threads) {
  Outcome o;
  for (int p : {2, 3})
    for (const char* kind : {"trivial", "unramified"}) {
      const auto chi = test_character(p, kind);
      const auto a = gamma_factor(chi, 2, SchwartzBruhatFn::ball(2, p), cfg_for(threads));
      const auto b = gamma_factor(chi, 2, SchwartzBruhatFn::ball(2, p, 1), cfg_for(threads));
      const std::string tag = "p=" + std::to_string(p) + " " + kind;
      o.require(ratfun_equal(a.gamma, b.gamma), tag + " gamma differs");
      for (const auto* z : {&a.numerator, &a.denominator, &b.numerator, &b.denominator})
        o.require(z->value.denominator().high() <= 4, tag + " denominator degree");
      o.reports.push_back({{"gamma", to_json(a.gamma)}, {"zeta", to_json(a.denominator.value)},
                           {"zeta_scaled", to_json(b.denominator.value)}, {"windows", to_json(a.denominator.windows)}});
    }
  return o;
}

Outcome c5(int threads) {
  Outcome o;
  struct Case {
    int p, n;
    const char* kind;
  };
  for (const Case c : std::vector<Case>{{2, 1, "trivial"}, {3, 1, "trivial"}, {3, 1, "unramified"}, {2, 1, "ramified"},
                                        {2, 2, "trivial"}, {2, 2, "unramified"}, {3, 2, "trivial"}, {3, 2, "unramified"}}) {
    const auto chi = test_character(c.p, c.kind);
    const auto phis = c.n == 1 ? default_phis(1, c.p, chi)
                               : std::vector<SchwartzBruhatFn>{SchwartzBruhatFn::ball(2, c.p), SchwartzBruhatFn::ball(2, c.p, 1)};
    for (const auto& phi : phis) {
      const auto r = duality_check(chi, c.n, phi, cfg_for(threads));
      o.require(r.verdict == Verdict::Pass,
                "p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " " + c.kind);
      o.reports.push_back(r.to_json());
    }
  }
  return o;
}

Outcome c6(int threads) {
  Outcome o;
  for (int p : {2, 3})
    for (const char* kind : {"trivial", "unramified", "ramified"}) {
      const auto r = cli::run(spec("verify-bk", p, 1, kind, threads));
      o.require(r.exit_code == 0, "n=1 p=" + std::to_string(p) + " " + kind + " exit " + std::to_string(r.exit_code));
      o.reports.push_back(cli::strip_meta(r.report));
    }
  auto s = spec("verify-bk", 2, 2, "trivial", threads);
  s.xs = {"id", "diag(1,2)", "[[1,1],[0,2]]"};
  const auto r = cli::run(s);
  o.require(r.exit_code == 0, "n=2 exit " + std::to_string(r.exit_code));
  o.reports.push_back(cli::strip_meta(r.report));
  return o;
}

Outcome c7(int threads) {
  Outcome o;
  int failed = 0, total = 0;
  for (int p : {2, 3})
    for (const char* alpha : {"1/2", "1", "3/2"}) {
      auto s = spec("verify-inverse", p, 1, "trivial", threads);
      s.chis = {"trivial", "unramified", "ramified"};
      s.alpha = alpha;
      s.epsilon = -1;
      const auto r = cli::run(s);
      ++total;
      if (r.exit_code != 0) ++failed;
      o.reports.push_back(cli::strip_meta(r.report));
    }
  const auto r = cli::run(spec("verify-inverse", 2, 2, "trivial", threads));
  ++total;
  if (r.exit_code != 0) ++failed;
  o.reports.push_back(cli::strip_meta(r.report));
  o.require(failed == 0, std::to_string(failed) + "/" + std::to_string(total) +
                             " kernels: product with closed_form_inverse is not 1 (corrected n+alpha partner gives 1)");
  return o;
}

Outcome c8(int threads) {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    auto s = spec("verify-relation", 2, 1, "trivial", threads);
    s.n = n;
    if (n > 4) {
      // the CLI caps n at 4; the relation itself is checked directly
      const auto r = verify_relation(n);
      o.require(r.verdict == Verdict::Pass, "n=" + std::to_string(n));
      o.reports.push_back(r.to_json());
      continue;
    }
    const auto r = cli::run(s);
    o.require(r.exit_code == 0, "n=" + std::to_string(n));
    o.reports.push_back(cli::strip_meta(r.report));
  }
  return o;
}

Outcome c9(int threads) {
  Outcome o;
  const double pi = std::acos(-1.0);
  const RealCharacter triv{0, 0};
  const auto phi1 = RealSchwartzFn::hermite(0);
  const auto phi2 = RealSchwartzFn::hermite(2) + RealSchwartzFn::hermite(0).scaled(PiNumber(Cyclotomic(3L)));
  for (std::complex<double> s : {std::complex<double>(0.3, 0), {0.5, 0}, {0.7, 0}, {0.4, 0.2}}) {
    const auto oracle = std::pow(pi, (2.0 * s - 1.0) / 2.0) * stirling_gamma((1.0 - s) / 2.0) / stirling_gamma(s / 2.0);
    const auto g1 = gamma_real(triv, s, phi1);
    const auto g2 = gamma_real(triv, s, phi2);
    o.require(std::abs(g1 - oracle) < 1e-6, "oracle mismatch");
    o.require(std::abs(g1 - g2) < 1e-6, "phi dependence");
  }
  o.require(std::abs(gamma_real(triv, {0.5, 0}, phi1) - 1.0) < 1e-9, "gamma(1/2) != 1");
  const auto r = cli::run(spec("arch-gamma", 2, 1, "trivial", threads));
  o.require(r.exit_code == 0, "cli arch-gamma");
  o.reports.push_back(cli::strip_meta(r.report));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::function<Outcome(int)>, double>> criteria{
      {c1, 120}, {c2, 10}, {c3, 30}, {c4, 2400}, {c5, 2400}, {c6, 1800}, {c7, 1800}, {c8, 1}, {c9, 60}};
  int failures = 0;
  std::vector<std::vector<json>> baseline;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].first(1);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("error: ") + e.what();
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (sec > criteria[i].second) o.require(false, "over time limit");
    baseline.push_back(o.reports);
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << sec << " s)"
              << (o.note.empty() ? "" : "  " + o.note) << std::endl;
  }

  Outcome det;
  for (int threads : {4, 8})
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      std::vector<json> again;
      try {
        again = criteria[i].first(threads).reports;
      } catch (const std::exception& e) {
        det.require(false, "criterion " + std::to_string(i + 1) + " threw at " + std::to_string(threads) + " threads");
        continue;
      }
      det.require(again == baseline[i],
                  "criterion " + std::to_string(i + 1) + " differs at " + std::to_string(threads) + " threads");
    }
  failures += det.pass ? 0 : 1;
  std::cout << "criterion 10: " << (det.pass ? "PASS" : "FAIL") << (det.note.empty() ? "" : "  " + det.note)
            << std::endl;
  return failures == 0 ? 0 : 1;
}
