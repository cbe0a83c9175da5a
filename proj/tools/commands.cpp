#include "commands.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "gj/distributions/distributions.hpp"
#include "gj/error.hpp"
#include "gj/zeta/zeta.hpp"

namespace gj::cli {

namespace {

EngineError invalid(const std::string& what) { return EngineError(ErrorKind::InvalidInput, what); }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  const auto e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw invalid(path + ": " + e.what());
  }
}

// name(args) -> {name, args}
std::pair<std::string, std::vector<std::string>> call_syntax(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return {trim(text), {}};
  if (text.back() != ')') throw invalid("unbalanced parentheses in '" + text + "'");
  std::vector<std::string> args;
  for (auto& a : split_top_level(text.substr(open + 1, text.size() - open - 2), ',')) args.push_back(trim(a));
  return {trim(text.substr(0, open)), args};
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw invalid("not an integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw invalid("not an integer: " + s);
  }
}

BigRational to_rational(const std::string& s) {
  try {
    return parse_rational(trim(s));
  } catch (const EngineError&) {
    throw;
  } catch (const std::exception&) {
    throw invalid("not a rational: " + s);
  }
}

std::vector<std::string> default_phis(const MultiplicativeCharacter& chi) {
  if (chi.is_unramified()) return {"unit_ball", "scaled_ball(1)", "shifted_ball(1,1)"};
  const std::string c = std::to_string(chi.conductor()), c1 = std::to_string(chi.conductor() + 1);
  return {"shifted_ball(1," + c + ")", "shifted_ball(1," + c1 + ")", "shifted_ball(-1," + c + ")"};
}

std::vector<SchwartzBruhatFn> phis_for(const RunSpec& spec, const MultiplicativeCharacter& chi) {
  std::vector<SchwartzBruhatFn> out;
  for (const auto& s : spec.phis.empty() ? default_phis(chi) : spec.phis) out.push_back(parse_phi(s, spec.n, spec.p));
  return out;
}

std::vector<std::string> default_points(int n, int p) {
  const std::string ps = std::to_string(p);
  if (n == 1) return {"1", ps, "1/" + ps};
  std::string diag = "diag(1";
  for (int i = 1; i < n; ++i) diag += "," + (i == n - 1 ? ps : std::string("1"));
  diag += ")";
  // cyclic shift with p in the corner
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (int j = 0; j < n; ++j) r.push_back(j == (i + 1) % n ? (i == n - 1 ? ps : "1") : "0");
    rows.push_back(r);
  }
  return {"id", diag, rows.dump()};
}

int half_integer2(const std::string& s) {
  BigRational a = to_rational(s) * BigRational(2);
  if (a.get_den() != 1) throw invalid("alpha must be a half-integer: " + s);
  return static_cast<int>(a.get_num().get_si());
}

std::complex<double> parse_complex(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw invalid("empty s value");
  if (s.back() != 'i') return {std::stod(s), 0};
  s.pop_back();
  std::size_t split = s.find_last_of("+-");
  if (split == 0 || split == std::string::npos) return {0, s.size() <= 1 ? (s == "-" ? -1.0 : 1.0) : std::stod(s)};
  std::string im = s.substr(split);
  if (im == "+" || im == "-") im += "1";
  return {std::stod(s.substr(0, split)), std::stod(im)};
}

Report fourier_selftest(int count, std::uint64_t seed) {
  Report r;
  r.claim = "fourier(fourier(f)) = reflect(f) and <f, f> = <f^, f^>";
  r.parameters = {{"count", count}, {"seed", seed}, {"levels", "|k| <= 3"}};
  nlohmann::json sweep = nlohmann::json::array();
  for (int n : {1, 2})
    for (int p : {2, 3}) {
      std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(10 * n + p));
      int inversion = 0, plancherel = 0;
      for (int i = 0; i < count; ++i) {
        const SchwartzBruhatFn f = random_schwartz(n, p, rng, 3, 3);
        const SchwartzBruhatFn F = fourier(f);
        if (functions_equal(fourier(F), reflect(f))) ++inversion;
        if (inner_product(f, f) == inner_product(F, F)) ++plancherel;
      }
      if (inversion != count || plancherel != count) r.verdict = Verdict::Fail;
      sweep.push_back({{"n", n}, {"p", p}, {"inversion_ok", inversion}, {"plancherel_ok", plancherel}});
    }
  r.lhs = sweep;
  r.rhs = {{"expected_ok_per_case", count}};
  return r;
}

Report combine(const std::string& claim, const nlohmann::json& params, const std::vector<Report>& parts) {
  Report r;
  r.claim = claim;
  r.parameters = params;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& p : parts) {
    r.verdict = worst(r.verdict, p.verdict);
    r.windows.merge(p.windows);
    checks.push_back(p.to_json());
  }
  r.details["checks"] = checks;
  if (!parts.empty()) {
    r.lhs = parts.front().lhs;
    r.rhs = parts.front().rhs;
  }
  return r;
}

Report run_gamma(const RunSpec& spec) {
  const auto chi = parse_character(spec.chi, spec.p);
  const auto phis = phis_for(spec, chi);
  GammaResult g = gamma_factor(chi, spec.n, phis.front(), spec.cfg);
  Report r;
  r.claim = "gamma(s, chi o det) from Z(phi^, n - s, chi^{-1}) / Z(phi, s, chi)";
  r.parameters = {{"p", spec.p}, {"n", spec.n}, {"chi", to_json(chi)}, {"phi", to_json(phis.front())}};
  r.lhs = to_json(g.gamma);
  r.rhs = nlohmann::json::object({{"zeta", to_json(g.denominator.value)}, {"zeta_dual", to_json(g.numerator.value)}});
  r.windows.merge(g.denominator.windows);
  r.windows.merge(g.numerator.windows);
  try {
    RationalFunction prod = gl1_product(chi, spec.n, spec.cfg);
    r.details["gl1_product_diagnostic"] = {{"value", to_json(prod)}, {"equal", ratfun_equal(prod, g.gamma)},
                                           {"informational", true}};
  } catch (const EngineError& e) {
    r.details["gl1_product_diagnostic"] = {{"error", e.what()}};
  }
  return r;
}

Report run_verify_fe(const RunSpec& spec) {
  const auto chi = parse_character(spec.chi, spec.p);
  const auto phis = phis_for(spec, chi);
  std::vector<Report> parts{phi_independence_check(chi, spec.n, phis, spec.cfg)};
  for (const auto& phi : phis) {
    try {
      parts.push_back(duality_check(chi, spec.n, phi, spec.cfg));
      break;
    } catch (const EngineError& e) {
      if (e.kind() != ErrorKind::ZeroDenominator) throw;
    }
  }
  return combine("functional equation: phi-independence and duality of gamma",
                 {{"p", spec.p}, {"n", spec.n}, {"chi", to_json(chi)}}, parts);
}

Report run_verify_bk(const RunSpec& spec) {
  const auto chi = parse_character(spec.chi, spec.p);
  std::vector<PAdicMatrix> xs;
  for (const auto& s : spec.xs.empty() ? default_points(spec.n, spec.p) : spec.xs) xs.push_back(parse_point(s, spec.n));
  return verify_bk_identity(chi, spec.n, phis_for(spec, chi), xs, spec.cfg);
}

Report run_verify_inverse(const RunSpec& spec) {
  TwistedDistribution d = tilde(cstar_gamma(spec.n));
  if (!spec.alpha.empty()) d = {spec.n, half_integer2(spec.alpha), spec.epsilon, KernelMode::Inverse};
  std::vector<MultiplicativeCharacter> chis;
  for (const auto& c : spec.chis.empty() ? std::vector<std::string>{spec.chi} : spec.chis)
    chis.push_back(parse_character(c, spec.p));
  Report r = verify_inverse_weak(d, chis, spec.cfg);
  r.parameters["p"] = spec.p;
  return r;
}

Report run_arch(const RunSpec& spec, std::string& csv) {
  RealCharacter chi{spec.delta, spec.tau};
  QuadratureConfig q = spec.qcfg;
  if (!spec.s_grid.empty()) {
    q.s_grid.clear();
    for (const auto& s : spec.s_grid) q.s_grid.push_back(parse_complex(s));
  }
  for (auto s : q.s_grid)
    if (s.real() <= 0 || s.real() >= 1) throw invalid("s grid points need 0 < Re(s) < 1");
  // x^delta g and x^{delta+2} g + x^delta g; neither has a zeta zero in the strip
  const RealSchwartzFn phi1 = RealSchwartzFn::monomial(spec.delta % 2);
  const RealSchwartzFn phi2 = RealSchwartzFn::monomial(spec.delta % 2 + 2) + phi1;
  std::vector<SweepRow> rows = arch_sweep(chi, phi1, q);
  csv = sweep_csv(rows);

  Report r;
  r.claim = "real gamma from the functional equation matches the Gamma_R quotient and is phi-independent";
  r.parameters = {{"delta", spec.delta}, {"tau", spec.tau}, {"abs_tol", q.abs_tol}, {"rel_tol", q.rel_tol}};
  nlohmann::json lhs = nlohmann::json::array();
  double worst_oracle = 0, worst_phi = 0;
  for (const auto& row : rows) {
    const std::complex<double> other = gamma_real(chi, row.s, phi2, q);
    worst_oracle = std::max(worst_oracle, row.abs_err);
    worst_phi = std::max(worst_phi, std::abs(other - row.gamma));
    lhs.push_back({{"s", {row.s.real(), row.s.imag()}},
                   {"gamma", {row.gamma.real(), row.gamma.imag()}},
                   {"gamma_phi2", {other.real(), other.imag()}},
                   {"oracle", {row.oracle.real(), row.oracle.imag()}},
                   {"abs_err", row.abs_err}});
  }
  r.lhs = lhs;
  r.rhs = {{"oracle", "Gamma_R quotient (Lanczos Gamma)"}, {"tolerance", 1e-6}};
  r.details["max_oracle_error"] = worst_oracle;
  r.details["max_phi_difference"] = worst_phi;
  bool ok = worst_oracle <= 1e-6 && worst_phi <= 1e-6;
  if (spec.delta % 2 == 0 && spec.tau == 0) {
    const double err = std::abs(gamma_real(chi, 0.5, phi1, q) - 1.0);
    r.details["self_dual_point_error"] = err;
    ok = ok && err <= 1e-9;
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

int exit_for(const EngineError& e) {
  if (e.inconclusive()) return 2;
  return 3;
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

SchwartzBruhatFn parse_phi(const std::string& text, int n, int p) {
  const std::string t = trim(text);
  if (t.size() > 5 && t.substr(t.size() - 5) == ".json") {
    SchwartzBruhatFn f = schwartz_from_json(read_json_file(t));
    if (f.n() != n || f.prime() != p) throw invalid(t + ": n or p does not match the run");
    return f;
  }
  auto [name, args] = call_syntax(t);
  if (name == "unit_ball" && args.empty()) return SchwartzBruhatFn::ball(n, p, 0);
  if (name == "scaled_ball" && args.size() == 1) return SchwartzBruhatFn::ball(n, p, to_int(args[0]));
  if (name == "shifted_ball" && args.size() == 2)
    return SchwartzBruhatFn::coset(PAdicMatrix::scalar(n, to_rational(args[0])), p, to_int(args[1]));
  if (name == "modulated_ball" && args.size() == 2)
    return SchwartzBruhatFn::modulated_ball(PAdicMatrix::scalar(n, to_rational(args[0])), p, to_int(args[1]));
  throw invalid("unknown test function '" + t +
                "' (unit_ball, scaled_ball(k), shifted_ball(a,k), modulated_ball(b,k) or a .json file)");
}

PAdicMatrix parse_point(const std::string& text, int n) {
  const std::string t = trim(text);
  if (t == "id") return PAdicMatrix::identity(n);
  if (!t.empty() && t[0] == '[') {
    try {
      PAdicMatrix m = matrix_from_json(nlohmann::json::parse(t));
      if (m.size() != n) throw invalid("point has the wrong size: " + t);
      return m;
    } catch (const nlohmann::json::exception& e) {
      throw invalid("bad matrix '" + t + "': " + e.what());
    }
  }
  auto [name, args] = call_syntax(t);
  if (name == "diag") {
    if (static_cast<int>(args.size()) != n) throw invalid("diag needs n entries: " + t);
    std::vector<BigRational> d;
    for (const auto& a : args) d.push_back(to_rational(a));
    return PAdicMatrix::diagonal(d);
  }
  return PAdicMatrix::scalar(n, to_rational(t));
}

MultiplicativeCharacter parse_character(const std::string& text, int p) {
  const std::string t = trim(text);
  if (t == "trivial" || t == "unramified" || t == "ramified") return test_character(p, t);
  nlohmann::json doc;
  if (!t.empty() && t[0] == '{') {
    try {
      doc = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw invalid(std::string("bad character JSON: ") + e.what());
    }
  } else {
    doc = read_json_file(t);
  }
  MultiplicativeCharacter chi = character_from_json(doc);
  if (chi.prime() != p) throw invalid("character prime does not match --p");
  return chi;
}

nlohmann::json strip_meta(nlohmann::json report) {
  report.erase("meta");
  return report;
}

RunResult run(const RunSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  nlohmann::json params = {{"command", spec.command}};
  try {
    if (spec.n < 1 || spec.n > 4) throw invalid("n must be in 1..4");
    if (!is_prime(spec.p)) throw invalid("p must be prime");
    if (spec.epsilon != 1 && spec.epsilon != -1) throw invalid("epsilon must be +1 or -1");
    if (spec.format != "json" && spec.format != "csv") throw invalid("format must be json or csv");
    if (spec.format == "csv" && spec.command != "arch-gamma") throw invalid("csv output is only for arch-gamma");
    spec.cfg.validate();
    if (spec.cfg.threads > 0) omp_set_num_threads(spec.cfg.threads);

    Report r;
    std::string csv;
    if (spec.command == "gamma") r = run_gamma(spec);
    else if (spec.command == "verify-fe") r = run_verify_fe(spec);
    else if (spec.command == "verify-bk") r = run_verify_bk(spec);
    else if (spec.command == "verify-inverse") r = run_verify_inverse(spec);
    else if (spec.command == "verify-relation") r = verify_relation(spec.n);
    else if (spec.command == "fourier-selftest") r = fourier_selftest(spec.count, spec.seed);
    else if (spec.command == "arch-gamma") r = run_arch(spec, csv);
    else throw invalid("unknown command '" + spec.command + "'");

    out.report = r.to_json();
    out.exit_code = exit_code(r.verdict);
    out.text = spec.format == "csv" ? csv : "";
  } catch (const EngineError& e) {
    out.exit_code = exit_for(e);
    out.report = {{"claim", spec.command},
                  {"parameters", params},
                  {"verdict", out.exit_code == 2 ? "INCONCLUSIVE" : "INVALID_INPUT"},
                  {"error", e.what()},
                  {"error_kind", to_string(e.kind())}};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.report["meta"] = {{"version", "0.1.0"},
                        {"threads", spec.cfg.threads > 0 ? spec.cfg.threads : omp_get_max_threads()},
                        {"seconds", elapsed},
                        {"psi", PAdicContext::psi_convention}};
  if (out.text.empty()) out.text = out.report.dump(2) + "\n";
  return out;
}

}  // namespace gj::cli
