#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  gj::cli::RunSpec spec;
  if (const char* env = std::getenv("GJ_HARD_BUDGET")) {
    try {
      spec.cfg.hard_budget = std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "GJ_HARD_BUDGET is not an integer\n";
      return 3;
    }
  }

  CLI::App app{"Exact Godement-Jacquet zeta integrals and gamma factors over Q_p"};
  app.require_subcommand(1);
  std::string out_path;
  std::string phis, xs, chis, s_grid;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", spec.p, "prime")->capture_default_str();
    sub->add_option("--n", spec.n, "matrix size")->capture_default_str();
    sub->add_option("--char", spec.chi, "trivial | unramified | ramified | inline JSON | JSON file")
        ->capture_default_str();
    sub->add_option("--phi,--phis", phis,
                    "comma list of unit_ball, scaled_ball(k), shifted_ball(a,k), modulated_ball(b,k), file.json");
    sub->add_option("--threads", spec.cfg.threads, "worker threads (0 = OpenMP default)")->capture_default_str();
    sub->add_option("--m-start", spec.cfg.m_start, "first truncation exponent")->capture_default_str();
    sub->add_option("--m-max", spec.cfg.m_max, "last truncation exponent")->capture_default_str();
    sub->add_option("--m-confirm", spec.cfg.m_confirm, "agreeing truncation increments")->capture_default_str();
    sub->add_option("--r-max", spec.cfg.r_max, "recurrence order cap (0 = n)")->capture_default_str();
    sub->add_option("--confirm", spec.cfg.confirm, "recurrence confirm window")->capture_default_str();
    sub->add_option("--k-extra", spec.cfg.k_extra, "extra confirming shells")->capture_default_str();
    sub->add_option("--zero-window", spec.cfg.zero_window, "zero shells accepted as vanishing (0 = n(c+1)+2)")
        ->capture_default_str();
    sub->add_option("--hard-budget", spec.cfg.hard_budget, "max cells per shell pass (env GJ_HARD_BUDGET)")
        ->capture_default_str();
    sub->add_flag("--reference", spec.cfg.reference, "use the serial reference kernel");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--format", spec.format, "json | csv (arch-gamma only)")->capture_default_str();
  };

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"gamma", "gamma(s, chi o det) as a rational function of T = q^{-s/2}"},
      {"verify-fe", "phi-independence and duality of the functional equation"},
      {"verify-bk", "spectral action of the generating distribution against gamma"},
      {"verify-inverse", "weak (spectral) check of the closed-form convolution inverse"},
      {"verify-relation", "parameter identity between the generating and normalizing distributions"},
      {"fourier-selftest", "Fourier inversion and Plancherel on random test functions"},
      {"arch-gamma", "real n = 1 gamma factor on an s grid against Gamma_R quotients"},
  };
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub);
    const std::string name = c.name;
    if (name == "verify-bk") sub->add_option("--x", xs, "';' list of points: id, diag(..), [[..]], rational");
    if (name == "verify-inverse") {
      sub->add_option("--alpha", spec.alpha, "kernel exponent (half-integer); default tilde(cstar_gamma(n))");
      sub->add_option("--epsilon", spec.epsilon, "sign in the kernel")->capture_default_str();
      sub->add_option("--chars", chis, "';' list of characters");
    }
    if (name == "fourier-selftest") {
      sub->add_option("--count", spec.count, "instances per (n, p)")->capture_default_str();
      sub->add_option("--seed", spec.seed, "random seed")->capture_default_str();
    }
    if (name == "arch-gamma") {
      sub->add_option("--delta", spec.delta, "sign exponent")->capture_default_str();
      sub->add_option("--tau", spec.tau, "imaginary twist")->capture_default_str();
      sub->add_option("--s-grid", s_grid, "comma list, e.g. 0.3,0.5,0.4+0.2i");
      sub->add_option("--abs-tol", spec.qcfg.abs_tol)->capture_default_str();
      sub->add_option("--rel-tol", spec.qcfg.rel_tol)->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  spec.command = app.get_subcommands().front()->get_name();
  if (!phis.empty()) spec.phis = gj::cli::split_top_level(phis, ',');
  if (!xs.empty()) spec.xs = gj::cli::split_top_level(xs, ';');
  if (!chis.empty()) spec.chis = gj::cli::split_top_level(chis, ';');
  if (!s_grid.empty()) spec.s_grid = gj::cli::split_top_level(s_grid, ',');

  gj::cli::RunResult res = gj::cli::run(spec);
  if (out_path.empty()) {
    std::cout << res.text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 3;
    }
    out << res.text;
  }
  if (res.exit_code == 3) std::cerr << res.report.value("error", "invalid input") << "\n";
  return res.exit_code;
}
