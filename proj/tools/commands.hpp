#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gj/archimedean/archimedean.hpp"
#include "gj/integrate/integrate.hpp"

namespace gj::cli {

struct RunSpec {
  std::string command;
  int p = 2;
  int n = 1;
  std::string chi = "trivial";
  std::vector<std::string> chis;  // verify-inverse; defaults to {chi}
  std::vector<std::string> phis;  // built-in names or JSON files
  std::vector<std::string> xs;    // verify-bk sample points
  std::string alpha;              // verify-inverse kernel exponent, e.g. "3/2"
  int epsilon = -1;
  int count = 200;                // fourier-selftest instances per (n, p)
  std::uint64_t seed = 1;
  int delta = 0;                  // arch-gamma character
  double tau = 0;
  std::vector<std::string> s_grid;
  std::string format = "json";
  IntegrationConfig cfg;
  QuadratureConfig qcfg;
};

struct RunResult {
  int exit_code = 0;
  nlohmann::json report;  // "meta" holds run-dependent data
  std::string text;       // what gets written out
};

RunResult run(const RunSpec& spec);

/// Report without its "meta" section, for determinism comparisons.
nlohmann::json strip_meta(nlohmann::json report);

// Exposed for tests.
SchwartzBruhatFn parse_phi(const std::string& text, int n, int p);
PAdicMatrix parse_point(const std::string& text, int n);
MultiplicativeCharacter parse_character(const std::string& text, int p);
std::vector<std::string> split_top_level(const std::string& text, char sep);

}  // namespace gj::cli
