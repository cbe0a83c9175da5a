#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gj/integrate/integrate.hpp"

namespace gj {

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);
/// Pass < Inconclusive < Fail.
Verdict worst(Verdict a, Verdict b);
int exit_code(Verdict v);

struct Report {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::Pass;
  nlohmann::json lhs;
  nlohmann::json rhs;
  Windows windows;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
};

nlohmann::json to_json(const Windows& w);

/// 64-bit FNV-1a of a canonical JSON dump, as hex.
std::string fingerprint(const nlohmann::json& doc);

}  // namespace gj
