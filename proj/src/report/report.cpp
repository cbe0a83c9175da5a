#include "gj/report/report.hpp"

#include <cstdint>
#include <cstdio>

namespace gj {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Verdict worst(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 1;
}

nlohmann::json to_json(const Windows& w) {
  return {{"k_range", {w.k_lo, w.k_hi}}, {"m_range", {w.m_lo, w.m_hi}}};
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["parameters"] = parameters;
  j["verdict"] = to_string(verdict);
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["windows"] = gj::to_json(windows);
  j["cells_enumerated"] = windows.cells;
  if (!notes.empty()) j["notes"] = notes;
  if (!details.empty()) j["details"] = details;
  return j;
}

std::string fingerprint(const nlohmann::json& doc) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gj
