#include "gj/error.hpp"
#include "gj/schwartz/schwartz.hpp"

namespace gj {

namespace {

BigRational rational_field(const nlohmann::json& v) {
  if (v.is_number_integer()) return BigRational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw EngineError(ErrorKind::InvalidInput, "expected a rational string, got " + v.dump());
}

nlohmann::json rational_list(const std::vector<BigRational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace

nlohmann::json cyclotomic_to_json(const Cyclotomic& c, int p) {
  if (c.prime() != 0) {
    nlohmann::json out{{"level", c.level()}, {"coeffs", rational_list(c.coefficients())}};
    if (c.prime() != 2 && !std::all_of(c.i_coefficients().begin(), c.i_coefficients().end(),
                                       [](const BigRational& x) { return x == 0; })) {
      out["i_coeffs"] = rational_list(c.i_coefficients());
    }
    return out;
  }
  const BigRational re = c.coefficients()[0], im = c.i_coefficients()[0];
  if (im == 0) return {{"level", 0}, {"coeffs", rational_list({re})}};
  if (p == 2) return {{"level", 2}, {"coeffs", rational_list({re, im})}};
  return {{"level", 0}, {"coeffs", rational_list({re})}, {"i_coeffs", rational_list({im})}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& doc, int p) {
  if (doc.is_string() || doc.is_number_integer()) return Cyclotomic(rational_field(doc));
  if (!doc.is_object() || !doc.contains("coeffs")) throw EngineError(ErrorKind::InvalidInput, "coefficient must be {level, coeffs}");
  const int level = doc.value("level", 0);
  if (level < 0 || level > 12) throw EngineError(ErrorKind::InvalidInput, "coefficient level out of range");
  std::vector<BigRational> re, im;
  for (const auto& x : doc.at("coeffs")) re.push_back(rational_field(x));
  if (doc.contains("i_coeffs"))
    for (const auto& x : doc.at("i_coeffs")) im.push_back(rational_field(x));
  const auto limit = static_cast<std::size_t>(int_pow(p, level));
  if (re.size() > limit || im.size() > limit) throw EngineError(ErrorKind::InvalidInput, "too many coefficients for level");
  Cyclotomic out = Cyclotomic::from_group_ring(p, level, re);
  if (!im.empty()) out += Cyclotomic::imaginary_unit() * Cyclotomic::from_group_ring(p, level, im);
  return out;
}

nlohmann::json matrix_to_json(const PAdicMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

PAdicMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw EngineError(ErrorKind::InvalidInput, "matrix must be an array of rows");
  std::vector<std::vector<BigRational>> rows;
  for (const auto& r : doc) {
    if (!r.is_array()) throw EngineError(ErrorKind::InvalidInput, "matrix row must be an array");
    std::vector<BigRational> row;
    for (const auto& x : r) row.push_back(rational_field(x));
    rows.push_back(std::move(row));
  }
  return PAdicMatrix::from_rows(rows);
}

nlohmann::json to_json(const SchwartzBruhatFn& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"coeff", cyclotomic_to_json(t.coeff, f.prime())},
                     {"center", matrix_to_json(t.center)},
                     {"level", t.level},
                     {"modulation", matrix_to_json(t.modulation)}});
  }
  return {{"n", f.n()}, {"p", f.prime()}, {"terms", terms}};
}

SchwartzBruhatFn schwartz_from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const int p = doc.at("p").get<int>();
    if (n < 1 || n > 4) throw EngineError(ErrorKind::InvalidInput, "n must be in 1..4");
    PAdicContext ctx(p);
    std::vector<SchwartzTerm> terms;
    for (const auto& t : doc.at("terms")) {
      SchwartzTerm term;
      term.coeff = t.contains("coeff") ? cyclotomic_from_json(t.at("coeff"), p) : Cyclotomic(1L);
      term.center = t.contains("center") ? matrix_from_json(t.at("center")) : PAdicMatrix(n);
      term.level = t.value("level", 0);
      term.modulation = t.contains("modulation") ? matrix_from_json(t.at("modulation")) : PAdicMatrix(n);
      if (term.center.size() != n || term.modulation.size() != n) {
        throw EngineError(ErrorKind::InvalidInput, "term matrices must be n x n");
      }
      terms.push_back(std::move(term));
    }
    return SchwartzBruhatFn(n, p, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw EngineError(ErrorKind::InvalidInput, std::string("malformed Schwartz function: ") + e.what());
  }
}

}  // namespace gj
