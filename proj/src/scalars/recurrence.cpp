#include "gj/scalars/recurrence.hpp"

#include "gj/error.hpp"

namespace gj {

namespace {

// Berlekamp-Massey over a field; returns the connection polynomial C with C[0] = 1.
std::vector<Cyclotomic> berlekamp_massey(const std::vector<Cyclotomic>& s, std::size_t n) {
  std::vector<Cyclotomic> c{Cyclotomic(1L)}, b{Cyclotomic(1L)};
  std::size_t len = 0, shift = 1;
  Cyclotomic bd(1L);
  for (std::size_t i = 0; i < n; ++i) {
    Cyclotomic d = s[i];
    for (std::size_t j = 1; j <= len && j < c.size(); ++j) {
      if (!c[j].is_zero()) d += c[j] * s[i - j];
    }
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    const Cyclotomic coef = d / bd;
    std::vector<Cyclotomic> t = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) c[j + shift] -= coef * b[j];
    }
    if (2 * len <= i) {
      len = i + 1 - len;
      b = std::move(t);
      bd = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(len + 1);
  return c;
}

}  // namespace

std::optional<Recurrence> find_recurrence(const std::vector<Cyclotomic>& seq, int r_max, int confirm) {
  if (r_max < 0 || confirm < 0 || static_cast<int>(seq.size()) < 2 * r_max + confirm) {
    throw EngineError(ErrorKind::InvalidInput, "sequence shorter than 2*r_max + confirm");
  }
  const std::size_t fit = seq.size() - static_cast<std::size_t>(confirm);
  const auto c = berlekamp_massey(seq, fit);
  const int order = static_cast<int>(c.size()) - 1;
  if (order > r_max || 2 * static_cast<std::size_t>(order) > fit) return std::nullopt;
  Recurrence rec;
  for (int j = 1; j <= order; ++j) rec.coefficients.push_back(-c[static_cast<std::size_t>(j)]);
  for (std::size_t i = static_cast<std::size_t>(order); i < seq.size(); ++i) {
    Cyclotomic pred;
    for (int j = 1; j <= order; ++j) pred += rec.coefficients[static_cast<std::size_t>(j - 1)] * seq[i - static_cast<std::size_t>(j)];
    if (pred != seq[i]) return std::nullopt;
  }
  return rec;
}

Recurrence detect_recurrence(const std::vector<Cyclotomic>& seq, int r_max, int confirm) {
  auto rec = find_recurrence(seq, r_max, confirm);
  if (!rec) throw EngineError(ErrorKind::NoRecurrence, "no recurrence of order <= " + std::to_string(r_max));
  return *rec;
}

std::pair<LaurentPoly, LaurentPoly> generating_function(const Recurrence& rec, const std::vector<Cyclotomic>& seq) {
  const int order = rec.order();
  if (static_cast<int>(seq.size()) < order) throw EngineError(ErrorKind::InvalidInput, "too few initial terms");
  std::vector<Cyclotomic> cc{Cyclotomic(1L)};
  for (const auto& x : rec.coefficients) cc.push_back(-x);
  std::vector<Cyclotomic> pc(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    Cyclotomic acc;
    for (int j = 0; j <= k; ++j) acc += cc[static_cast<std::size_t>(j)] * seq[static_cast<std::size_t>(k - j)];
    pc[static_cast<std::size_t>(k)] = acc;
  }
  return {LaurentPoly::from_coefficients(0, std::move(pc)), LaurentPoly::from_coefficients(0, std::move(cc))};
}

}  // namespace gj
