#include "gj/zeta/character.hpp"

#include <deque>
#include <numeric>
#include <regex>

#include "gj/error.hpp"

namespace gj {

namespace {

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long primitive_root(int p) {
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long d = 1; d < p - 1 && ok; ++d) {
      if ((p - 1) % d) continue;
      long long r = 1;
      for (long long i = 0; i < d; ++i) r = r * g % p;
      if (r == 1) ok = false;
    }
    if (ok) return g;
  }
  return 1;
}

}  // namespace

MultiplicativeCharacter MultiplicativeCharacter::trivial(int p) {
  MultiplicativeCharacter chi;
  chi.p_ = p;
  chi.label = "trivial";
  return chi;
}

MultiplicativeCharacter MultiplicativeCharacter::unramified(int p, const Cyclotomic& value_at_p) {
  if (value_at_p.is_zero()) throw EngineError(ErrorKind::InvalidInput, "chi(p) must be nonzero");
  MultiplicativeCharacter chi = trivial(p);
  chi.at_p_ = value_at_p;
  chi.label = "unramified";
  return chi;
}

MultiplicativeCharacter MultiplicativeCharacter::from_generators(int p, int conductor,
                                                                 const std::map<long long, Cyclotomic>& gens,
                                                                 const Cyclotomic& value_at_p) {
  if (conductor < 0 || conductor > 8) throw EngineError(ErrorKind::InvalidInput, "conductor exponent out of range");
  MultiplicativeCharacter chi = unramified(p, value_at_p);
  chi.label = "custom";
  if (conductor == 0) return chi;
  const long long mod = int_pow(p, conductor);
  std::vector<Cyclotomic> table(static_cast<std::size_t>(mod));
  std::vector<bool> seen(static_cast<std::size_t>(mod), false);
  std::map<long long, Cyclotomic> g;
  for (const auto& [raw, v] : gens) {
    const long long r = ((raw % mod) + mod) % mod;
    if (r % p == 0) throw EngineError(ErrorKind::InvalidInput, "generator is not a unit mod p^c");
    g[r] = v;
  }
  seen[1] = true;
  table[1] = Cyclotomic(1L);
  std::deque<long long> queue{1};
  while (!queue.empty()) {
    const long long u = queue.front();
    queue.pop_front();
    for (const auto& [r, v] : g) {
      const long long w = mulmod(u, r, mod);
      const Cyclotomic val = table[static_cast<std::size_t>(u)] * v;
      if (seen[static_cast<std::size_t>(w)]) {
        if (table[static_cast<std::size_t>(w)] != val) {
          throw EngineError(ErrorKind::InvalidInput, "unit table is not a homomorphism");
        }
        continue;
      }
      seen[static_cast<std::size_t>(w)] = true;
      table[static_cast<std::size_t>(w)] = val;
      queue.push_back(w);
    }
  }
  for (long long u = 0; u < mod; ++u) {
    if (u % p != 0 && !seen[static_cast<std::size_t>(u)]) {
      throw EngineError(ErrorKind::InvalidInput, "generators do not generate (Z/p^c)^x");
    }
  }
  // Minimal conductor: drop levels on which the table is trivial on 1 + p^{c-1}.
  int c = conductor;
  while (c > 0) {
    const long long sub = int_pow(p, c - 1);
    bool trivial_on_kernel = true;
    for (long long u = 1; u < mod && trivial_on_kernel; u += sub) {
      if (u % p != 0 && table[static_cast<std::size_t>(u)] != Cyclotomic(1L)) trivial_on_kernel = false;
    }
    if (!trivial_on_kernel) break;
    --c;
  }
  chi.c_ = c;
  chi.modulus_ = int_pow(p, c);
  chi.units_.assign(static_cast<std::size_t>(chi.modulus_), Cyclotomic());
  for (long long u = 0; u < chi.modulus_; ++u) {
    if (chi.modulus_ == 1 || u % p != 0) chi.units_[static_cast<std::size_t>(u)] = table[static_cast<std::size_t>(u % mod)];
  }
  if (chi.modulus_ == 1) chi.units_[0] = Cyclotomic(1L);
  for (const auto& [r, v] : g) chi.gens_[r % chi.modulus_] = v;
  return chi;
}

const Cyclotomic& MultiplicativeCharacter::unit_value(long long residue) const {
  return units_[static_cast<std::size_t>(((residue % modulus_) + modulus_) % modulus_)];
}

MultiplicativeCharacter MultiplicativeCharacter::inverse() const {
  MultiplicativeCharacter chi = *this;
  chi.at_p_ = at_p_.inverse();
  for (auto& v : chi.units_)
    if (!v.is_zero()) v = v.inverse();
  for (auto& [r, v] : chi.gens_) v = v.inverse();
  chi.label = label + "^-1";
  return chi;
}

MultiplicativeCharacter MultiplicativeCharacter::twisted_at_p(const Cyclotomic& factor) const {
  MultiplicativeCharacter chi = *this;
  chi.at_p_ *= factor;
  return chi;
}

Cyclotomic char_eval(const MultiplicativeCharacter& chi, const BigRational& x) {
  if (x == 0) throw EngineError(ErrorKind::ZeroArgument, "character evaluated at 0");
  const int p = chi.prime();
  const int v = valuation(x, p);
  Cyclotomic out = chi.value_at_p().pow(v);
  if (chi.conductor() > 0) {
    const BigRational u = x * prime_power(p, -v);
    out *= chi.unit_value(residue_mod_prime_power(u, p, chi.conductor()).get_si());
  }
  return out;
}

MultiplicativeCharacter contragredient_twist(const MultiplicativeCharacter& chi) { return chi.inverse(); }

MultiplicativeCharacter test_character(int p, const std::string& kind) {
  PAdicContext ctx(p);
  if (kind == "trivial") return MultiplicativeCharacter::trivial(p);
  if (kind == "unramified") {
    auto chi = MultiplicativeCharacter::unramified(p, p == 3 ? root_of_unity(3, 1, 1) : Cyclotomic::imaginary_unit());
    chi.label = p == 3 ? "unramified(chi(p)=zeta_3)" : "unramified(chi(p)=i)";
    return chi;
  }
  if (kind == "ramified") {
    MultiplicativeCharacter chi =
        p == 2 ? MultiplicativeCharacter::from_generators(2, 2, {{3, Cyclotomic(-1L)}}, Cyclotomic(1L))
               : MultiplicativeCharacter::from_generators(p, 1, {{primitive_root(p), Cyclotomic(-1L)}}, Cyclotomic(1L));
    chi.label = p == 2 ? "ramified(c=2, chi(-1)=-1)" : "ramified(c=1, quadratic)";
    return chi;
  }
  throw EngineError(ErrorKind::InvalidInput, "unknown character kind '" + kind + "'");
}

Cyclotomic parse_root_value(const std::string& text, int p) {
  static const std::regex root_re(R"(\s*root\s+(-?\d+)\s*/\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, root_re)) return Cyclotomic(parse_rational(text));
  const long long a = std::stoll(m[1]);
  const long long N = std::stoll(m[2]);
  if (N <= 0) throw EngineError(ErrorKind::InvalidInput, "root order must be positive");
  long long rest = N;
  int m_p = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m_p;
  }
  int m_2 = 0;
  if (p != 2) {
    while (rest % 2 == 0) {
      rest /= 2;
      ++m_2;
    }
  }
  if (rest != 1 || m_2 > 2 || m_p > 12) {
    throw EngineError(ErrorKind::InvalidInput, "root of unity of order " + std::to_string(N) + " is not available at p=" +
                                                   std::to_string(p));
  }
  if (m_2 == 0) return Cyclotomic::root(p, m_p, a);
  // CRT split: zeta_N^a = zeta_{N1}^{a x} zeta_{N2}^{a y} with x N2 + y N1 = 1.
  const long long N1 = int_pow(2, m_2), N2 = int_pow(p, m_p);
  long long x = 0;
  while ((x * N2) % N1 != 1 % N1) ++x;
  const long long y = (1 - x * N2) / N1;
  const Cyclotomic z1 = Cyclotomic::imaginary_unit().pow(((a * x) % N1 + N1) % N1 * (4 / N1));
  return z1 * Cyclotomic::root(p, m_p, a * y);
}

MultiplicativeCharacter character_from_json(const nlohmann::json& doc) {
  try {
    if (doc.is_string()) throw EngineError(ErrorKind::InvalidInput, "character document must be an object");
    const int p = doc.at("p").get<int>();
    PAdicContext ctx(p);
    const int c = doc.value("conductor_exp", 0);
    auto value_of = [&](const nlohmann::json& v) {
      return v.is_string() ? parse_root_value(v.get<std::string>(), p) : Cyclotomic(static_cast<long>(v.get<long long>()));
    };
    const Cyclotomic at_p = doc.contains("value_at_p") ? value_of(doc.at("value_at_p")) : Cyclotomic(1L);
    std::map<long long, Cyclotomic> gens;
    if (doc.contains("unit_table")) {
      for (const auto& [k, v] : doc.at("unit_table").items()) gens[std::stoll(k)] = value_of(v);
    }
    if (c > 0 && gens.empty()) throw EngineError(ErrorKind::InvalidInput, "ramified character needs a unit_table");
    return MultiplicativeCharacter::from_generators(p, c, gens, at_p);
  } catch (const nlohmann::json::exception& e) {
    throw EngineError(ErrorKind::InvalidInput, std::string("malformed character: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw EngineError(ErrorKind::InvalidInput, "malformed character generator");
  }
}

nlohmann::json to_json(const MultiplicativeCharacter& chi) {
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [r, v] : chi.generators()) table[std::to_string(r)] = v.to_string();
  return {{"p", chi.prime()}, {"conductor_exp", chi.conductor()}, {"value_at_p", chi.value_at_p().to_string()},
          {"unit_table", table}, {"label", chi.label}};
}

}  // namespace gj
