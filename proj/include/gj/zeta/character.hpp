#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gj/padic/padic.hpp"

namespace gj {

/// Character of Q_p^x: chi(p^v u) = value_at_p^v * unit_value(u mod p^c).
class MultiplicativeCharacter {
 public:
  static MultiplicativeCharacter trivial(int p);
  static MultiplicativeCharacter unramified(int p, const Cyclotomic& value_at_p);
  /// Unit values generated from images of generators of (Z/p^c)^x; throws
  /// InvalidInput if the assignment is not a homomorphism or does not cover the group.
  static MultiplicativeCharacter from_generators(int p, int conductor, const std::map<long long, Cyclotomic>& gens,
                                                 const Cyclotomic& value_at_p);

  int prime() const { return p_; }
  int conductor() const { return c_; }
  long long modulus() const { return modulus_; }
  const Cyclotomic& value_at_p() const { return at_p_; }
  /// chi on a unit residue mod p^c; residue must be a unit.
  const Cyclotomic& unit_value(long long residue) const;
  const std::vector<Cyclotomic>& unit_values() const { return units_; }
  const std::map<long long, Cyclotomic>& generators() const { return gens_; }

  MultiplicativeCharacter inverse() const;
  /// chi * |.|^{s0}-style twist: value_at_p multiplied by factor.
  MultiplicativeCharacter twisted_at_p(const Cyclotomic& factor) const;
  bool is_unramified() const { return c_ == 0; }
  std::string label;

 private:
  int p_ = 2;
  int c_ = 0;
  long long modulus_ = 1;
  Cyclotomic at_p_{1L};
  std::vector<Cyclotomic> units_{Cyclotomic(1L)};
  std::map<long long, Cyclotomic> gens_;
};

/// Throws EngineError(ZeroArgument) on x = 0.
Cyclotomic char_eval(const MultiplicativeCharacter& chi, const BigRational& x);
MultiplicativeCharacter contragredient_twist(const MultiplicativeCharacter& chi);

/// Test characters: "trivial", "unramified" (chi(p) = zeta_3 for p = 3, zeta_4 otherwise
/// when p != 3), "ramified" (minimal conductor, order 2 on units).
MultiplicativeCharacter test_character(int p, const std::string& kind);

/// e^{2 pi i a / N} from "root a/N" (N must divide 4 p^m), or a rational.
Cyclotomic parse_root_value(const std::string& text, int p);

/// {p, conductor_exp, unit_table:{generator:"root a/N"}, value_at_p}.
MultiplicativeCharacter character_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const MultiplicativeCharacter& chi);

}  // namespace gj
