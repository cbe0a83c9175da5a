#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "gj/integrate/smith.hpp"
#include "gj/scalars/big_rational.hpp"

namespace gj {

/// Distribution of det(D + p^L Y) for Y Haar-uniform on M_n(Z_p), D = diag(p^{e_i})
/// (e_i = L meaning a zero entry). hist[v * p^c + u] is the measure of Y with
/// v(det) = v and unit part = u mod p^c, for v <= vmax. Mass beyond vmax is dropped.
class DetProfile {
 public:
  using Hist = std::vector<BigRational>;
  using Exps = std::array<int, kMaxN>;

  DetProfile(int p, int n, int c, int vmax);

  const Hist& get(Exps exps, int L);
  int vmax() const { return vmax_; }
  long long residues() const { return pc_; }
  std::size_t size() const { return memo_.size(); }

 private:
  int p_, n_, c_, vmax_;
  long long pc_;
  BigRational cell_mass_;
  std::map<std::pair<Exps, int>, Hist> memo_;

  Hist compute(const Exps& exps, int L);
  Hist root();
  void add_children(const Exps& exps, int L, bool skip_zero, Hist& out);
};

}  // namespace gj
