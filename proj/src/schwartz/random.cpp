#include "gj/schwartz/schwartz.hpp"

namespace gj {

namespace {

BigRational random_entry(std::mt19937_64& rng, int p, int bound) {
  std::uniform_int_distribution<int> num(-6, 6), e(-bound, bound);
  BigRational x(num(rng), 1);
  x *= prime_power(p, e(rng));
  x.canonicalize();
  return x;
}

PAdicMatrix random_matrix(std::mt19937_64& rng, int n, int p, int bound) {
  std::vector<BigRational> e;
  for (int i = 0; i < n * n; ++i) e.push_back(random_entry(rng, p, bound));
  return PAdicMatrix(n, e);
}

}  // namespace

SchwartzBruhatFn random_schwartz(int n, int p, std::mt19937_64& rng, int max_terms, int level_bound) {
  std::uniform_int_distribution<int> terms(1, max_terms), lev(-level_bound, level_bound), a(0, 15), c(-3, 3);
  std::vector<SchwartzTerm> ts;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    SchwartzTerm term;
    term.coeff = Cyclotomic(static_cast<long>(c(rng))) + root_of_unity(p, 2, a(rng));
    term.level = lev(rng);
    term.center = random_matrix(rng, n, p, level_bound);
    term.modulation = random_matrix(rng, n, p, level_bound);
    ts.push_back(std::move(term));
  }
  return SchwartzBruhatFn(n, p, std::move(ts));
}

}  // namespace gj
