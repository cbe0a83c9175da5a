// Serial reference kernel vs the bucketed OpenMP kernel on fixed workloads.
#include <omp.h>

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "gj/integrate/shell.hpp"

using namespace gj;

namespace {

struct Workload {
  std::string name;
  SchwartzBruhatFn f;
  MultiplicativeCharacter chi;
  int k_hi;
  bool run_reference;
};

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SchwartzBruhatFn psi_ball(int n, int p, int m) {
  return SchwartzBruhatFn::modulated_ball(PAdicMatrix::identity(n), p, -m);
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::vector<Workload> loads{
      {"n=1 p=3 psi m=4 ramified", psi_ball(1, 3, 4), test_character(3, "ramified"), 6, true},
      {"n=2 p=2 unit ball", SchwartzBruhatFn::ball(2, 2, 0), test_character(2, "trivial"), 3, true},
      {"n=2 p=2 psi m=2", psi_ball(2, 2, 2), test_character(2, "trivial"), 2, !quick},
      {"n=2 p=3 unit ball", SchwartzBruhatFn::ball(2, 3, 0), test_character(3, "trivial"), 2, !quick},
      {"n=2 p=2 psi m=4", psi_ball(2, 2, 4), test_character(2, "trivial"), 6, false},
      {"n=2 p=3 psi m=2", psi_ball(2, 3, 2), test_character(3, "unramified"), 4, false},
  };
  if (quick) loads.erase(loads.begin() + 3, loads.end());
  const int max_threads = omp_get_max_threads();
  std::cout << "workload, reference_s, kernel_s(threads=1), kernel_s(threads=" << max_threads << "), agree\n";
  int rc = 0;
  for (const auto& w : loads) {
    ShellValues ref, one, many;
    double t_ref = -1;
    if (w.run_reference) t_ref = seconds([&] { ref = shell_values_reference(w.f, w.chi, w.k_hi, {200'000'000, 0}); });
    const double t1 = seconds([&] { one = shell_values(w.f, w.chi, w.k_hi, {10'000'000, 1}); });
    const double tn = seconds([&] { many = shell_values(w.f, w.chi, w.k_hi, {10'000'000, max_threads}); });
    bool agree = one.values == many.values && (!w.run_reference || (ref.k_lo == one.k_lo && ref.values == one.values));
    if (!agree) rc = 1;
    std::cout << w.name << ", " << (t_ref < 0 ? std::string("skipped") : std::to_string(t_ref)) << ", " << t1 << ", "
              << tn << ", " << (agree ? "yes" : "NO") << "\n";
  }
  return rc;
}
