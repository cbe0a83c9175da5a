#include "gj/archimedean/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace gj {

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[static_cast<std::size_t>(i)] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  return std::sqrt(2 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::complex<double> gamma_R(std::complex<double> s) {
  return std::pow(std::numbers::pi, -s / 2.0) * complex_gamma(s / 2.0);
}

}  // namespace gj
