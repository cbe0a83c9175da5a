#pragma once

#include <complex>

namespace gj {

/// Complex Gamma (Lanczos, g = 7), about 15 significant digits away from poles.
std::complex<double> complex_gamma(std::complex<double> z);

/// Gamma_R(s) = pi^{-s/2} Gamma(s/2).
std::complex<double> gamma_R(std::complex<double> s);

}  // namespace gj
