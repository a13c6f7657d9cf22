#pragma once

#include <complex>

namespace lerch {

using cplx = std::complex<double>;

// Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
cplx complex_lgamma(cplx z);
cplx complex_gamma(cplx z);

// B_{2k} / (2k)! for 1 <= k <= 60.
double bernoulli_ratio(int k);

}  // namespace lerch
