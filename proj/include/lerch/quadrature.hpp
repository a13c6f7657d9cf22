#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace lerch {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value;
    double error;  // difference of the last two refinement levels
    int evaluations;
};

// Double-exponential rule on [0, inf); f must decay at infinity.
QuadResult exp_sinh(const std::function<cplx(double)>& f, double rel_tol = 1e-13, int max_level = 9);

// Double-exponential rule on [a, b]; tolerates integrable endpoint singularities.
QuadResult tanh_sinh(const std::function<cplx(double)>& f, double a, double b, double rel_tol = 1e-13,
                     int max_level = 9);

struct GaussRule {
    std::vector<double> nodes;    // on [0, 1]
    std::vector<double> weights;  // sum to 1
};
const GaussRule& gauss_legendre(int n);

}  // namespace lerch
