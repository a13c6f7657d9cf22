#pragma once

#include <string>
#include <vector>

#include "lerch/characters.hpp"
#include "lerch/line_function.hpp"
#include "lerch/nilmanifold.hpp"

namespace lerch {

inline constexpr double kWbTol = 1e-14;

// "gaussian:t", "hermite1:t" or "bump:w"; throws std::invalid_argument for anything else.
LineFunction make_test_function(const std::string& name);
LineFunction gaussian(double t);
LineFunction hermite1(double t);
LineFunction bump(double w);

// Spot-checks |f| against its envelope at sampled points beyond the decay window.
bool decay_consistent(const LineFunction& f, double tol = 1e-10);

// sqrt(|N| / phi(d))
double wb_normalization(i64 N, i64 d);

// Twisted Weil-Brezin map: sqrt(C) sum_n chi(n d / N) f(n + N c) e^{2 pi i n a}.
NilFunction wb_map(const LineFunction& f, i64 N, i64 d, const DirichletCharacter& chi, double tol = kWbTol);
// Classical map, N = d = 1.
NilFunction wb_map(const LineFunction& f, double tol = kWbTol);

// Stored line function for backed F; quadrature inversion for unbacked F with N = 1.
LineFunction wb_inverse(const NilFunction& F);

// sum_n e^{2 pi i k n / N} f(n + N c) e^{2 pi i n a}
NilFunction additive_brezin(const LineFunction& f, i64 N, i64 k, double tol = kWbTol);

// x -> e^{2 pi i a x} f(x + lambda c) e^{2 pi i lambda z}
LineFunction schrodinger_act(const LineFunction& f, double lambda, const HeisenbergElement& h);

// x -> |t|^{1/2} f(t x)
LineFunction line_dilate(const LineFunction& f, double t);

// x -> f(m x), no normalization
LineFunction scale_argument(const LineFunction& f, double m);

LineFunction line_combine(const std::vector<std::pair<cplx, LineFunction>>& terms);

enum class FourierConvention {
    standard,  // integral f(x) e^{-2 pi i x y} dx
    printed    // (2 pi)^{-1/2} integral f(x) e^{+2 pi i x y} dx
};

struct FourierValue {
    cplx value;
    double est_error;
};

FourierValue fourier_transform(const LineFunction& f, double y,
                               FourierConvention conv = FourierConvention::standard, double tol = 1e-13);

// y -> fourier_transform(f, y) as a line function.
LineFunction fourier_line(const LineFunction& f, FourierConvention conv = FourierConvention::standard);

// Line functions f_k, 0 <= k < N, with F = sum_k W_N(psi_k)(f_k). Each value costs N^2 * nodes
// evaluations of F (midpoint Fourier coefficients in a). Needs N > 0.
std::vector<LineFunction> additive_components(const NilFunction& F, int nodes = 64);

// sum_k W_N(psi_k)(U(t) f_k) with f_k from additive_components; any F in H_N, N > 0.
NilFunction dilation_additive(const NilFunction& F, double t, int nodes = 64);

// W o U(t) o W^{-1}. Backed functions use their stored line function, others go through
// dilation_additive.
NilFunction dilation_on_nil(const NilFunction& F, double t);

}  // namespace lerch
