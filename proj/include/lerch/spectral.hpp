#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "lerch/line_function.hpp"
#include "lerch/nilmanifold.hpp"
#include "lerch/scalar_lerch.hpp"

namespace lerch {

// Measure for Mellin inversion and Parseval along Re(s) = 1/2 with two-sided transforms.
inline constexpr double kMellinMeasure = 1.0 / (4.0 * std::numbers::pi);
// The dtau / (2 sqrt(2) pi) normalization, kept for comparison only.
inline constexpr double kAltMellinMeasure = 1.0 / (2.0 * std::numbers::sqrt2 * std::numbers::pi);

struct MellinValue {
    cplx value;
    double est_error = 0.0;
    bool divergent = false;
};

// integral f(x) sgn(x)^k |x|^{s-1} dx
MellinValue mellin(const LineFunction& f, int k, cplx s, double tol = 1e-12);

struct SpectralEntry {
    int k;
    double tau;
    cplx value;
};

struct SpectralSample {
    std::vector<SpectralEntry> entries;  // sorted by (k, tau)
    double step = 0.05;
    double measure = kMellinMeasure;
};

// M_k(f)(1/2 + i tau) for k in {0, 1}, tau = -T, -T + h, ..., T.
SpectralSample sample_mellin(const LineFunction& f, double T = 40.0, double h = 0.05);

// Trapezoid over tau of measure * [M_0 + sgn(x) M_1](1/2 + i tau) |x|^{-1/2 - i tau}.
cplx spectral_synthesis(const SpectralSample& samples, double x);
cplx spectral_synthesis(const SpectralSample& samples, double x, double measure);

cplx line_inner(const LineFunction& f, const LineFunction& g, double tol = 1e-14);

struct ParsevalReport {
    double line_norm_sq;
    double spectral_norm_sq;      // with kMellinMeasure
    double alt_spectral_norm_sq;  // with kAltMellinMeasure
};
ParsevalReport parseval_check(const LineFunction& f, double T = 40.0, double h = 0.05);

// x f'(x) + f(x) / 2
LineFunction line_D_apply(const LineFunction& f);

// |M_k(D f)(1/2 + i tau) + i tau M_k(f)(1/2 + i tau)|
double d_multiplier_residual(const LineFunction& f, int k, double tau);

enum class DeltaMode { exact, fd };

// normalized: (1 / (2 pi i N)) d_a d_c + c d_c + 1/2, eigenvalue -(s - 1/2) on L-functions.
// printed: (1 / (2 pi i)) d_a d_c + N c d_c + N / 2, which is N times the normalized one.
enum class DeltaForm { normalized, printed };

NilFunction delta_L_apply(const NilFunction& F, DeltaMode mode, double h = 1e-3,
                          DeltaForm form = DeltaForm::normalized);

// True when the fd stencil at (a, c) reaches within 2h of a line N a or N c in Z.
bool fd_near_singular(i64 N, double a, double c, double h);

// max over points of |Delta_L L + (s - 1/2) L| / max(|L|, 1), fd mode.
double delta_L_eigen_residual(const LerchPoint& p, const PointList& points, double h = 1e-3);

// n x n points at centres of the cells cut out by the lines N a, N c in Z.
PointList cell_centers(i64 N, int n = 3);

struct MellinRepresentation {
    cplx integral;       // t-integral of the bracketed Weil-Brezin combination
    cplx shifted_rhs;    // M_k(f)(s + 1/2) L^{(-1)^k}(s + 1/2, a, c)
    cplx half_rhs;       // M_k(f)(s) L^{(-1)^k}(s, a, c) / 2
};

// integral_0^inf [W(U(t) f)(a, c) + (-1)^k W(U(t) f)(-a, -c)] t^{s-1} dt for N = d = 1 and non-integral a, c.
// U(t) carries t^{1/2}, which moves the Mellin variable to s + 1/2.
MellinRepresentation mellin_integral_representation(const LineFunction& f, int k, cplx s, double a, double c);

}  // namespace lerch
