#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lerch/spectral.hpp"
#include "lerch/weil_brezin.hpp"

using namespace lerch;

namespace {

constexpr double kPi = std::numbers::pi;

// e^{-pi (x + 0.3)^2}: no parity, so both Mellin components are nonzero.
LineFunction shifted_gaussian() { return schrodinger_act(gaussian(1.0), 1.0, {0.0, 0.3, 0.0}); }

}  // namespace

TEST_CASE("Mellin transform of a shifted Gaussian") {
    const LineFunction f = shifted_gaussian();
    // mpmath quad at 25 digits
    CHECK(std::abs(mellin(f, 0, {0.5, 1.3}).value - cplx(-0.07938418442500799, -0.7004606642095858)) < 1e-10);
    CHECK(std::abs(mellin(f, 1, {0.5, 1.3}).value - cplx(-0.2255940284255784, 0.5052674542197585)) < 1e-10);
    CHECK(std::abs(mellin(f, 0, 2.0).value - 0.4042969711608165) < 1e-10);
    // k = 1, s = 2 is the first moment, -0.3
    CHECK(std::abs(mellin(f, 1, 2.0).value + 0.3) < 1e-10);
}

TEST_CASE("Mellin transforms of parity functions") {
    // odd part vanishes for even f and vice versa
    CHECK(std::abs(mellin(gaussian(1.0), 1, {0.5, 0.7}).value) < 1e-14);
    CHECK(std::abs(mellin(hermite1(1.0), 0, {0.5, 0.7}).value) < 1e-14);
    // pi^{-s/2} Gamma(s/2) at s = 1: Gamma(1/2) / sqrt(pi) = 1
    CHECK(std::abs(mellin(gaussian(1.0), 0, 1.0).value - 1.0) < 1e-12);
}

TEST_CASE("D acts on the Mellin line by -i tau") {
    const LineFunction f = shifted_gaussian();
    for (double tau : {-3.1, 0.0, 0.8, 4.4})
        for (int k : {0, 1}) CHECK(d_multiplier_residual(f, k, tau) < 1e-9);
    // D f = x f' + f / 2 pointwise
    const LineFunction Dg = line_D_apply(gaussian(1.0));
    for (double x : {-0.7, 0.2, 1.3})
        CHECK(std::abs(Dg(x) - (0.5 - 2.0 * kPi * x * x) * std::exp(-kPi * x * x)) < 1e-14);
}

TEST_CASE("spectral synthesis and Parseval") {
    const LineFunction f = shifted_gaussian();
    const SpectralSample sm = sample_mellin(f);
    for (double x : {-1.1, -0.35, 0.4, 1.2}) CHECK(std::abs(spectral_synthesis(sm, x) - f(x)) < 1e-4);
    ParsevalReport p = parseval_check(f);
    CHECK(std::abs(p.line_norm_sq - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(p.spectral_norm_sq - p.line_norm_sq) < 1e-6);
    // the 1/(2 sqrt2 pi) measure overshoots by sqrt2
    CHECK(std::abs(p.alt_spectral_norm_sq / p.spectral_norm_sq - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("line inner product") {
    CHECK(std::abs(line_inner(gaussian(1.0), gaussian(2.0)) - 1.0 / std::sqrt(3.0)) < 1e-13);
    CHECK(std::abs(line_inner(gaussian(1.0), hermite1(1.0))) < 1e-14);
}

TEST_CASE("Delta_L: exact and finite-difference modes") {
    NilFunction F = wb_map(hermite1(1.0));
    NilFunction ex = delta_L_apply(F, DeltaMode::exact);
    double e1 = sup_difference(ex, delta_L_apply(F, DeltaMode::fd, 1e-3));
    double e2 = sup_difference(ex, delta_L_apply(F, DeltaMode::fd, 5e-4));
    CHECK(e1 < 1e-4);
    CHECK(std::abs(e1 / e2 - 4.0) < 0.1);
    // exact mode is W o D
    CHECK(sup_difference(ex, wb_map(line_D_apply(hermite1(1.0)))) < 1e-12);
}

TEST_CASE("Delta_L normalization at level N") {
    const auto chars = enumerate_characters(3);
    NilFunction F = wb_map(gaussian(1.0), 3, 3, chars[1]);
    NilFunction ex = delta_L_apply(F, DeltaMode::exact);
    CHECK(sup_difference(ex, wb_map(line_D_apply(gaussian(1.0)), 3, 3, chars[1])) < 1e-12);
    NilFunction fd = delta_L_apply(F, DeltaMode::fd, 1e-4);
    CHECK(sup_difference(ex, fd) < 1e-5);
    NilFunction printed = delta_L_apply(F, DeltaMode::fd, 1e-4, DeltaForm::printed);
    CHECK(sup_difference(printed, combine({{3.0, fd}})) < 1e-9);
}

TEST_CASE("Lerch L-functions are Delta_L eigenfunctions") {
    LerchPoint p;
    p.s = {0.5, 1.3};
    for (int sign : {1, -1}) {
        p.sign = sign;
        double r1 = delta_L_eigen_residual(p, cell_centers(1), 1e-3);
        double r2 = delta_L_eigen_residual(p, cell_centers(1), 5e-4);
        CHECK(r1 < 1e-4);
        CHECK(std::abs(r1 / r2 - 4.0) < 0.5);
    }
    p.N = 4;
    p.d = 4;
    p.chi = enumerate_characters(4)[1];
    CHECK(delta_L_eigen_residual(p, cell_centers(4), 1e-3 / 4.0) < 1e-4);
}

TEST_CASE("cell centres stay off singular lines") {
    for (i64 N : {1, 5, -6}) {
        PointList pts = cell_centers(N, 3);
        CHECK(pts.size() == 9);
        for (auto [a, c] : pts) CHECK_FALSE(fd_near_singular(N, a, c, 1e-3));
    }
    CHECK(fd_near_singular(1, 0.001, 0.5, 1e-3));
    CHECK(fd_near_singular(5, 0.3, 0.4005, 1e-3));
}

TEST_CASE("Mellin integral representation picks up a half shift") {
    for (int k : {0, 1}) {
        const LineFunction f = k == 0 ? gaussian(1.0) : hermite1(1.0);
        for (cplx s : {cplx(2.0, 0.0), cplx(1.6, 0.8)}) {
            MellinRepresentation r = mellin_integral_representation(f, k, s, 0.3, 0.7);
            CHECK(std::abs(r.integral - r.shifted_rhs) < 1e-9 * std::max(1.0, std::abs(r.integral)));
            CHECK(std::abs(r.integral - r.half_rhs) > 0.1);
        }
    }
    // theta decays at both ends for non-integral (a, c), so the identity continues below Re(s) = 1/2
    MellinRepresentation low = mellin_integral_representation(gaussian(1.0), 0, {0.3, 0.4}, 0.3, 0.7);
    CHECK(std::abs(low.integral - low.shifted_rhs) < 1e-9);
}
