#pragma once

#include <array>
#include <complex>

#include "lerch/arith.hpp"

// Every default used by the verification suites, the CLI and the acceptance run.
namespace lerch::defaults {

using cplx = std::complex<double>;

// Tolerances
inline constexpr double kGaussSumTol = 1e-10;
inline constexpr double kScalarTol = 1e-9;
inline constexpr double kHeckeEigenTol = 1e-8;
inline constexpr double kFeTol = 1e-6;
inline constexpr double kIntertwineTol = 1e-6;
inline constexpr double kExactOperatorTol = 1e-12;  // T_m T_n, R^4, J, T_{-m}
inline constexpr double kOperatorTol = 1e-9;
inline constexpr double kNonNormalGap = 0.01;      // lower bound, not a tolerance
inline constexpr double kQuadratureTol = 1e-6;     // inner products, norms, isometry, Gram
inline constexpr double kLeakTol = 1e-5;
inline constexpr double kMultiplierTol = 1e-6;
inline constexpr double kMellinGammaTol = 1e-8;
inline constexpr double kSynthesisTol = 1e-4;
inline constexpr double kDeltaTol = 1e-4;
inline constexpr double kDeltaStep = 1e-3;
inline constexpr double kRatioLow = 3.5;
inline constexpr double kRatioHigh = 4.5;
inline constexpr double kDilationCommuteTol = 1e-6;  // Delta_L o V(t)
inline constexpr double kMellinRepTol = 1e-6;

// Grids
inline constexpr int kSupGrid = 8;         // sup_difference grid, offset 0.137
inline constexpr int kIntertwineGrid = 5;
inline constexpr int kQuadNodes = 128;     // midpoint rule per axis
inline constexpr int kDeltaGrid = 3;       // cell_centers(N, 3)
inline constexpr int kComponentNodes = 64; // additive_components

// Spectral ranges
inline constexpr int kMultiplierPoints = 20;  // tau = -4.75, -4.25, ..., 4.75
inline constexpr double kMultiplierStart = -4.75;
inline constexpr double kMultiplierStep = 0.5;
inline constexpr double kSynthesisT = 40.0;
inline constexpr double kSynthesisStep = 0.05;
inline constexpr std::array<double, 5> kSynthesisX = {-1.3, -0.4, 0.25, 0.7, 1.6};
inline constexpr std::array<double, 2> kDeltaTaus = {0.0, 1.3};
inline constexpr double kSpectrumStep = 0.5;

// Evaluation points
inline constexpr std::array<cplx, 2> kFeS = {cplx(0.4, 0.9), cplx(0.5, 1.3)};
inline constexpr std::array<cplx, 2> kHeckeS = {cplx(0.5, 0.0), cplx(0.5, 1.3)};
inline constexpr std::array<i64, 4> kHeckeMs = {2, 3, 5, 7};
inline constexpr double kDilationT = 1.7;
inline constexpr cplx kMellinRepS = {2.0, 0.0};
inline constexpr double kMellinRepA = 0.3;
inline constexpr double kMellinRepC = 0.7;
inline constexpr std::array<double, 3> kCommutationH = {0.1, 0.2, 0.05};

// Default level per suite
inline constexpr i64 kSuiteN = 1;            // fe, hecke, intertwine, spectral
inline constexpr i64 kOperatorsN = 4;
inline constexpr i64 kDecompositionN = 6;
inline constexpr i64 kAdditiveN = 5;

}  // namespace lerch::defaults
