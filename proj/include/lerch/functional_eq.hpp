#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lerch/characters.hpp"
#include "lerch/line_function.hpp"
#include "lerch/nilmanifold.hpp"
#include "lerch/scalar_lerch.hpp"

namespace lerch {

struct DecompositionBlock {
    DirichletCharacter chi;  // primitive, modulus == conductor
    i64 conductor = 1;
    std::vector<i64> members;  // d with conductor | d | |N|
};

struct DecompositionIndex {
    i64 N = 1;
    std::vector<DecompositionBlock> blocks;
    // Sum over blocks and members of the number of characters mod d with that core.
    i64 dimension_count() const;
};

DecompositionIndex coarse_decomposition(i64 N);

// Which version of the two constant-bearing identities to check.
//  printed:   carries chi(-1); the functional equation has no sqrt(phi(d)/phi(dt)).
//  corrected: no chi(-1); the functional equation carries sqrt(phi(d)/phi(dt)).
enum class IdentityForm { printed, corrected };

std::string to_string(IdentityForm form);

// ((i + offset)/n, (j + offset)/n) for 0 <= i, j < n.
PointList offset_grid(int n, double offset = 0.137);

// Right-hand side of the R-intertwining applied to f.
NilFunction intertwine_rhs(i64 N, i64 d, const DirichletCharacter& primitive_chi, const LineFunction& f,
                           IdentityForm form);

// sup over grid of |R(W_{N,d}(chi|_d) f) - rhs|
double intertwine_residual(i64 N, i64 d, const DirichletCharacter& primitive_chi, const LineFunction& f,
                           const PointList& grid, IdentityForm form);

struct FeResidual {
    double absolute = 0.0;
    double relative = 0.0;  // absolute / max(max |LHS|, 1)
};

// LHS e^{-2 pi i N a c} L_{N,d}(chi|_d, 1-s, -c, a) against the d-tilde sum at s.
FeResidual fe_residual(int sign, i64 N, i64 d, const DirichletCharacter& primitive_chi, cplx s,
                       const PointList& points, IdentityForm form);

struct GramReport {
    std::vector<std::string> labels;
    std::vector<std::vector<cplx>> matrix;
    double max_off_diagonal = 0.0;
    double max_diagonal_error = 0.0;  // |G_ii - ||f||^2|
};

// Gram matrix of W_{N,d}(chi) f over all d | |N| and chi mod d.
GramReport decomposition_gram(i64 N, const LineFunction& f, double f_norm_sq, const QuadratureSpec& q = {});

struct BlockLeak {
    std::size_t block = 0;
    i64 member = 1;
    std::size_t target = 0;  // block of the conjugate character
    double leak = 0.0;       // relative mass projected onto the other blocks
    double captured = 0.0;   // relative mass projected onto the target block
};

struct PermutationReport {
    std::vector<BlockLeak> entries;
    double max_leak = 0.0;
};

PermutationReport r_permutes_coarse_blocks(i64 N, const LineFunction& f, const QuadratureSpec& q = {});

// max over m and points of |T_m L - chi(m) m^{-s} L| / max(|L|, 1); chi is the character mod d.
double hecke_eigen_residual(int sign, i64 N, i64 d, const DirichletCharacter& chi, cplx s,
                            const std::vector<i64>& ms, const PointList& points);

struct AdjointEigenReport {
    cplx fitted;                     // least-squares T_m* L / L
    cplx reciprocal;                 // conj(chi)(m) m^{-(1-s)}
    cplx printed;                    // conj(chi)(m) m^{1-s}
    double residual_reciprocal = 0.0;
    double residual_printed = 0.0;
    double product_residual = 0.0;   // T_m* T_m L = L / m
};

AdjointEigenReport adjoint_hecke_eigen_residual(int sign, i64 N, i64 d, const DirichletCharacter& chi, cplx s,
                                                i64 m, const PointList& points);

inline const PointList kSeedPoints = {{0.3, 0.7}, {0.45, 0.2}, {0.8, 0.35}};
inline constexpr double kSeedNudge = 0.0371;
inline constexpr double kSeedMargin = 0.02;

struct SeededPoints {
    PointList points;
    std::vector<std::string> notes;  // one line per nudged point
};

// Seed points moved off every lattice line touched by L, T_m, T_m* (m in ms) and R.
SeededPoints seeded_points(i64 N, const std::vector<i64>& ms);

}  // namespace lerch
