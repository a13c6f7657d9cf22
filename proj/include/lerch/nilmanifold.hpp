#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lerch/characters.hpp"
#include "lerch/line_function.hpp"
#include "lerch/scalar_lerch.hpp"

namespace lerch {

inline constexpr int kDefaultDepthCap = 16;

using PointList = std::vector<std::pair<double, double>>;

// Provenance of a function that came out of a Weil-Brezin map.
struct Backing {
    enum class Kind { multiplicative, additive };
    Kind kind = Kind::multiplicative;
    LineFunction f;
    i64 N = 1;
    i64 d = 1;
    DirichletCharacter chi = principal_character(1);
    i64 k = 0;  // additive character index
};

// Element of H_N given by F(a, c, 0) on all of R^2.
class NilFunction {
public:
    using BaseEval = std::function<cplx(double, double)>;

    // Checks twisted periodicity on 64 random points; throws std::invalid_argument above 1e-6.
    NilFunction(i64 N, BaseEval base, std::string label = "");

    // Skips the periodicity check. Used by operators that preserve H_N.
    static NilFunction trusted(i64 N, BaseEval base, std::string label, int depth,
                               std::shared_ptr<const Backing> backing = nullptr);

    i64 central_index() const { return N_; }
    cplx base(double a, double c) const { return (*base_)(a, c); }
    cplx operator()(double a, double c, double z) const;
    const std::string& label() const { return label_; }
    int depth() const { return depth_; }
    const Backing* backing() const { return backing_.get(); }
    std::shared_ptr<const Backing> backing_ptr() const { return backing_; }

private:
    NilFunction() = default;
    i64 N_ = 1;
    std::shared_ptr<const BaseEval> base_;
    std::string label_;
    int depth_ = 0;
    std::shared_ptr<const Backing> backing_;
};

// Max relative deviation from F(a+1,c) = F(a,c) and F(a,c+1) = e^{-2 pi i N a} F(a,c).
double periodicity_defect(const NilFunction& F, int samples = 64, std::uint64_t seed = 12345);

struct QuadratureSpec {
    enum class Rule { midpoint, gauss_legendre };
    Rule rule = Rule::midpoint;
    int nodes_a = 128;
    int nodes_c = 128;

    static QuadratureSpec midpoint(int n = 128) { return {Rule::midpoint, n, n}; }
    static QuadratureSpec gauss(int n = 64) { return {Rule::gauss_legendre, n, n}; }
};

// Values of F(a, c, 0) on the nodes of q, row-major in a, with matching weights.
struct GridSamples {
    i64 N = 0;
    std::vector<cplx> values;
    std::vector<double> weights;
};
GridSamples sample_grid(const NilFunction& F, const QuadratureSpec& q = {});
cplx grid_inner(const GridSamples& F, const GridSamples& G);

cplx inner_product(const NilFunction& F, const NilFunction& G, const QuadratureSpec& q = {});
double norm(const NilFunction& F, const QuadratureSpec& q = {});

using HeisenbergElement = std::array<double, 3>;  // [a, c, z]

HeisenbergElement group_mul(const HeisenbergElement& g, const HeisenbergElement& h);

NilFunction heisenberg_act(const NilFunction& F, const HeisenbergElement& h);
NilFunction hecke(const NilFunction& F, i64 m);
NilFunction hecke_adjoint(const NilFunction& F, i64 m);
NilFunction r_op(const NilFunction& F);
NilFunction r_inv(const NilFunction& F);
NilFunction j_op(const NilFunction& F);

// Pointwise linear combination; all terms must share the central index.
NilFunction combine(const std::vector<std::pair<cplx, NilFunction>>& terms, std::string label = "");

// beta(t)[a, c, z] = [a / t, t c, z]
HeisenbergElement beta(double t, const HeisenbergElement& h);

struct CommutationResidual {
    double hecke = 0.0;    // rho_h T_m - T_m rho_{beta(m)h}
    double adjoint = 0.0;  // rho_h T_m* - T_m* rho_{beta(1/m)h}
};
CommutationResidual hecke_heisenberg_commutation_check(const NilFunction& F, const HeisenbergElement& h, i64 m,
                                                       int grid = 8);

// Sup of |F - G| over the n x n grid {((i + offset)/n, (j + offset)/n)}.
double sup_difference(const NilFunction& F, const NilFunction& G, int grid = 8, double offset = 0.137);

// CSV rows a,c,re,im on the n x n grid {i/n}.
void write_grid_csv(const NilFunction& F, int n, std::ostream& out);

}  // namespace lerch

namespace lerch {

// (a, c) -> lerch_l at the point with z = 0; p.a, p.c and p.z are ignored.
NilFunction lerch_nil(const LerchPoint& p, double tol = kDefaultTol);

}  // namespace lerch
