#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lerch/defaults.hpp"
#include "lerch/functional_eq.hpp"

namespace lerch {

// One identity check. Witness checks pass when value > bound; all others when value < bound.
struct Check {
    std::string identity;
    nlohmann::json parameters = nlohmann::json::object();
    double value = 0.0;
    double bound = 0.0;
    bool witness = false;

    bool pass() const { return witness ? value > bound : value < bound; }
    nlohmann::json to_json() const;
};

struct VerifyConfig {
    std::optional<i64> N;
    std::optional<i64> d;
    std::optional<std::size_t> chi_index;  // rank in enumerate_characters(d); needs d
    std::vector<i64> ms;
    std::vector<cplx> s_values;
    std::optional<int> sign;
    IdentityForm form = IdentityForm::corrected;
    std::string profile = "gaussian:1";
    double h = defaults::kDeltaStep;
    std::uint64_t seed = 12345;  // periodicity sampling
};

const std::vector<std::string>& suite_names();

// {"suite", "config", "checks": [...], "all_pass"}; throws std::invalid_argument for unknown suites.
// Output depends only on the arguments.
nlohmann::json run_suite(const std::string& suite, const VerifyConfig& cfg);

// Building blocks shared by the suites and the acceptance run.
namespace checks {

Check functional_equation(i64 N, i64 d, const DirichletCharacter& primitive_chi, const std::vector<int>& signs,
                          const std::vector<cplx>& s_values, const PointList& points, IdentityForm form);
Check hecke_eigen(i64 N, i64 d, const DirichletCharacter& chi, const std::vector<int>& signs,
                  const std::vector<cplx>& s_values, const std::vector<i64>& ms, const PointList& points);
std::vector<Check> hecke_adjoint(i64 N, i64 d, const DirichletCharacter& chi, const std::vector<int>& signs,
                                 const std::vector<cplx>& s_values, i64 m, const PointList& points,
                                 IdentityForm form);
Check intertwining(i64 N, i64 d, const DirichletCharacter& primitive_chi, const LineFunction& f, IdentityForm form);

// F = W_{N,1}(f) + (0.5 + 0.25i) W_{N,N}(chi)(hermite1:2) + 0.3 W_N(psi_1)(gaussian:0.7), with chi the
// last character mod |N|.
NilFunction generic_element(i64 N, const LineFunction& f);

Check hecke_composition(const NilFunction& F, i64 m, i64 n);
Check r_fourth_power(const NilFunction& F);
Check j_involution(const NilFunction& F);
Check hecke_negative(const NilFunction& F, i64 m);
Check adjoint_via_r(const NilFunction& F, i64 m);
Check adjoint_product(const NilFunction& F, i64 m);        // T_m* T_m, multi-term form
Check adjoint_product_swapped(const NilFunction& F, i64 m);  // T_m T_m*, multi-term form
Check non_normality(const NilFunction& F, i64 m);
Check heisenberg_commutation(const NilFunction& F, const HeisenbergElement& h, i64 m);
Check adjointness(const NilFunction& F, const NilFunction& G, i64 m);
std::vector<Check> periodicity_preserved(const NilFunction& F, i64 m, std::uint64_t seed = 12345);
std::vector<Check> norm_bounds(const NilFunction& F, i64 m);

Check wb_isometry(i64 N, i64 d, const DirichletCharacter& chi, const LineFunction& f, const LineFunction& g);
std::vector<Check> gram(i64 N, const LineFunction& f);
Check block_count(i64 N);
Check block_leak(i64 N, const LineFunction& f);
Check wb_rescaling(i64 N, i64 d, const DirichletCharacter& chi, const LineFunction& f, IdentityForm form);

Check d_multiplier(const LineFunction& even, const LineFunction& odd);
Check mellin_gamma(double t);
Check synthesis_round_trip(const LineFunction& f);
Check parseval(const LineFunction& f);
// Residual at h and ratio residual(h) / residual(h/2).
std::vector<Check> delta_eigen(int sign, i64 N, i64 d, const DirichletCharacter& chi, double tau, double h);
std::vector<Check> delta_exact_vs_fd(const LineFunction& f, double h);
Check delta_dilation(const LineFunction& f, i64 N, double t);
Check mellin_representation(const LineFunction& f, int k, IdentityForm form);

Check additive_rescaling(i64 N, const LineFunction& f, IdentityForm form);
Check additive_subgroup(i64 N, const LineFunction& f, IdentityForm form);
Check additive_permutation(i64 N, i64 m, const LineFunction& f);
Check hecke_expansion(i64 N, i64 d, const DirichletCharacter& chi, i64 m, const LineFunction& f);
Check hecke_subspace(i64 N, i64 d, const DirichletCharacter& chi, i64 m, const LineFunction& f);
Check dilation_hecke(i64 N, i64 d, const DirichletCharacter& chi, i64 m, double t, const LineFunction& f);
Check dilation_reflection(i64 N, i64 d, const DirichletCharacter& chi, const LineFunction& f, IdentityForm form);
Check dilation_compatibility(i64 N, i64 d, const DirichletCharacter& chi, double t, const LineFunction& f);

}  // namespace checks

}  // namespace lerch
