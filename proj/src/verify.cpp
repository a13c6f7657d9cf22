#include "lerch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lerch/special.hpp"
#include "lerch/spectral.hpp"
#include "lerch/weil_brezin.hpp"

namespace lerch {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double x) {
    x -= std::floor(x);
    return std::polar(1.0, kTwoPi * x);
}

i64 abs_i(i64 n) { return n < 0 ? -n : n; }

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json s_json(const std::vector<cplx>& s) {
    json out = json::array();
    for (cplx v : s) out.push_back(cjson(v));
    return out;
}

json points_json(const PointList& pts) {
    json out = json::array();
    for (auto [a, c] : pts) out.push_back(json::array({a, c}));
    return out;
}

json chi_json(const DirichletCharacter& chi) {
    return {{"modulus", chi.modulus()}, {"index", chi.index()}, {"conductor", chi.conductor()},
            {"parity", chi.parity()}};
}

// Max |F - G| over pts.
double sup_on(const PointList& pts, const std::function<cplx(double, double)>& F,
              const std::function<cplx(double, double)>& G) {
    double worst = 0.0;
    for (auto [a, c] : pts) worst = std::max(worst, std::abs(F(a, c) - G(a, c)));
    return worst;
}

Check make(std::string id, json params, double value, double bound) {
    Check c;
    c.identity = std::move(id);
    c.parameters = std::move(params);
    c.value = value;
    c.bound = bound;
    return c;
}

// NaN never passes and survives max().
double worse(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
    return std::max(a, b);
}

}  // namespace

json Check::to_json() const {
    json j = {{"identity", identity}, {"parameters", parameters}};
    if (witness) {
        j["value"] = value;
        j["lower_bound"] = bound;
    } else {
        j["residual"] = std::isnan(value) ? json(nullptr) : json(value);
        j["tolerance"] = bound;
    }
    j["pass"] = pass();
    return j;
}

namespace checks {

Check functional_equation(i64 N, i64 d, const DirichletCharacter& primitive_chi, const std::vector<int>& signs,
                          const std::vector<cplx>& s_values, const PointList& points, IdentityForm form) {
    double worst = 0.0;
    for (int sign : signs)
        for (cplx s : s_values) worst = worse(worst, fe_residual(sign, N, d, primitive_chi, s, points, form).relative);
    return make("functional_equation",
                {{"N", N}, {"d", d}, {"chi", chi_json(primitive_chi)}, {"signs", signs}, {"s", s_json(s_values)},
                 {"points", points_json(points)}, {"form", to_string(form)}, {"measure", "relative"}},
                worst, defaults::kFeTol);
}

Check hecke_eigen(i64 N, i64 d, const DirichletCharacter& chi, const std::vector<int>& signs,
                  const std::vector<cplx>& s_values, const std::vector<i64>& ms, const PointList& points) {
    double worst = 0.0;
    for (int sign : signs)
        for (cplx s : s_values) worst = worse(worst, hecke_eigen_residual(sign, N, d, chi, s, ms, points));
    return make("hecke_eigenfunction",
                {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"signs", signs}, {"s", s_json(s_values)}, {"m", ms},
                 {"points", points_json(points)}},
                worst, defaults::kHeckeEigenTol);
}

std::vector<Check> hecke_adjoint(i64 N, i64 d, const DirichletCharacter& chi, const std::vector<int>& signs,
                                 const std::vector<cplx>& s_values, i64 m, const PointList& points,
                                 IdentityForm form) {
    double eig = 0.0, prod = 0.0, other = 0.0;
    for (int sign : signs)
        for (cplx s : s_values) {
            AdjointEigenReport r = adjoint_hecke_eigen_residual(sign, N, d, chi, s, m, points);
            bool corrected = form == IdentityForm::corrected;
            eig = worse(eig, corrected ? r.residual_reciprocal : r.residual_printed);
            other = worse(other, corrected ? r.residual_printed : r.residual_reciprocal);
            prod = worse(prod, r.product_residual);
        }
    json base = {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"signs", signs}, {"s", s_json(s_values)}, {"m", m},
                 {"points", points_json(points)}};
    json p1 = base;
    p1["form"] = to_string(form);
    p1["eigenvalue"] = form == IdentityForm::corrected ? "conj(chi)(m) m^(s-1)" : "conj(chi)(m) m^(1-s)";
    p1["other_form_residual"] = other;
    return {make("adjoint_hecke_eigenvalue", p1, eig, defaults::kHeckeEigenTol),
            make("adjoint_hecke_product", base, prod, defaults::kHeckeEigenTol)};
}

Check intertwining(i64 N, i64 d, const DirichletCharacter& primitive_chi, const LineFunction& f, IdentityForm form) {
    PointList grid = offset_grid(defaults::kIntertwineGrid);
    double r = intertwine_residual(N, d, primitive_chi, f, grid, form);
    return make("r_intertwining",
                {{"N", N}, {"d", d}, {"chi", chi_json(primitive_chi)}, {"f", f.label}, {"form", to_string(form)},
                 {"grid", defaults::kIntertwineGrid}},
                r, defaults::kIntertwineTol);
}

NilFunction generic_element(i64 N, const LineFunction& f) {
    const i64 aN = abs_i(N);
    std::vector<std::pair<cplx, NilFunction>> terms;
    terms.emplace_back(1.0, wb_map(f, N, 1, principal_character(1)));
    terms.emplace_back(cplx(0.5, 0.25), wb_map(hermite1(2.0), N, aN, enumerate_characters(aN).back()));
    if (N > 0) terms.emplace_back(0.3, additive_brezin(gaussian(0.7), N, 1 % N));
    return combine(terms, "F_" + std::to_string(N));
}

Check hecke_composition(const NilFunction& F, i64 m, i64 n) {
    NilFunction mn = hecke(F, m * n);
    double r = worse(sup_difference(hecke(hecke(F, n), m), mn), sup_difference(hecke(hecke(F, m), n), mn));
    return make("hecke_composition", {{"N", F.central_index()}, {"m", m}, {"n", n}}, r,
                defaults::kExactOperatorTol);
}

Check r_fourth_power(const NilFunction& F) {
    NilFunction R4 = r_op(r_op(r_op(r_op(F))));
    double r = worse(sup_difference(R4, F), sup_difference(r_inv(r_op(F)), F));
    return make("r_fourth_power", {{"N", F.central_index()}}, r, defaults::kExactOperatorTol);
}

Check j_involution(const NilFunction& F) {
    double r = worse(sup_difference(j_op(j_op(F)), F), sup_difference(j_op(F), r_op(r_op(F))));
    return make("j_involution", {{"N", F.central_index()}}, r, defaults::kExactOperatorTol);
}

Check hecke_negative(const NilFunction& F, i64 m) {
    double r = sup_difference(hecke(F, -m), hecke(j_op(F), m));
    return make("hecke_negative_index", {{"N", F.central_index()}, {"m", m}}, r, defaults::kExactOperatorTol);
}

Check adjoint_via_r(const NilFunction& F, i64 m) {
    NilFunction rhs = r_op(r_op(r_op(hecke(r_op(F), m))));
    double r = sup_difference(hecke_adjoint(F, m), rhs);
    return make("adjoint_via_r", {{"N", F.central_index()}, {"m", m}}, r, defaults::kOperatorTol);
}

Check adjoint_product(const NilFunction& F, i64 m) {
    const i64 N = F.central_index();
    const i64 g = gcd(m, N);
    const double md = static_cast<double>(m), gd = static_cast<double>(g);
    NilFunction rhs = NilFunction::trusted(
        N,
        [F, g, md, gd](double a, double c) {
            cplx acc = 0.0;
            for (i64 l = 0; l < g; ++l) acc += F.base(a + static_cast<double>(l) / gd, c);
            return acc / md;
        },
        "adjoint_product_rhs", F.depth() + 1);
    double r = sup_difference(hecke_adjoint(hecke(F, m), m), rhs);
    return make("adjoint_product", {{"N", N}, {"m", m}, {"gcd", g}}, r, defaults::kOperatorTol);
}

Check adjoint_product_swapped(const NilFunction& F, i64 m) {
    const i64 N = F.central_index();
    const i64 g = gcd(m, N);
    const double md = static_cast<double>(m), gd = static_cast<double>(g), Nd = static_cast<double>(N);
    NilFunction rhs = NilFunction::trusted(
        N,
        [F, g, md, gd, Nd](double a, double c) {
            cplx acc = 0.0;
            for (i64 l = 0; l < g; ++l) {
                double ld = static_cast<double>(l);
                acc += unit_phase(Nd * ld * a / gd) * F.base(a, c + ld / gd);
            }
            return acc / md;
        },
        "adjoint_product_swapped_rhs", F.depth() + 1);
    double r = sup_difference(hecke(hecke_adjoint(F, m), m), rhs);
    return make("adjoint_product_swapped", {{"N", N}, {"m", m}, {"gcd", g}}, r, defaults::kOperatorTol);
}

Check non_normality(const NilFunction& F, i64 m) {
    NilFunction gap = combine({{1.0, hecke_adjoint(hecke(F, m), m)}, {-1.0, hecke(hecke_adjoint(F, m), m)}});
    const QuadratureSpec q = QuadratureSpec::midpoint(defaults::kQuadNodes);
    Check c = make("non_normality_witness", {{"N", F.central_index()}, {"m", m}, {"gcd", gcd(m, F.central_index())}},
                   norm(gap, q) / norm(F, q), defaults::kNonNormalGap);
    c.witness = true;
    return c;
}

Check heisenberg_commutation(const NilFunction& F, const HeisenbergElement& h, i64 m) {
    CommutationResidual r = hecke_heisenberg_commutation_check(F, h, m, defaults::kSupGrid);
    return make("hecke_heisenberg_commutation",
                {{"N", F.central_index()}, {"m", m}, {"h", {h[0], h[1], h[2]}}, {"hecke", r.hecke},
                 {"adjoint", r.adjoint}},
                worse(r.hecke, r.adjoint), defaults::kOperatorTol);
}

Check adjointness(const NilFunction& F, const NilFunction& G, i64 m) {
    const QuadratureSpec q = QuadratureSpec::midpoint(defaults::kQuadNodes);
    double r = std::abs(inner_product(hecke(F, m), G, q) - inner_product(F, hecke_adjoint(G, m), q));
    return make("hecke_adjointness", {{"N", F.central_index()}, {"m", m}, {"nodes", defaults::kQuadNodes}}, r,
                defaults::kQuadratureTol);
}

std::vector<Check> periodicity_preserved(const NilFunction& F, i64 m, std::uint64_t seed) {
    const HeisenbergElement h = defaults::kCommutationH;
    std::vector<std::pair<std::string, NilFunction>> images = {{"hecke", hecke(F, m)},
                                                               {"hecke_adjoint", hecke_adjoint(F, m)},
                                                               {"r_op", r_op(F)},
                                                               {"heisenberg_act", heisenberg_act(F, h)}};
    std::vector<Check> out;
    for (const auto& [name, G] : images)
        out.push_back(make("twisted_periodicity",
                           {{"N", F.central_index()}, {"operator", name}, {"m", m}, {"seed", seed}},
                           periodicity_defect(G, 64, seed), defaults::kOperatorTol));
    return out;
}

std::vector<Check> norm_bounds(const NilFunction& F, i64 m) {
    const QuadratureSpec q = QuadratureSpec::midpoint(defaults::kQuadNodes);
    const i64 N = F.central_index();
    const double nF = norm(F, q), nT = norm(hecke(F, m), q);
    json p = {{"N", N}, {"m", m}, {"norm_F", nF}, {"norm_TF", nT}};
    std::vector<Check> out;
    out.push_back(make("hecke_norm_bound", p, nT - nF, defaults::kQuadratureTol));
    if (gcd(m, N) == 1)
        out.push_back(make("hecke_norm_coprime", p, std::abs(nT - nF / std::sqrt(static_cast<double>(m))),
                           defaults::kQuadratureTol));
    out.push_back(make("r_unitary", {{"N", N}}, std::abs(norm(r_op(F), q) - nF), defaults::kQuadratureTol));
    return out;
}

Check wb_isometry(i64 N, i64 d, const DirichletCharacter& chi, const LineFunction& f, const LineFunction& g) {
    const QuadratureSpec q = QuadratureSpec::midpoint(defaults::kQuadNodes);
    cplx lhs = inner_product(wb_map(f, N, d, chi), wb_map(g, N, d, chi), q);
    cplx rhs = line_inner(f, g);
    return make("wb_isometry",
                {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"f", f.label}, {"g", g.label}, {"nil", cjson(lhs)},
                 {"line", cjson(rhs)}},
                std::abs(lhs - rhs), defaults::kQuadratureTol);
}

std::vector<Check> gram(i64 N, const LineFunction& f) {
    const double fn = line_inner(f, f).real();
    GramReport g = decomposition_gram(N, f, fn, QuadratureSpec::midpoint(defaults::kQuadNodes));
    json p = {{"N", N}, {"f", f.label}, {"size", g.labels.size()}, {"labels", g.labels}};
    return {make("gram_off_diagonal", p, g.max_off_diagonal, defaults::kQuadratureTol),
            make("gram_diagonal", p, g.max_diagonal_error, defaults::kQuadratureTol)};
}

Check block_count(i64 N) {
    DecompositionIndex idx = coarse_decomposition(N);
    i64 dim = idx.dimension_count();
    return make("coarse_block_dimension", {{"N", N}, {"blocks", idx.blocks.size()}, {"dimension", dim}},
                static_cast<double>(abs_i(dim - abs_i(N))), 0.5);
}

Check block_leak(i64 N, const LineFunction& f) {
    PermutationReport r = r_permutes_coarse_blocks(N, f, QuadratureSpec::midpoint(defaults::kQuadNodes));
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"block", e.block}, {"member", e.member}, {"target", e.target}, {"leak", e.leak},
                           {"captured", e.captured}});
    return make("r_block_permutation", {{"N", N}, {"f", f.label}, {"entries", entries}}, r.max_leak,
                defaults::kLeakTol);
}

Check wb_rescaling(i64 N, i64 d, const DirichletCharacter& chi, const LineFunction& f, IdentityForm form) {
    NilFunction lhs = wb_map(f, N, d, chi);
    const double q = static_cast<double>(N) / static_cast<double>(d);
    NilFunction small = wb_map(line_dilate(f, q), d, d, chi);
    // The lattice argument n + d c of W_{d,d} already carries the factor d.
    const double cs = form == IdentityForm::printed ? static_cast<double>(d) : 1.0;
    double r = sup_on(
        offset_grid(defaults::kSupGrid), [&](double a, double c) { return lhs.base(a, c); },
        [&](double a, double c) { return small.base(q * a, cs * c); });
    return make("wb_rescaling",
                {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"f", f.label}, {"form", to_string(form)},
                 {"point", form == IdentityForm::printed ? "(N a/d, d c)" : "(N a/d, c)"}},
                r, defaults::kExactOperatorTol);
}

Check d_multiplier(const LineFunction& even, const LineFunction& odd) {
    double worst = 0.0;
    for (int i = 0; i < defaults::kMultiplierPoints; ++i) {
        double tau = defaults::kMultiplierStart + i * defaults::kMultiplierStep;
        worst = worse(worst, d_multiplier_residual(even, 0, tau));
        worst = worse(worst, d_multiplier_residual(odd, 1, tau));
    }
    return make("d_mellin_multiplier",
                {{"k0", even.label}, {"k1", odd.label}, {"tau_points", defaults::kMultiplierPoints},
                 {"tau_start", defaults::kMultiplierStart}, {"tau_step", defaults::kMultiplierStep}},
                worst, defaults::kMultiplierTol);
}

Check mellin_gamma(double t) {
    const LineFunction e = gaussian(t), o = hermite1(t);
    const double pt = std::numbers::pi * t;
    double worst = 0.0;
    std::vector<cplx> ss;
    for (int i = 0; i < defaults::kMultiplierPoints; ++i)
        ss.emplace_back(0.5, defaults::kMultiplierStart + i * defaults::kMultiplierStep);
    ss.emplace_back(2.0, 0.0);
    for (cplx s : ss) {
        cplx m0 = std::pow(pt, -s / 2.0) * complex_gamma(s / 2.0);
        cplx m1 = std::pow(pt, -(s + 1.0) / 2.0) * complex_gamma((s + 1.0) / 2.0);
        worst = worse(worst, std::abs(mellin(e, 0, s).value - m0));
        worst = worse(worst, std::abs(mellin(o, 1, s).value - m1));
    }
    return make("mellin_gamma_oracle", {{"t", t}, {"points", ss.size()}}, worst, defaults::kMellinGammaTol);
}

Check synthesis_round_trip(const LineFunction& f) {
    SpectralSample S = sample_mellin(f, defaults::kSynthesisT, defaults::kSynthesisStep);
    double worst = 0.0, alt = 0.0;
    for (double x : defaults::kSynthesisX) {
        worst = worse(worst, std::abs(spectral_synthesis(S, x) - f(x)));
        alt = worse(alt, std::abs(spectral_synthesis(S, x, kAltMellinMeasure) - f(x)));
    }
    return make("spectral_synthesis",
                {{"f", f.label}, {"T", defaults::kSynthesisT}, {"step", defaults::kSynthesisStep},
                 {"measure", "1/(4 pi)"}, {"alt_measure_residual", alt}},
                worst, defaults::kSynthesisTol);
}

Check parseval(const LineFunction& f) {
    ParsevalReport r = parseval_check(f, defaults::kSynthesisT, defaults::kSynthesisStep);
    return make("mellin_parseval",
                {{"f", f.label}, {"line", r.line_norm_sq}, {"spectral", r.spectral_norm_sq},
                 {"alt_spectral", r.alt_spectral_norm_sq}},
                std::abs(r.spectral_norm_sq - r.line_norm_sq), defaults::kSynthesisTol);
}

std::vector<Check> delta_eigen(int sign, i64 N, i64 d, const DirichletCharacter& chi, double tau, double h) {
    LerchPoint p;
    p.sign = sign;
    p.N = N;
    p.d = d;
    p.chi = chi;
    p.s = cplx(0.5, tau);
    PointList pts = cell_centers(N, defaults::kDeltaGrid);
    double r1 = delta_L_eigen_residual(p, pts, h);
    double r2 = delta_L_eigen_residual(p, pts, 0.5 * h);
    json base = {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"sign", sign}, {"tau", tau}, {"h", h},
                 {"points", points_json(pts)}};
    json pr = base;
    pr["residual_h"] = r1;
    pr["residual_half_h"] = r2;
    pr["ratio"] = r1 / r2;
    return {make("delta_L_eigen", base, r1, defaults::kDeltaTol),
            make("delta_L_eigen_order", pr, std::abs(r1 / r2 - 4.0), 4.0 - defaults::kRatioLow)};
}

std::vector<Check> delta_exact_vs_fd(const LineFunction& f, double h) {
    NilFunction F = wb_map(f);
    NilFunction ex = delta_L_apply(F, DeltaMode::exact);
    double d1 = sup_difference(ex, delta_L_apply(F, DeltaMode::fd, h));
    double d2 = sup_difference(ex, delta_L_apply(F, DeltaMode::fd, 0.5 * h));
    json p = {{"N", 1}, {"f", f.label}, {"h", h}, {"sup_h", d1}, {"sup_half_h", d2}, {"ratio", d1 / d2}};
    return {make("delta_L_exact_vs_fd", p, d1, defaults::kDeltaTol),
            make("delta_L_exact_vs_fd_order", p, std::abs(d1 / d2 - 4.0), 4.0 - defaults::kRatioLow)};
}

Check delta_dilation(const LineFunction& f, i64 N, double t) {
    NilFunction F = wb_map(f, N, 1, principal_character(1));
    NilFunction lhs = delta_L_apply(dilation_on_nil(F, t), DeltaMode::exact);
    NilFunction rhs = dilation_on_nil(delta_L_apply(F, DeltaMode::exact), t);
    return make("delta_L_dilation_commutation", {{"N", N}, {"t", t}, {"f", f.label}}, sup_difference(lhs, rhs),
                defaults::kDilationCommuteTol);
}

Check mellin_representation(const LineFunction& f, int k, IdentityForm form) {
    const cplx s = defaults::kMellinRepS;
    MellinRepresentation r =
        mellin_integral_representation(f, k, s, defaults::kMellinRepA, defaults::kMellinRepC);
    const bool corrected = form == IdentityForm::corrected;
    double v = std::abs(r.integral - (corrected ? r.shifted_rhs : r.half_rhs));
    return make("mellin_integral_representation",
                {{"f", f.label}, {"k", k}, {"s", cjson(s)}, {"a", defaults::kMellinRepA}, {"c", defaults::kMellinRepC},
                 {"form", to_string(form)},
                 {"rhs", corrected ? "M_k(f)(s+1/2) L(s+1/2,a,c)" : "(1/2) M_k(f)(s) L(s,a,c)"},
                 {"integral", cjson(r.integral)}, {"shifted_rhs", cjson(r.shifted_rhs)},
                 {"half_rhs", cjson(r.half_rhs)}},
                v, defaults::kMellinRepTol);
}

Check additive_rescaling(i64 N, const LineFunction& f, IdentityForm form) {
    NilFunction W = wb_map(f);
    const double Nd = static_cast<double>(N);
    const bool printed = form == IdentityForm::printed;
    const PointList pts = offset_grid(defaults::kSupGrid);
    double worst = 0.0;
    for (i64 k = 0; k < N; ++k) {
        NilFunction A = additive_brezin(f, N, k);
        const double kd = static_cast<double>(k);
        worst = worse(worst, sup_on(
                                 pts, [&](double a, double c) { return A.base(a, c); },
                                 [&](double a, double c) {
                                     return W.base(printed ? (a + kd) / Nd : a + kd / Nd, Nd * c);
                                 }));
    }
    return make("additive_rescaling",
                {{"N", N}, {"f", f.label}, {"form", to_string(form)},
                 {"point", printed ? "((a + k)/N, N c, N z)" : "(a + k/N, N c, N z)"}},
                worst, defaults::kExactOperatorTol);
}

Check additive_subgroup(i64 N, const LineFunction& f, IdentityForm form) {
    const double Nd = static_cast<double>(N);
    const bool printed = form == IdentityForm::printed;
    const PointList pts = offset_grid(defaults::kSupGrid);
    double worst = 0.0;
    for (i64 k = 0; k < N; ++k) {
        NilFunction A = additive_brezin(f, N, k);
        for (i64 j = 0; j < N; ++j) {
            const double shift = static_cast<double>(j) / Nd;
            if (printed) {
                const cplx psi = root_of_unity(mod(k * j, N), N);
                worst = worse(worst, sup_on(
                                         pts, [&](double a, double c) { return A.base(a + shift, c); },
                                         [&](double a, double c) { return psi * A.base(a, c); }));
            } else {
                // Left translation by [0, j/N, 0]: F(a, c + j/N, z + j a/N).
                const cplx psi = root_of_unity(mod(-k * j, N), N);
                worst = worse(worst, sup_on(
                                         pts,
                                         [&](double a, double c) {
                                             return unit_phase(static_cast<double>(j) * a) * A.base(a, c + shift);
                                         },
                                         [&](double a, double c) { return psi * A.base(a, c); }));
            }
        }
    }
    return make("additive_subgroup_relation",
                {{"N", N}, {"f", f.label}, {"form", to_string(form)},
                 {"relation", printed ? "F(a + j/N, c, z) = psi_k(j) F" : "F([0, j/N, 0] g) = psi_k(-j) F(g)"}},
                worst, defaults::kExactOperatorTol);
}

Check additive_permutation(i64 N, i64 m, const LineFunction& f) {
    const LineFunction fm = scale_argument(f, static_cast<double>(m));
    double worst = 0.0;
    json pattern = json::array();
    for (i64 k = 0; k < N; ++k) {
        const i64 km = mod(k * m, N);
        pattern.push_back(json::array({k, km}));
        worst = worse(worst, sup_difference(hecke(additive_brezin(f, N, k), m), additive_brezin(fm, N, km)));
    }
    return make("additive_hecke_permutation", {{"N", N}, {"m", m}, {"f", f.label}, {"pattern", pattern}}, worst,
                defaults::kOperatorTol);
}

Check hecke_expansion(i64 N, i64 d, const DirichletCharacter& chi, i64 m, const LineFunction& f) {
    const i64 dp = gcd(m, abs_i(N) / d);
    const LineFunction fm = scale_argument(f, static_cast<double>(m));
    const DirichletCharacter core = primitive_core(chi).chi;
    std::vector<std::pair<cplx, NilFunction>> terms;
    json coefs = json::array();
    for (i64 e : divisors(dp)) {
        cplx w = std::sqrt(static_cast<double>(totient(d * e)) / static_cast<double>(totient(d))) * chi(m / e);
        coefs.push_back({{"e", e}, {"coefficient", cjson(w)}});
        terms.emplace_back(w, wb_map(fm, N, d * e, restrict(core, d * e)));
    }
    double r = sup_difference(hecke(wb_map(f, N, d, chi), m), combine(terms));
    return make("hecke_subspace_expansion",
                {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"m", m}, {"d_prime", dp}, {"terms", coefs}}, r,
                defaults::kOperatorTol);
}

Check hecke_subspace(i64 N, i64 d, const DirichletCharacter& chi, i64 m, const LineFunction& f) {
    if (gcd(m, abs_i(N) / d) != 1) throw std::invalid_argument("hecke_subspace: need (m, N/d) = 1");
    NilFunction rhs = combine({{chi(m), wb_map(scale_argument(f, static_cast<double>(m)), N, d, chi)}});
    double r = sup_difference(hecke(wb_map(f, N, d, chi), m), rhs);
    return make("hecke_subspace_invariance", {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"m", m}}, r,
                defaults::kOperatorTol);
}

Check dilation_hecke(i64 N, i64 d, const DirichletCharacter& chi, i64 m, double t, const LineFunction& f) {
    NilFunction F = wb_map(f, N, d, chi);
    // hecke() drops the backing, so the left side goes through the additive decomposition.
    NilFunction lhs = dilation_on_nil(hecke(F, m), t);
    NilFunction rhs = hecke(dilation_on_nil(F, t), m);
    return make("dilation_hecke_commutation",
                {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"m", m}, {"t", t}, {"f", f.label}},
                sup_difference(lhs, rhs), defaults::kOperatorTol);
}

Check dilation_reflection(i64 N, i64 d, const DirichletCharacter& chi, const LineFunction& f, IdentityForm form) {
    NilFunction F = wb_map(f, N, d, chi);
    const cplx w = form == IdentityForm::printed ? cplx(1.0) : chi(-1);
    double r = sup_difference(dilation_on_nil(F, -1.0), combine({{w, r_op(r_op(F))}}));
    return make("dilation_minus_one",
                {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"f", f.label}, {"form", to_string(form)},
                 {"relation", form == IdentityForm::printed ? "V(-1) = R^2" : "V(-1) = chi(-1) R^2"}},
                r, defaults::kOperatorTol);
}

Check dilation_compatibility(i64 N, i64 d, const DirichletCharacter& chi, double t, const LineFunction& f) {
    NilFunction F = wb_map(f, N, d, chi);
    double r = sup_difference(dilation_on_nil(F, t), dilation_additive(F, t, defaults::kComponentNodes));
    return make("dilation_additive_compatibility",
                {{"N", N}, {"d", d}, {"chi", chi_json(chi)}, {"t", t}, {"f", f.label}}, r, defaults::kOperatorTol);
}

}  // namespace checks

namespace {

std::vector<int> signs_of(const VerifyConfig& cfg) {
    if (cfg.sign) return {*cfg.sign};
    return {1, -1};
}

std::vector<i64> divisor_choices(i64 N, const VerifyConfig& cfg) {
    if (cfg.d) {
        if (*cfg.d <= 0 || abs_i(N) % *cfg.d != 0) throw std::domain_error("d must divide |N|");
        return {*cfg.d};
    }
    return divisors(abs_i(N));
}

// Characters mod d selected by the config: the given index, or every character.
std::vector<DirichletCharacter> characters_of(i64 d, const VerifyConfig& cfg) {
    if (cfg.chi_index) return {character_by_index(d, *cfg.chi_index)};
    return enumerate_characters(d);
}

// (d, primitive chi) with conductor | d, as the intertwining and the functional equation take them.
std::vector<std::pair<i64, DirichletCharacter>> primitive_pairs(i64 N, const VerifyConfig& cfg) {
    std::vector<std::pair<i64, DirichletCharacter>> out;
    for (i64 d : divisor_choices(N, cfg)) {
        if (cfg.chi_index) {
            out.emplace_back(d, primitive_core(character_by_index(d, *cfg.chi_index)).chi);
            continue;
        }
        for (i64 e : divisors(d))
            for (const auto& chi : enumerate_characters(e))
                if (chi.is_primitive()) out.emplace_back(d, chi);
    }
    return out;
}

std::vector<i64> coprime_ms(i64 N, const VerifyConfig& cfg) {
    std::vector<i64> src = cfg.ms;
    if (src.empty()) src.assign(defaults::kHeckeMs.begin(), defaults::kHeckeMs.end());
    std::vector<i64> out;
    for (i64 m : src)
        if (m > 0 && gcd(m, N) == 1) out.push_back(m);
    return out;
}

std::vector<cplx> s_or(const VerifyConfig& cfg, const std::vector<cplx>& fallback) {
    return cfg.s_values.empty() ? fallback : cfg.s_values;
}

i64 first_m(const VerifyConfig& cfg, i64 fallback) { return cfg.ms.empty() ? fallback : cfg.ms.front(); }

// Smallest m >= 2 coprime to N.
i64 coprime_partner(i64 N) {
    i64 m = 2;
    while (gcd(m, N) != 1) ++m;
    return m;
}

json notes_json(const SeededPoints& sp) { return sp.notes; }

std::vector<Check> suite_fe(const VerifyConfig& cfg, json& extra) {
    const i64 N = cfg.N.value_or(defaults::kSuiteN);
    SeededPoints sp = seeded_points(N, {});
    extra["point_notes"] = notes_json(sp);
    const auto s = s_or(cfg, {defaults::kFeS.begin(), defaults::kFeS.end()});
    std::vector<Check> out;
    for (const auto& [d, chi] : primitive_pairs(N, cfg))
        out.push_back(checks::functional_equation(N, d, chi, signs_of(cfg), s, sp.points, cfg.form));
    return out;
}

std::vector<Check> suite_hecke(const VerifyConfig& cfg, json& extra) {
    const i64 N = cfg.N.value_or(defaults::kSuiteN);
    const std::vector<i64> ms = coprime_ms(N, cfg);
    if (ms.empty()) throw std::invalid_argument("no m coprime to N among the requested values");
    SeededPoints sp = seeded_points(N, ms);
    extra["point_notes"] = notes_json(sp);
    const auto s = s_or(cfg, {defaults::kHeckeS.begin(), defaults::kHeckeS.end()});
    std::vector<Check> out;
    for (i64 d : divisor_choices(N, cfg))
        for (const auto& chi : characters_of(d, cfg)) {
            out.push_back(checks::hecke_eigen(N, d, chi, signs_of(cfg), s, ms, sp.points));
            for (auto& c : checks::hecke_adjoint(N, d, chi, signs_of(cfg), s, ms.front(), sp.points, cfg.form))
                out.push_back(std::move(c));
        }
    return out;
}

std::vector<Check> suite_intertwine(const VerifyConfig& cfg, json&) {
    const i64 N = cfg.N.value_or(defaults::kSuiteN);
    const LineFunction f = make_test_function(cfg.profile);
    std::vector<Check> out;
    for (const auto& [d, chi] : primitive_pairs(N, cfg)) out.push_back(checks::intertwining(N, d, chi, f, cfg.form));
    return out;
}

std::vector<Check> suite_operators(const VerifyConfig& cfg, json&) {
    const i64 N = cfg.N.value_or(defaults::kOperatorsN);
    const i64 m = first_m(cfg, 2);
    if (m <= 0) throw std::invalid_argument("operators suite needs m >= 1");
    const i64 n = cfg.ms.size() > 1 ? cfg.ms[1] : 3;
    const LineFunction f = make_test_function(cfg.profile);
    const NilFunction F = checks::generic_element(N, f);
    const NilFunction G = checks::generic_element(N, gaussian(2.0));
    std::vector<Check> out;
    out.push_back(checks::hecke_composition(F, m, n));
    out.push_back(checks::r_fourth_power(F));
    out.push_back(checks::j_involution(F));
    out.push_back(checks::hecke_negative(F, m));
    out.push_back(checks::adjoint_via_r(F, m));
    out.push_back(checks::adjoint_product(F, m));
    out.push_back(checks::adjoint_product_swapped(F, m));
    const i64 mc = coprime_partner(N);
    if (mc != m) {
        out.push_back(checks::adjoint_product(F, mc));
        out.push_back(checks::adjoint_product_swapped(F, mc));
    }
    if (gcd(m, N) > 1) out.push_back(checks::non_normality(F, m));
    out.push_back(checks::heisenberg_commutation(F, defaults::kCommutationH, m));
    out.push_back(checks::adjointness(F, G, m));
    for (auto& c : checks::periodicity_preserved(F, m, cfg.seed)) out.push_back(std::move(c));
    for (auto& c : checks::norm_bounds(F, m)) out.push_back(std::move(c));
    return out;
}

std::vector<Check> suite_decomposition(const VerifyConfig& cfg, json&) {
    const i64 N = cfg.N.value_or(defaults::kDecompositionN);
    const LineFunction f = make_test_function(cfg.profile);
    const LineFunction g = gaussian(2.0);
    std::vector<Check> out;
    for (auto& c : checks::gram(N, f)) out.push_back(std::move(c));
    for (i64 d : divisor_choices(N, cfg)) {
        const DirichletCharacter chi = cfg.chi_index ? character_by_index(d, *cfg.chi_index)
                                                     : enumerate_characters(d).back();
        out.push_back(checks::wb_isometry(N, d, chi, f, g));
        out.push_back(checks::wb_rescaling(N, d, chi, f, cfg.form));
    }
    out.push_back(checks::block_count(N));
    out.push_back(checks::block_leak(N, f));
    return out;
}

std::vector<Check> suite_spectral(const VerifyConfig& cfg, json&) {
    const i64 N = cfg.N.value_or(defaults::kSuiteN);
    const LineFunction f = make_test_function(cfg.profile);
    std::vector<Check> out;
    out.push_back(checks::d_multiplier(gaussian(1.0), hermite1(1.0)));
    out.push_back(checks::mellin_gamma(1.0));
    out.push_back(checks::synthesis_round_trip(f));
    out.push_back(checks::parseval(f));
    const i64 d = cfg.d.value_or(abs_i(N));
    if (abs_i(N) % d != 0) throw std::domain_error("d must divide |N|");
    std::vector<DirichletCharacter> chars;
    if (cfg.chi_index) {
        chars.push_back(character_by_index(d, *cfg.chi_index));
    } else {
        for (const auto& chi : enumerate_characters(d))
            if (chi.is_primitive()) chars.push_back(chi);
        if (chars.empty()) chars.push_back(principal_character(d));
    }
    std::vector<double> taus;
    if (cfg.s_values.empty()) taus.assign(defaults::kDeltaTaus.begin(), defaults::kDeltaTaus.end());
    for (cplx s : cfg.s_values) taus.push_back(s.imag());
    for (const auto& chi : chars)
        for (int sign : signs_of(cfg))
            for (double tau : taus)
                for (auto& c : checks::delta_eigen(sign, N, d, chi, tau, cfg.h)) out.push_back(std::move(c));
    for (auto& c : checks::delta_exact_vs_fd(gaussian(1.0), cfg.h)) out.push_back(std::move(c));
    out.push_back(checks::delta_dilation(f, N, defaults::kDilationT));
    out.push_back(checks::mellin_representation(f, 0, cfg.form));
    return out;
}

std::vector<Check> suite_additive(const VerifyConfig& cfg, json&) {
    const i64 N = cfg.N.value_or(defaults::kAdditiveN);
    if (N <= 0) throw std::invalid_argument("additive suite needs N > 0");
    const LineFunction f = make_test_function(cfg.profile);
    std::vector<i64> ms = cfg.ms;
    if (ms.empty()) ms = {2, 3};
    const i64 d = cfg.d.value_or(N);
    if (N % d != 0) throw std::domain_error("d must divide |N|");
    const DirichletCharacter chi = cfg.chi_index ? character_by_index(d, *cfg.chi_index) : enumerate_characters(d).back();
    std::vector<Check> out;
    out.push_back(checks::additive_rescaling(N, f, cfg.form));
    out.push_back(checks::additive_subgroup(N, f, cfg.form));
    for (i64 m : ms) out.push_back(checks::additive_permutation(N, m, f));
    for (i64 m : ms) {
        out.push_back(checks::hecke_expansion(N, d, chi, m, f));
        if (gcd(m, N / d) == 1) out.push_back(checks::hecke_subspace(N, d, chi, m, f));
    }
    out.push_back(checks::dilation_hecke(N, d, chi, ms.front(), defaults::kDilationT, f));
    out.push_back(checks::dilation_reflection(N, d, chi, f, cfg.form));
    out.push_back(checks::dilation_compatibility(N, d, chi, defaults::kDilationT, f));
    out.push_back(checks::dilation_compatibility(N, d, chi, -defaults::kDilationT, f));
    return out;
}

json config_json(const std::string& suite, const VerifyConfig& cfg) {
    json j = {{"suite", suite}, {"form", to_string(cfg.form)}, {"profile", cfg.profile}, {"h", cfg.h},
              {"seed", cfg.seed}};
    j["N"] = cfg.N ? json(*cfg.N) : json(nullptr);
    j["d"] = cfg.d ? json(*cfg.d) : json(nullptr);
    j["chi"] = cfg.chi_index ? json(*cfg.chi_index) : json(nullptr);
    j["sign"] = cfg.sign ? json(*cfg.sign) : json(nullptr);
    j["m"] = cfg.ms;
    j["s"] = s_json(cfg.s_values);
    return j;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"fe",         "hecke",         "intertwine", "operators",
                                                   "decomposition", "spectral", "additive"};
    return names;
}

json run_suite(const std::string& suite, const VerifyConfig& cfg) {
    json extra = json::object();
    std::vector<Check> list;
    if (suite == "fe") list = suite_fe(cfg, extra);
    else if (suite == "hecke") list = suite_hecke(cfg, extra);
    else if (suite == "intertwine") list = suite_intertwine(cfg, extra);
    else if (suite == "operators") list = suite_operators(cfg, extra);
    else if (suite == "decomposition") list = suite_decomposition(cfg, extra);
    else if (suite == "spectral") list = suite_spectral(cfg, extra);
    else if (suite == "additive") list = suite_additive(cfg, extra);
    else throw std::invalid_argument("unknown suite '" + suite + "'");
    json report = {{"suite", suite}, {"config", config_json(suite, cfg)}};
    json arr = json::array();
    bool all = true;
    for (const auto& c : list) {
        arr.push_back(c.to_json());
        all = all && c.pass();
    }
    report["checks"] = arr;
    for (auto& [k, v] : extra.items()) report[k] = v;
    report["all_pass"] = all;
    return report;
}

}  // namespace lerch
