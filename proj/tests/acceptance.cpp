// Acceptance run: one PASS/FAIL line per criterion, with the stated tolerances.
//
// Criteria 2, 4, 5, 9 (N = 5 leg at h = 1e-3) and 10 fail as stated. Each one is paired with a
// corrected counterpart that must pass. The process exits 0 iff every failing criterion is one of
// these known discrepancies, fails only on the known checks, and its counterpart passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "lerch/defaults.hpp"
#include "lerch/scalar_lerch.hpp"
#include "lerch/verify.hpp"
#include "lerch/weil_brezin.hpp"

using namespace lerch;
namespace df = lerch::defaults;

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932;

Check scalar_check(std::string id, nlohmann::json params, double value, double bound) {
    Check c;
    c.identity = std::move(id);
    c.parameters = std::move(params);
    c.value = value;
    c.bound = bound;
    return c;
}

struct Criterion {
    Criterion(int id_, std::string title_, double budget) : id(id_), title(std::move(title_)), budget_s(budget) {}

    int id = 0;
    std::string title;
    double budget_s = 0.0;
    std::vector<Check> stated;
    std::vector<Check> counterpart;
    std::function<bool(const Check&)> known_failure;  // empty: no documented discrepancy
    std::vector<std::string> notes;
    double seconds = 0.0;
};

void add(std::vector<Check>& out, Check c) { out.push_back(std::move(c)); }
void add(std::vector<Check>& out, std::vector<Check> cs) {
    for (auto& c : cs) out.push_back(std::move(c));
}

std::vector<DirichletCharacter> primitive_mod(i64 d) {
    std::vector<DirichletCharacter> out;
    for (const auto& chi : enumerate_characters(d))
        if (chi.is_primitive()) out.push_back(chi);
    return out;
}

bool odd_character(const Check& c) { return c.parameters.contains("chi") && c.parameters["chi"]["parity"] == -1; }

void keep_notes(Criterion& cr, i64 N, const SeededPoints& sp) {
    for (const auto& n : sp.notes) {
        std::string line = "N = " + std::to_string(N) + ": seed point " + n;
        if (std::find(cr.notes.begin(), cr.notes.end(), line) == cr.notes.end()) cr.notes.push_back(line);
    }
}

std::string brief(const Check& c) {
    nlohmann::json p = c.parameters;
    p.erase("points");
    return c.identity + " " + p.dump() + (c.witness ? " value " : " residual ") + std::to_string(c.value);
}

// ---- criteria ----

void criterion1(Criterion& cr) {
    double worst = 0.0, worst_norm = 0.0;
    long count = 0;
    for (i64 d = 1; d <= 60; ++d)
        for (const auto& chi : enumerate_characters(d)) {
            const DirichletCharacter core = primitive_core(chi).chi;
            for (i64 m = 0; m < d; ++m) {
                cplx closed = gauss_sum_closed(core, d, m).value;
                cplx brute = gauss_sum_bruteforce(chi, m).value;
                worst = std::max(worst, std::abs(closed - brute));
                ++count;
            }
            if (chi.is_primitive()) {
                double t2 = std::norm(gauss_sum_bruteforce(chi, 1).value);
                worst_norm = std::max(worst_norm, std::abs(t2 - static_cast<double>(d)));
            }
        }
    add(cr.stated, scalar_check("gauss_sum_closed_vs_brute", {{"d_max", 60}, {"comparisons", count}}, worst,
                                df::kGaussSumTol));
    add(cr.stated, scalar_check("gauss_sum_primitive_norm", {{"e_max", 60}}, worst_norm, df::kGaussSumTol));
}

void criterion2(Criterion& cr) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    auto z1 = lerch_zeta(2.0, 0.0, 1.0).value;
    auto z2 = lerch_zeta(2.0, 0.5, 1.0).value;
    add(cr.stated, scalar_check("zeta(2,0,1) = pi^2/6", {{"value", z1.real()}}, std::abs(z1 - pi2 / 6.0),
                                df::kScalarTol));
    add(cr.stated, scalar_check("zeta(2,1/2,1) = pi^2/12", {{"value", z2.real()}}, std::abs(z2 - pi2 / 12.0),
                                df::kScalarTol));
    auto lp = lerch_pm(1, 2.0, 0.5, 0.5).value;
    add(cr.stated, scalar_check("L+(2,1/2,1/2) = 8 Catalan", {{"value", lp.real()}, {"target", 8.0 * kCatalan}},
                                std::abs(lp - 8.0 * kCatalan), df::kScalarTol));
    auto lm = lerch_pm(-1, 2.0, 0.5, 0.5).value;
    add(cr.counterpart, scalar_check("L-(2,1/2,1/2) = 8 Catalan", {{"value", lm.real()}, {"target", 8.0 * kCatalan}},
                                     std::abs(lm - 8.0 * kCatalan), df::kScalarTol));
    add(cr.counterpart, scalar_check("L+(2,1/2,1/2) = 0", {{"value", lp.real()}}, std::abs(lp), df::kScalarTol));
    cr.known_failure = [](const Check& c) { return c.identity == "L+(2,1/2,1/2) = 8 Catalan"; };
}

struct Level {
    i64 N, d;
    std::vector<DirichletCharacter> chars;
};

void criterion3(Criterion& cr) {
    auto core3 = [] {
        std::vector<DirichletCharacter> out;
        for (const auto& chi : enumerate_characters(6))
            if (chi.conductor() == 3) out.push_back(chi);
        return out;
    };
    const std::vector<Level> levels = {{1, 1, {principal_character(1)}},
                                       {5, 5, primitive_mod(5)},
                                       {6, 3, enumerate_characters(3)},
                                       {6, 6, core3()}};
    const std::vector<cplx> s(df::kHeckeS.begin(), df::kHeckeS.end());
    for (const auto& lv : levels) {
        std::vector<i64> ms;
        for (i64 m : df::kHeckeMs)
            if (gcd(m, lv.N) == 1) ms.push_back(m);
        SeededPoints sp = seeded_points(lv.N, ms);
        keep_notes(cr, lv.N, sp);
        for (const auto& chi : lv.chars) add(cr.stated, checks::hecke_eigen(lv.N, lv.d, chi, {1, -1}, s, ms, sp.points));
    }
}

std::vector<std::pair<i64, std::pair<i64, DirichletCharacter>>> fe_levels() {
    std::vector<std::pair<i64, std::pair<i64, DirichletCharacter>>> out;
    out.push_back({1, {1, principal_character(1)}});
    for (const auto& chi : primitive_mod(5)) out.push_back({5, {5, chi}});
    for (const auto& chi : primitive_mod(3)) {
        out.push_back({6, {6, chi}});
        out.push_back({6, {3, chi}});
    }
    return out;
}

void criterion4(Criterion& cr) {
    const std::vector<cplx> s(df::kFeS.begin(), df::kFeS.end());
    for (const auto& [N, dc] : fe_levels()) {
        SeededPoints sp = seeded_points(N, {});
        keep_notes(cr, N, sp);
        const auto& [d, chi] = dc;
        add(cr.stated, checks::functional_equation(N, d, chi, {1, -1}, s, sp.points, IdentityForm::printed));
        add(cr.counterpart, checks::functional_equation(N, d, chi, {1, -1}, s, sp.points, IdentityForm::corrected));
    }
    cr.known_failure = odd_character;
}

void criterion5(Criterion& cr) {
    const LineFunction f = gaussian(1.0);
    std::vector<std::pair<i64, std::pair<i64, DirichletCharacter>>> levels = {{1, {1, principal_character(1)}}};
    for (const auto& chi : primitive_mod(5)) levels.push_back({5, {5, chi}});
    for (const auto& chi : primitive_mod(3)) levels.push_back({6, {3, chi}});
    for (const auto& [N, dc] : levels) {
        add(cr.stated, checks::intertwining(N, dc.first, dc.second, f, IdentityForm::printed));
        add(cr.counterpart, checks::intertwining(N, dc.first, dc.second, f, IdentityForm::corrected));
    }
    cr.known_failure = odd_character;
}

void criterion6(Criterion& cr) {
    const LineFunction f = gaussian(1.0);
    const NilFunction F4 = checks::generic_element(4, f);
    const NilFunction F5 = checks::generic_element(5, f);
    add(cr.stated, checks::hecke_composition(F4, 2, 3));
    add(cr.stated, checks::hecke_composition(F5, 2, 3));
    add(cr.stated, checks::r_fourth_power(F4));
    add(cr.stated, checks::r_fourth_power(F5));
    add(cr.stated, checks::adjoint_product(F5, 2));          // gcd 1: (1/m) F
    add(cr.stated, checks::adjoint_product_swapped(F5, 2));
    add(cr.stated, checks::adjoint_product(F4, 2));          // multi-term forms
    add(cr.stated, checks::adjoint_product_swapped(F4, 2));
    add(cr.stated, checks::non_normality(F4, 2));
    add(cr.stated, checks::adjoint_via_r(F4, 2));
    add(cr.stated, checks::adjoint_via_r(F5, 2));
}

void criterion7(Criterion& cr) {
    const LineFunction f = gaussian(1.0), g = make_test_function("gaussian:2");
    for (auto [N, d] : std::vector<std::pair<i64, i64>>{{1, 1}, {6, 2}, {6, 3}, {6, 6}})
        for (const auto& chi : enumerate_characters(d)) {
            add(cr.stated, checks::wb_isometry(N, d, chi, f, f));
            add(cr.stated, checks::wb_isometry(N, d, chi, f, g));
        }
    add(cr.stated, checks::gram(6, f));
    add(cr.stated, checks::block_leak(6, f));
}

void criterion8(Criterion& cr) {
    const LineFunction f = gaussian(1.0);
    const auto chars5 = primitive_mod(5);
    add(cr.stated, checks::dilation_hecke(1, 1, principal_character(1), 2, df::kDilationT, f));
    add(cr.stated, checks::dilation_hecke(5, 5, chars5.back(), 2, df::kDilationT, f));
    add(cr.stated, checks::additive_permutation(5, 2, f));
    add(cr.stated, checks::additive_permutation(5, 3, f));
    add(cr.stated, checks::hecke_expansion(4, 1, principal_character(1), 2, f));
}

void criterion9(Criterion& cr) {
    add(cr.stated, checks::d_multiplier(gaussian(1.0), hermite1(1.0)));
    add(cr.stated, checks::mellin_gamma(1.0));
    add(cr.stated, checks::synthesis_round_trip(gaussian(1.0)));
    std::vector<Level> levels = {{1, 1, {principal_character(1)}}, {5, 5, primitive_mod(5)}};
    for (const auto& lv : levels)
        for (const auto& chi : lv.chars)
            for (int sign : {1, -1})
                for (double tau : df::kDeltaTaus) {
                    add(cr.stated, checks::delta_eigen(sign, lv.N, lv.d, chi, tau, df::kDeltaStep));
                    if (lv.N != 1) {
                        double h = df::kDeltaStep / static_cast<double>(lv.N);
                        add(cr.counterpart, checks::delta_eigen(sign, lv.N, lv.d, chi, tau, h));
                    }
                }
    cr.known_failure = [](const Check& c) { return c.identity == "delta_L_eigen" && c.parameters["N"] == 5; };
}

void criterion10(Criterion& cr) {
    add(cr.stated, checks::mellin_representation(gaussian(1.0), 0, IdentityForm::printed));
    add(cr.counterpart, checks::mellin_representation(gaussian(1.0), 0, IdentityForm::corrected));
    cr.known_failure = [](const Check& c) { return c.identity == "mellin_integral_representation"; };
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Worst tolerance check as "value < bound"; witnesses as "value > bound".
std::string summary(const std::vector<Check>& cs) {
    const Check* worst = nullptr;
    double worst_ratio = -1.0;
    for (const auto& c : cs) {
        double ratio = c.witness ? c.bound / c.value : c.value / c.bound;
        if (std::isnan(ratio)) ratio = INFINITY;
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst = &c;
        }
    }
    if (!worst) return "no checks";
    return std::to_string(cs.size()) + " checks, worst " + worst->identity + " " + fmt(worst->value) +
           (worst->witness ? " > " : " < ") + fmt(worst->bound);
}

bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.pass()) return false;
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> crits = {
        {1, "Gauss-sum closed form vs brute force", 5.0},
        {2, "scalar sanity values", 1.0},
        {3, "Hecke eigenfunctions", 20.0},
        {4, "functional equations", 30.0},
        {5, "R-intertwining", 10.0},
        {6, "operator identities on H_N", 10.0},
        {7, "Weil-Brezin isometry and orthogonality", 30.0},
        {8, "Hecke/dilation/additive structure", 15.0},
        {9, "spectral suite", 20.0},
        {10, "Mellin integral representation", 5.0},
    };
    const std::vector<std::function<void(Criterion&)>> runners = {criterion1, criterion2, criterion3, criterion4,
                                                                  criterion5, criterion6, criterion7, criterion8,
                                                                  criterion9, criterion10};
    bool ok = true;
    for (std::size_t i = 0; i < crits.size(); ++i) {
        Criterion& cr = crits[i];
        auto t0 = std::chrono::steady_clock::now();
        runners[i](cr);
        cr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const bool in_time = cr.seconds < cr.budget_s;
        const bool pass = all_pass(cr.stated) && in_time;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << " ("
                  << summary(cr.stated) << "; " << fmt(cr.seconds) << " s of " << fmt(cr.budget_s) << " s)\n";
        for (const auto& n : cr.notes) std::cout << "    note: " << n << '\n';
        if (!in_time) {
            std::cout << "    over the runtime budget\n";
            ok = false;
        }
        bool only_known = true;
        for (const auto& c : cr.stated) {
            if (c.pass()) continue;
            bool known = cr.known_failure && cr.known_failure(c);
            only_known = only_known && known;
            std::cout << "    " << (known ? "known" : "UNEXPECTED") << ": " << brief(c) << '\n';
        }
        if (!cr.counterpart.empty()) {
            bool cp = all_pass(cr.counterpart);
            std::cout << "    corrected counterpart: " << (cp ? "PASS" : "FAIL") << " (" << summary(cr.counterpart)
                      << ")\n";
            for (const auto& c : cr.counterpart)
                if (!c.pass()) std::cout << "    counterpart failure: " << brief(c) << '\n';
            if (!all_pass(cr.stated)) ok = ok && only_known && cp;
            else if (cr.known_failure) {
                std::cout << "    documented discrepancy no longer reproduces\n";
                ok = false;
            }
        } else if (!all_pass(cr.stated)) {
            ok = false;
        }
    }
    std::cout << (ok ? "acceptance: all failures are documented discrepancies with passing corrected counterparts\n"
                     : "acceptance: unexpected result\n");
    return ok ? 0 : 1;
}
