#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "lerch/nilmanifold.hpp"
#include "lerch/weil_brezin.hpp"

using namespace lerch;

namespace {

constexpr double kPi = std::numbers::pi;

NilFunction sample_element(i64 N) {
    const auto chars = enumerate_characters(N);
    return combine({{1.0, wb_map(gaussian(1.0), N, 1, principal_character(1))},
                    {cplx(0.4, -0.3), wb_map(hermite1(1.5), N, N, chars.back())},
                    {0.25, additive_brezin(gaussian(0.6), N, 1 % N)}});
}

bool close(const HeisenbergElement& g, const HeisenbergElement& h) {
    return std::abs(g[0] - h[0]) + std::abs(g[1] - h[1]) + std::abs(g[2] - h[2]) < 1e-13;
}

}  // namespace

TEST_CASE("constructor enforces twisted periodicity") {
    NilFunction G = wb_map(gaussian(1.0), 3, 1, principal_character(1));
    CHECK_NOTHROW(NilFunction(3, [G](double a, double c) { return G.base(a, c); }));
    CHECK_THROWS_AS(NilFunction(2, [G](double a, double c) { return G.base(a, c); }), std::invalid_argument);
    auto wrong = [](double a, double c) { return cplx(std::cos(2.0 * kPi * a) + c, 0.0); };
    CHECK_THROWS_AS(NilFunction(2, wrong), std::invalid_argument);
    // a step function carrying exactly the level-1 twist
    auto twist = [](double a, double c) { return std::exp(cplx(0.0, -2.0 * kPi * a * std::floor(c))); };
    CHECK_NOTHROW(NilFunction(1, twist));
}

TEST_CASE("Lerch L-functions lie in H_N") {
    LerchPoint p;
    p.s = {0.5, 1.3};
    for (i64 N : {1, 3, -4}) {
        p.N = N;
        p.d = 1;
        p.chi = principal_character(1);
        for (int sign : {1, -1}) {
            p.sign = sign;
            CHECK(periodicity_defect(lerch_nil(p)) < 1e-9);
        }
    }
}

TEST_CASE("z-dependence is the central character") {
    NilFunction F = sample_element(3);
    for (double z : {0.1, 0.77})
        CHECK(std::abs(F(0.3, 0.4, z) - std::exp(cplx(0.0, 2.0 * kPi * 3.0 * z)) * F.base(0.3, 0.4)) < 1e-13);
}

TEST_CASE("group law") {
    const HeisenbergElement g{0.3, -0.7, 0.2}, h{1.1, 0.4, -0.5}, k{-0.6, 2.0, 0.9}, e{0.0, 0.0, 0.0};
    CHECK(close(group_mul(group_mul(g, h), k), group_mul(g, group_mul(h, k))));
    CHECK(close(group_mul(g, e), g));
    CHECK(close(group_mul(e, g), g));
    // [a, c, z][a', c', z'] = [a + a', c + c', z + z' + c a']
    CHECK(close(group_mul(g, h), {1.4, -0.3, -0.3 - 0.7 * 1.1}));
    CHECK(close(beta(2.0, {0.8, 0.3, 0.1}), {0.4, 0.6, 0.1}));
}

TEST_CASE("right translation is a unitary representation") {
    NilFunction F = sample_element(2);
    const HeisenbergElement g{0.31, -0.17, 0.05}, h{0.2, 0.45, 0.3};
    // rho_g rho_h = rho_{g h}
    NilFunction lhs = heisenberg_act(heisenberg_act(F, h), g);
    NilFunction rhs = heisenberg_act(F, group_mul(g, h));
    CHECK(sup_difference(lhs, rhs) < 1e-12);
    CHECK(std::abs(norm(heisenberg_act(F, g)) - norm(F)) < 1e-9);
    // the center acts by the central character
    CHECK(sup_difference(heisenberg_act(F, {0.0, 0.0, 0.25}), combine({{std::exp(cplx(0.0, kPi)), F}})) < 1e-12);
}

TEST_CASE("R, J and T_m algebra") {
    for (i64 N : {1, 4, 5}) {
        CAPTURE(N);
        NilFunction F = sample_element(N);
        CHECK(sup_difference(r_inv(r_op(F)), F) < 1e-12);
        CHECK(sup_difference(r_op(r_inv(F)), F) < 1e-12);
        CHECK(sup_difference(r_op(r_op(r_op(r_op(F)))), F) < 1e-12);
        CHECK(sup_difference(j_op(j_op(F)), F) < 1e-12);
        CHECK(sup_difference(hecke(hecke(F, 2), 3), hecke(F, 6)) < 1e-12);
        CHECK(sup_difference(hecke(F, -1), r_op(r_op(F))) < 1e-12);
        CHECK(sup_difference(hecke(F, 1), F) < 1e-13);
        CHECK(periodicity_defect(hecke(F, 3)) < 1e-10);
        CHECK(periodicity_defect(hecke_adjoint(F, 2)) < 1e-10);
        CHECK(periodicity_defect(r_op(F)) < 1e-10);
    }
}

TEST_CASE("T_m* is the Hilbert adjoint of T_m") {
    NilFunction F = sample_element(4), G = combine({{1.0, wb_map(gaussian(2.0), 4, 2, principal_character(2))}});
    for (i64 m : {2, 3}) {
        cplx lhs = inner_product(hecke(F, m), G);
        cplx rhs = inner_product(F, hecke_adjoint(G, m));
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("coprime Hecke operators are scaled isometries") {
    NilFunction F = sample_element(5);
    CHECK(sup_difference(hecke_adjoint(hecke(F, 2), 2), combine({{0.5, F}})) < 1e-12);
    CHECK(std::abs(norm(hecke(F, 3)) - norm(F) / std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("quadrature rules agree") {
    NilFunction F = wb_map(gaussian(1.0));
    const double want = 1.0 / std::sqrt(2.0);  // integral of e^{-2 pi x^2}
    CHECK(std::abs(norm(F, QuadratureSpec::midpoint(128)) - std::sqrt(want)) < 1e-12);
    CHECK(std::abs(norm(F, QuadratureSpec::gauss(64)) - std::sqrt(want)) < 1e-10);
}

TEST_CASE("Heisenberg commutation of Hecke operators") {
    NilFunction F = sample_element(3);
    auto r = hecke_heisenberg_commutation_check(F, {0.13, 0.41, 0.07}, 2);
    CHECK(r.hecke < 1e-12);
    CHECK(r.adjoint < 1e-12);
}

TEST_CASE("grid CSV output") {
    std::ostringstream os;
    write_grid_csv(wb_map(gaussian(1.0)), 4, os);
    std::istringstream is(os.str());
    std::string line;
    int rows = 0;
    std::getline(is, line);
    CHECK(line == "a,c,re,im");
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 16);
}
