#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lerch/arith.hpp"
#include "lerch/characters.hpp"

using namespace lerch;

namespace {

// Smallest e | d such that chi(n) = 1 whenever n = 1 mod e and gcd(n, d) = 1.
i64 conductor_by_search(const DirichletCharacter& chi) {
    const i64 d = chi.modulus();
    for (i64 e : divisors(d)) {
        bool ok = true;
        for (i64 n = 1; n < d && ok; ++n)
            if (gcd(n, d) == 1 && n % e == 1 % e) ok = std::abs(chi(n) - 1.0) < 1e-12;
        if (ok) return e;
    }
    return d;
}

}  // namespace

TEST_CASE("arithmetic helpers") {
    CHECK(totient(1) == 1);
    CHECK(totient(36) == 12);
    CHECK(totient(97) == 96);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(gcd(7, 0) == 7);
    CHECK(mod(-3, 5) == 2);
}

TEST_CASE("character group structure") {
    for (i64 d = 1; d <= 40; ++d) {
        CAPTURE(d);
        auto chars = enumerate_characters(d);
        REQUIRE(static_cast<i64>(chars.size()) == totient(d));
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const auto& chi = chars[i];
            CHECK(chi.index() == i);
            CHECK(character_by_index(d, i) == chi);
            // orthogonality over n
            cplx sum = 0.0;
            for (i64 n = 0; n < d; ++n) sum += chi(n);
            CHECK(std::abs(sum - (chi.is_principal() ? static_cast<double>(totient(d)) : 0.0)) < 1e-9);
            CHECK(chi.conductor() == conductor_by_search(chi));
            CHECK(std::abs(chi(-1) - static_cast<double>(chi.parity())) < 1e-12);
        }
    }
}

TEST_CASE("characters are completely multiplicative") {
    for (i64 d : {8, 15, 21, 24}) {
        for (const auto& chi : enumerate_characters(d))
            for (i64 m = 0; m < d; ++m)
                for (i64 n = 0; n < d; ++n) CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-12);
    }
}

TEST_CASE("primitive core and restriction are inverse") {
    for (i64 d = 1; d <= 36; ++d)
        for (const auto& chi : enumerate_characters(d)) {
            PrimitiveCore pc = primitive_core(chi);
            CHECK(pc.chi.is_primitive());
            CHECK(pc.conductor == chi.conductor());
            CHECK(restrict(pc.chi, d) == chi);
        }
}

TEST_CASE("Gauss sums of small primitive characters") {
    const double r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
    // Real characters mod 3, 4, 5: tau = i sqrt3, 2i, sqrt5.
    auto real_nonprincipal = [](i64 d) {
        for (const auto& chi : enumerate_characters(d))
            if (!chi.is_principal() && std::abs(chi(2).imag()) < 1e-12) return chi;
        return principal_character(d);
    };
    CHECK(std::abs(gauss_sum_bruteforce(real_nonprincipal(3), 1).value - cplx(0.0, r3)) < 1e-12);
    CHECK(std::abs(gauss_sum_bruteforce(real_nonprincipal(4), 1).value - cplx(0.0, 2.0)) < 1e-12);
    CHECK(std::abs(gauss_sum_bruteforce(real_nonprincipal(5), 1).value - r5) < 1e-12);
    // Ramanujan sum: principal mod 12 at m = 4 is mu(3) phi(12)/phi(3) = -2.
    CHECK(std::abs(gauss_sum_bruteforce(principal_character(12), 4).value + 2.0) < 1e-12);
}

TEST_CASE("closed-form Gauss sum matches brute force") {
    for (i64 d = 1; d <= 30; ++d)
        for (const auto& chi : enumerate_characters(d)) {
            const auto core = primitive_core(chi).chi;
            for (i64 m = -d; m <= d; ++m) {
                auto closed = gauss_sum_closed(core, d, m);
                auto brute = gauss_sum_bruteforce(chi, m);
                CHECK(std::abs(closed.value - brute.value) < 1e-10);
                if (closed.vanishes) CHECK(std::abs(brute.value) < 1e-10);
            }
        }
}

TEST_CASE("twisting property of primitive Gauss sums") {
    // G(m, chi) = conj(chi)(m) tau(chi) for primitive chi
    for (i64 d : {5, 7, 8, 9, 12})
        for (const auto& chi : enumerate_characters(d)) {
            if (!chi.is_primitive()) continue;
            cplx tau = gauss_sum_bruteforce(chi, 1).value;
            CHECK(std::abs(std::norm(tau) - static_cast<double>(d)) < 1e-10);
            for (i64 m = 0; m < d; ++m)
                CHECK(std::abs(gauss_sum_bruteforce(chi, m).value - std::conj(chi(m)) * tau) < 1e-10);
        }
}

TEST_CASE("roots of unity") {
    for (i64 n : {1, 2, 5, 12})
        for (i64 k = -n; k <= 2 * n; ++k) {
            cplx w = root_of_unity(k, n);
            CHECK(std::abs(std::abs(w) - 1.0) < 1e-15);
            CHECK(std::abs(w - std::exp(cplx(0.0, 2.0 * std::numbers::pi * k / n))) < 1e-13);
        }
    CHECK(root_of_unity(1, 4) == cplx(0.0, 1.0));
}
