#include "lerch/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lerch {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool at_pole(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx lgamma_right(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx complex_lgamma(cplx z) {
    if (at_pole(z)) throw std::domain_error("Gamma pole at nonpositive integer");
    if (z.real() >= 0.5) return lgamma_right(z);
    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_right(1.0 - z);
}

cplx complex_gamma(cplx z) {
    if (at_pole(z)) throw std::domain_error("Gamma pole at nonpositive integer");
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 171.0) return std::tgamma(z.real());
    return std::exp(complex_lgamma(z));
}

double bernoulli_ratio(int k) {
    static const std::array<double, 61> table = [] {
        std::array<double, 61> t{};
        const double pi = std::numbers::pi;
        const double two_pi = 2.0 * pi;
        for (int j = 1; j <= 60; ++j) {
            double zeta;
            if (j == 1)
                zeta = pi * pi / 6.0;
            else if (j == 2)
                zeta = std::pow(pi, 4) / 90.0;
            else {
                zeta = 0.0;
                for (int n = 1000; n >= 1; --n) zeta += std::pow(static_cast<double>(n), -2.0 * j);
            }
            double v = 2.0 * zeta / std::pow(two_pi, 2.0 * j);
            t[static_cast<std::size_t>(j)] = (j % 2 == 1) ? v : -v;
        }
        return t;
    }();
    if (k < 1 || k > 60) throw std::out_of_range("bernoulli_ratio: k must be in [1, 60]");
    return table[static_cast<std::size_t>(k)];
}

}  // namespace lerch
