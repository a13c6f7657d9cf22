#include "lerch/scalar_lerch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lerch/quadrature.hpp"
#include "lerch/special.hpp"

namespace lerch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxBernoulli = 60;

const cplx kNaN{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};

// e^{2 pi i x} with x reduced mod 1 first.
cplx unit_phase(double x) {
    x -= std::floor(x);
    return std::polar(1.0, kTwoPi * x);
}

// x^{-s} for x > 0.
cplx real_pow_neg(double x, cplx s) {
    double l = std::log(x);
    return std::polar(std::exp(-s.real() * l), -s.imag() * l);
}

bool near_integer(double x, double eps) { return std::abs(x - std::round(x)) <= eps; }

struct TailPieces {
    cplx integral;
    double integral_error;
};

// int_M^inf e^{i beta t} (t + c)^{-s} dt with X = M + c.
TailPieces tail_integral(cplx s, double beta, double M, double X, double tol) {
    if (beta == 0.0) return {std::exp((1.0 - s) * std::log(X)) / (s - 1.0), 0.0};
    const double ab = std::abs(beta);
    const double sigma = beta > 0 ? 1.0 : -1.0;
    const cplx front = cplx(0.0, sigma) * unit_phase(beta * M / kTwoPi) * real_pow_neg(X, s);
    const double kappa = ab * X;
    if (kappa >= 2.0 * std::abs(s) + 60.0) {
        // Watson expansion of int_0^inf e^{-|beta| v} (1 + i sigma v / X)^{-s} dv.
        const cplx ratio(0.0, sigma / kappa);
        cplx term = 1.0, sum = 1.0;
        double last = 1.0;
        for (int j = 1; j < 200; ++j) {
            cplx next = term * (-(s + static_cast<double>(j - 1))) * ratio;
            if (std::abs(next) > std::abs(term)) break;
            term = next;
            sum += term;
            last = std::abs(term);
            if (last < 1e-3 * tol * std::abs(sum)) break;
        }
        cplx val = front * sum / ab;
        return {val, 2.0 * last * std::abs(front) / ab};
    }
    // Scaled variable v = u / X on the rotated ray t = M + i sigma u.
    auto f = [&](double v) { return std::exp(-kappa * v) * std::exp(-s * std::log(cplx(1.0, sigma * v))); };
    QuadResult q = exp_sinh(f, 1e-2 * tol);
    cplx val = front * X * q.value;
    return {val, std::abs(front) * X * q.error};
}

}  // namespace

bool LerchPoint::singular() const {
    return near_integer(static_cast<double>(N) * a, 1e-12) || near_integer(static_cast<double>(N) * c, 1e-12);
}

EvalResult lerch_zeta(cplx s, double a, double c, double tol) {
    if (!(c > 0.0)) throw std::domain_error("lerch_zeta: c must be positive");
    const double ar = a - std::round(a);
    if (ar == 0.0 && std::abs(s - 1.0) < kPoleRadius) return {kNaN, std::numeric_limits<double>::infinity(), true};

    if (s.real() < -1.0 && c <= 1.0) {
        // Lerch transformation to 1 - s, where the series has no cancellation.
        const double a0 = ar == 0.0 ? 1.0 : a - std::floor(a);
        const cplx w = 1.0 - s;
        const cplx iu(0.0, 1.0);
        const cplx base = complex_lgamma(w) - w * std::log(kTwoPi);
        const cplx f1 = std::exp(base + iu * kPi * w / 2.0) * unit_phase(-a0 * c);
        cplx f2 = std::exp(base - iu * kPi * w / 2.0) * unit_phase(c * (1.0 - a0));
        EvalResult z1 = lerch_zeta(w, -c, a0, tol);
        EvalResult z2;
        if (ar == 0.0) {
            // Hurwitz case: the second term becomes the periodic zeta sum_{n >= 1} e^{2 pi i n c} n^{-w}.
            f2 *= unit_phase(c);
            z2 = lerch_zeta(w, c, 1.0, tol);
        } else {
            z2 = lerch_zeta(w, c, 1.0 - a0, tol);
        }
        EvalResult r;
        r.value = f1 * z1.value + f2 * z2.value;
        r.est_error = std::abs(f1) * z1.est_error + std::abs(f2) * z2.est_error +
                      1e-14 * (std::abs(f1 * z1.value) + std::abs(f2 * z2.value));
        return r;
    }

    const double beta = kTwoPi * ar;
    const double ab = std::abs(beta);
    const double as = std::abs(s);

    // Cutoff for the Bernoulli remainder; switch to the Watson form of the integral when affordable.
    double X = std::max(8.0, (as + 40.0) / (0.6 * kTwoPi - ab));
    if (ab > 0.0) {
        double xw = (2.0 * as + 60.0) / ab;
        if (xw <= std::max(X, 400.0)) X = std::max(X, xw);
        // The rotated tail must start past the stationary point at t + c = Im(s) / beta.
        double drift = (beta > 0 ? s.imag() : -s.imag()) / ab;
        if (drift > 0.0) X = std::max(X, 2.0 * drift);
    }

    for (int attempt = 0; attempt < 8; ++attempt, X *= 2.0) {
        const double Mf = std::ceil(std::max(0.0, X - c));
        const auto M = static_cast<long>(Mf);
        const double XM = Mf + c;

        cplx head = 0.0;
        double head_abs = 0.0;
        for (long n = 0; n < M; ++n) {
            cplx t = unit_phase(ar * static_cast<double>(n)) * real_pow_neg(static_cast<double>(n) + c, s);
            head += t;
            head_abs += std::abs(t);
        }

        TailPieces tail = tail_integral(s, beta, Mf, XM, tol);

        // Derivatives of g(x) = (x + c)^{-s} at M: g_i = (-1)^i (s)_i X^{-s-i}.
        const int jmax = 2 * kMaxBernoulli;
        std::vector<cplx> g(static_cast<std::size_t>(jmax + 1));
        g[0] = real_pow_neg(XM, s);
        for (int i = 1; i <= jmax; ++i) g[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i - 1)] * (-(s + static_cast<double>(i - 1))) / XM;

        const cplx phaseM = unit_phase(ar * Mf);
        // G^{(j)}(M) for G(x) = e^{i beta x} g(x), without the phase factor.
        auto Gderiv = [&](int j) {
            cplx acc = 0.0;
            cplx ib_pow = 1.0;
            double binom = 1.0;
            for (int i = j; i >= 0; --i) {
                acc += binom * ib_pow * g[static_cast<std::size_t>(i)];
                ib_pow *= cplx(0.0, beta);
                binom = binom * i / (j - i + 1);
            }
            return acc;
        };

        cplx em = 0.5 * g[0];
        double last = std::numeric_limits<double>::infinity();
        bool converged = false;
        for (int k = 1; k <= kMaxBernoulli; ++k) {
            cplx term = -bernoulli_ratio(k) * Gderiv(2 * k - 1);
            double mag = std::abs(term);
            if (mag > last && k > 2) break;  // asymptotic divergence
            em += term;
            last = mag;
            double scale = std::max(1.0, std::abs(head + tail.integral + phaseM * em));
            if (mag <= 1e-2 * tol * scale) {
                converged = true;
                break;
            }
        }
        if (!converged && attempt < 7) continue;

        EvalResult r;
        r.value = head + tail.integral + phaseM * em;
        r.est_error = 2.0 * last + tail.integral_error + 8.0 * kEps * (head_abs + std::abs(r.value));
        return r;
    }
    throw std::runtime_error("lerch_zeta: tail expansion failed to converge");
}

EvalResult lerch_pm(int sign, cplx s, double a, double c, double tol) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("lerch_pm: sign must be +1 or -1");
    const double a0 = a - std::floor(a);
    const double kc = std::floor(c);
    const double c0 = c - kc;
    if (c0 == 0.0) throw std::domain_error("lerch_pm: c lies on a singular line (integer)");
    if (a0 == 0.0 && std::abs(s - 1.0) < kPoleRadius) return {kNaN, std::numeric_limits<double>::infinity(), true};

    EvalResult z1 = lerch_zeta(s, a0, c0, tol);
    EvalResult z2 = lerch_zeta(s, 1.0 - a0, 1.0 - c0, tol);
    const cplx twist = unit_phase(-a0);
    const cplx shift = unit_phase(-kc * a0);
    EvalResult r;
    r.value = shift * (z1.value + static_cast<double>(sign) * twist * z2.value);
    r.est_error = z1.est_error + z2.est_error;
    r.pole_flag = z1.pole_flag || z2.pole_flag;
    return r;
}

EvalResult lerch_l(const LerchPoint& p, double tol) {
    if (p.N == 0) throw std::domain_error("lerch_l: N must be nonzero");
    const i64 aN = p.N < 0 ? -p.N : p.N;
    if (p.d <= 0 || aN % p.d != 0) throw std::domain_error("d must divide |N|");
    if (p.chi.modulus() != p.d) throw std::domain_error("lerch_l: character modulus must equal d");

    const double Na = static_cast<double>(p.N) * p.a;
    const i64 q = p.N / p.d;
    EvalResult r;
    r.value = 0.0;
    for (i64 m = 0; m < p.d; ++m) {
        cplx chi_m = p.chi(m);
        if (chi_m == 0.0) continue;
        EvalResult t = lerch_pm(p.sign, p.s, Na, p.c + static_cast<double>(m) / static_cast<double>(p.d), tol);
        cplx w = chi_m * unit_phase(static_cast<double>(q * m) * p.a);
        r.value += w * t.value;
        r.est_error += t.est_error;
        r.pole_flag = r.pole_flag || t.pole_flag;
    }
    cplx pre = unit_phase(static_cast<double>(p.N) * p.z) * real_pow_neg(static_cast<double>(aN), p.s);
    if (p.N < 0 && p.sign < 0) pre = -pre;
    r.value *= pre;
    r.est_error *= std::abs(pre);
    return r;
}

EvalResult gamma_pm(int sign, cplx s) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("gamma_pm: sign must be +1 or -1");
    // Poles of the numerator Gamma and zeros (poles of the denominator Gamma).
    auto near_nonpos_int = [](cplx w) {
        double k = std::round(w.real());
        return k <= 0.0 && std::abs(w - k) < kPoleRadius;
    };
    cplx num = sign > 0 ? s / 2.0 : (s + 1.0) / 2.0;
    cplx den = sign > 0 ? (1.0 - s) / 2.0 : (2.0 - s) / 2.0;
    EvalResult r;
    if (near_nonpos_int(num)) {
        r.value = kNaN;
        r.pole_flag = true;
        return r;
    }
    if (near_nonpos_int(den)) {
        r.value = 0.0;
        r.pole_flag = true;
        return r;
    }
    cplx v = std::exp((0.5 - s) * std::log(kPi) + complex_lgamma(num) - complex_lgamma(den));
    r.value = sign > 0 ? v : cplx(0.0, -1.0) * v;
    r.est_error = 1e-14 * std::abs(r.value);
    return r;
}

}  // namespace lerch
