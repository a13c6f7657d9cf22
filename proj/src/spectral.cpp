#include "lerch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lerch/parallel.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/weil_brezin.hpp"

namespace lerch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double x) {
    x -= std::floor(x);
    return std::polar(1.0, kTwoPi * x);
}

cplx pow_pos(double x, cplx s) { return std::exp(s * std::log(x)); }

}  // namespace

MellinValue mellin(const LineFunction& f, int k, cplx s, double tol) {
    if (k != 0 && k != 1) throw std::invalid_argument("mellin: k must be 0 or 1");
    MellinValue out;
    const double sgn = k == 0 ? 1.0 : -1.0;
    auto g = [&](double x) { return f(x) + sgn * f(-x); };
    if (s.real() <= 0.0 && std::abs(g(0.0)) > 0.0) {
        out.value = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
        out.divergent = true;
        return out;
    }
    auto integrand = [&](double x) { return x > 0.0 ? g(x) * pow_pos(x, s - 1.0) : cplx(0.0); };
    QuadResult q;
    if (f.decay.kind == Decay::Kind::adaptive) {
        q = exp_sinh(integrand, tol);
    } else {
        auto [lo, hi] = f.decay.window(1e-3 * tol);
        double R = std::max(std::abs(lo), std::abs(hi));
        if (R <= 0.0) return out;
        q = tanh_sinh(integrand, 0.0, R, tol);
    }
    out.value = q.value;
    out.est_error = q.error;
    return out;
}

SpectralSample sample_mellin(const LineFunction& f, double T, double h) {
    if (!(h > 0.0) || T < 0.0) throw std::invalid_argument("sample_mellin: need h > 0 and T >= 0");
    const auto n = static_cast<std::size_t>(std::llround(2.0 * T / h)) + 1;
    SpectralSample out;
    out.step = h;
    out.entries.resize(2 * n);
    parallel_for(2 * n, [&](std::size_t i) {
        int k = static_cast<int>(i / n);
        double tau = -T + h * static_cast<double>(i % n);
        out.entries[i] = {k, tau, mellin(f, k, cplx(0.5, tau)).value};
    });
    return out;
}

cplx spectral_synthesis(const SpectralSample& samples, double x) {
    return spectral_synthesis(samples, x, samples.measure);
}

cplx spectral_synthesis(const SpectralSample& samples, double x, double measure) {
    if (samples.entries.empty() || x == 0.0) return 0.0;
    const double ax = std::abs(x);
    const double sx = x > 0.0 ? 1.0 : -1.0;
    // Trapezoid per parity slice; endpoints carry half weight.
    cplx acc = 0.0;
    for (int k : {0, 1}) {
        std::size_t first = samples.entries.size(), last = 0;
        for (std::size_t i = 0; i < samples.entries.size(); ++i)
            if (samples.entries[i].k == k) {
                first = std::min(first, i);
                last = std::max(last, i);
            }
        if (first > last) continue;
        for (std::size_t i = first; i <= last; ++i) {
            const SpectralEntry& e = samples.entries[i];
            double w = (i == first || i == last) ? 0.5 : 1.0;
            cplx term = e.value * pow_pos(ax, cplx(-0.5, -e.tau));
            acc += w * (k == 0 ? term : sx * term);
        }
    }
    return measure * samples.step * acc;
}

cplx line_inner(const LineFunction& f, const LineFunction& g, double tol) {
    auto [l1, h1] = f.decay.window(1e-3 * tol);
    auto [l2, h2] = g.decay.window(1e-3 * tol);
    double lo = std::max(l1, l2), hi = std::min(h1, h2);
    if (f.decay.kind == Decay::Kind::adaptive || g.decay.kind == Decay::Kind::adaptive) {
        lo = std::min(l1, l2);
        hi = std::max(h1, h2);
    }
    if (hi <= lo) return 0.0;
    auto q = tanh_sinh([&](double x) { return f(x) * std::conj(g(x)); }, lo, hi, tol);
    return q.value;
}

ParsevalReport parseval_check(const LineFunction& f, double T, double h) {
    ParsevalReport r;
    r.line_norm_sq = line_inner(f, f).real();
    SpectralSample s = sample_mellin(f, T, h);
    double acc = 0.0;
    const std::size_t n = s.entries.size() / 2;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        std::size_t j = i % n;
        double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        acc += w * std::norm(s.entries[i].value);
    }
    r.spectral_norm_sq = kMellinMeasure * h * acc;
    r.alt_spectral_norm_sq = kAltMellinMeasure * h * acc;
    return r;
}

LineFunction line_D_apply(const LineFunction& f) {
    if (!f.has_derivative()) throw std::invalid_argument("line_D_apply: derivative not available");
    LineFunction g;
    g.eval = [f](double x) { return x * f.deriv(x) + 0.5 * f(x); };
    auto [lo, hi] = f.decay.window(1e-17);
    g.decay = Decay::adaptive(0.5 * (hi - lo), 0.5 * (hi + lo));
    auto [slo, shi] = f.spectrum.window(1e-17);
    g.spectrum = Decay::adaptive(0.5 * (shi - slo), 0.5 * (shi + slo));
    g.parity = f.parity;
    g.label = "D(" + f.label + ")";
    return g;
}

double d_multiplier_residual(const LineFunction& f, int k, double tau) {
    LineFunction Df = line_D_apply(f);
    const cplx s(0.5, tau);
    cplx lhs = mellin(Df, k, s).value;
    cplx rhs = cplx(0.0, -tau) * mellin(f, k, s).value;
    return std::abs(lhs - rhs);
}

bool fd_near_singular(i64 N, double a, double c, double h) {
    const double n = static_cast<double>(N < 0 ? -N : N);
    auto near = [&](double x) { return std::abs(n * x - std::round(n * x)) <= 2.0 * n * h; };
    return near(a) || near(c);
}

NilFunction delta_L_apply(const NilFunction& F, DeltaMode mode, double h, DeltaForm form) {
    const i64 N = F.central_index();
    const double Nd = static_cast<double>(N);
    const double factor = form == DeltaForm::printed ? Nd : 1.0;
    if (mode == DeltaMode::exact) {
        const Backing* b = F.backing();
        if (!b) throw std::invalid_argument("delta_L_apply: exact mode needs a Weil-Brezin backed function");
        LineFunction Df = line_D_apply(b->f);
        NilFunction W = b->kind == Backing::Kind::multiplicative ? wb_map(Df, b->N, b->d, b->chi)
                                                                : additive_brezin(Df, b->N, b->k);
        if (factor == 1.0) return W;
        return combine({{factor, W}}, "Delta_L(" + F.label() + ")");
    }
    if (!(h > 0.0)) throw std::invalid_argument("delta_L_apply: step must be positive");
    const cplx mixed_coef = 1.0 / (cplx(0.0, kTwoPi) * Nd);
    return NilFunction::trusted(
        N,
        [F, h, mixed_coef, factor](double a, double c) {
            cplx fpp = F.base(a + h, c + h), fpm = F.base(a + h, c - h);
            cplx fmp = F.base(a - h, c + h), fmm = F.base(a - h, c - h);
            cplx dac = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            cplx dc = (F.base(a, c + h) - F.base(a, c - h)) / (2.0 * h);
            return factor * (mixed_coef * dac + c * dc + 0.5 * F.base(a, c));
        },
        "Delta_L(" + F.label() + ")", F.depth() + 1);
}

double delta_L_eigen_residual(const LerchPoint& p, const PointList& points, double h) {
    NilFunction L = lerch_nil(p);
    NilFunction DL = delta_L_apply(L, DeltaMode::fd, h);
    const cplx lambda = -(p.s - 0.5);
    double worst = 0.0;
    for (auto [a, c] : points) {
        if (fd_near_singular(p.N, a, c, h)) throw std::domain_error("delta_L_eigen_residual: stencil meets a singular line");
        cplx v = L.base(a, c);
        worst = std::max(worst, std::abs(DL.base(a, c) - lambda * v) / std::max(1.0, std::abs(v)));
    }
    return worst;
}

PointList cell_centers(i64 N, int n) {
    const i64 aN = N < 0 ? -N : N;
    PointList pts;
    auto coord = [&](int i) {
        if (aN < static_cast<i64>(n)) return (i + 0.5) / (n * static_cast<double>(aN));
        return (i + 0.5) / static_cast<double>(aN);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pts.emplace_back(coord(i), coord(j));
    return pts;
}

MellinRepresentation mellin_integral_representation(const LineFunction& f, int k, cplx s, double a, double c) {
    if (k != 0 && k != 1) throw std::invalid_argument("mellin_integral_representation: k must be 0 or 1");
    const LineFunction Ff = fourier_line(f);
    const double sgn = k == 0 ? 1.0 : -1.0;
    // W(U(t) f)(a, c): direct lattice sum for t >= 1, Poisson-dual sum for t < 1.
    auto theta = [&](double t, double aa, double cc) -> cplx {
        if (t >= 1.0) {
            auto [lo, hi] = f.decay.window(1e-18);
            auto n1 = static_cast<i64>(std::ceil(lo / t - cc)), n2 = static_cast<i64>(std::floor(hi / t - cc));
            cplx acc = 0.0;
            for (i64 n = n1; n <= n2; ++n) {
                double nd = static_cast<double>(n);
                acc += f(t * (nd + cc)) * unit_phase(nd * aa);
            }
            return std::sqrt(t) * acc;
        }
        auto [lo, hi] = Ff.decay.window(1e-18);
        auto m1 = static_cast<i64>(std::ceil(lo * t + aa)), m2 = static_cast<i64>(std::floor(hi * t + aa));
        cplx acc = 0.0;
        for (i64 m = m1; m <= m2; ++m) {
            double md = static_cast<double>(m);
            acc += unit_phase((md - aa) * cc) * Ff((md - aa) / t);
        }
        return acc / std::sqrt(t);
    };
    auto integrand = [&](double t) {
        if (t <= 0.0) return cplx(0.0);
        return (theta(t, a, c) + sgn * theta(t, -a, -c)) * pow_pos(t, s - 1.0);
    };
    QuadResult low = tanh_sinh(integrand, 0.0, 1.0, 1e-12);
    QuadResult high = exp_sinh([&](double u) { return integrand(1.0 + u); }, 1e-12);
    MellinRepresentation r;
    r.integral = low.value + high.value;
    const int sign = k == 0 ? 1 : -1;
    const cplx sh = s + 0.5;
    r.shifted_rhs = mellin(f, k, sh).value * lerch_pm(sign, sh, a, c).value;
    r.half_rhs = 0.5 * mellin(f, k, s).value * lerch_pm(sign, s, a, c).value;
    return r;
}

}  // namespace lerch
