#include "lerch/weil_brezin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lerch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double x) {
    x -= std::floor(x);
    return std::polar(1.0, kTwoPi * x);
}

double parse_param(const std::string& name, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(v > 0.0)) throw std::invalid_argument("bad parameter in test function '" + name + "'");
    return v;
}

// sum_j w(j) f(j step + offset) e^{2 pi i j step a}, truncated from the decay envelope.
template <class Weight>
cplx lattice_sum(const LineFunction& f, double step, double offset, double a, double tol, const Weight& w) {
    auto term = [&](i64 j) {
        cplx wj = w(j);
        if (wj == 0.0) return cplx(0.0);
        double jd = static_cast<double>(j);
        return wj * f(jd * step + offset) * unit_phase(jd * step * a);
    };
    auto [lo, hi] = f.decay.window(0.1 * tol);
    double j1 = (lo - offset) / step, j2 = (hi - offset) / step;
    if (j1 > j2) std::swap(j1, j2);
    const auto jlo = static_cast<i64>(std::ceil(j1));
    const auto jhi = static_cast<i64>(std::floor(j2));
    cplx acc = 0.0;
    for (i64 j = jlo; j <= jhi; ++j) acc += term(j);
    if (f.decay.kind != Decay::Kind::adaptive) return acc;
    // Unknown envelope: keep going until several consecutive samples are negligible.
    for (int dir : {-1, 1}) {
        i64 j = dir < 0 ? jlo - 1 : jhi + 1;
        int quiet = 0;
        for (int guard = 0; guard < 1000000 && quiet < 4; ++guard, j += dir) {
            double jd = static_cast<double>(j);
            bool small = std::abs(f(jd * step + offset)) < 0.1 * tol;
            quiet = small ? quiet + 1 : 0;
            acc += term(j);
        }
    }
    return acc;
}

Decay merged_envelope(const std::vector<std::pair<cplx, Decay>>& parts) {
    bool same_gaussian = true;
    for (const auto& [w, e] : parts)
        if (e.kind != Decay::Kind::gaussian || e.center != parts.front().second.center) same_gaussian = false;
    if (same_gaussian) {
        double width = parts.front().second.width, amp = 0.0;
        for (const auto& [w, e] : parts) {
            width = std::min(width, e.width);
            amp += std::abs(w) * e.amplitude;
        }
        return Decay::gaussian(width, amp, parts.front().second.center);
    }
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& [w, e] : parts) {
        auto [l, h] = e.window(1e-16);
        lo = first ? l : std::min(lo, l);
        hi = first ? h : std::max(hi, h);
        first = false;
    }
    return Decay::adaptive(0.5 * (hi - lo), 0.5 * (hi + lo));
}

}  // namespace

Decay Decay::gaussian(double width, double amplitude, double center) {
    if (!(width > 0.0)) throw std::invalid_argument("Decay: gaussian width must be positive");
    Decay d;
    d.kind = Kind::gaussian;
    d.width = width;
    d.amplitude = amplitude;
    d.center = center;
    return d;
}

Decay Decay::compact(double radius, double center) {
    Decay d;
    d.kind = Kind::compact;
    d.radius = radius;
    d.center = center;
    return d;
}

Decay Decay::adaptive(double radius, double center) {
    Decay d;
    d.kind = Kind::adaptive;
    d.radius = radius;
    d.center = center;
    return d;
}

std::pair<double, double> Decay::window(double tol) const {
    switch (kind) {
        case Kind::gaussian: {
            if (amplitude <= tol) return {center, center};
            double r = std::sqrt(std::log(amplitude / tol) / (kPi * width));
            return {center - r, center + r};
        }
        case Kind::compact:
        case Kind::adaptive:
            return {center - radius, center + radius};
    }
    return {center, center};
}

Decay Decay::translated(double shift) const {
    Decay d = *this;
    d.center -= shift;
    return d;
}

Decay Decay::dilated(double t) const {
    Decay d = *this;
    d.center /= t;
    d.width *= t * t;
    d.amplitude *= std::sqrt(std::abs(t));
    d.radius /= std::abs(t);
    return d;
}

Decay Decay::scaled(double factor) const {
    Decay d = *this;
    d.amplitude *= std::abs(factor);
    return d;
}

Decay Decay::mirrored() const {
    Decay d = *this;
    d.center = -d.center;
    return d;
}

LineFunction gaussian(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("gaussian: t must be positive");
    LineFunction f;
    f.eval = [t](double x) { return cplx(std::exp(-kPi * t * x * x), 0.0); };
    f.deriv = [t](double x) { return cplx(-2.0 * kPi * t * x * std::exp(-kPi * t * x * x), 0.0); };
    f.decay = Decay::gaussian(t);
    f.spectrum = Decay::gaussian(1.0 / t, 1.0 / std::sqrt(t));
    f.parity = Parity::even;
    f.label = "gaussian:" + std::to_string(t);
    return f;
}

LineFunction hermite1(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("hermite1: t must be positive");
    LineFunction f;
    f.eval = [t](double x) { return cplx(x * std::exp(-kPi * t * x * x), 0.0); };
    f.deriv = [t](double x) { return cplx((1.0 - 2.0 * kPi * t * x * x) * std::exp(-kPi * t * x * x), 0.0); };
    const double e = std::numbers::e;
    f.decay = Decay::gaussian(0.5 * t, 1.0 / std::sqrt(kPi * t * e));
    f.spectrum = Decay::gaussian(0.5 / t, 1.0 / (t * std::sqrt(kPi * e)));
    f.parity = Parity::odd;
    f.label = "hermite1:" + std::to_string(t);
    return f;
}

LineFunction bump(double w) {
    if (!(w > 0.0)) throw std::invalid_argument("bump: w must be positive");
    LineFunction f;
    f.eval = [w](double x) {
        double u = x / w;
        if (std::abs(u) >= 1.0) return cplx(0.0);
        return cplx(std::exp(-1.0 / (1.0 - u * u)), 0.0);
    };
    f.deriv = [w](double x) {
        double u = x / w;
        if (std::abs(u) >= 1.0) return cplx(0.0);
        double q = 1.0 - u * u;
        return cplx(std::exp(-1.0 / q) * (-2.0 * u / (w * q * q)), 0.0);
    };
    f.decay = Decay::compact(w);
    f.spectrum = Decay::adaptive(16.0 / w);
    f.parity = Parity::even;
    f.label = "bump:" + std::to_string(w);
    return f;
}

LineFunction make_test_function(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown test function '" + name + "'");
    std::string kind = name.substr(0, colon);
    double p = parse_param(name, name.substr(colon + 1));
    LineFunction f;
    if (kind == "gaussian")
        f = gaussian(p);
    else if (kind == "hermite1")
        f = hermite1(p);
    else if (kind == "bump")
        f = bump(p);
    else
        throw std::invalid_argument("unknown test function '" + name + "'");
    f.label = name;
    return f;
}

bool decay_consistent(const LineFunction& f, double tol) {
    const Decay& e = f.decay;
    if (e.kind == Decay::Kind::adaptive) return true;
    auto [lo, hi] = e.window(tol);
    for (int k = 0; k < 16; ++k) {
        double step = 0.25 * (k + 1);
        for (double x : {lo - step, hi + step}) {
            double v = std::abs(f(x));
            if (e.kind == Decay::Kind::compact && v != 0.0) return false;
            if (e.kind == Decay::Kind::gaussian && v > tol) return false;
        }
    }
    if (e.kind == Decay::Kind::gaussian) {
        for (int k = -32; k <= 32; ++k) {
            double x = e.center + 0.173 * k;
            double bound = e.amplitude * std::exp(-kPi * e.width * (x - e.center) * (x - e.center));
            if (std::abs(f(x)) > bound * (1.0 + 1e-12) + 1e-300) return false;
        }
    }
    return true;
}

double wb_normalization(i64 N, i64 d) {
    const i64 aN = N < 0 ? -N : N;
    return std::sqrt(static_cast<double>(aN) / static_cast<double>(totient(d)));
}

NilFunction wb_map(const LineFunction& f, i64 N, i64 d, const DirichletCharacter& chi, double tol) {
    if (N == 0) throw std::domain_error("wb_map: N must be nonzero");
    const i64 aN = N < 0 ? -N : N;
    if (d <= 0 || aN % d != 0) throw std::domain_error("d must divide |N|");
    if (chi.modulus() != d) throw std::domain_error("wb_map: character modulus must equal d");
    const double q = static_cast<double>(N / d);
    const double scale = wb_normalization(N, d);
    std::vector<cplx> table(static_cast<std::size_t>(d));
    for (i64 j = 0; j < d; ++j) table[static_cast<std::size_t>(j)] = chi(j);
    auto backing = std::make_shared<Backing>();
    backing->kind = Backing::Kind::multiplicative;
    backing->f = f;
    backing->N = N;
    backing->d = d;
    backing->chi = chi;
    const double Nd = static_cast<double>(N);
    return NilFunction::trusted(
        N,
        [f, q, Nd, d, scale, table, tol](double a, double c) {
            auto w = [&](i64 j) { return table[static_cast<std::size_t>(mod(j, d))]; };
            return scale * lattice_sum(f, q, Nd * c, a, tol, w);
        },
        "W_{" + std::to_string(N) + "," + std::to_string(d) + "}(" + f.label + ")", 0, std::move(backing));
}

NilFunction wb_map(const LineFunction& f, double tol) { return wb_map(f, 1, 1, principal_character(1), tol); }

LineFunction wb_inverse(const NilFunction& F) {
    if (const Backing* b = F.backing()) return b->f;
    if (F.central_index() != 1) throw std::invalid_argument("wb_inverse: unbacked functions are supported only for N = 1");
    LineFunction g;
    g.eval = [F](double x) {
        const double n = std::floor(x);
        const double c = x - n;
        cplx prev = 0.0;
        for (int nodes = 32; nodes <= 8192; nodes *= 2) {
            cplx acc = 0.0;
            for (int i = 0; i < nodes; ++i) {
                double a = (i + 0.5) / nodes;
                acc += F.base(a, c) * unit_phase(-n * a);
            }
            acc /= static_cast<double>(nodes);
            if (nodes > 32 && std::abs(acc - prev) < 1e-13 * std::max(1.0, std::abs(acc))) return acc;
            prev = acc;
        }
        return prev;
    };
    g.decay = Decay::adaptive(6.0);
    g.spectrum = Decay::adaptive(6.0);
    g.label = "W^-1(" + F.label() + ")";
    return g;
}

NilFunction additive_brezin(const LineFunction& f, i64 N, i64 k, double tol) {
    if (N <= 0) throw std::domain_error("additive_brezin: N must be positive");
    if (k < 0 || k >= N) throw std::domain_error("additive_brezin: k must lie in [0, N)");
    auto backing = std::make_shared<Backing>();
    backing->kind = Backing::Kind::additive;
    backing->f = f;
    backing->N = N;
    backing->k = k;
    const double Nd = static_cast<double>(N);
    return NilFunction::trusted(
        N,
        [f, N, k, Nd, tol](double a, double c) {
            auto w = [&](i64 n) { return root_of_unity(mod(k * n, N), N); };
            return lattice_sum(f, 1.0, Nd * c, a, tol, w);
        },
        "W_" + std::to_string(N) + "(psi_" + std::to_string(k) + ")(" + f.label + ")", 0, std::move(backing));
}

LineFunction schrodinger_act(const LineFunction& f, double lambda, const HeisenbergElement& h) {
    if (lambda == 0.0) throw std::domain_error("schrodinger_act: lambda must be nonzero");
    auto [a, c, z] = h;
    LineFunction g;
    const cplx central = unit_phase(lambda * z);
    const double shift = lambda * c;
    g.eval = [f, a, shift, central](double x) { return unit_phase(a * x) * f(x + shift) * central; };
    if (f.has_derivative())
        g.deriv = [f, a, shift, central](double x) {
            return unit_phase(a * x) * central * (cplx(0.0, kTwoPi * a) * f(x + shift) + f.deriv(x + shift));
        };
    g.decay = f.decay.translated(shift);
    g.spectrum = f.spectrum.translated(-a);
    g.parity = (a == 0.0 && shift == 0.0) ? f.parity : Parity::none;
    g.label = "S(" + f.label + ")";
    return g;
}

LineFunction line_dilate(const LineFunction& f, double t) {
    if (t == 0.0) throw std::domain_error("line_dilate: t must be nonzero");
    LineFunction g;
    const double amp = std::sqrt(std::abs(t));
    g.eval = [f, t, amp](double x) { return amp * f(t * x); };
    if (f.has_derivative()) g.deriv = [f, t, amp](double x) { return amp * t * f.deriv(t * x); };
    g.decay = f.decay.dilated(t);
    g.spectrum = f.spectrum.dilated(1.0 / t);
    g.parity = f.parity;
    g.label = "U(" + std::to_string(t) + ")" + f.label;
    return g;
}

LineFunction scale_argument(const LineFunction& f, double m) {
    if (m == 0.0) throw std::domain_error("scale_argument: m must be nonzero");
    LineFunction g;
    g.eval = [f, m](double x) { return f(m * x); };
    if (f.has_derivative()) g.deriv = [f, m](double x) { return m * f.deriv(m * x); };
    const double s = 1.0 / std::sqrt(std::abs(m));
    g.decay = f.decay.dilated(m).scaled(s);
    g.spectrum = f.spectrum.dilated(1.0 / m).scaled(s);
    g.parity = f.parity;
    g.label = f.label + "(" + std::to_string(m) + "x)";
    return g;
}

LineFunction line_combine(const std::vector<std::pair<cplx, LineFunction>>& terms) {
    if (terms.empty()) throw std::invalid_argument("line_combine: no terms");
    LineFunction g;
    g.eval = [terms](double x) {
        cplx acc = 0.0;
        for (const auto& [w, f] : terms) acc += w * f(x);
        return acc;
    };
    bool all_deriv = true;
    std::vector<std::pair<cplx, Decay>> env, spec;
    Parity parity = terms.front().second.parity;
    std::string label;
    for (const auto& [w, f] : terms) {
        all_deriv = all_deriv && f.has_derivative();
        env.emplace_back(w, f.decay);
        spec.emplace_back(w, f.spectrum);
        if (f.parity != parity) parity = Parity::none;
        label += (label.empty() ? "" : "+") + f.label;
    }
    if (all_deriv)
        g.deriv = [terms](double x) {
            cplx acc = 0.0;
            for (const auto& [w, f] : terms) acc += w * f.deriv(x);
            return acc;
        };
    g.decay = merged_envelope(env);
    g.spectrum = merged_envelope(spec);
    g.parity = parity;
    g.label = label;
    return g;
}

FourierValue fourier_transform(const LineFunction& f, double y, FourierConvention conv, double tol) {
    double sign = conv == FourierConvention::standard ? -1.0 : 1.0;
    auto [lo, hi] = f.decay.window(1e-3 * tol);
    if (f.decay.kind == Decay::Kind::adaptive) {
        // Grow the range until the edges are negligible.
        for (int i = 0; i < 40; ++i) {
            double edge = std::max(std::abs(f(lo)), std::abs(f(hi)));
            if (edge < 1e-3 * tol) break;
            double half = hi - lo;
            lo -= 0.5 * half;
            hi += 0.5 * half;
        }
    }
    if (hi <= lo) return {0.0, 0.0};
    auto g = [&](double x) { return f(x) * unit_phase(sign * x * y); };
    // Trapezoid with endpoint weights; the integrand is negligible at both ends.
    // The first level already resolves the kernel frequency plus the bandwidth of f,
    // otherwise aliased levels can agree with each other.
    auto [slo, shi] = f.spectrum.window(1e-3 * tol);
    const double band = std::abs(y) + std::max(std::abs(slo), std::abs(shi)) + 1.0;
    int n = 64;
    while (n < (1 << 22) && (hi - lo) / n > 0.25 / band) n *= 2;
    double h = (hi - lo) / n;
    cplx sum = 0.5 * (g(lo) + g(hi));
    for (int i = 1; i < n; ++i) sum += g(lo + i * h);
    cplx est = sum * h;
    double diff = std::numeric_limits<double>::infinity();
    for (int level = 0; level < 16; ++level) {
        cplx mid = 0.0;
        for (int i = 0; i < n; ++i) mid += g(lo + (i + 0.5) * h);
        sum += mid;
        n *= 2;
        h *= 0.5;
        cplx next = sum * h;
        diff = std::abs(next - est);
        est = next;
        if (level >= 1 && diff <= tol * std::max(1.0, std::abs(est))) break;
    }
    cplx value = est;
    double err = diff + 1e-3 * tol * (hi - lo);
    if (conv == FourierConvention::printed) {
        value /= std::sqrt(kTwoPi);
        err /= std::sqrt(kTwoPi);
    }
    return {value, err};
}

LineFunction fourier_line(const LineFunction& f, FourierConvention conv) {
    LineFunction g;
    g.eval = [f, conv](double y) { return fourier_transform(f, y, conv).value; };
    if (conv == FourierConvention::standard) {
        g.decay = f.spectrum;
        g.spectrum = f.decay.mirrored();
    } else {
        const double s = 1.0 / std::sqrt(kTwoPi);
        g.decay = f.spectrum.mirrored().scaled(s);
        g.spectrum = f.decay.scaled(s);
    }
    g.parity = f.parity;
    g.label = "F(" + f.label + ")";
    return g;
}

std::vector<LineFunction> additive_components(const NilFunction& F, int nodes) {
    const i64 N = F.central_index();
    if (N <= 0) throw std::domain_error("additive_components: N must be positive");
    if (nodes < 4) throw std::invalid_argument("additive_components: need at least 4 nodes");
    const double Nd = static_cast<double>(N);
    // g_r(n + N c) is the n-th Fourier coefficient of F(., c) for any n = r mod N.
    auto g = [F, N, Nd, nodes](i64 r, double x) {
        const double n = static_cast<double>(r) + Nd * std::round((x - static_cast<double>(r)) / Nd);
        const double c = (x - n) / Nd;
        cplx acc = 0.0;
        for (int i = 0; i < nodes; ++i) {
            double a = (i + 0.5) / nodes;
            acc += F.base(a, c) * unit_phase(-n * a);
        }
        return acc / static_cast<double>(nodes);
    };
    std::vector<LineFunction> out;
    for (i64 k = 0; k < N; ++k) {
        LineFunction fk;
        fk.eval = [g, N, k](double x) {
            cplx acc = 0.0;
            for (i64 r = 0; r < N; ++r) acc += root_of_unity(mod(-k * r, N), N) * g(r, x);
            return acc / static_cast<double>(N);
        };
        fk.decay = Decay::adaptive(4.0);
        fk.spectrum = Decay::adaptive(4.0);
        fk.label = "psi_" + std::to_string(k) + "(" + F.label() + ")";
        out.push_back(std::move(fk));
    }
    return out;
}

NilFunction dilation_additive(const NilFunction& F, double t, int nodes) {
    const i64 N = F.central_index();
    std::vector<std::pair<cplx, NilFunction>> terms;
    auto parts = additive_components(F, nodes);
    for (i64 k = 0; k < N; ++k)
        terms.emplace_back(1.0, additive_brezin(line_dilate(parts[static_cast<std::size_t>(k)], t), N, k));
    return combine(terms, "V(" + F.label() + ")");
}

NilFunction dilation_on_nil(const NilFunction& F, double t) {
    const Backing* b = F.backing();
    if (!b) return dilation_additive(F, t);
    if (b->kind == Backing::Kind::multiplicative) return wb_map(line_dilate(b->f, t), b->N, b->d, b->chi);
    return additive_brezin(line_dilate(b->f, t), b->N, b->k);
}

}  // namespace lerch
