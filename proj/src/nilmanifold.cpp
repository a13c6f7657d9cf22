#include "lerch/nilmanifold.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include "lerch/parallel.hpp"
#include "lerch/quadrature.hpp"

namespace lerch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double x) {
    x -= std::floor(x);
    return std::polar(1.0, kTwoPi * x);
}

int next_depth(const NilFunction& F) {
    int d = F.depth() + 1;
    if (d > kDefaultDepthCap) throw std::length_error("operator composition exceeds depth cap");
    return d;
}

}  // namespace

NilFunction::NilFunction(i64 N, BaseEval base, std::string label) {
    if (N == 0) throw std::invalid_argument("NilFunction: central index 0 is not supported");
    N_ = N;
    base_ = std::make_shared<const BaseEval>(std::move(base));
    label_ = std::move(label);
    double defect = periodicity_defect(*this);
    if (!(defect <= 1e-6))
        throw std::invalid_argument("NilFunction: twisted periodicity violated (defect " + std::to_string(defect) + ")");
}

NilFunction NilFunction::trusted(i64 N, BaseEval base, std::string label, int depth,
                                 std::shared_ptr<const Backing> backing) {
    if (N == 0) throw std::invalid_argument("NilFunction: central index 0 is not supported");
    NilFunction F;
    F.N_ = N;
    F.base_ = std::make_shared<const BaseEval>(std::move(base));
    F.label_ = std::move(label);
    F.depth_ = depth;
    F.backing_ = std::move(backing);
    return F;
}

cplx NilFunction::operator()(double a, double c, double z) const {
    return unit_phase(static_cast<double>(N_) * z) * base(a, c);
}

double periodicity_defect(const NilFunction& F, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double N = static_cast<double>(F.central_index());
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double a = u(rng), c = u(rng);
        cplx v = F.base(a, c);
        double scale = std::max(1.0, std::abs(v));
        worst = std::max(worst, std::abs(F.base(a + 1.0, c) - v) / scale);
        worst = std::max(worst, std::abs(F.base(a, c + 1.0) - unit_phase(-N * a) * v) / scale);
    }
    return worst;
}

GridSamples sample_grid(const NilFunction& F, const QuadratureSpec& q) {
    if (q.nodes_a < 4 || q.nodes_c < 4) throw std::invalid_argument("QuadratureSpec: at least 4 nodes per axis");
    std::vector<double> xa, wa, xc, wc;
    auto nodes = [&](int n, std::vector<double>& x, std::vector<double>& w) {
        if (q.rule == QuadratureSpec::Rule::midpoint) {
            for (int i = 0; i < n; ++i) {
                x.push_back((i + 0.5) / n);
                w.push_back(1.0 / n);
            }
        } else {
            const GaussRule& g = gauss_legendre(n);
            x = g.nodes;
            w = g.weights;
        }
    };
    nodes(q.nodes_a, xa, wa);
    nodes(q.nodes_c, xc, wc);
    GridSamples out;
    out.N = F.central_index();
    out.values.resize(xa.size() * xc.size());
    out.weights.resize(out.values.size());
    parallel_for(xa.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < xc.size(); ++j) {
            out.values[i * xc.size() + j] = F.base(xa[i], xc[j]);
            out.weights[i * xc.size() + j] = wa[i] * wc[j];
        }
    });
    return out;
}

cplx grid_inner(const GridSamples& F, const GridSamples& G) {
    if (F.N != G.N) return 0.0;
    if (F.values.size() != G.values.size()) throw std::invalid_argument("grid_inner: grids differ");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < F.values.size(); ++i) acc += F.weights[i] * F.values[i] * std::conj(G.values[i]);
    return acc;
}

cplx inner_product(const NilFunction& F, const NilFunction& G, const QuadratureSpec& q) {
    if (F.central_index() != G.central_index()) return 0.0;
    return grid_inner(sample_grid(F, q), sample_grid(G, q));
}

double norm(const NilFunction& F, const QuadratureSpec& q) {
    return std::sqrt(std::max(0.0, inner_product(F, F, q).real()));
}

HeisenbergElement group_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
    return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[1] * h[0]};
}

NilFunction heisenberg_act(const NilFunction& F, const HeisenbergElement& h) {
    const double N = static_cast<double>(F.central_index());
    auto [ap, cp, zp] = h;
    return NilFunction::trusted(
        F.central_index(),
        [F, N, ap, cp, zp](double a, double c) { return unit_phase(N * (zp + c * ap)) * F.base(a + ap, c + cp); },
        "rho(" + F.label() + ")", next_depth(F));
}

NilFunction hecke(const NilFunction& F, i64 m) {
    if (m == 0) throw std::domain_error("hecke: m must be nonzero");
    const i64 am = m < 0 ? -m : m;
    const double md = static_cast<double>(m);
    return NilFunction::trusted(
        F.central_index(),
        [F, am, md](double a, double c) {
            cplx acc = 0.0;
            for (i64 j = 0; j < am; ++j) acc += F.base((a + static_cast<double>(j)) / md, md * c);
            return acc / static_cast<double>(am);
        },
        "T_" + std::to_string(m) + "(" + F.label() + ")", next_depth(F));
}

NilFunction hecke_adjoint(const NilFunction& F, i64 m) {
    if (m <= 0) throw std::domain_error("hecke_adjoint: m must be positive");
    const double md = static_cast<double>(m);
    const double N = static_cast<double>(F.central_index());
    return NilFunction::trusted(
        F.central_index(),
        [F, m, md, N](double a, double c) {
            cplx acc = 0.0;
            for (i64 k = 0; k < m; ++k) {
                double kd = static_cast<double>(k);
                acc += unit_phase(kd * N * a) * F.base(md * a, (c + kd) / md);
            }
            return acc / md;
        },
        "T*_" + std::to_string(m) + "(" + F.label() + ")", next_depth(F));
}

NilFunction r_op(const NilFunction& F) {
    const double N = static_cast<double>(F.central_index());
    return NilFunction::trusted(
        F.central_index(), [F, N](double a, double c) { return unit_phase(-N * a * c) * F.base(-c, a); },
        "R(" + F.label() + ")", next_depth(F));
}

NilFunction r_inv(const NilFunction& F) {
    const double N = static_cast<double>(F.central_index());
    return NilFunction::trusted(
        F.central_index(), [F, N](double a, double c) { return unit_phase(-N * a * c) * F.base(c, -a); },
        "R^-1(" + F.label() + ")", next_depth(F));
}

NilFunction j_op(const NilFunction& F) {
    return NilFunction::trusted(
        F.central_index(), [F](double a, double c) { return F.base(-a, -c); }, "J(" + F.label() + ")",
        next_depth(F));
}

NilFunction combine(const std::vector<std::pair<cplx, NilFunction>>& terms, std::string label) {
    if (terms.empty()) throw std::invalid_argument("combine: no terms");
    const i64 N = terms.front().second.central_index();
    int depth = 0;
    for (const auto& [w, F] : terms) {
        if (F.central_index() != N) throw std::invalid_argument("combine: central indices differ");
        depth = std::max(depth, F.depth());
    }
    if (depth + 1 > kDefaultDepthCap) throw std::length_error("operator composition exceeds depth cap");
    return NilFunction::trusted(
        N,
        [terms](double a, double c) {
            cplx acc = 0.0;
            for (const auto& [w, F] : terms)
                if (w != 0.0) acc += w * F.base(a, c);
            return acc;
        },
        label.empty() ? "combination" : std::move(label), depth + 1);
}

HeisenbergElement beta(double t, const HeisenbergElement& h) { return {h[0] / t, t * h[1], h[2]}; }

double sup_difference(const NilFunction& F, const NilFunction& G, int grid, double offset) {
    std::vector<double> row(static_cast<std::size_t>(grid), 0.0);
    parallel_for(row.size(), [&](std::size_t i) {
        double a = (static_cast<double>(i) + offset) / grid;
        for (int j = 0; j < grid; ++j) {
            double c = (j + offset) / grid;
            row[i] = std::max(row[i], std::abs(F.base(a, c) - G.base(a, c)));
        }
    });
    double worst = 0.0;
    for (double v : row) worst = std::max(worst, v);
    return worst;
}

CommutationResidual hecke_heisenberg_commutation_check(const NilFunction& F, const HeisenbergElement& h, i64 m,
                                                       int grid) {
    CommutationResidual r;
    const double md = static_cast<double>(m);
    r.hecke = sup_difference(heisenberg_act(hecke(F, m), h), hecke(heisenberg_act(F, beta(md, h)), m), grid);
    if (m > 0)
        r.adjoint = sup_difference(heisenberg_act(hecke_adjoint(F, m), h),
                                   hecke_adjoint(heisenberg_act(F, beta(1.0 / md, h)), m), grid);
    return r;
}

void write_grid_csv(const NilFunction& F, int n, std::ostream& out) {
    if (n <= 0) throw std::invalid_argument("grid size must be positive");
    std::vector<cplx> vals(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        for (int j = 0; j < n; ++j)
            vals[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                F.base(static_cast<double>(i) / n, static_cast<double>(j) / n);
    });
    out << "a,c,re,im\n";
    out.precision(12);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx v = vals[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
            out << static_cast<double>(i) / n << ',' << static_cast<double>(j) / n << ',' << v.real() << ','
                << v.imag() << '\n';
        }
}

}  // namespace lerch

namespace lerch {

NilFunction lerch_nil(const LerchPoint& p, double tol) {
    LerchPoint q = p;
    q.z = 0.0;
    std::string label = std::string("L") + (p.sign > 0 ? "+" : "-") + "_{" + std::to_string(p.N) + "," +
                        std::to_string(p.d) + "}";
    return NilFunction::trusted(
        p.N,
        [q, tol](double a, double c) {
            LerchPoint r = q;
            r.a = a;
            r.c = c;
            return lerch_l(r, tol).value;
        },
        label, 0);
}

}  // namespace lerch
