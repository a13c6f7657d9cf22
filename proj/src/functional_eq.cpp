#include "lerch/functional_eq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lerch/parallel.hpp"
#include "lerch/weil_brezin.hpp"

namespace lerch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double x) {
    x -= std::floor(x);
    return std::polar(1.0, kTwoPi * x);
}

i64 abs_i(i64 n) { return n < 0 ? -n : n; }

void check_level(i64 N, i64 d, const DirichletCharacter& chi) {
    if (N == 0) throw std::domain_error("N must be nonzero");
    if (d <= 0 || abs_i(N) % d != 0) throw std::domain_error("d must divide |N|");
    if (!chi.is_primitive()) throw std::domain_error("character must be primitive");
    if (d % chi.modulus() != 0) throw std::domain_error("conductor must divide d");
}

cplx tau(const DirichletCharacter& chi) { return gauss_sum_bruteforce(chi, 1).value; }

bool near_lattice(double x) { return std::abs(x - std::round(x)) < kSeedMargin; }

}  // namespace

i64 DecompositionIndex::dimension_count() const {
    i64 total = 0;
    for (const auto& b : blocks) total += static_cast<i64>(b.members.size());
    return total;
}

DecompositionIndex coarse_decomposition(i64 N) {
    if (N == 0) throw std::domain_error("coarse_decomposition: N must be nonzero");
    DecompositionIndex idx;
    idx.N = N;
    for (i64 e : divisors(abs_i(N))) {
        for (const auto& chi : enumerate_characters(e)) {
            if (!chi.is_primitive()) continue;
            DecompositionBlock b{chi, e, {}};
            for (i64 d : divisors(abs_i(N)))
                if (d % e == 0) b.members.push_back(d);
            idx.blocks.push_back(std::move(b));
        }
    }
    return idx;
}

std::string to_string(IdentityForm form) { return form == IdentityForm::printed ? "printed" : "corrected"; }

PointList offset_grid(int n, double offset) {
    PointList pts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pts.emplace_back((i + offset) / n, (j + offset) / n);
    return pts;
}

NilFunction intertwine_rhs(i64 N, i64 d, const DirichletCharacter& primitive_chi, const LineFunction& f,
                           IdentityForm form) {
    check_level(N, d, primitive_chi);
    const i64 aN = abs_i(N);
    const i64 e = primitive_chi.modulus();
    cplx front = tau(primitive_chi) / std::sqrt(static_cast<double>(aN));
    if (form == IdentityForm::printed) front *= primitive_chi(-1);
    const LineFunction g = fourier_line(line_dilate(f, static_cast<double>(N)));
    const DirichletCharacter chibar = primitive_chi.conj();
    std::vector<std::pair<cplx, NilFunction>> terms;
    for (i64 dt : divisors(aN)) {
        if (dt % e != 0) continue;
        cplx coef = fe_coefficient(N, d, dt, primitive_chi);
        if (coef == 0.0) continue;
        terms.emplace_back(front * coef, wb_map(g, N, dt, restrict(chibar, dt)));
    }
    if (terms.empty()) return NilFunction::trusted(N, [](double, double) { return cplx(0.0); }, "0", 0);
    return combine(terms, "R-intertwining rhs");
}

double intertwine_residual(i64 N, i64 d, const DirichletCharacter& primitive_chi, const LineFunction& f,
                           const PointList& grid, IdentityForm form) {
    NilFunction lhs = r_op(wb_map(f, N, d, restrict(primitive_chi, d)));
    NilFunction rhs = intertwine_rhs(N, d, primitive_chi, f, form);
    std::vector<double> diffs(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        auto [a, c] = grid[i];
        diffs[i] = std::abs(lhs.base(a, c) - rhs.base(a, c));
    });
    return diffs.empty() ? 0.0 : *std::max_element(diffs.begin(), diffs.end());
}

FeResidual fe_residual(int sign, i64 N, i64 d, const DirichletCharacter& primitive_chi, cplx s,
                       const PointList& points, IdentityForm form) {
    check_level(N, d, primitive_chi);
    const i64 aN = abs_i(N);
    const i64 e = primitive_chi.modulus();
    EvalResult g = gamma_pm(sign, s);
    cplx front = tau(primitive_chi) * std::exp((s - 1.0) * std::log(static_cast<double>(aN))) * g.value;
    if (form == IdentityForm::printed) front *= primitive_chi(-1);

    LerchPoint lhs_pt;
    lhs_pt.sign = sign;
    lhs_pt.N = N;
    lhs_pt.d = d;
    lhs_pt.chi = restrict(primitive_chi, d);
    lhs_pt.s = 1.0 - s;

    struct Term {
        cplx coef;
        LerchPoint pt;
    };
    std::vector<Term> terms;
    const DirichletCharacter chibar = primitive_chi.conj();
    for (i64 dt : divisors(aN)) {
        if (dt % e != 0) continue;
        cplx coef = fe_coefficient(N, d, dt, primitive_chi);
        if (coef == 0.0) continue;
        if (form == IdentityForm::corrected)
            coef *= std::sqrt(static_cast<double>(totient(d)) / static_cast<double>(totient(dt)));
        LerchPoint pt = lhs_pt;
        pt.d = dt;
        pt.chi = restrict(chibar, dt);
        pt.s = s;
        terms.push_back({front * coef, pt});
    }

    std::vector<double> abs_err(points.size()), lhs_mag(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        auto [a, c] = points[i];
        LerchPoint p = lhs_pt;
        p.a = -c;
        p.c = a;
        cplx lhs = unit_phase(-static_cast<double>(N) * a * c) * lerch_l(p).value;
        cplx rhs = 0.0;
        for (const Term& t : terms) {
            LerchPoint q = t.pt;
            q.a = a;
            q.c = c;
            rhs += t.coef * lerch_l(q).value;
        }
        abs_err[i] = std::abs(lhs - rhs);
        lhs_mag[i] = std::abs(lhs);
    });
    FeResidual r;
    double scale = 1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        r.absolute = std::max(r.absolute, abs_err[i]);
        scale = std::max(scale, lhs_mag[i]);
    }
    r.relative = r.absolute / scale;
    return r;
}

GramReport decomposition_gram(i64 N, const LineFunction& f, double f_norm_sq, const QuadratureSpec& q) {
    std::vector<GridSamples> samples;
    GramReport rep;
    for (i64 d : divisors(abs_i(N)))
        for (const auto& chi : enumerate_characters(d)) {
            samples.push_back(sample_grid(wb_map(f, N, d, chi), q));
            rep.labels.push_back("d=" + std::to_string(d) + " chi=" + std::to_string(chi.index()));
        }
    const std::size_t n = samples.size();
    rep.matrix.assign(n, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rep.matrix[i][j] = grid_inner(samples[i], samples[j]);
            double v = std::abs(rep.matrix[i][j] - (i == j ? cplx(f_norm_sq) : cplx(0.0)));
            if (i == j)
                rep.max_diagonal_error = std::max(rep.max_diagonal_error, v);
            else
                rep.max_off_diagonal = std::max(rep.max_off_diagonal, v);
        }
    return rep;
}

PermutationReport r_permutes_coarse_blocks(i64 N, const LineFunction& f, const QuadratureSpec& q) {
    DecompositionIndex idx = coarse_decomposition(N);
    // Orthonormal sample vectors per block, from Gaussians of widths 1 and 2 on every member.
    std::vector<std::vector<GridSamples>> bases(idx.blocks.size());
    for (std::size_t b = 0; b < idx.blocks.size(); ++b) {
        const auto& blk = idx.blocks[b];
        for (i64 d : blk.members)
            for (double t : {1.0, 2.0}) {
                GridSamples v = sample_grid(wb_map(gaussian(t), N, d, restrict(blk.chi, d)), q);
                for (const GridSamples& u : bases[b]) {
                    cplx pr = grid_inner(v, u);
                    for (std::size_t i = 0; i < v.values.size(); ++i) v.values[i] -= pr * u.values[i];
                }
                double nv = std::sqrt(std::max(0.0, grid_inner(v, v).real()));
                if (nv < 1e-8) continue;
                for (auto& x : v.values) x /= nv;
                bases[b].push_back(std::move(v));
            }
    }
    auto conj_block = [&](std::size_t b) {
        const DirichletCharacter cb = idx.blocks[b].chi.conj();
        for (std::size_t j = 0; j < idx.blocks.size(); ++j)
            if (idx.blocks[j].chi == cb) return j;
        throw std::logic_error("conjugate block missing");
    };

    PermutationReport rep;
    for (std::size_t b = 0; b < idx.blocks.size(); ++b) {
        const auto& blk = idx.blocks[b];
        for (i64 d : blk.members) {
            GridSamples img = sample_grid(r_op(wb_map(f, N, d, restrict(blk.chi, d))), q);
            double total = grid_inner(img, img).real();
            BlockLeak entry;
            entry.block = b;
            entry.member = d;
            entry.target = conj_block(b);
            double other = 0.0, mine = 0.0;
            for (std::size_t j = 0; j < bases.size(); ++j) {
                double mass = 0.0;
                for (const GridSamples& u : bases[j]) mass += std::norm(grid_inner(img, u));
                (j == entry.target ? mine : other) += mass;
            }
            entry.leak = total > 0.0 ? std::sqrt(other / total) : 0.0;
            entry.captured = total > 0.0 ? std::sqrt(mine / total) : 0.0;
            rep.max_leak = std::max(rep.max_leak, entry.leak);
            rep.entries.push_back(entry);
        }
    }
    return rep;
}

double hecke_eigen_residual(int sign, i64 N, i64 d, const DirichletCharacter& chi, cplx s,
                            const std::vector<i64>& ms, const PointList& points) {
    for (i64 m : ms)
        if (m <= 0 || gcd(m, N) != 1) throw std::invalid_argument("hecke_eigen_residual: m must be positive and coprime to N");
    LerchPoint p;
    p.sign = sign;
    p.N = N;
    p.d = d;
    p.chi = chi;
    p.s = s;
    NilFunction L = lerch_nil(p);
    double worst = 0.0;
    for (i64 m : ms) {
        if (m == 1) continue;
        NilFunction TL = hecke(L, m);
        cplx eig = chi(m) * std::exp(-s * std::log(static_cast<double>(m)));
        for (auto [a, c] : points) {
            cplx v = L.base(a, c);
            worst = std::max(worst, std::abs(TL.base(a, c) - eig * v) / std::max(1.0, std::abs(v)));
        }
    }
    return worst;
}

AdjointEigenReport adjoint_hecke_eigen_residual(int sign, i64 N, i64 d, const DirichletCharacter& chi, cplx s,
                                                i64 m, const PointList& points) {
    if (m <= 0 || gcd(m, N) != 1) throw std::invalid_argument("adjoint_hecke_eigen_residual: m must be positive and coprime to N");
    LerchPoint p;
    p.sign = sign;
    p.N = N;
    p.d = d;
    p.chi = chi;
    p.s = s;
    NilFunction L = lerch_nil(p);
    NilFunction TsL = hecke_adjoint(L, m);
    NilFunction TsTL = hecke_adjoint(hecke(L, m), m);
    AdjointEigenReport r;
    const double lm = std::log(static_cast<double>(m));
    r.reciprocal = std::conj(chi(m)) * std::exp(-(1.0 - s) * lm);
    r.printed = std::conj(chi(m)) * std::exp((1.0 - s) * lm);
    cplx num = 0.0;
    double den = 0.0;
    for (auto [a, c] : points) {
        cplx v = L.base(a, c), w = TsL.base(a, c);
        double scale = std::max(1.0, std::abs(v));
        num += std::conj(v) * w;
        den += std::norm(v);
        r.residual_reciprocal = std::max(r.residual_reciprocal, std::abs(w - r.reciprocal * v) / scale);
        r.residual_printed = std::max(r.residual_printed, std::abs(w - r.printed * v) / scale);
        r.product_residual =
            std::max(r.product_residual, std::abs(TsTL.base(a, c) - v / static_cast<double>(m)) / scale);
    }
    r.fitted = den > 0.0 ? num / den : cplx(0.0);
    return r;
}

SeededPoints seeded_points(i64 N, const std::vector<i64>& ms) {
    const double n = static_cast<double>(N);
    std::vector<i64> all = ms;
    all.push_back(1);
    // Every argument fed to L: (a, c), ((a + j)/m, m c), (m a, (c + k)/m), and (-c, a).
    auto bad_a = [&](double a) {
        for (i64 m : all) {
            double md = static_cast<double>(m);
            if (near_lattice(n * md * a)) return true;
            for (i64 j = 0; j < m; ++j)
                if (near_lattice(n * (a + static_cast<double>(j)) / md)) return true;
        }
        return false;
    };
    SeededPoints out;
    for (auto [a0, c0] : kSeedPoints) {
        double a = a0, c = c0;
        for (int guard = 0; guard < 200 && bad_a(a); ++guard) a += kSeedNudge;
        for (int guard = 0; guard < 200 && bad_a(c); ++guard) c += kSeedNudge;
        if (a != a0 || c != c0) {
            std::ostringstream os;
            os.precision(6);
            os << "(" << a0 << "," << c0 << ") -> (" << a << "," << c << ")";
            out.notes.push_back(os.str());
        }
        out.points.emplace_back(a, c);
    }
    return out;
}

}  // namespace lerch
