#include "lerch/characters.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lerch {

cplx root_of_unity(i64 k, i64 n) {
    k = mod(k, n);
    i64 g = std::gcd(k, n);
    k /= g;
    n /= g;
    if (n == 1) return {1.0, 0.0};
    if (n == 2) return {-1.0, 0.0};
    if (n == 4) return k == 1 ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
    double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(t), std::sin(t)};
}

namespace {

i64 powmod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b = mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

i64 smallest_primitive_root(i64 p, int k) {
    i64 q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    i64 phi = q / p * (p - 1);
    auto fac = factorize(phi);
    for (i64 g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool ok = true;
        for (auto [r, e] : fac)
            if (powmod(g, phi / r, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

// x = r mod q, x = 1 mod d/q.
i64 crt_lift(i64 r, i64 q, i64 d) {
    i64 rest = d / q;
    for (i64 x = mod(r, q); x < d; x += q)
        if (x % rest == 1 % rest) return x;
    throw std::logic_error("crt_lift failed");
}

std::shared_ptr<const CharacterGroup> build_group(i64 d) {
    auto G = std::make_shared<CharacterGroup>();
    G->modulus = d;
    G->logs.assign(static_cast<std::size_t>(d), {});

    struct Component {
        i64 q;
        std::vector<i64> gens;  // residues mod q
        std::vector<i64> orders;
        std::vector<std::vector<int>> logs;  // indexed by residue mod q
    };
    std::vector<Component> comps;
    std::vector<std::pair<i64, int>> fac;
    if (d > 1) fac = factorize(d);
    for (auto [p, k] : fac) {
        Component c;
        c.q = 1;
        for (int i = 0; i < k; ++i) c.q *= p;
        c.logs.assign(static_cast<std::size_t>(c.q), {});
        if (p != 2) {
            i64 g = smallest_primitive_root(p, k);
            i64 ord = c.q / p * (p - 1);
            c.gens = {g};
            c.orders = {ord};
            i64 x = 1;
            for (i64 j = 0; j < ord; ++j) {
                c.logs[static_cast<std::size_t>(x)] = {static_cast<int>(j)};
                x = x * g % c.q;
            }
        } else if (k == 1) {
            c.logs[1] = {};
        } else if (k == 2) {
            c.gens = {3};
            c.orders = {2};
            c.logs[1] = {0};
            c.logs[3] = {1};
        } else {
            i64 ord5 = c.q / 4;
            c.gens = {c.q - 1, 5};
            c.orders = {2, ord5};
            i64 x = 1;
            for (i64 j = 0; j < ord5; ++j) {
                c.logs[static_cast<std::size_t>(x)] = {0, static_cast<int>(j)};
                c.logs[static_cast<std::size_t>(c.q - x)] = {1, static_cast<int>(j)};
                x = x * 5 % c.q;
            }
        }
        comps.push_back(std::move(c));
    }

    for (const auto& c : comps)
        for (std::size_t j = 0; j < c.gens.size(); ++j) {
            G->generators.push_back(crt_lift(c.gens[j], c.q, d));
            G->orders.push_back(c.orders[j]);
            G->exponent = std::lcm(G->exponent, c.orders[j]);
        }

    for (i64 n = 0; n < d; ++n) {
        if (std::gcd(n, d) != 1) continue;
        std::vector<int> lg;
        for (const auto& c : comps) {
            if (c.gens.empty()) continue;
            const auto& l = c.logs[static_cast<std::size_t>(n % c.q)];
            lg.insert(lg.end(), l.begin(), l.end());
        }
        G->logs[static_cast<std::size_t>(n)] = std::move(lg);
    }
    return G;
}

bool is_unit(const CharacterGroup& G, i64 n) {
    return std::gcd(mod(n, G.modulus), G.modulus) == 1;
}

}  // namespace

std::shared_ptr<const CharacterGroup> CharacterGroup::get(i64 d) {
    if (d <= 0) throw std::domain_error("character modulus must be >= 1");
    static std::mutex mu;
    static std::map<i64, std::shared_ptr<const CharacterGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    auto G = build_group(d);
    cache.emplace(d, G);
    return G;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> group,
                                       std::vector<int> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& G = *group_;
    if (exponents_.size() != G.orders.size())
        throw std::invalid_argument("exponent vector length does not match group rank");
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        exponents_[j] = static_cast<int>(mod(exponents_[j], G.orders[j]));

    const i64 d = G.modulus;
    phases_.assign(static_cast<std::size_t>(d), -1);
    for (i64 n = 0; n < d; ++n) {
        if (!is_unit(G, n)) continue;
        const auto& lg = G.logs[static_cast<std::size_t>(n)];
        i64 ph = 0;
        for (std::size_t j = 0; j < lg.size(); ++j)
            ph += static_cast<i64>(exponents_[j]) * lg[j] * (G.exponent / G.orders[j]);
        phases_[static_cast<std::size_t>(n)] = mod(ph, G.exponent);
    }

    parity_ = phase(-1) == 0 ? 1 : -1;

    conductor_ = d;
    for (i64 f : divisors(d)) {
        bool ok = true;
        for (i64 n = 1; n < d && ok; n += f)
            if (is_unit(G, n) && phase(n) != 0) ok = false;
        if (ok) {
            conductor_ = f;
            break;
        }
    }
}

bool DirichletCharacter::is_principal() const {
    for (int e : exponents_)
        if (e) return false;
    return true;
}

cplx DirichletCharacter::operator()(i64 n) const {
    i64 ph = phase(n);
    if (ph < 0) return {0.0, 0.0};
    return root_of_unity(ph, order());
}

cplx DirichletCharacter::value(Rational r) const {
    if (r.den == 0) throw std::domain_error("character argument has zero denominator");
    if (r.num % r.den != 0) return {0.0, 0.0};
    return (*this)(r.num / r.den);
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<int> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = static_cast<int>(mod(-exponents_[j], group_->orders[j]));
    return DirichletCharacter(group_, std::move(e));
}

std::size_t DirichletCharacter::index() const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        idx = idx * static_cast<std::size_t>(group_->orders[j]) + static_cast<std::size_t>(exponents_[j]);
    return idx;
}

std::string DirichletCharacter::describe() const {
    std::ostringstream os;
    os << "chi mod " << modulus() << " [";
    for (std::size_t j = 0; j < exponents_.size(); ++j) os << (j ? "," : "") << exponents_[j];
    os << "] conductor " << conductor_;
    return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(i64 d) {
    auto G = CharacterGroup::get(d);
    std::size_t total = 1;
    for (i64 o : G->orders) total *= static_cast<std::size_t>(o);
    std::vector<DirichletCharacter> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) out.push_back(character_by_index(d, idx));
    return out;
}

DirichletCharacter principal_character(i64 d) {
    auto G = CharacterGroup::get(d);
    return DirichletCharacter(G, std::vector<int>(G->orders.size(), 0));
}

DirichletCharacter character_by_index(i64 d, std::size_t index) {
    auto G = CharacterGroup::get(d);
    std::size_t total = 1;
    for (i64 o : G->orders) total *= static_cast<std::size_t>(o);
    if (index >= total) throw std::out_of_range("character index out of range");
    std::vector<int> e(G->orders.size());
    for (std::size_t j = e.size(); j-- > 0;) {
        auto o = static_cast<std::size_t>(G->orders[j]);
        e[j] = static_cast<int>(index % o);
        index /= o;
    }
    return DirichletCharacter(G, std::move(e));
}

cplx char_value(const DirichletCharacter& chi, Rational r) { return chi.value(r); }

namespace {

// Character mod d whose value at each generator matches f(generator).
template <class PhaseOf>
DirichletCharacter from_generator_phases(i64 d, PhaseOf phase_of) {
    auto G = CharacterGroup::get(d);
    std::vector<int> e(G->orders.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
        auto [num, den] = phase_of(G->generators[j]);  // chi(g) = exp(2 pi i num/den)
        i64 x = num * G->orders[j];
        if (x % den != 0) throw std::logic_error("inconsistent character values");
        e[j] = static_cast<int>(mod(x / den, G->orders[j]));
    }
    return DirichletCharacter(G, std::move(e));
}

}  // namespace

PrimitiveCore primitive_core(const DirichletCharacter& chi) {
    const i64 d = chi.modulus();
    const i64 e = chi.conductor();
    auto core = from_generator_phases(e, [&](i64 h) {
        i64 n = h;
        while (std::gcd(n, d) != 1) n += e;
        return std::pair<i64, i64>{chi.phase(n), chi.order()};
    });
    return {core, e};
}

DirichletCharacter restrict(const DirichletCharacter& chi, i64 d) {
    const i64 e = chi.modulus();
    if (d <= 0 || d % e != 0) throw std::domain_error("restrict: modulus must divide d");
    return from_generator_phases(d, [&](i64 g) {
        return std::pair<i64, i64>{chi.phase(g), chi.order()};
    });
}

GaussSumResult gauss_sum_bruteforce(const DirichletCharacter& chi, i64 m) {
    const i64 d = chi.modulus();
    const i64 L = chi.order();
    cplx sum{0.0, 0.0};
    for (i64 k = 0; k < d; ++k) {
        i64 ph = chi.phase(k);
        if (ph < 0) continue;
        sum += root_of_unity(ph * d + mod(k * mod(m, d), d) * L, L * d);
    }
    GaussSumResult r;
    r.value = sum;
    r.vanishes = std::abs(sum) < 1e-9;
    r.formula_path = GaussPath::brute_force;
    return r;
}

GaussSumResult gauss_sum_closed(const DirichletCharacter& chi, i64 d, i64 m) {
    const i64 e = chi.modulus();
    if (!chi.is_primitive()) throw std::domain_error("gauss_sum_closed: character must be primitive");
    if (d <= 0 || d % e != 0) throw std::domain_error("gauss_sum_closed: conductor must divide d");
    const i64 g = gcd(m, d);
    const i64 mp = m / g;
    const i64 dp = d / g;
    GaussSumResult r;
    if (dp % e != 0) {
        r.value = {0.0, 0.0};
        r.vanishes = true;
        r.formula_path = GaussPath::closed_form_case_i;
    } else {
        double scale = static_cast<double>(totient(d)) / static_cast<double>(totient(dp)) *
                       moebius(dp / e);
        cplx tau = gauss_sum_bruteforce(chi, 1).value;
        r.value = scale * chi(dp / e) * std::conj(chi(mp)) * tau;
        r.vanishes = std::abs(r.value) < 1e-9;
        r.formula_path = GaussPath::closed_form_case_ii;
    }
#ifndef NDEBUG
    cplx bf = gauss_sum_bruteforce(restrict(chi, d), m).value;
    if (std::abs(bf - r.value) > 1e-9) throw std::logic_error("gauss_sum_closed disagrees with brute force");
#endif
    return r;
}

cplx fe_coefficient(i64 N, i64 d, i64 dt, const DirichletCharacter& chi) {
    if (N == 0) throw std::domain_error("fe_coefficient: N must be nonzero");
    const i64 aN = N < 0 ? -N : N;
    const i64 e = chi.modulus();
    if (!chi.is_primitive()) throw std::domain_error("fe_coefficient: character must be primitive");
    if (d <= 0 || aN % d != 0) throw std::domain_error("fe_coefficient: d must divide |N|");
    if (dt <= 0 || aN % dt != 0) throw std::domain_error("fe_coefficient: dt must divide |N|");
    if (d % e != 0) throw std::domain_error("fe_coefficient: conductor must divide d");
    const i64 dp = d / gcd(aN / dt, d);
    if (dp % e != 0) return {0.0, 0.0};
    const i64 num = N * dp;
    const i64 den = dt * d;
    if (num % den != 0) throw std::logic_error("fe_coefficient: non-integral character argument");
    double mag = std::sqrt(static_cast<double>(totient(dt)) / static_cast<double>(totient(d))) *
                 static_cast<double>(totient(d)) / static_cast<double>(totient(dp)) * moebius(dp / e);
    return mag * chi(dp / e) * std::conj(chi(num / den));
}

}  // namespace lerch
