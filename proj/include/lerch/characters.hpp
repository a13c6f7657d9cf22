#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "lerch/arith.hpp"

namespace lerch {

using cplx = std::complex<double>;

// exp(2 pi i k / n); exact when k/n is a multiple of 1/4.
cplx root_of_unity(i64 k, i64 n);

struct Rational {
    i64 num = 0;
    i64 den = 1;
};

// Cyclic decomposition of (Z/dZ)* with canonical generators and discrete logs.
struct CharacterGroup {
    i64 modulus = 1;
    std::vector<i64> generators;  // residues mod d
    std::vector<i64> orders;
    i64 exponent = 1;              // lcm of orders
    std::vector<std::vector<int>> logs;  // logs[n] empty when gcd(n, d) > 1

    static std::shared_ptr<const CharacterGroup> get(i64 d);
};

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const CharacterGroup> group, std::vector<int> exponents);

    i64 modulus() const { return group_->modulus; }
    const std::vector<int>& exponents() const { return exponents_; }
    i64 conductor() const { return conductor_; }
    int parity() const { return parity_; }
    bool is_principal() const;
    bool is_primitive() const { return conductor_ == modulus(); }

    // chi(n) = exp(2 pi i phase(n) / order()); phase is -1 when gcd(n, d) > 1.
    i64 phase(i64 n) const { return phases_[static_cast<std::size_t>(mod(n, modulus()))]; }
    i64 order() const { return group_->exponent; }

    cplx operator()(i64 n) const;
    cplx value(Rational r) const;

    DirichletCharacter conj() const;

    // Rank in enumerate_characters(modulus()).
    std::size_t index() const;

    const CharacterGroup& group() const { return *group_; }

    bool operator==(const DirichletCharacter& o) const {
        return modulus() == o.modulus() && exponents_ == o.exponents_;
    }

    std::string describe() const;

private:
    std::shared_ptr<const CharacterGroup> group_;
    std::vector<int> exponents_;
    std::vector<i64> phases_;
    i64 conductor_ = 1;
    int parity_ = 1;
};

std::vector<DirichletCharacter> enumerate_characters(i64 d);
DirichletCharacter principal_character(i64 d);

// Character mod d given by its position in enumerate_characters(d).
DirichletCharacter character_by_index(i64 d, std::size_t index);

cplx char_value(const DirichletCharacter& chi, Rational r);

struct PrimitiveCore {
    DirichletCharacter chi;
    i64 conductor;
};
PrimitiveCore primitive_core(const DirichletCharacter& chi);

// Character mod d induced by the primitive character chi (mod e), e | d.
DirichletCharacter restrict(const DirichletCharacter& chi, i64 d);

enum class GaussPath { brute_force, closed_form_case_i, closed_form_case_ii };

struct GaussSumResult {
    cplx value;
    bool vanishes = false;
    GaussPath formula_path = GaussPath::brute_force;
};

GaussSumResult gauss_sum_bruteforce(const DirichletCharacter& chi, i64 m);
GaussSumResult gauss_sum_closed(const DirichletCharacter& primitive_chi, i64 d, i64 m);

// C_{N,d}(dt, chi) of the R-operator intertwining.
cplx fe_coefficient(i64 N, i64 d, i64 dt, const DirichletCharacter& primitive_chi);

}  // namespace lerch
