#pragma once

#include <complex>

#include "lerch/characters.hpp"

namespace lerch {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kPoleRadius = 1e-8;

struct EvalResult {
    cplx value;
    double est_error = 0.0;
    bool pole_flag = false;
};

struct LerchPoint {
    int sign = 1;  // +1 or -1, equivalently (-1)^k
    i64 N = 1;
    i64 d = 1;
    DirichletCharacter chi = principal_character(1);
    cplx s{0.5, 0.0};
    double a = 0.0;
    double c = 0.0;
    double z = 0.0;

    // N a or N c within 1e-12 of an integer.
    bool singular() const;
};

// sum_{n >= 0} e^{2 pi i n a} (n + c)^{-s}, continued in s.
EvalResult lerch_zeta(cplx s, double a, double c, double tol = kDefaultTol);

// zeta(s,a,c) + sign e^{-2 pi i a} zeta(s,1-a,1-c), for any real a and non-integral c.
EvalResult lerch_pm(int sign, cplx s, double a, double c, double tol = kDefaultTol);

// e^{2 pi i N z} sgn(N)^k |N|^{-s} sum_m chi(m) e^{2 pi i (N/d) m a} L^sign(s, N a, c + m/d).
EvalResult lerch_l(const LerchPoint& p, double tol = kDefaultTol);

EvalResult gamma_pm(int sign, cplx s);

}  // namespace lerch
