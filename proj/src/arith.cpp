#include "lerch/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace lerch {

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be nonzero");
    n = std::llabs(n);
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 totient(i64 n) {
    if (n <= 0) throw std::domain_error("totient: n must be >= 1");
    i64 r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

int moebius(i64 n) {
    if (n <= 0) throw std::domain_error("moebius: n must be >= 1");
    int r = 1;
    for (auto [p, k] : factorize(n)) {
        if (k > 1) return 0;
        r = -r;
    }
    return r;
}

std::vector<i64> divisors(i64 n) {
    if (n == 0) throw std::domain_error("divisors: n must be nonzero");
    n = std::llabs(n);
    std::vector<i64> lo, hi;
    for (i64 k = 1; k * k <= n; ++k) {
        if (n % k) continue;
        lo.push_back(k);
        if (k != n / k) hi.push_back(n / k);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

}  // namespace lerch
