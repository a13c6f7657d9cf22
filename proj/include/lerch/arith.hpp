#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lerch {

using i64 = std::int64_t;

// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 totient(i64 n);
int moebius(i64 n);

// Positive divisors of |n| in increasing order.
std::vector<i64> divisors(i64 n);

// Nonnegative gcd with gcd(m, 0) = |m|.
i64 gcd(i64 a, i64 b);

// Representative of n mod d in [0, d).
inline i64 mod(i64 n, i64 d) {
    i64 r = n % d;
    return r < 0 ? r + d : r;
}

}  // namespace lerch
