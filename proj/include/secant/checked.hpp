#pragma once

#include <cstdint>

#include "secant/error.hpp"

// Exact 64-bit arithmetic that throws Error(Overflow) instead of wrapping.

namespace secant {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "addition exceeds 64-bit range");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "subtraction exceeds 64-bit range");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "multiplication exceeds 64-bit range");
    return r;
}

/// C(n, 2) with the usual convention C(n, 2) = 0 for n < 2.
inline std::int64_t choose2(std::int64_t n)
{
    if (n < 2)
        return 0;
    // one of n, n-1 is even
    return n % 2 == 0 ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

/// C(n, k) for 0 <= k, computed incrementally; every partial product is an exact binomial.
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is exact because r == C(n - k + i - 1, i - 1)
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

}  // namespace secant
