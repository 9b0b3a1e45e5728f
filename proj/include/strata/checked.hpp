#pragma once

#include <cstdint>

#include "strata/errors.hpp"

namespace strata {

// 64-bit arithmetic that aborts loudly on overflow instead of wrapping.
// Every degree/dimension formula in the library goes through these, so a
// bad input can corrupt no inequality verdict.

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in addition");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in subtraction");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in multiplication");
    return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

// Floor division, exact for either sign of the numerator; b must be > 0.
inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace strata
