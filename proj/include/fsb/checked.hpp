#pragma once

#include <cstdint>

#include "fsb/error.hpp"

namespace fsb {

using Int = std::int64_t;

// 64-bit arithmetic that raises ErrorKind::Overflow instead of wrapping.
namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition overflow");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction overflow");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
    return r;
}

// a*b - c*d, the determinant shape that shows up in every neighbor test.
inline Int cross(Int a, Int b, Int c, Int d) { return sub(mul(a, b), mul(c, d)); }

} // namespace checked
} // namespace fsb
