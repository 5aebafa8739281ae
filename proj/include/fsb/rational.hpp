#pragma once

/**
 * Exact nonnegative fractions over 64-bit integers.
 *
 * Fraction is always stored in lowest terms with a positive denominator;
 * RawFraction keeps whatever representation it was given, which matters for
 * the mediant: (1/2) ⊕ (1/3) and (2/4) ⊕ (1/3) are different values.
 *
 * Every multiply/add on the hot paths goes through fsb::checked, so an
 * out-of-range input surfaces as ErrorKind::Overflow instead of a wrong
 * answer.
 */

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fsb/checked.hpp"

namespace fsb {

struct RawFraction {
    Int num = 0;
    Int den = 1;

    friend bool operator==(const RawFraction&, const RawFraction&) = default;
};

class Fraction {
public:
    constexpr Fraction() noexcept = default;

    constexpr Int num() const noexcept { return num_; }
    constexpr Int den() const noexcept { return den_; }

    constexpr RawFraction raw() const noexcept { return {num_, den_}; }

    // Skips reduction. Only for callers that already know gcd(num, den) = 1,
    // e.g. the mediant of a determinant-1 pair.
    static constexpr Fraction from_coprime(Int num, Int den) noexcept { return Fraction(num, den); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& p, const Fraction& q);

private:
    constexpr Fraction(Int num, Int den) noexcept : num_(num), den_(den) {}

    Int num_ = 0;
    Int den_ = 1;
};

struct ExtGcdResult {
    Int g = 0;
    Int x = 0;
    Int y = 0;

    friend bool operator==(const ExtGcdResult&, const ExtGcdResult&) = default;
};

// An ordered pair left < right with right.num*left.den - left.num*right.den = 1.
struct NeighborPair {
    Fraction left;
    Fraction right;

    friend bool operator==(const NeighborPair&, const NeighborPair&) = default;
};

Fraction make_fraction(Int num, Int den);
Fraction reduce(RawFraction f);

Int gcd(Int a, Int b);

// Canonical coefficients: 0 <= x < b/g whenever b/g > 1. When b/g <= 1 the
// residue class is trivial and we return (1, 0) if a == g, else (0, 1).
ExtGcdResult extended_gcd(Int a, Int b);

// Componentwise sum, no reduction.
RawFraction mediant(RawFraction p, RawFraction q);

std::strong_ordering compare(Fraction p, Fraction q);

// right.num*left.den - left.num*right.den; 1 exactly for Farey/tree neighbors.
Int determinant(RawFraction left, RawFraction right);
inline Int determinant(Fraction left, Fraction right) { return determinant(left.raw(), right.raw()); }

std::string to_string(Fraction f);
std::string to_string(RawFraction f);
std::ostream& operator<<(std::ostream& os, Fraction f);
std::ostream& operator<<(std::ostream& os, RawFraction f);

// "num/den", ASCII digits only, no whitespace. Unreduced input is reduced.
Fraction parse_fraction(std::string_view text);

// Plain decimal ("0.375", "1", ".5") read exactly as digits / 10^k.
Fraction parse_decimal(std::string_view text);

} // namespace fsb
