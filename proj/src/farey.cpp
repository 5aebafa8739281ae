#include "fsb/farey.hpp"

#include <algorithm>
#include <string>

namespace fsb {

namespace detail {

void check_farey_order(Int n, const FareyLimits& limits) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "Farey order must be >= 1, got " + std::to_string(n));
    if (n > limits.max_order)
        throw Error(ErrorKind::LimitExceeded, "Farey order " + std::to_string(n) + " exceeds limit " +
                                                  std::to_string(limits.max_order));
}

} // namespace detail

FareyRow next_farey_row(const FareyRow& row) {
    const Int next_order = checked::add(row.order, 1);
    FareyRow next{next_order, {}};
    next.terms.reserve(row.terms.size() * 2);
    for (std::size_t i = 0; i < row.terms.size(); ++i) {
        const Fraction& left = row.terms[i];
        next.terms.push_back(left);
        if (i + 1 == row.terms.size()) break;
        const Fraction& right = row.terms[i + 1];
        if (left.den() + right.den() <= next_order) {
            // consecutive row terms have determinant 1, so the mediant is reduced
            const RawFraction m = mediant(left.raw(), right.raw());
            next.terms.push_back(Fraction::from_coprime(m.num, m.den));
        }
    }
    next.terms.shrink_to_fit();
    return next;
}

FareyRow farey_row(Int n, const FareyLimits& limits) {
    detail::check_farey_order(n, limits);
    FareyRow row{1, {Fraction{}, Fraction::from_coprime(1, 1)}};
    while (row.order < n) row = next_farey_row(row);
    return row;
}

Int farey_length(Int n, const FareyLimits& limits) {
    detail::check_farey_order(n, limits);
    std::vector<Int> phi(static_cast<std::size_t>(n) + 1);
    for (Int k = 0; k <= n; ++k) phi[k] = k;
    for (Int p = 2; p <= n; ++p) {
        if (phi[p] != p) continue; // composite, already touched by a smaller prime
        for (Int k = p; k <= n; k += p) phi[k] -= phi[k] / p;
    }
    Int total = 1;
    for (Int k = 1; k <= n; ++k) total = checked::add(total, phi[k]);
    return total;
}

NeighborPair farey_neighbors(Fraction f, Int n) {
    const Int a = f.num();
    const Int b = f.den();
    if (f == Fraction{} || f == Fraction::from_coprime(1, 1))
        throw Error(ErrorKind::Endpoint, to_string(f) + " is an endpoint of the row and has one neighbor");
    if (a > b) throw Error(ErrorKind::OutOfRange, to_string(f) + " is greater than 1");
    if (b > n)
        throw Error(ErrorKind::NotInRow, to_string(f) + " does not appear in F_" + std::to_string(n));

    // Left neighbor l/d satisfies a*d - b*l = 1, so d = a^{-1} mod b, pushed
    // as close to n as possible. The right neighbor r/e has e = -a^{-1} mod b.
    const Int inverse = extended_gcd(a, b).x;
    const Int left_den0 = inverse;
    const Int right_den0 = b - inverse;
    const Int left_den = left_den0 + (n - left_den0) / b * b;
    const Int right_den = right_den0 + (n - right_den0) / b * b;
    const Int left_num = checked::sub(checked::mul(a, left_den), 1) / b;
    const Int right_num = checked::add(checked::mul(a, right_den), 1) / b;
    return {Fraction::from_coprime(left_num, left_den), Fraction::from_coprime(right_num, right_den)};
}

Int row_order(std::span<const Fraction> terms) {
    Int order = 0;
    for (const Fraction& f : terms) order = std::max(order, f.den());
    return order;
}

} // namespace fsb
