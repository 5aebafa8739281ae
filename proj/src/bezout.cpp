#include "fsb/bezout.hpp"

#include <string>
#include <utility>

#include "fsb/stern_brocot.hpp"

namespace fsb {

namespace {

void require_coprime(Int m, Int n) {
    if (m < 1 || n < 1)
        throw Error(ErrorKind::OutOfRange,
                    "Bezout inputs must be positive, got (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    const Int g = gcd(m, n);
    if (g != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                               ") = " + std::to_string(g));
}

} // namespace

BezoutCertificate bezout_via_tree(Int m, Int n) {
    require_coprime(m, n);
    if (m == n) return {m, n, 1, 0};
    if (m > n) {
        const BezoutCertificate swapped = bezout_via_tree(n, m);
        return {m, n, swapped.y, swapped.x};
    }
    const NeighborPair bounds = creation_neighbors(Fraction::from_coprime(m, n));
    return {m, n, bounds.left.den(), -bounds.left.num()};
}

BezoutCertificate bezout_via_euclid(Int m, Int n) {
    require_coprime(m, n);
    const ExtGcdResult r = extended_gcd(m, n);
    return {m, n, r.x, r.y};
}

bool verify_certificate(const BezoutCertificate& c) {
    return checked::add(checked::mul(c.m, c.x), checked::mul(c.n, c.y)) == 1;
}

} // namespace fsb
