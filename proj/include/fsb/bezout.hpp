#pragma once

#include "fsb/rational.hpp"

namespace fsb {

// Integers x, y with m*x + n*y = 1.
struct BezoutCertificate {
    Int m = 1;
    Int n = 1;
    Int x = 1;
    Int y = 0;

    friend bool operator==(const BezoutCertificate&, const BezoutCertificate&) = default;
};

// From the tree: for m < n the left creation neighbor m1/n1 of m/n satisfies
// n1*m - m1*n = 1, so (x, y) = (n1, -m1) with 0 < x <= n and -m <= y <= 0.
// For m > n the roles are swapped; (1, 1) gives (1, 0).
BezoutCertificate bezout_via_tree(Int m, Int n);

// From extended_gcd, with its canonical 0 <= x < n convention.
BezoutCertificate bezout_via_euclid(Int m, Int n);

bool verify_certificate(const BezoutCertificate& c);

} // namespace fsb
