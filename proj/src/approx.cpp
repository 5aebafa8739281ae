#include "fsb/approx.hpp"

#include <algorithm>
#include <string>

namespace fsb {

Fraction best_approximation(Fraction value, Int max_den) {
    if (max_den < 1) throw Error(ErrorKind::OutOfRange, "max_den must be >= 1");
    if (value.num() > value.den()) throw Error(ErrorKind::OutOfRange, to_string(value) + " is greater than 1");
    if (value.den() <= max_den) return value;

    // Same bisection bookkeeping as the tree walk: with target a/b,
    //   below = a*lo.den - b*lo.num = b*lo.den*(value - lo)
    //   above = b*hi.num - a*hi.den = b*hi.den*(hi - value)
    // and the vertex lo ⊕ hi sits above the target iff below < above.
    // value.den > max_den >= 1 keeps the target strictly inside (0, 1), and
    // the walk never lands on it because its denominator is too large.
    const Int a = value.num();
    const Int b = value.den();
    RawFraction lo{0, 1}, hi{1, 1};
    Int below = a;
    Int above = b - a;
    while (below != above && lo.den + hi.den <= max_den) {
        if (below < above) {
            const Int want = (above - 1) / below;
            const Int count = std::min(want, (max_den - hi.den) / lo.den);
            hi = {hi.num + count * lo.num, hi.den + count * lo.den};
            above -= count * below;
        } else {
            const Int want = (below - 1) / above;
            const Int count = std::min(want, (max_den - lo.den) / hi.den);
            lo = {lo.num + count * hi.num, lo.den + count * hi.den};
            below -= count * above;
        }
    }

    // lo and hi are now the neighbors of value in F_max_den. Since
    // hi.num*lo.den - lo.num*hi.den = 1, below <= b/hi.den and
    // above <= b/lo.den, so these products stay below b.
    const Int lo_error = checked::mul(below, hi.den); // ∝ value - lo
    const Int hi_error = checked::mul(above, lo.den); // ∝ hi - value
    const Fraction left = Fraction::from_coprime(lo.num, lo.den);
    const Fraction right = Fraction::from_coprime(hi.num, hi.den);
    if (lo_error != hi_error) return lo_error < hi_error ? left : right;
    if (lo.den != hi.den) return lo.den < hi.den ? left : right;
    return lo.num < hi.num ? left : right;
}

} // namespace fsb
