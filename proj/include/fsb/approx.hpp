#pragma once

#include "fsb/rational.hpp"

namespace fsb {

// Closest fraction to `value` (in [0, 1]) with denominator <= max_den.
//
// Descends the tree toward `value`; a run of steps is cut short as soon as the
// next vertex would need a denominator above max_den. The final bounds are
// the neighbors of `value` in F_max_den, so the answer is one of them (or an
// exact hit). Ties go to the smaller denominator, then the smaller numerator.
Fraction best_approximation(Fraction value, Int max_den);

} // namespace fsb
