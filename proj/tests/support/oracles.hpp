#pragma once

// Brute-force references used only by the tests. Nothing here calls the
// library's gcd, mediant, or tree walk; values are built from raw integers.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fsb/farey.hpp"

namespace fsb::oracle {

// Largest d dividing both, by trial division.
Int trial_gcd(Int a, Int b);

// Count of 1 <= j <= k with trial_gcd(j, k) == 1.
Int totient(Int k);

// Every a/b with 0 <= a <= b <= n, reduced, deduplicated, sorted. n <= 2000.
FareyRow farey_row(Int n);

// Smallest x in [0, b) with a*x ≡ 1 (mod b), b >= 2.
Int inverse_by_search(Int a, Int b);

// Exhaustive scan of every p/q with q <= max_den; ties to smaller q, then p.
std::pair<Int, Int> best_approximation(Int value_num, Int value_den, Int max_den);

// All vertices with path length <= max_len, generated by explicit recursion
// over bound pairs: value (num, den) -> "LR..." path.
std::map<std::pair<Int, Int>, std::string> tree_paths(int max_len);

} // namespace fsb::oracle
