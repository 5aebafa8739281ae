#pragma once

#include <span>
#include <vector>

#include "fsb/rational.hpp"

namespace fsb {

// Rows F_n use the standard indexing: F_n holds every reduced a/b in [0, 1]
// with b <= n, so F_1 = [0/1, 1/1] and F_2 = [0/1, 1/2, 1/1].
struct FareyRow {
    Int order = 1;
    std::vector<Fraction> terms;

    friend bool operator==(const FareyRow&, const FareyRow&) = default;
};

struct FareyLimits {
    Int max_order = 100000;
};

// F_{n+1} from F_n: copy the row and, between each consecutive a/b, c/d with
// b + d <= n + 1, insert (a+c)/(b+d).
FareyRow next_farey_row(const FareyRow& row);

// F_n built level by level from F_1 with next_farey_row. Cost is the sum of
// all intermediate row lengths (~n^3/10), so large orders should stream.
FareyRow farey_row(Int n, const FareyLimits& limits = {});

// The same insertion rule applied depth-first: between neighbors a/b, c/d the
// mediant is inserted iff b + d <= n. Terms are handed to `visit` in
// increasing order without materializing the row; memory is O(n).
template <class Visitor>
void for_each_farey_term(Int n, Visitor&& visit, const FareyLimits& limits = {});

// 1 + sum_{k<=n} phi(k), from a totient sieve.
Int farey_length(Int n, const FareyLimits& limits = {});

// Terms immediately left and right of f in F_n, computed from a modular
// inverse rather than by building the row.
NeighborPair farey_neighbors(Fraction f, Int n);

Int row_order(std::span<const Fraction> terms);
inline Int row_order(const FareyRow& row) { return row_order(row.terms); }

namespace detail {
void check_farey_order(Int n, const FareyLimits& limits);
}

template <class Visitor>
void for_each_farey_term(Int n, Visitor&& visit, const FareyLimits& limits) {
    detail::check_farey_order(n, limits);
    // Stack of pending right bounds; `lo` is the last emitted term.
    std::vector<Fraction> pending{Fraction::from_coprime(1, 1)};
    Fraction lo{};
    visit(lo);
    while (!pending.empty()) {
        const Fraction hi = pending.back();
        if (lo.den() + hi.den() <= n) {
            pending.push_back(Fraction::from_coprime(lo.num() + hi.num(), lo.den() + hi.den()));
        } else {
            pending.pop_back();
            visit(hi);
            lo = hi;
        }
    }
}

} // namespace fsb
