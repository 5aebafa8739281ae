#pragma once

/**
 * The Stern-Brocot tree restricted to [0, 1].
 *
 * Levels start from S_0 = {0/1, 1/1}; S_{k+1} adds the mediant of every
 * adjacent pair of S_k. As a binary tree the root is 1/2 and each vertex v,
 * created between bounds (lo, hi), has left child lo ⊕ v and right child
 * v ⊕ hi. The endpoints 0/1 and 1/1 are bounds only, never vertices.
 *
 * Walking from the root is mediant bisection: compare the target with the
 * current vertex, step L (hi := vertex) or R (lo := vertex). The bound pair
 * keeps determinant 1 at every step, so each vertex is produced already
 * reduced.
 */

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fsb/rational.hpp"

namespace fsb {

enum class Step : char { L = 'L', R = 'R' };

class Path {
public:
    Path() = default;
    explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // Accepts only the letters L and R; the empty string is the root.
    static Path parse(std::string_view text);

    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    Step operator[](std::size_t i) const { return steps_[i]; }
    auto begin() const noexcept { return steps_.begin(); }
    auto end() const noexcept { return steps_.end(); }

    void push_back(Step s) { steps_.push_back(s); }
    void append(Step s, std::size_t count) { steps_.insert(steps_.end(), count, s); }
    void reserve(std::size_t n) { steps_.reserve(n); }

    std::string to_string() const;

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::vector<Step> steps_;
};

std::ostream& operator<<(std::ostream& os, const Path& path);

struct TreeLevel {
    int index = 0;
    std::vector<Fraction> values;
};

struct Children {
    Fraction left;
    Fraction right;

    friend bool operator==(const Children&, const Children&) = default;
};

struct TreeLimits {
    int max_level = 25;
    std::size_t max_path = 1'000'000;
};

// S_0 .. S_k.
std::vector<TreeLevel> build_levels(int k, const TreeLimits& limits = {});

// S_k' : mediants of adjacent elements of S_k, i.e. the values new in S_{k+1}.
std::vector<Fraction> new_mediants(const TreeLevel& level);

Fraction decode(const Path& path, const TreeLimits& limits = {});

// Uses run-length fast-forward: a run of identical steps is sized with one
// division, so the cost is O(log(num + den)) plus the length of the output.
Path locate(Fraction f, const TreeLimits& limits = {});

// Bounds whose mediant first produces f.
NeighborPair creation_neighbors(Fraction f);

// Vertices from the root down to, not including, f.
std::vector<Fraction> ancestors(Fraction f, const TreeLimits& limits = {});

Children children(Fraction f);

// The (lo, hi) bound pair before every step of the walk to f, plus the final
// pair whose mediant is f. Size is path length + 1.
std::vector<NeighborPair> walk_bounds(Fraction f, const TreeLimits& limits = {});

// Vertices by depth, left to right; row d has 2^d entries and the children of
// rows[d][i] are rows[d+1][2i] and rows[d+1][2i+1].
std::vector<std::vector<Fraction>> tree_rows(int depth);

enum class RenderFormat { text, dot };

// Every vertex down to `depth` (root is depth 0), children in (left, right)
// order. Text is a pre-order listing indented two spaces per level; DOT is
// `digraph sb { ... }` with vertices in level order followed by edges.
void render_tree(std::ostream& os, int depth, RenderFormat format);
std::string render_tree(int depth, RenderFormat format);

constexpr int max_render_depth = 12;

} // namespace fsb
