#include "fsb/stern_brocot.hpp"

#include <ostream>

namespace fsb {

namespace {

constexpr RawFraction zero{0, 1};
constexpr RawFraction one{1, 1};

void require_interior(Fraction f) {
    if (f.num() < 1 || f.num() >= f.den())
        throw Error(ErrorKind::OutOfRange, to_string(f) + " is not a tree vertex; need 0 < f < 1");
}

Fraction as_reduced(RawFraction f) { return Fraction::from_coprime(f.num, f.den); }

// Bisection state for target a/b strictly inside (lo, hi):
//   below = a*lo.den - b*lo.num > 0   (distance from lo, scaled)
//   above = b*hi.num - a*hi.den > 0   (distance to hi, scaled)
// The current vertex lo ⊕ hi equals the target iff below == above and lies
// above it iff below < above. An L step subtracts `below` from `above`, an R
// step the reverse, so the walk is the subtractive Euclidean algorithm on
// (a, b - a) and never forms a product larger than the inputs.
struct Bisection {
    RawFraction lo = zero;
    RawFraction hi = one;
    Int below;
    Int above;

    explicit Bisection(Fraction f) : below(f.num()), above(f.den() - f.num()) {}

    bool done() const noexcept { return below == above; }
    RawFraction vertex() const { return mediant(lo, hi); }

    Step step() {
        if (below < above) {
            hi = vertex();
            above -= below;
            return Step::L;
        }
        lo = vertex();
        below -= above;
        return Step::R;
    }

    // Takes every consecutive step in the current direction at once.
    std::pair<Step, Int> run() {
        if (below < above) {
            const Int count = (above - 1) / below;
            hi = {checked::add(hi.num, checked::mul(count, lo.num)), checked::add(hi.den, checked::mul(count, lo.den))};
            above -= count * below;
            return {Step::L, count};
        }
        const Int count = (below - 1) / above;
        lo = {checked::add(lo.num, checked::mul(count, hi.num)), checked::add(lo.den, checked::mul(count, hi.den))};
        below -= count * above;
        return {Step::R, count};
    }

    NeighborPair bounds() const { return {as_reduced(lo), as_reduced(hi)}; }
};

[[noreturn]] void path_too_long(Fraction f, std::size_t limit) {
    throw Error(ErrorKind::LimitExceeded,
                "path to " + to_string(f) + " is longer than the limit of " + std::to_string(limit) + " steps");
}

} // namespace

Path Path::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'L')
            steps.push_back(Step::L);
        else if (c == 'R')
            steps.push_back(Step::R);
        else
            throw Error(ErrorKind::ParseError, "path may only contain L and R, got '" + std::string(text) + "'");
    }
    return Path(std::move(steps));
}

std::string Path::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(static_cast<char>(s));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Path& path) { return os << path.to_string(); }

std::vector<TreeLevel> build_levels(int k, const TreeLimits& limits) {
    if (k < 0) throw Error(ErrorKind::OutOfRange, "tree level must be >= 0");
    if (k > limits.max_level)
        throw Error(ErrorKind::LimitExceeded,
                    "tree level " + std::to_string(k) + " exceeds limit " + std::to_string(limits.max_level));

    std::vector<TreeLevel> levels;
    levels.reserve(static_cast<std::size_t>(k) + 1);
    levels.push_back({0, {as_reduced(zero), as_reduced(one)}});
    for (int i = 1; i <= k; ++i) {
        const auto& prev = levels.back().values;
        TreeLevel next{i, {}};
        next.values.reserve(prev.size() * 2 - 1);
        for (std::size_t j = 0; j + 1 < prev.size(); ++j) {
            next.values.push_back(prev[j]);
            next.values.push_back(as_reduced(mediant(prev[j].raw(), prev[j + 1].raw())));
        }
        next.values.push_back(prev.back());
        levels.push_back(std::move(next));
    }
    return levels;
}

std::vector<Fraction> new_mediants(const TreeLevel& level) {
    std::vector<Fraction> out;
    if (level.values.size() < 2) return out;
    out.reserve(level.values.size() - 1);
    for (std::size_t j = 0; j + 1 < level.values.size(); ++j)
        out.push_back(reduce(mediant(level.values[j].raw(), level.values[j + 1].raw())));
    return out;
}

Fraction decode(const Path& path, const TreeLimits& limits) {
    if (path.size() > limits.max_path)
        throw Error(ErrorKind::LimitExceeded, "path of " + std::to_string(path.size()) +
                                                  " steps exceeds limit " + std::to_string(limits.max_path));
    RawFraction lo = zero, hi = one;
    for (Step s : path) {
        const RawFraction v = mediant(lo, hi);
        (s == Step::L ? hi : lo) = v;
    }
    return as_reduced(mediant(lo, hi));
}

Path locate(Fraction f, const TreeLimits& limits) {
    require_interior(f);
    Bisection walk(f);
    Path path;
    std::size_t length = 0;
    while (!walk.done()) {
        const auto [step, count] = walk.run();
        length += static_cast<std::size_t>(count);
        if (length > limits.max_path) path_too_long(f, limits.max_path);
        path.append(step, static_cast<std::size_t>(count));
    }
    return path;
}

NeighborPair creation_neighbors(Fraction f) {
    require_interior(f);
    Bisection walk(f);
    while (!walk.done()) walk.run();
    return walk.bounds();
}

std::vector<Fraction> ancestors(Fraction f, const TreeLimits& limits) {
    require_interior(f);
    Bisection walk(f);
    std::vector<Fraction> out;
    while (!walk.done()) {
        if (out.size() == limits.max_path) path_too_long(f, limits.max_path);
        out.push_back(as_reduced(walk.vertex()));
        walk.step();
    }
    return out;
}

std::vector<NeighborPair> walk_bounds(Fraction f, const TreeLimits& limits) {
    require_interior(f);
    Bisection walk(f);
    std::vector<NeighborPair> out{walk.bounds()};
    while (!walk.done()) {
        if (out.size() > limits.max_path) path_too_long(f, limits.max_path);
        walk.step();
        out.push_back(walk.bounds());
    }
    return out;
}

Children children(Fraction f) {
    const NeighborPair bounds = creation_neighbors(f);
    return {as_reduced(mediant(bounds.left.raw(), f.raw())), as_reduced(mediant(f.raw(), bounds.right.raw()))};
}

} // namespace fsb
