#include <ostream>
#include <sstream>

#include "fsb/stern_brocot.hpp"

namespace fsb {

namespace {

struct Vertex {
    Fraction value;
    NeighborPair bounds;
};

Vertex root() {
    return {Fraction::from_coprime(1, 2), {Fraction{}, Fraction::from_coprime(1, 1)}};
}

std::pair<Vertex, Vertex> split(const Vertex& v) {
    const RawFraction left = mediant(v.bounds.left.raw(), v.value.raw());
    const RawFraction right = mediant(v.value.raw(), v.bounds.right.raw());
    return {{Fraction::from_coprime(left.num, left.den), {v.bounds.left, v.value}},
            {Fraction::from_coprime(right.num, right.den), {v.value, v.bounds.right}}};
}

void check_depth(int depth) {
    if (depth < 0) throw Error(ErrorKind::OutOfRange, "render depth must be >= 0");
    if (depth > max_render_depth)
        throw Error(ErrorKind::LimitExceeded, "render depth " + std::to_string(depth) + " exceeds limit " +
                                                  std::to_string(max_render_depth));
}

void write_text(std::ostream& os, const Vertex& v, int level, int depth) {
    os << std::string(static_cast<std::size_t>(level) * 2, ' ') << v.value << '\n';
    if (level == depth) return;
    const auto [left, right] = split(v);
    write_text(os, left, level + 1, depth);
    write_text(os, right, level + 1, depth);
}

void write_dot(std::ostream& os, int depth) {
    const auto rows = tree_rows(depth);
    os << "digraph sb {\n";
    for (const auto& row : rows)
        for (const Fraction& v : row) os << "  \"" << v << "\";\n";
    for (std::size_t d = 0; d + 1 < rows.size(); ++d)
        for (std::size_t i = 0; i < rows[d].size(); ++i) {
            os << "  \"" << rows[d][i] << "\" -> \"" << rows[d + 1][2 * i] << "\";\n";
            os << "  \"" << rows[d][i] << "\" -> \"" << rows[d + 1][2 * i + 1] << "\";\n";
        }
    os << "}\n";
}

} // namespace

std::vector<std::vector<Fraction>> tree_rows(int depth) {
    check_depth(depth);
    std::vector<std::vector<Fraction>> rows;
    std::vector<Vertex> level{root()};
    for (int d = 0;; ++d) {
        auto& row = rows.emplace_back();
        row.reserve(level.size());
        for (const Vertex& v : level) row.push_back(v.value);
        if (d == depth) break;
        std::vector<Vertex> next;
        next.reserve(level.size() * 2);
        for (const Vertex& v : level) {
            auto [left, right] = split(v);
            next.push_back(left);
            next.push_back(right);
        }
        level = std::move(next);
    }
    return rows;
}

void render_tree(std::ostream& os, int depth, RenderFormat format) {
    check_depth(depth);
    if (format == RenderFormat::text)
        write_text(os, root(), 0, depth);
    else
        write_dot(os, depth);
}

std::string render_tree(int depth, RenderFormat format) {
    std::ostringstream os;
    render_tree(os, depth, format);
    return os.str();
}

} // namespace fsb
