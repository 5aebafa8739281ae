#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsb/approx.hpp"
#include "fsb/bezout.hpp"
#include "fsb/farey.hpp"
#include "fsb/stern_brocot.hpp"

namespace fsb::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { plain, json, dot };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& text) {
    if (text == "plain") return Format::plain;
    if (text == "json") return Format::json;
    return Format::dot;
}

// Argument-level parsing; any failure here is a usage error (exit 2).
template <class F>
auto parse_arg(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

void print_farey(Int n, Format format, bool one_per_line, std::ostream& out) {
    bool first = true;
    if (format == Format::json) {
        out << '[';
        for_each_farey_term(n, [&](Fraction f) {
            out << (first ? "\"" : ",\"") << f << '"';
            first = false;
        });
        out << "]\n";
        return;
    }
    const char sep = one_per_line ? '\n' : ' ';
    for_each_farey_term(n, [&](Fraction f) {
        if (!first) out << sep;
        out << f;
        first = false;
    });
    out << '\n';
}

void print_tree(int depth, Format format, std::ostream& out) {
    if (format == Format::plain) {
        render_tree(out, depth, RenderFormat::text);
    } else if (format == Format::dot) {
        render_tree(out, depth, RenderFormat::dot);
    } else {
        json levels = json::array();
        for (const auto& row : tree_rows(depth)) {
            json names = json::array();
            for (Fraction f : row) names.push_back(to_string(f));
            levels.push_back(std::move(names));
        }
        out << json{{"depth", depth}, {"levels", std::move(levels)}}.dump() << '\n';
    }
}

void print_certificate(const BezoutCertificate& c, Format format, std::ostream& out) {
    if (format == Format::json) {
        out << json{{"m", c.m}, {"n", c.n}, {"x", c.x}, {"y", c.y}, {"check", "m*x+n*y=1"}}.dump() << '\n';
    } else {
        out << "x=" << c.x << " y=" << c.y << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Farey rows, the Stern-Brocot tree on [0, 1], and Bezout certificates"};
    app.name("fsb");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_text = "plain";
    app.add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"plain", "json", "dot"}))
        ->capture_default_str();

    Int farey_order = 0;
    bool one_per_line = false;
    auto* farey = app.add_subcommand("farey", "Print the Farey row F_n");
    farey->add_option("n", farey_order, "Row order (maximum denominator)")->required();
    farey->add_flag("--lines", one_per_line, "One fraction per line in plain output");

    auto* sb = app.add_subcommand("sb", "Stern-Brocot tree queries");
    sb->require_subcommand(1);
    std::string fraction_text, path_text;
    int depth = 0;
    auto* locate_cmd = sb->add_subcommand("locate", "L/R path of a fraction");
    locate_cmd->add_option("fraction", fraction_text, "p/q with 0 < p/q < 1")->required();
    auto* decode_cmd = sb->add_subcommand("decode", "Fraction at an L/R path");
    decode_cmd->add_option("path", path_text, "String over {L, R}; empty is the root")->required();
    auto* neighbors_cmd = sb->add_subcommand("neighbors", "Bounds whose mediant creates a fraction");
    neighbors_cmd->add_option("fraction", fraction_text, "p/q with 0 < p/q < 1")->required();
    auto* tree_cmd = sb->add_subcommand("tree", "Render the tree to a depth");
    tree_cmd->add_option("depth", depth, "Depth, root is 0")->required();

    Int bez_m = 0, bez_n = 0;
    std::string method = "tree";
    auto* bezout = app.add_subcommand("bezout", "Integers x, y with m*x + n*y = 1");
    bezout->add_option("m", bez_m)->required();
    bezout->add_option("n", bez_n)->required();
    bezout->add_option("--method", method, "Certificate source")
        ->check(CLI::IsMember({"tree", "euclid"}))
        ->capture_default_str();

    std::string decimal_text;
    Int max_den = 0;
    auto* approx = app.add_subcommand("approx", "Closest fraction with bounded denominator");
    approx->add_option("value", decimal_text, "Decimal in [0, 1]")->required();
    approx->add_option("max_den", max_den, "Largest allowed denominator")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        const Format format = parse_format(format_text);
        if (format == Format::dot && !tree_cmd->parsed())
            throw UsageError("--format dot is only valid for 'sb tree'");

        if (farey->parsed()) {
            if (farey_order < 1) throw UsageError("farey order must be a positive integer");
            print_farey(farey_order, format, one_per_line, out);
        } else if (locate_cmd->parsed()) {
            const Fraction f = parse_arg([&] { return parse_fraction(fraction_text); });
            const Path path = locate(f);
            if (format == Format::json)
                out << json{{"fraction", to_string(f)}, {"path", path.to_string()}}.dump() << '\n';
            else
                out << path << '\n';
        } else if (decode_cmd->parsed()) {
            const Path path = parse_arg([&] { return Path::parse(path_text); });
            const Fraction f = decode(path);
            if (format == Format::json)
                out << json{{"path", path.to_string()}, {"fraction", to_string(f)}}.dump() << '\n';
            else
                out << f << '\n';
        } else if (neighbors_cmd->parsed()) {
            const Fraction f = parse_arg([&] { return parse_fraction(fraction_text); });
            const NeighborPair bounds = creation_neighbors(f);
            if (format == Format::json)
                out << json{{"fraction", to_string(f)},
                            {"left", to_string(bounds.left)},
                            {"right", to_string(bounds.right)}}
                           .dump()
                    << '\n';
            else
                out << bounds.left << ' ' << bounds.right << '\n';
        } else if (tree_cmd->parsed()) {
            print_tree(depth, format, out);
        } else if (bezout->parsed()) {
            const BezoutCertificate via_tree = bezout_via_tree(bez_m, bez_n);
            const BezoutCertificate via_euclid = bezout_via_euclid(bez_m, bez_n);
            if (!verify_certificate(via_tree) || !verify_certificate(via_euclid))
                throw std::logic_error("certificate failed verification");
            print_certificate(method == "tree" ? via_tree : via_euclid, format, out);
        } else if (approx->parsed()) {
            const Fraction value = parse_arg([&] { return parse_decimal(decimal_text); });
            if (value.num() > value.den()) throw UsageError("value " + decimal_text + " is outside [0, 1]");
            if (max_den < 1) throw UsageError("max_den must be a positive integer");
            const Fraction best = best_approximation(value, max_den);
            if (format == Format::json)
                out << json{{"value", decimal_text}, {"max_den", max_den}, {"fraction", to_string(best)}}.dump()
                    << '\n';
            else
                out << best << '\n';
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
    out.flush();
    return ok;
}

} // namespace fsb::cli
