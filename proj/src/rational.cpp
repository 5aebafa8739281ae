#include "fsb/rational.hpp"

#include <charconv>
#include <ostream>

namespace fsb {

std::strong_ordering operator<=>(const Fraction& p, const Fraction& q) { return compare(p, q); }

Int gcd(Int a, Int b) {
    if (a < 0 || b < 0) throw Error(ErrorKind::NegativeInput, "gcd of a negative integer");
    if (a == 0 && b == 0) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
    // remainder recursion: b = q*a + r with 0 <= r < a
    while (a != 0) {
        Int r = b % a;
        b = a;
        a = r;
    }
    return b;
}

ExtGcdResult extended_gcd(Int a, Int b) {
    if (a < 0 || b < 0) throw Error(ErrorKind::NegativeInput, "extended_gcd of a negative integer");
    if (a == 0 && b == 0) throw Error(ErrorKind::BothZero, "extended_gcd(0, 0) is undefined");

    // Invariants: old_r = a*old_x + b*old_y, r = a*x + b*y.
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        const Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }

    const Int g = old_r;
    const Int period = b / g;
    if (period <= 1) {
        if (a == g) return {g, 1, 0};
        return {g, 0, 1};
    }

    Int rx = old_x % period;
    if (rx < 0) rx += period;
    const Int shift = (rx - old_x) / period;
    const Int ry = checked::sub(old_y, checked::mul(shift, a / g));
    return {g, rx, ry};
}

Fraction make_fraction(Int num, Int den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
    if (num < 0 || den < 0) throw Error(ErrorKind::NegativeInput, "negative numerator or denominator");
    if (num == 0) return Fraction{};
    const Int g = gcd(num, den);
    return Fraction::from_coprime(num / g, den / g);
}

Fraction reduce(RawFraction f) { return make_fraction(f.num, f.den); }

RawFraction mediant(RawFraction p, RawFraction q) {
    return {checked::add(p.num, q.num), checked::add(p.den, q.den)};
}

std::strong_ordering compare(Fraction p, Fraction q) {
    return checked::mul(p.num(), q.den()) <=> checked::mul(q.num(), p.den());
}

Int determinant(RawFraction left, RawFraction right) {
    return checked::cross(right.num, left.den, left.num, right.den);
}

std::string to_string(Fraction f) { return to_string(f.raw()); }

std::string to_string(RawFraction f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

std::ostream& operator<<(std::ostream& os, Fraction f) { return os << f.num() << '/' << f.den(); }

std::ostream& operator<<(std::ostream& os, RawFraction f) { return os << f.num << '/' << f.den; }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Int parse_digits(std::string_view s, std::string_view whole) {
    Int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw Error(ErrorKind::ParseError, "integer out of range in '" + std::string(whole) + "'");
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorKind::ParseError, "malformed integer in '" + std::string(whole) + "'");
    return value;
}

} // namespace

Fraction parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw Error(ErrorKind::ParseError, "expected num/den, got '" + std::string(text) + "'");
    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw Error(ErrorKind::ParseError, "expected num/den, got '" + std::string(text) + "'");
    return make_fraction(parse_digits(num_text, text), parse_digits(den_text, text));
}

Fraction parse_decimal(std::string_view text) {
    constexpr std::size_t max_fraction_digits = 18;

    const auto dot = text.find('.');
    const auto int_text = text.substr(0, dot);
    const auto frac_text = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_text.empty() && frac_text.empty())
        throw Error(ErrorKind::ParseError, "empty decimal '" + std::string(text) + "'");
    if ((!int_text.empty() && !all_digits(int_text)) || (!frac_text.empty() && !all_digits(frac_text)))
        throw Error(ErrorKind::ParseError, "malformed decimal '" + std::string(text) + "'");
    if (frac_text.size() > max_fraction_digits)
        throw Error(ErrorKind::ParseError, "more than 18 fractional digits in '" + std::string(text) + "'");

    Int scale = 1;
    for (std::size_t i = 0; i < frac_text.size(); ++i) scale *= 10;
    const Int whole = int_text.empty() ? 0 : parse_digits(int_text, text);
    const Int part = frac_text.empty() ? 0 : parse_digits(frac_text, text);
    try {
        return make_fraction(checked::add(checked::mul(whole, scale), part), scale);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
        throw Error(ErrorKind::ParseError, "decimal '" + std::string(text) + "' does not fit in 64 bits");
    }
}

} // namespace fsb
