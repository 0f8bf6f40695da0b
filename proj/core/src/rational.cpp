#include "isoforge/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <cstdlib>

namespace isoforge {

namespace {

constexpr long long kMaxExponent = 1024;

BigInt pow_bigint(const BigInt& base, unsigned long long e) {
    BigInt acc(1);
    BigInt b = base;
    while (e != 0) {
        if (e & 1ULL) acc *= b;
        b *= b;
        e >>= 1ULL;
    }
    return acc;
}

}  // namespace

bool is_integral(const Rational& r) { return r.denominator() == 1; }

Rational rational_abs(const Rational& r) {
    return r < Rational(0) ? -r : r;
}

Rational rational_floor(const Rational& r) {
    BigInt q = r.numerator() / r.denominator();
    // Integer division truncates toward zero; adjust for negatives.
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) q -= 1;
    return Rational(q);
}

std::optional<Rational> rational_pow(const Rational& base, const BigInt& exponent) {
    if (exponent < -kMaxExponent || exponent > kMaxExponent) return std::nullopt;
    if (exponent == 0) return Rational(1);
    const bool negative = exponent < 0;
    if (negative && base.numerator() == 0) return std::nullopt;
    const auto e = static_cast<unsigned long long>(negative ? BigInt(-exponent).convert_to<long long>()
                                                            : exponent.convert_to<long long>());
    BigInt num = pow_bigint(base.numerator(), e);
    BigInt den = pow_bigint(base.denominator(), e);
    if (negative) std::swap(num, den);
    return Rational(num, den);
}

std::optional<Rational> rational_mod(const Rational& value, const Rational& modulus) {
    if (!is_integral(value) || !is_integral(modulus)) return std::nullopt;
    if (modulus.numerator() <= 0) return std::nullopt;
    BigInt m = modulus.numerator();
    BigInt r = value.numerator() % m;
    if (r < 0) r += m;
    return Rational(r);
}

std::optional<Rational> rational_gcd(const Rational& a, const Rational& b) {
    if (!is_integral(a) || !is_integral(b)) return std::nullopt;
    return Rational(boost::integer::gcd(BigInt(abs(a.numerator())), BigInt(abs(b.numerator()))));
}

std::string to_string(const Rational& r) {
    if (is_integral(r)) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    auto digits = [&](size_t& pos) -> std::optional<BigInt> {
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) return std::nullopt;
        return BigInt(std::string(text.substr(start, pos - start)));
    };
    auto whole = digits(i);
    if (!whole) return std::nullopt;
    if (i == text.size()) {
        Rational r(*whole);
        return negative ? -r : r;
    }
    if (text[i] == '/') {
        ++i;
        auto den = digits(i);
        if (!den || i != text.size() || *den == 0) return std::nullopt;
        Rational r(*whole, *den);
        return negative ? -r : r;
    }
    if (text[i] == '.') {
        ++i;
        size_t start = i;
        auto frac = digits(i);
        if (!frac || i != text.size()) return std::nullopt;
        const auto scale = static_cast<unsigned long long>(i - start);
        BigInt den = pow_bigint(BigInt(10), scale);
        Rational r(*whole * den + *frac, den);
        return negative ? -r : r;
    }
    return std::nullopt;
}

std::optional<std::string> render_decimal(const Rational& r, int scale) {
    if (scale < 0) return std::nullopt;
    BigInt den = pow_bigint(BigInt(10), static_cast<unsigned long long>(scale));
    Rational scaled = r * Rational(den);
    if (!is_integral(scaled)) return std::nullopt;
    BigInt n = scaled.numerator();
    const bool negative = n < 0;
    if (negative) n = -n;
    std::string digits = n.str();
    std::string out;
    if (negative) out += '-';
    if (scale == 0) {
        out += digits;
        return out;
    }
    if (digits.size() <= static_cast<size_t>(scale)) {
        digits.insert(0, static_cast<size_t>(scale) + 1 - digits.size(), '0');
    }
    out += digits.substr(0, digits.size() - static_cast<size_t>(scale));
    out += '.';
    out += digits.substr(digits.size() - static_cast<size_t>(scale));
    return out;
}

int min_decimal_scale(const Rational& r) {
    BigInt den = r.denominator();
    int twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return -1;
    return twos > fives ? twos : fives;
}

}  // namespace isoforge
