#include "isoforge/problem.hpp"

#include "isoforge/errors.hpp"
#include "isoforge/util.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <nlohmann/json.hpp>

#include <cctype>

namespace isoforge {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Characters after which a directly-prefixing '-' binds to the literal.
bool unary_context_char(char c) {
    return c == '(' || c == '[' || c == '{' || c == '=' || c == '<' || c == '>';
}

bool unary_context(std::string_view s, size_t minus_pos) {
    size_t i = minus_pos;
    while (i > 0) {
        char c = s[i - 1];
        if (c == ' ' || c == '\t') {
            --i;
            continue;
        }
        return unary_context_char(c);
    }
    return true;  // expression start
}

// Matching '}' for the '{' at `open`, honoring backslash escapes. Returns
// npos when unterminated.
size_t matching_brace(std::string_view s, size_t open) {
    int depth = 0;
    for (size_t i = open; i < s.size(); ++i) {
        char c = s[i];
        if (c == '\\') {
            ++i;
            continue;
        }
        if (c == '{') ++depth;
        if (c == '}') {
            --depth;
            if (depth == 0) return i;
        }
    }
    return std::string_view::npos;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!is_digit(c)) return false;
    }
    return true;
}

bool structural_group(std::string_view inner) {
    if (inner.empty()) return false;
    if (inner[0] == '-') return all_digits(inner.substr(1));
    return all_digits(inner);
}

struct NumberScan {
    size_t end = 0;
    Rational value;
    LiteralForm form;
};

// Parses digits['.'digits]["\%"] starting at `i`. Sign is handled by the
// caller.
std::optional<NumberScan> parse_number(std::string_view s, size_t i) {
    size_t j = i;
    while (j < s.size() && is_digit(s[j])) ++j;
    if (j == i) return std::nullopt;
    std::string whole(s.substr(i, j - i));
    int scale = -1;
    std::string frac;
    if (j < s.size() && s[j] == '.' && j + 1 < s.size() && is_digit(s[j + 1])) {
        size_t k = j + 1;
        while (k < s.size() && is_digit(s[k])) ++k;
        frac = std::string(s.substr(j + 1, k - j - 1));
        scale = static_cast<int>(frac.size());
        j = k;
    }
    Rational value(BigInt(whole));
    if (scale >= 0) {
        BigInt den = 1;
        for (int d = 0; d < scale; ++d) den *= 10;
        value = Rational(BigInt(whole) * den + BigInt(frac), den);
    }
    NumberScan out;
    if (j + 1 < s.size() && s[j] == '\\' && s[j + 1] == '%') {
        out.form.kind = LiteralForm::Kind::Percent;
        out.form.scale = scale < 0 ? 0 : scale;
        out.value = value / Rational(100);
        out.end = j + 2;
        return out;
    }
    if (scale >= 0) {
        out.form.kind = LiteralForm::Kind::Decimal;
        out.form.scale = scale;
    } else {
        out.form.kind = LiteralForm::Kind::Integer;
    }
    out.value = value;
    out.end = j;
    return out;
}

// Parses "\frac{a}{b}" with unsigned integer a, b (b != 0) starting at `i`.
std::optional<NumberScan> parse_frac(std::string_view s, size_t i) {
    static constexpr std::string_view kFrac = "\\frac";
    if (s.substr(i, kFrac.size()) != kFrac) return std::nullopt;
    size_t p = i + kFrac.size();
    if (p >= s.size() || s[p] != '{') return std::nullopt;
    size_t close1 = matching_brace(s, p);
    if (close1 == std::string_view::npos) return std::nullopt;
    std::string_view num = s.substr(p + 1, close1 - p - 1);
    size_t q = close1 + 1;
    if (q >= s.size() || s[q] != '{') return std::nullopt;
    size_t close2 = matching_brace(s, q);
    if (close2 == std::string_view::npos) return std::nullopt;
    std::string_view den = s.substr(q + 1, close2 - q - 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt n((std::string(num)));
    BigInt d((std::string(den)));
    if (d == 0) return std::nullopt;
    NumberScan out;
    out.value = Rational(n, d);
    out.form.kind = LiteralForm::Kind::Fraction;
    out.form.den_written = d;
    out.form.lowest = boost::integer::gcd(n, d) == 1;
    out.end = close2 + 1;
    return out;
}

std::optional<NumberScan> parse_literal_at(std::string_view s, size_t i) {
    if (i >= s.size()) return std::nullopt;
    if (s[i] == '\\') return parse_frac(s, i);
    if (is_digit(s[i])) return parse_number(s, i);
    return std::nullopt;
}

std::string trim_ws(std::string_view s, std::string* lead, std::string* trail) {
    size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    *lead = std::string(s.substr(0, b));
    *trail = std::string(s.substr(e));
    return std::string(s.substr(b, e - b));
}

}  // namespace

std::string to_string(Difficulty d) {
    switch (d) {
        case Difficulty::Easy: return "easy";
        case Difficulty::Medium: return "medium";
        case Difficulty::Hard: return "hard";
    }
    return "easy";
}

std::optional<Difficulty> parse_difficulty(std::string_view s) {
    if (s == "easy") return Difficulty::Easy;
    if (s == "medium") return Difficulty::Medium;
    if (s == "hard") return Difficulty::Hard;
    return std::nullopt;
}

std::string TextSkeleton::reconstruct(const std::vector<std::string>& expressions) const {
    if (expressions.size() != slot_count() || segments.size() != slot_count() + 1) {
        throw ArityMismatch("skeleton reconstruct: expression count does not match slot count");
    }
    std::string out = segments[0];
    for (size_t i = 0; i < expressions.size(); ++i) {
        out += '$';
        out += pads[i].first;
        out += expressions[i];
        out += pads[i].second;
        out += '$';
        out += segments[i + 1];
    }
    return out;
}

std::vector<LiteralToken> scan_literal_tokens(std::string_view s) {
    std::vector<LiteralToken> tokens;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '^' || c == '_') {
            // Exponents and indices are structure, not quantities.
            ++i;
            while (i < s.size() && s[i] == ' ') ++i;
            if (i < s.size() && s[i] == '{') {
                size_t close = matching_brace(s, i);
                if (close != std::string_view::npos &&
                    structural_group(s.substr(i + 1, close - i - 1))) {
                    i = close + 1;
                } else {
                    ++i;  // descend into the group
                }
                continue;
            }
            if (i < s.size() && s[i] == '-') ++i;
            while (i < s.size() && is_digit(s[i])) ++i;
            continue;
        }
        if (c == '\\') {
            if (auto frac = parse_frac(s, i)) {
                tokens.push_back({i, frac->end, frac->value, frac->form});
                i = frac->end;
                continue;
            }
            if (i + 1 < s.size() && is_alpha(s[i + 1])) {
                ++i;
                while (i < s.size() && is_alpha(s[i])) ++i;
            } else {
                i += 2;  // escaped character
            }
            continue;
        }
        if (c == '-') {
            if (unary_context(s, i)) {
                if (auto lit = parse_literal_at(s, i + 1)) {
                    lit->value = -lit->value;
                    tokens.push_back({i, lit->end, lit->value, lit->form});
                    i = lit->end;
                    continue;
                }
            }
            ++i;
            continue;
        }
        if (is_digit(c)) {
            auto lit = parse_number(s, i);
            tokens.push_back({i, lit->end, lit->value, lit->form});
            i = lit->end;
            continue;
        }
        ++i;
    }
    return tokens;
}

std::optional<std::string> render_literal(const Rational& value, const LiteralForm& form) {
    switch (form.kind) {
        case LiteralForm::Kind::Integer: {
            if (!is_integral(value)) return std::nullopt;
            return value.numerator().str();
        }
        case LiteralForm::Kind::Decimal:
            return render_decimal(value, form.scale);
        case LiteralForm::Kind::Fraction: {
            const bool negative = value < Rational(0);
            Rational v = rational_abs(value);
            std::string head = negative ? "-" : "";
            if (form.lowest) {
                return head + "\\frac{" + v.numerator().str() + "}{" + v.denominator().str() + "}";
            }
            Rational scaled = v * Rational(form.den_written);
            if (!is_integral(scaled)) return std::nullopt;
            return head + "\\frac{" + scaled.numerator().str() + "}{" + form.den_written.str() + "}";
        }
        case LiteralForm::Kind::Percent: {
            auto body = render_decimal(value * Rational(100), form.scale);
            if (!body) return std::nullopt;
            return *body + "\\%";
        }
        case LiteralForm::Kind::TupleList:
            return std::nullopt;
    }
    return std::nullopt;
}

bool is_minimal_form(const Rational& value, const LiteralForm& form) {
    switch (form.kind) {
        case LiteralForm::Kind::Integer:
            return true;
        case LiteralForm::Kind::Decimal: {
            int m = min_decimal_scale(value);
            return m >= 0 && m == form.scale;
        }
        case LiteralForm::Kind::Fraction:
            return form.lowest;
        case LiteralForm::Kind::Percent: {
            int m = min_decimal_scale(value * Rational(100));
            return m >= 0 && m == form.scale;
        }
        case LiteralForm::Kind::TupleList:
            return true;
    }
    return true;
}

std::pair<ExpressionTuple, TextSkeleton> extract(std::string_view text) {
    ExpressionTuple tuple;
    TextSkeleton skeleton;
    std::string current;
    bool in_expr = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\\' && i + 1 < text.size()) {
            current += c;
            current += text[i + 1];
            ++i;
            continue;
        }
        if (c == '$') {
            if (!in_expr) {
                skeleton.segments.push_back(current);
            } else {
                std::string lead, trail;
                tuple.expressions.push_back(trim_ws(current, &lead, &trail));
                skeleton.pads.emplace_back(std::move(lead), std::move(trail));
            }
            current.clear();
            in_expr = !in_expr;
            continue;
        }
        current += c;
    }
    if (in_expr) throw UnbalancedDelimiters("odd number of unescaped '$' delimiters");
    skeleton.segments.push_back(current);
    return {std::move(tuple), std::move(skeleton)};
}

std::vector<NumericLiteral> extract_literals(const ExpressionTuple& expressions) {
    std::vector<NumericLiteral> out;
    for (size_t e = 0; e < expressions.expressions.size(); ++e) {
        auto tokens = scan_literal_tokens(expressions.expressions[e]);
        for (size_t k = 0; k < tokens.size(); ++k) {
            out.push_back({tokens[k].value, tokens[k].form, e, k});
        }
    }
    return out;
}

Problem parse_problem(const nlohmann::json& record) {
    if (!record.is_object()) throw MalformedInput("problem record is not an object");
    auto require_string = [&](const char* key) -> std::string {
        if (!record.contains(key) || !record.at(key).is_string()) {
            throw MalformedInput(std::string("problem record missing string field '") + key + "'");
        }
        return record.at(key).get<std::string>();
    };
    Problem p;
    p.id = require_string("id");
    p.question = require_string("question");
    p.solution = require_string("solution");
    p.answer = require_string("answer");
    if (record.contains("grade") && !record.at("grade").is_null()) {
        if (!record.at("grade").is_number_integer()) throw MalformedInput("grade must be an integer");
        int g = record.at("grade").get<int>();
        if (g < 4 || g > 12) throw MalformedInput("grade out of range 4..12");
        p.grade = g;
    }
    if (record.contains("unit") && !record.at("unit").is_null()) {
        if (!record.at("unit").is_string()) throw MalformedInput("unit must be a string");
        p.unit = record.at("unit").get<std::string>();
    }
    if (record.contains("difficulty") && !record.at("difficulty").is_null()) {
        if (!record.at("difficulty").is_string()) throw MalformedInput("difficulty must be a string");
        auto d = parse_difficulty(record.at("difficulty").get<std::string>());
        if (!d) throw MalformedInput("difficulty must be easy, medium or hard");
        p.difficulty = *d;
    }
    // Per-field delimiter balance, then the at-least-one-expression check.
    extract(p.question);
    extract(p.solution);
    auto [tuple, skeleton] = extract(joined_text(p));
    (void)skeleton;
    if (tuple.expressions.empty()) {
        throw NoExpression("question and solution contain no '$...$' expression");
    }
    return p;
}

nlohmann::json problem_to_json(const Problem& p) {
    nlohmann::json j{
        {"id", p.id},
        {"question", p.question},
        {"solution", p.solution},
        {"answer", p.answer},
    };
    if (p.grade) j["grade"] = *p.grade;
    if (p.unit) j["unit"] = *p.unit;
    if (p.difficulty) j["difficulty"] = to_string(*p.difficulty);
    return j;
}

std::string joined_text(const Problem& p) {
    return p.question + "\n" + p.solution;
}

bool skeletons_equal(const TextSkeleton& a, const TextSkeleton& b) {
    if (a.segments.size() != b.segments.size()) return false;
    for (size_t i = 0; i < a.segments.size(); ++i) {
        if (normalize_newlines(a.segments[i]) != normalize_newlines(b.segments[i])) return false;
    }
    return true;
}

bool structural_equivalence(const Problem& source, const Problem& candidate) {
    auto [es, ks] = extract(joined_text(source));
    auto [ec, kc] = extract(joined_text(candidate));
    if (es == ec) return false;
    if (es.expressions.size() != ec.expressions.size()) return false;
    return skeletons_equal(ks, kc);
}

}  // namespace isoforge
