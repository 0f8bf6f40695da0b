#pragma once

#include "isoforge/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace isoforge {

enum class Difficulty { Easy, Medium, Hard };

std::string to_string(Difficulty d);
std::optional<Difficulty> parse_difficulty(std::string_view s);

// A source or generated problem. Question and solution are UTF-8 text with
// inline LaTeX math delimited by unescaped single '$' pairs; '\$' is a
// literal dollar and "$$" display math is unsupported.
struct Problem {
    std::string id;
    std::string question;
    std::string solution;
    std::string answer;
    std::optional<int> grade;            // 4..12 when present
    std::optional<std::string> unit;     // curriculum unit
    std::optional<Difficulty> difficulty;
};

// Ordered tuple of math expressions: dollar content with the delimiters
// stripped and surrounding whitespace trimmed, in occurrence order.
struct ExpressionTuple {
    std::vector<std::string> expressions;

    bool operator==(const ExpressionTuple&) const = default;
};

// The natural-language remainder of a text: literal runs interleaved with
// expression slots. segments.size() == slot_count() + 1. pads[i] holds the
// whitespace trimmed from just inside the i-th '$...$' pair so that
// reconstruct() is byte-exact.
struct TextSkeleton {
    std::vector<std::string> segments;
    std::vector<std::pair<std::string, std::string>> pads;

    size_t slot_count() const { return pads.size(); }

    // Re-wraps each expression in '$...$' (with its original inner padding)
    // and splices it between segments. Inverse of extract().
    std::string reconstruct(const std::vector<std::string>& expressions) const;

    bool operator==(const TextSkeleton&) const = default;
};

// How a numeric literal was written in the source text. Rendering a value
// through its form reproduces the original token; rendering a different
// value keeps the written style (same decimal scale, same fraction
// denominator when the source was not in lowest terms).
struct LiteralForm {
    enum class Kind { Integer, Decimal, Fraction, Percent, TupleList };

    Kind kind = Kind::Integer;
    int scale = 0;          // decimal / percent: fractional digits
    bool lowest = true;     // fraction: source was in lowest terms
    BigInt den_written = 1; // fraction: denominator as written (when !lowest)

    bool operator==(const LiteralForm&) const = default;
};

// Renders value in the given form; nullopt when the value is not exactly
// representable (non-integral value in an integer slot, wrong scale, ...).
std::optional<std::string> render_literal(const Rational& value, const LiteralForm& form);

// True when the token carries no redundancy: fraction in lowest terms,
// decimal without a shorter exact rendering, integer always.
bool is_minimal_form(const Rational& value, const LiteralForm& form);

struct NumericLiteral {
    Rational value;
    LiteralForm form;
    size_t expression_index = 0;
    size_t occurrence_index = 0;
};

// One scanned literal inside a single expression string: [begin, end) is
// the token span, including a bound unary minus.
struct LiteralToken {
    size_t begin = 0;
    size_t end = 0;
    Rational value;
    LiteralForm form;
};

// Tokenizes the numeric literals of one expression.
//
// Rules:
//  - "\frac{a}{b}" with unsigned integer a, b and b != 0 is one rational
//    literal; the form records whether a/b was in lowest terms and the
//    written denominator.
//  - digits '.' digits is a decimal with its written scale; a bare digit
//    run is an integer; a "\%" suffix turns either into a percentage of the
//    written number (value divided by 100).
//  - a '-' immediately before a literal binds to it only at expression
//    start or after an opening bracket ( [ { or a relational = < >;
//    otherwise the minus is a binary operator and the literal is positive.
//  - digits (or a braced integer group) immediately after '^' or '_' are
//    exponents/indices: structural, never literals.
std::vector<LiteralToken> scan_literal_tokens(std::string_view expression);

// Parses a structured record {id, question, solution, answer, grade?,
// unit?, difficulty?} and checks the Problem invariants. Throws
// MalformedInput, UnbalancedDelimiters or NoExpression.
Problem parse_problem(const nlohmann::json& record);

nlohmann::json problem_to_json(const Problem& p);

// Splits a text into its expression tuple and skeleton. Throws
// UnbalancedDelimiters on an odd count of unescaped '$'.
std::pair<ExpressionTuple, TextSkeleton> extract(std::string_view text);

// Flattens the literals of every expression, in (expression, occurrence)
// order. Expressions with no literals contribute nothing.
std::vector<NumericLiteral> extract_literals(const ExpressionTuple& expressions);

// Question-then-solution concatenation with a single LF between them; this
// fixed convention realizes the string concatenation over which expression
// tuples and skeletons are compared.
std::string joined_text(const Problem& p);

// The three structural-equivalence conditions: expression tuples differ,
// tuple lengths are equal, and text skeleton segments are byte-identical
// after newline normalization.
bool structural_equivalence(const Problem& source, const Problem& candidate);

// Skeleton segment equality (the N(.) condition on its own).
bool skeletons_equal(const TextSkeleton& a, const TextSkeleton& b);

}  // namespace isoforge
