#pragma once

#include "isoforge/problem.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace isoforge {

// A list-valued slot's content: ordered tuples of integral rationals, e.g.
// the "(1,3),(2,4)" pair lists that enumerate outcomes in a solution.
using TupleList = std::vector<std::vector<Rational>>;

// One expression with its numeric literals replaced by sub-slots. segments
// has one more entry than slots; substituting rendered values between the
// segments rebuilds the expression string.
struct ExpressionTemplate {
    struct SubSlot {
        std::string id;    // "s0", "s1", ... in document order
        LiteralForm form;  // rendering style; Kind::TupleList for list slots
    };

    std::vector<std::string> segments;
    std::vector<SubSlot> slots;
};

// The full two-level template of a problem: text skeletons with expression
// slots, and per-expression templates with numeric sub-slots. Substituting
// source_values reproduces the source problem byte-for-byte.
struct ProblemTemplate {
    std::string problem_id;
    TextSkeleton question_skeleton;
    TextSkeleton solution_skeleton;
    size_t question_expression_count = 0;
    std::vector<ExpressionTemplate> expressions;  // question's, then solution's

    std::vector<std::string> source_expressions;  // trimmed source strings
    std::vector<Rational> source_values;          // scalar slots, position order
    std::map<std::string, TupleList> source_lists;
    std::string source_answer;

    size_t scalar_slot_count() const { return source_values.size(); }
    size_t total_slot_count() const { return source_values.size() + source_lists.size(); }

    // Ordered ids of scalar sub-slots (position -> id) and list sub-slots.
    std::vector<std::string> scalar_slot_ids() const;
    std::vector<std::string> list_slot_ids() const;
};

// The numeric content of one generated problem: scalar values position-
// aligned with the template's scalar sub-slots, list-slot contents, and the
// rendered answer.
struct SlotAssignment {
    std::vector<Rational> values;
    std::map<std::string, TupleList> lists;
    std::string answer;
};

// Extracts the two-level template from a source problem. Every numeric
// literal becomes a sub-slot (constants like 0 included); an expression
// consisting solely of two or more comma-joined parenthesized integer
// tuples becomes a single list-valued sub-slot.
ProblemTemplate derive_template(const Problem& source);

// Substitutes an assignment into the template. The realized question and
// solution carry the source's skeletons exactly; every rendered expression
// is re-scanned to confirm that its literals read back as the assigned
// values. Throws ArityMismatch or UnrenderableValue.
Problem realize(const ProblemTemplate& tmpl, const SlotAssignment& assignment,
                const std::string& candidate_id = "");

// The assignment that reproduces the source problem.
SlotAssignment source_assignment(const ProblemTemplate& tmpl);

// Canonical "(a,b),(c,d)" rendering of a tuple list. Elements must be
// integral.
std::optional<std::string> render_tuple_list(const TupleList& list);

// Parses the strict tuple-list grammar; nullopt when the expression is not
// a pure tuple list (two or more tuples, each with two or more integer or
// decimal elements, no spaces).
std::optional<TupleList> parse_tuple_list(std::string_view expression);

nlohmann::json template_to_json(const ProblemTemplate& tmpl);
ProblemTemplate template_from_json(const nlohmann::json& j);

}  // namespace isoforge
