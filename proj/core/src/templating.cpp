#include "isoforge/templating.hpp"

#include "isoforge/errors.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace isoforge {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// elem := ["-"] digits. Returns npos on mismatch, else the index after the
// element.
size_t parse_tuple_elem(std::string_view s, size_t i, Rational* out) {
    size_t start = i;
    bool negative = false;
    if (i < s.size() && s[i] == '-') {
        negative = true;
        ++i;
    }
    size_t d = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == d) return std::string_view::npos;
    Rational v{BigInt(std::string(s.substr(d, i - d)))};
    *out = negative ? -v : v;
    (void)start;
    return i;
}

}  // namespace

std::optional<TupleList> parse_tuple_list(std::string_view s) {
    TupleList list;
    size_t i = 0;
    while (true) {
        if (i >= s.size() || s[i] != '(') return std::nullopt;
        ++i;
        std::vector<Rational> tuple;
        while (true) {
            Rational v;
            size_t next = parse_tuple_elem(s, i, &v);
            if (next == std::string_view::npos) return std::nullopt;
            tuple.push_back(v);
            i = next;
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= s.size() || s[i] != ')') return std::nullopt;
        ++i;
        if (tuple.size() < 2) return std::nullopt;
        list.push_back(std::move(tuple));
        if (i == s.size()) break;
        if (s[i] != ',') return std::nullopt;
        ++i;
    }
    if (list.size() < 2) return std::nullopt;
    return list;
}

std::optional<std::string> render_tuple_list(const TupleList& list) {
    std::string out;
    for (size_t t = 0; t < list.size(); ++t) {
        if (t > 0) out += ',';
        out += '(';
        for (size_t e = 0; e < list[t].size(); ++e) {
            if (e > 0) out += ',';
            if (!is_integral(list[t][e])) return std::nullopt;
            out += list[t][e].numerator().str();
        }
        out += ')';
    }
    return out;
}

std::vector<std::string> ProblemTemplate::scalar_slot_ids() const {
    std::vector<std::string> ids;
    for (const auto& expr : expressions) {
        for (const auto& slot : expr.slots) {
            if (slot.form.kind != LiteralForm::Kind::TupleList) ids.push_back(slot.id);
        }
    }
    return ids;
}

std::vector<std::string> ProblemTemplate::list_slot_ids() const {
    std::vector<std::string> ids;
    for (const auto& expr : expressions) {
        for (const auto& slot : expr.slots) {
            if (slot.form.kind == LiteralForm::Kind::TupleList) ids.push_back(slot.id);
        }
    }
    return ids;
}

ProblemTemplate derive_template(const Problem& source) {
    ProblemTemplate tmpl;
    tmpl.problem_id = source.id;

    auto [q_tuple, q_skel] = extract(source.question);
    auto [s_tuple, s_skel] = extract(source.solution);
    tmpl.question_skeleton = std::move(q_skel);
    tmpl.solution_skeleton = std::move(s_skel);
    tmpl.question_expression_count = q_tuple.expressions.size();

    std::vector<std::string> all = q_tuple.expressions;
    all.insert(all.end(), s_tuple.expressions.begin(), s_tuple.expressions.end());
    tmpl.source_expressions = all;

    size_t next_id = 0;
    for (const auto& expr : all) {
        ExpressionTemplate et;
        if (auto list = parse_tuple_list(expr)) {
            ExpressionTemplate::SubSlot slot;
            slot.id = fmt::format("s{}", next_id++);
            slot.form.kind = LiteralForm::Kind::TupleList;
            et.segments = {"", ""};
            et.slots.push_back(slot);
            tmpl.source_lists[slot.id] = std::move(*list);
        } else {
            auto tokens = scan_literal_tokens(expr);
            size_t cursor = 0;
            for (const auto& tok : tokens) {
                et.segments.push_back(expr.substr(cursor, tok.begin - cursor));
                ExpressionTemplate::SubSlot slot;
                slot.id = fmt::format("s{}", next_id++);
                slot.form = tok.form;
                et.slots.push_back(slot);
                tmpl.source_values.push_back(tok.value);
                cursor = tok.end;
            }
            et.segments.push_back(expr.substr(cursor));
        }
        tmpl.expressions.push_back(std::move(et));
    }
    tmpl.source_answer = source.answer;
    return tmpl;
}

SlotAssignment source_assignment(const ProblemTemplate& tmpl) {
    SlotAssignment a;
    a.values = tmpl.source_values;
    a.lists = tmpl.source_lists;
    a.answer = tmpl.source_answer;
    return a;
}

Problem realize(const ProblemTemplate& tmpl, const SlotAssignment& assignment,
                const std::string& candidate_id) {
    if (assignment.values.size() != tmpl.scalar_slot_count()) {
        throw ArityMismatch(fmt::format("assignment has {} scalar values, template has {} sub-slots",
                                        assignment.values.size(), tmpl.scalar_slot_count()));
    }
    for (const auto& id : tmpl.list_slot_ids()) {
        if (!assignment.lists.count(id)) {
            throw ArityMismatch(fmt::format("assignment missing list slot {}", id));
        }
    }

    std::vector<std::string> rendered;
    rendered.reserve(tmpl.expressions.size());
    size_t position = 0;
    for (const auto& et : tmpl.expressions) {
        std::string expr;
        std::vector<Rational> expected_scalars;
        const ExpressionTemplate::SubSlot* list_slot = nullptr;
        for (size_t k = 0; k < et.slots.size(); ++k) {
            expr += et.segments[k];
            const auto& slot = et.slots[k];
            if (slot.form.kind == LiteralForm::Kind::TupleList) {
                auto text = render_tuple_list(assignment.lists.at(slot.id));
                if (!text) {
                    throw UnrenderableValue(fmt::format("list slot {} has non-integral elements", slot.id));
                }
                expr += *text;
                list_slot = &slot;
            } else {
                const Rational& value = assignment.values[position++];
                auto text = render_literal(value, slot.form);
                if (!text) {
                    throw UnrenderableValue(fmt::format("value {} is not representable in sub-slot {}",
                                                        to_string(value), slot.id));
                }
                expr += *text;
                expected_scalars.push_back(value);
            }
        }
        expr += et.segments.back();

        // Read-back guard: the rendered expression must scan to exactly the
        // assigned values, or candidate alignment would silently break
        // (e.g. a negative value after a binary minus).
        if (list_slot != nullptr) {
            auto back = parse_tuple_list(expr);
            if (!back || *back != assignment.lists.at(list_slot->id)) {
                throw UnrenderableValue(fmt::format("list slot {} does not read back verbatim", list_slot->id));
            }
        } else {
            auto tokens = scan_literal_tokens(expr);
            bool ok = tokens.size() == expected_scalars.size();
            for (size_t k = 0; ok && k < tokens.size(); ++k) ok = tokens[k].value == expected_scalars[k];
            if (!ok) {
                throw UnrenderableValue(fmt::format("expression '{}' does not scan back to its assigned values", expr));
            }
        }
        rendered.push_back(std::move(expr));
    }

    std::vector<std::string> q_exprs(rendered.begin(),
                                     rendered.begin() + static_cast<long>(tmpl.question_expression_count));
    std::vector<std::string> s_exprs(rendered.begin() + static_cast<long>(tmpl.question_expression_count),
                                     rendered.end());
    Problem p;
    p.id = candidate_id.empty() ? tmpl.problem_id : candidate_id;
    p.question = tmpl.question_skeleton.reconstruct(q_exprs);
    p.solution = tmpl.solution_skeleton.reconstruct(s_exprs);
    p.answer = assignment.answer;
    return p;
}

namespace {

nlohmann::json form_to_json(const LiteralForm& form) {
    switch (form.kind) {
        case LiteralForm::Kind::Integer:
            return {{"kind", "integer"}};
        case LiteralForm::Kind::Decimal:
            return {{"kind", "decimal"}, {"scale", form.scale}};
        case LiteralForm::Kind::Fraction:
            if (form.lowest) return {{"kind", "fraction"}, {"lowest", true}};
            return {{"kind", "fraction"}, {"lowest", false}, {"den", form.den_written.str()}};
        case LiteralForm::Kind::Percent:
            return {{"kind", "percent"}, {"scale", form.scale}};
        case LiteralForm::Kind::TupleList:
            return {{"kind", "tuple_list"}};
    }
    return {};
}

LiteralForm form_from_json(const nlohmann::json& j) {
    LiteralForm form;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "integer") {
        form.kind = LiteralForm::Kind::Integer;
    } else if (kind == "decimal") {
        form.kind = LiteralForm::Kind::Decimal;
        form.scale = j.at("scale").get<int>();
    } else if (kind == "fraction") {
        form.kind = LiteralForm::Kind::Fraction;
        form.lowest = j.at("lowest").get<bool>();
        if (!form.lowest) form.den_written = BigInt(j.at("den").get<std::string>());
    } else if (kind == "percent") {
        form.kind = LiteralForm::Kind::Percent;
        form.scale = j.at("scale").get<int>();
    } else if (kind == "tuple_list") {
        form.kind = LiteralForm::Kind::TupleList;
    } else {
        throw SchemaError("unknown literal form kind: " + kind);
    }
    return form;
}

nlohmann::json skeleton_to_json(const TextSkeleton& sk) {
    nlohmann::json pads = nlohmann::json::array();
    for (const auto& [lead, trail] : sk.pads) pads.push_back({lead, trail});
    return {{"segments", sk.segments}, {"pads", pads}};
}

TextSkeleton skeleton_from_json(const nlohmann::json& j) {
    TextSkeleton sk;
    sk.segments = j.at("segments").get<std::vector<std::string>>();
    for (const auto& pad : j.at("pads")) {
        sk.pads.emplace_back(pad.at(0).get<std::string>(), pad.at(1).get<std::string>());
    }
    return sk;
}

nlohmann::json tuple_list_to_json(const TupleList& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& tuple : list) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& v : tuple) t.push_back(to_string(v));
        out.push_back(t);
    }
    return out;
}

TupleList tuple_list_from_json(const nlohmann::json& j) {
    TupleList list;
    for (const auto& tuple : j) {
        std::vector<Rational> t;
        for (const auto& v : tuple) {
            auto r = parse_rational(v.get<std::string>());
            if (!r) throw SchemaError("bad rational in tuple list");
            t.push_back(*r);
        }
        list.push_back(std::move(t));
    }
    return list;
}

}  // namespace

nlohmann::json template_to_json(const ProblemTemplate& tmpl) {
    nlohmann::json exprs = nlohmann::json::array();
    for (const auto& et : tmpl.expressions) {
        nlohmann::json slots = nlohmann::json::array();
        for (const auto& slot : et.slots) {
            slots.push_back({{"id", slot.id}, {"form", form_to_json(slot.form)}});
        }
        exprs.push_back({{"segments", et.segments}, {"slots", slots}});
    }
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : tmpl.source_values) values.push_back(to_string(v));
    nlohmann::json lists = nlohmann::json::object();
    for (const auto& [id, list] : tmpl.source_lists) lists[id] = tuple_list_to_json(list);
    return {
        {"problem_id", tmpl.problem_id},
        {"question_skeleton", skeleton_to_json(tmpl.question_skeleton)},
        {"solution_skeleton", skeleton_to_json(tmpl.solution_skeleton)},
        {"question_expression_count", tmpl.question_expression_count},
        {"expressions", exprs},
        {"source_expressions", tmpl.source_expressions},
        {"source_values", values},
        {"source_lists", lists},
        {"source_answer", tmpl.source_answer},
    };
}

ProblemTemplate template_from_json(const nlohmann::json& j) {
    try {
        ProblemTemplate tmpl;
        tmpl.problem_id = j.at("problem_id").get<std::string>();
        tmpl.question_skeleton = skeleton_from_json(j.at("question_skeleton"));
        tmpl.solution_skeleton = skeleton_from_json(j.at("solution_skeleton"));
        tmpl.question_expression_count = j.at("question_expression_count").get<size_t>();
        for (const auto& ej : j.at("expressions")) {
            ExpressionTemplate et;
            et.segments = ej.at("segments").get<std::vector<std::string>>();
            for (const auto& sj : ej.at("slots")) {
                et.slots.push_back({sj.at("id").get<std::string>(), form_from_json(sj.at("form"))});
            }
            tmpl.expressions.push_back(std::move(et));
        }
        tmpl.source_expressions = j.at("source_expressions").get<std::vector<std::string>>();
        for (const auto& vj : j.at("source_values")) {
            auto r = parse_rational(vj.get<std::string>());
            if (!r) throw SchemaError("bad rational in source_values");
            tmpl.source_values.push_back(*r);
        }
        for (const auto& [id, lj] : j.at("source_lists").items()) {
            tmpl.source_lists[id] = tuple_list_from_json(lj);
        }
        tmpl.source_answer = j.at("source_answer").get<std::string>();
        return tmpl;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("template document: ") + e.what());
    }
}

}  // namespace isoforge
