#pragma once

#include "isoforge/rational.hpp"
#include "isoforge/templating.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace isoforge {

// The numeric content of a problem, position-aligned with its template's
// scalar sub-slots, plus list-slot contents keyed by sub-slot id.
struct ValueVector {
    std::vector<Rational> values;
    std::map<std::string, TupleList> lists;
};

ValueVector value_vector(const SlotAssignment& assignment);
ValueVector source_value_vector(const ProblemTemplate& tmpl);

// A single quantitative relationship over sub-slot positions.
//
// Operand conventions (positions are indices into ValueVector::values,
// pairwise distinct):
//   equality                [i, j]        v_i == v_j
//   additive                [i, j, k]     v_i + v_j == v_k
//   multiplicative          [i, j, k]     v_i * v_j == v_k
//   additive_multiplicative [i, j, k, l]  v_i * v_j + v_k == v_l
//   count                   [k] + list    |list| == v_k
//   power                   [i, j, k]     v_i ^ v_j == v_k  (v_j integral >= 0)
//   modulo                  [i, j, k]     v_i mod v_j == v_k (integral, v_j > 0)
// Commutative pairs (i, j) are stored with i < j.
struct Relation {
    enum class Kind {
        Equality,
        Additive,
        Multiplicative,
        AdditiveMultiplicative,
        Count,
        Power,
        Modulo,
    };

    Kind kind = Kind::Equality;
    std::vector<size_t> operands;
    std::string list_id;  // count only
    std::vector<Rational> params;  // reserved for hand-authored relations

    bool operator==(const Relation&) const = default;
};

std::string to_string(Relation::Kind kind);
std::string describe(const Relation& r);

// Sound, deduplicated, canonically ordered (kind, list id, operands).
struct RelationSet {
    std::vector<Relation> relations;
};

// Exact evaluation. Modulo with non-integral operands or a non-positive
// modulus is false, not an error; power with a non-integral or negative
// exponent is false. Out-of-range positions throw PositionMismatch.
bool eval_relation(const Relation& r, const ValueVector& v);

// Exhaustive brute force over all distinct-position operand tuples up to
// arity 4, with exact arithmetic. Only relations true on `source` are kept,
// then the trivia filters below are applied:
//
//   F1  skip any non-equality relation whose positions include a pair
//       p != q with v_p == v_q: the plain equality(p, q) already covers it.
//   F2  additive: skip when any of the three values is 0.           [escape]
//   F3  multiplicative: skip when any of the three values is 1.     [escape]
//   F4  additive_multiplicative: skip when a factor is 1 or the
//       addend is 0 (it degenerates to a simpler kind).             [escape]
//   F5  power: skip when the base or the exponent is 0 or 1.
//   F6  modulo: skip when the modulus is 1 or the dividend is smaller
//       than the modulus (the operation is an identity).
//
// Escape clause: a relation skipped by F2-F4 is re-admitted when, after
// filtering, one of its positions appears in no kept relation at all.
RelationSet mine_relations(const ValueVector& source);

// True iff every relation holds on the candidate vector. Throws
// PositionMismatch when the candidate cannot be aligned (missing positions
// or list slots).
bool conceptual_correctness(const RelationSet& source_rels, const ValueVector& candidate);

// Relations that fail on the candidate, for failure reporting.
std::vector<Relation> violated_relations(const RelationSet& source_rels, const ValueVector& candidate);

nlohmann::json relation_set_to_json(const RelationSet& set);
RelationSet relation_set_from_json(const nlohmann::json& j);

// Aggregation mirroring the benchmark's per-difficulty relation counts.
struct RelationStatsRow {
    size_t problems = 0;
    size_t total = 0;
    Rational mean;
    size_t max = 0;
};

struct RelationStats {
    std::map<Difficulty, RelationStatsRow> by_difficulty;
    RelationStatsRow overall;
};

RelationStats relation_stats(const std::vector<RelationSet>& sets,
                             const std::vector<Difficulty>& difficulties);

}  // namespace isoforge
