#pragma once

// JSON reading and writing for inputs, reports and truncated minions.

#include <json.hpp>

#include "minioncore/canon.hpp"
#include "minioncore/classify.hpp"
#include "minioncore/descriptions.hpp"
#include "minioncore/mincore.hpp"
#include "minioncore/multisorted.hpp"
#include "minioncore/translate.hpp"

namespace minioncore {

using Json = nlohmann::ordered_json;

enum class InputKind { Relations, Description, Finite, Core };

/// "domain" -> Finite, "k" -> Description, "sorts" -> Relations, "core" -> Core.
InputKind detect_input(const Json& j);

Json to_json(const TruthTable& t);
TruthTable truth_table_from_json(const Json& j);

struct RelationalInput {
    Signature signature;
    std::vector<TypedRelation> relations;
};

/// Tuples list carrier elements by label.
RelationalInput relations_from_json(const Json& j);
Json to_json(const Signature& sig, const std::vector<TypedRelation>& relations);

Description description_from_json(const Json& j);
Json to_json(const Description& d);
Json to_json(const ReducedDescription& rd);

FiniteStructure finite_from_json(const Json& j);

/// The minion named by an input: a canonical core, the clone of a
/// description, or the idempotent polymorphisms of relations after taking the
/// idempotent core. Zero sorts stands for T.
struct MinionSpec {
    int sorts = 0;
    std::vector<Atom> atoms;
    std::string label;
};

MinionSpec minion_from_json(const Json& j, std::size_t budget);

Json report_json(const ClassificationReport& rep);
Json report_json(const FiniteReport& rep);
Json translation_json(const FiniteTranslation& t);
Json reduction_json(const Description& d, const Reduction& r);
/// Element tables per arity and their images under the generator minors.
Json minion_json(const TruncatedMinion& M);

}  // namespace minioncore
