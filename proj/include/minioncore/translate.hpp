#pragma once

// Finite-domain relations with small projections, translated into
// multisorted Boolean relations with the same polymorphism minion up to
// equivalence.

#include <array>
#include <string>
#include <vector>

#include "minioncore/classify.hpp"
#include "minioncore/mincore.hpp"
#include "minioncore/multisorted.hpp"

namespace minioncore {

/// Relations on {0, ..., domain - 1}; every tuple of a relation has the
/// relation's arity.
struct FiniteStructure {
    int domain = 0;
    std::vector<std::vector<std::vector<int>>> relations;
};

void validate(const FiniteStructure& psi);
bool small_projections_check(const FiniteStructure& psi);

struct Translation {
    /// One sort per two-element projection {a, b}, a < b, ordered by (a, b);
    /// a is renamed 0 and b is renamed 1.
    std::vector<std::array<int, 2>> sorts;
    Signature signature;
    std::vector<TypedRelation> relations;
};

/// Empty relations are dropped; coordinates with a one-element projection are
/// dropped; all singleton unary relations are adjoined. Throws InputError on a
/// projection with more than two elements.
Translation translate_small_projections(const FiniteStructure& psi);

/// (f_P)_P for the given sorts. Throws InputError unless f preserves each P.
MultiOp restrict_polymorphism(const FiniteOp& f, const std::vector<std::array<int, 2>>& sorts);

/// 0-based coordinates g depends on, ascending.
std::vector<int> essential_coordinates(const FiniteOp& g);

/// The converse construction: sort s becomes the block {2s, 2s+1} of one
/// domain, each relation is carried over, and every block is added as a unary
/// relation.
FiniteStructure from_multisorted(const Signature& sig, const std::vector<TypedRelation>& relations);

/// X on the l-ary members of Pol(Gamma), l = |C|: when the essential
/// coordinates of all components lie in some Q with at most two elements the
/// value is f_Q at a tuple reading i at each i in Q, otherwise 0.
int x_value(const Translation& t, int l, const MultiOp& f);

struct FiniteTranslation {
    std::string digest;
    bool trivial = false;  // the idempotent core is a point
    IdempotentCore idempotent;
    /// The idempotent core of the input, relabelled onto {0, ..., l' - 1};
    /// labels[i] is the input element at position i.
    FiniteStructure core;
    std::vector<int> labels;
    Translation translation;
    /// sortDictionary in input labels: entry s lists the elements renamed 0 and 1.
    std::vector<std::array<int, 2>> sort_dictionary;
};

/// Idempotent core first, then the translation of the core.
FiniteTranslation translate_finite(const FiniteStructure& psi, std::size_t budget = 5'000'000);

struct FiniteReport : FiniteTranslation {
    ClassificationReport report;
};

FiniteReport classify_finite(const FiniteStructure& psi, const VerifyOptions& options = {});

}  // namespace minioncore
