#pragma once

// Multisorted operations and typed relations over finite carriers.
//
// Boolean multisorted operations are tuples of TruthTable (MultiOp). General
// finite carriers, needed for the finite-domain bridge, use FiniteOp whose
// table index is sum_j a_j * size^(j-1) over carrier positions.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minioncore/boolfun.hpp"

namespace minioncore {

/// One Boolean table per sort, all of the same arity.
using MultiOp = std::vector<TruthTable>;

int arity_of(const MultiOp& op);
bool is_idempotent(const MultiOp& op);
MultiOp multi_projection(int sorts, int arity, int coordinate);
MultiOp multi_minor(const MultiOp& op, std::span<const int> alpha, int target_arity);
MultiOp multi_minor(const MultiOp& op, const MinorMap& map);

/// An operation on a carrier of `size` elements, values are carrier positions.
struct FiniteOp {
    int size = 2;
    int arity = 1;
    std::vector<std::uint8_t> values;

    static FiniteOp projection(int size, int arity, int coordinate);

    std::size_t rows() const { return values.size(); }
    int at(std::span<const int> input) const;
    bool is_idempotent() const;

    friend auto operator<=>(const FiniteOp&, const FiniteOp&) = default;
};

using FiniteMultiOp = std::vector<FiniteOp>;

std::size_t power(std::size_t base, int exponent);
FiniteOp finite_minor(const FiniteOp& f, std::span<const int> alpha, int target_arity);
FiniteOp from_truth_table(const TruthTable& t);
TruthTable to_truth_table(const FiniteOp& f);
MultiOp to_boolean(const FiniteMultiOp& op);
FiniteMultiOp from_boolean(const MultiOp& op);

/// Carriers are listed explicitly by element label; operations and relations
/// refer to elements by their position within the carrier.
struct Signature {
    std::vector<std::vector<int>> carriers;

    static Signature boolean(int sorts);
    int sort_count() const { return static_cast<int>(carriers.size()); }
    int carrier_size(int sort) const { return static_cast<int>(carriers.at(sort).size()); }
    bool is_boolean() const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// The type tuple is part of the relation's identity.
struct TypedRelation {
    std::vector<int> type;
    std::vector<std::vector<int>> tuples;  // sorted, duplicate free

    /// Sorts and deduplicates tuples.
    static TypedRelation make(std::vector<int> type, std::vector<std::vector<int>> tuples);
    int arity() const { return static_cast<int>(type.size()); }

    friend auto operator<=>(const TypedRelation&, const TypedRelation&) = default;
};

/// Throws InputError when a relation does not respect its type.
void validate(const Signature& sig, const TypedRelation& rel);

bool preserves(const FiniteMultiOp& op, const TypedRelation& rel, const Signature& sig);
bool preserves(const MultiOp& op, const TypedRelation& rel);

struct PolOptions {
    int arity = 2;
    bool idempotent_only = false;
    std::size_t budget = 5'000'000;
};

/// All polymorphisms of the given arity, in lexicographic component order.
std::vector<FiniteMultiOp> pol_enumerate(const Signature& sig, std::span<const TypedRelation> relations,
                                         const PolOptions& options);
std::vector<MultiOp> pol_enumerate_boolean(int sorts, std::span<const TypedRelation> relations,
                                           const PolOptions& options);

struct IdempotentCore {
    bool trivial = false;  // Pol ~ T
    Signature signature;
    std::vector<TypedRelation> relations;
    /// For each surviving sort, its index in the input signature.
    std::vector<int> source_sort;
    /// The idempotent unary retraction, one component per input sort.
    FiniteMultiOp retraction;
};

IdempotentCore idempotent_core(const Signature& sig, std::span<const TypedRelation> relations,
                               std::size_t budget = 5'000'000);

}  // namespace minioncore
