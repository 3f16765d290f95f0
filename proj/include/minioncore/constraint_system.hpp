#pragma once

// Pairwise order constraints between (possibly dualized) symbols, and an
// exact enumerator of all idempotent tuples satisfying them at a fixed arity.

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "minioncore/boolfun.hpp"
#include "minioncore/multisorted.hpp"

namespace minioncore {

/// A symbol, or its dual when `dual` is set.
struct Literal {
    int symbol = 0;
    bool dual = false;

    Literal negated() const { return {symbol, !dual}; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

enum class Relation { Triangle, Leq, Eq };

struct Atom {
    Relation relation = Relation::Triangle;
    Literal lhs;
    Literal rhs;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

TruthTable literal_value(const Literal& lit, std::span<const TruthTable> ops);
bool holds(const Atom& atom, std::span<const TruthTable> ops);
bool satisfies_all(std::span<const Atom> atoms, std::span<const TruthTable> ops);

enum class EnumMode {
    Full,        // every idempotent table of the requested arity
    Symmetric5,  // symmetric idempotent 5-ary tables only
};

struct EnumOptions {
    int arity = 2;
    EnumMode mode = EnumMode::Full;
    int full_cap = 4;
    std::size_t budget = 2'000'000;
};

/// Visits every idempotent tuple of `symbols` tables satisfying all atoms, in
/// lexicographic order of (component 1 bits, component 2 bits, ...).
/// Throws BudgetError once more than `budget` search nodes are visited.
void for_each_solution(int symbols, std::span<const Atom> atoms, const EnumOptions& options,
                       const std::function<void(const MultiOp&)>& visit);

std::vector<MultiOp> all_solutions(int symbols, std::span<const Atom> atoms, const EnumOptions& options);

std::string to_string(const Literal& lit, const std::function<std::string(int)>& name);
std::string to_string(const Atom& atom, const std::function<std::string(int)>& name);
std::ostream& operator<<(std::ostream& os, const Atom& atom);

}  // namespace minioncore
