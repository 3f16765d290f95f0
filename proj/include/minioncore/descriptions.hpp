#pragma once

// Descriptions: constraint sets over function symbols, and their reduction
// to the f/g normal form used by the classification.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minioncore/constraint_system.hpp"
#include "minioncore/multisorted.hpp"

namespace minioncore {

/// Constraints use Relation::Triangle or Relation::Eq only.
struct Description {
    int k = 0;
    std::vector<Atom> constraints;  // sorted, duplicate free

    static Description make(int k, std::vector<Atom> constraints);

    friend bool operator==(const Description&, const Description&) = default;
};

/// Symbols 0..f-1 are f-symbols, f..f+g-1 are g-symbols. The constraints
/// include g = g^d for every g-symbol.
struct ReducedDescription {
    int f = 0;
    int g = 0;
    std::vector<Atom> constraints;

    int symbols() const { return f + g; }
    bool is_g(int symbol) const { return symbol >= f; }
    std::string name(int symbol) const;
    Description description() const { return Description::make(symbols(), constraints); }

    friend bool operator==(const ReducedDescription&, const ReducedDescription&) = default;
};

/// Throws InternalError naming the first violated reduced-form condition.
void validate_reduced(const ReducedDescription& rd);
bool is_reduced(const ReducedDescription& rd);

Description extract_description(const IdempotentCore& core);

/// Original symbol s is interpreted as target^dual.
struct SymbolImage {
    int target = 0;
    bool dual = false;

    friend auto operator<=>(const SymbolImage&, const SymbolImage&) = default;
};

struct MergeResult {
    Description merged;
    std::vector<SymbolImage> image;  // per original symbol
    std::vector<bool> self_dual;     // per merged symbol
};

MergeResult forced_merge(const Description& d);

struct CnfLiteral {
    int var = 0;
    bool negated = false;

    friend auto operator<=>(const CnfLiteral&, const CnfLiteral&) = default;
};

struct Clause {
    CnfLiteral a;
    CnfLiteral b;

    friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// A self-complementary variable has a single node in the implication graph,
/// standing for a g-symbol (g = g^d). Its truth value is meaningless.
struct CnfFormula {
    int variables = 0;
    std::vector<bool> self_complementary;
    std::vector<Clause> clauses;
};

/// Implication graph SCCs, assignment read off Tarjan's completion order.
std::optional<std::vector<bool>> apt_solve(const CnfFormula& formula);

/// Input constraints over f/g symbols in the shapes left after the simple
/// adjustments. Variables are the f- then g-symbols.
CnfFormula build_2cnf(const ReducedDescription& adjusted);

struct Reduction {
    ReducedDescription reduced;
    std::vector<SymbolImage> symbol_map;  // per original symbol, into reduced symbols
    MergeResult merge;
    std::vector<bool> flipped;  // per f-symbol
};

Reduction to_reduced(const Description& d);

/// Homomorphisms Clo(d) -> Clo(reduced) and back induced by the symbol map.
MultiOp to_reduced_op(const Reduction& r, const MultiOp& op);
MultiOp from_reduced_op(const Reduction& r, const MultiOp& op);

bool has_monotone(const ReducedDescription& rd);
std::vector<int> ranks(const ReducedDescription& rd);
int rank(const ReducedDescription& rd, int f_symbol);
int chain_rank(const ReducedDescription& rd);

std::vector<MultiOp> clo_enumerate(const Description& d, const EnumOptions& options);
std::vector<MultiOp> clo_enumerate(const ReducedDescription& rd, const EnumOptions& options);

std::string to_string(const Description& d);
std::string to_string(const ReducedDescription& rd);

}  // namespace minioncore
