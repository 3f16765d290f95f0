#pragma once

// The canonical minions T, A_k, B_k, C_k, D_k, B_inf, C_inf, D_inf, their
// homomorphism order, and the symmetric 5-ary operations separating them.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "minioncore/constraint_system.hpp"
#include "minioncore/multisorted.hpp"

namespace minioncore {

enum class CoreTag { T, A, B, C, D, Binf, Cinf, Dinf };

/// Normalized: C_1 is stored as D_1 and k is 0 for the tags without index.
struct CoreId {
    CoreTag tag = CoreTag::T;
    int k = 0;

    static CoreId make(CoreTag tag, int k = 0);
    static CoreId parse(const std::string& text);

    bool indexed() const { return tag == CoreTag::A || tag == CoreTag::B || tag == CoreTag::C || tag == CoreTag::D; }
    int sorts() const;

    friend auto operator<=>(const CoreId&, const CoreId&) = default;
};

std::string to_string(const CoreId& c);

/// Every CoreId with index at most max_k, in a fixed order.
std::vector<CoreId> all_cores(int max_k);

/// The defining constraints over h_1..h_sorts (0-based symbols).
std::vector<Atom> core_atoms(const CoreId& c);
bool membership(const CoreId& c, const MultiOp& op);
std::vector<MultiOp> core_enumerate(const CoreId& c, const EnumOptions& options);
std::vector<MultiOp> binary_part(const CoreId& c);

struct ChainOps {
    std::vector<MultiOp> t;  // t^1..t^k
    std::optional<MultiOp> u;  // k >= 2 only
    MultiOp v;
    MultiOp w;
};

ChainOps chain_ops(int k);

/// Symmetric 5-ary 2-sorted operations of the C_inf core argument.
MultiOp cinf_t();
MultiOp cinf_t_prime();

/// lhs_op(lhs_word) = rhs_op(rhs_word), where an operation index of -1 means
/// the word's single letter is a variable. Letters index the variables.
struct Identity {
    int lhs_op = 0;
    std::vector<int> lhs_word;
    int rhs_op = 0;
    std::vector<int> rhs_word;
    int variables = 2;
};

enum class SuiteKind { Chain, AB, CD, Sym };

/// Identities over operations h^1..h^k (0-based indices).
std::vector<Identity> identity_suite(SuiteKind kind, int k);
bool check_identity(const std::vector<MultiOp>& ops, const Identity& id);
bool check_identities(const std::vector<MultiOp>& ops, const std::vector<Identity>& suite);
std::string to_string(const Identity& id);

bool poset_leq(const CoreId& a, const CoreId& b);
/// Hasse cover pairs (lower, upper) among all_cores(max_k).
std::vector<std::pair<CoreId, CoreId>> poset_covers(int max_k);
/// Hasse diagram of the cores with index at most max_k.
std::string poset_dot(int max_k);

/// A homomorphism between canonical minions given componentwise: target
/// sort i receives source sort `component[i]`. An empty source maps T.
struct CoreHom {
    CoreId from;
    CoreId to;
    std::vector<int> component;

    MultiOp apply(const MultiOp& op) const;
};

/// Throws InputError when poset_leq(a, b) is false.
CoreHom table1_hom(const CoreId& a, const CoreId& b);
/// Generator edges of the poset among cores of index <= max_k.
std::vector<std::pair<CoreId, CoreId>> table1_edges(int max_k);

}  // namespace minioncore
