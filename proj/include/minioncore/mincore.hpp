#pragma once

// Truncated minions: multisorted Boolean function minions cut off at an arity
// cap, homomorphisms between them, and minion cores up to the cap.

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <optional>
#include <string>
#include <vector>

#include "minioncore/canon.hpp"
#include "minioncore/constraint_system.hpp"
#include "minioncore/multisorted.hpp"

namespace minioncore {

struct MultiOpHash {
    std::size_t operator()(const MultiOp& op) const {
        std::size_t h = op.size();
        for (const auto& t : op) {
            h = h * 1000003U ^ (t.bits() * 0x9E3779B97F4A7C15ULL) ^ static_cast<std::size_t>(t.arity());
        }
        return h;
    }
};

class TruncatedMinion {
public:
    /// elements[n-1] lists the n-ary members for n = 1..cap. Throws InputError
    /// unless every set is nonempty and closed under in-cap minors.
    TruncatedMinion(int sorts, std::vector<std::vector<MultiOp>> elements, std::vector<MultiOp> witnesses = {},
                    std::optional<std::vector<Atom>> atoms = std::nullopt);

    int sorts() const { return sorts_; }
    int cap() const { return static_cast<int>(elements_.size()); }
    const std::vector<MultiOp>& at(int arity) const { return elements_.at(static_cast<std::size_t>(arity - 1)); }
    std::size_t size(int arity) const { return at(arity).size(); }
    /// Index of op among the members of the given arity, or -1.
    int find(int arity, const MultiOp& op) const;
    /// Membership at any arity: the element table within cap, otherwise the
    /// defining constraints (false when there are none).
    bool contains(int arity, const MultiOp& op) const;

    /// Symmetric 5-ary members used to separate minions beyond the cap.
    const std::vector<MultiOp>& witnesses() const { return witnesses_; }
    const std::optional<std::vector<Atom>>& atoms() const { return atoms_; }

private:
    int sorts_;
    std::vector<std::vector<MultiOp>> elements_;
    std::vector<std::unordered_map<MultiOp, int, MultiOpHash>> index_;
    std::vector<MultiOp> witnesses_;
    std::optional<std::vector<Atom>> atoms_;
};

struct MinionOptions {
    int cap = 3;
    bool witnesses = false;  // attach every symmetric 5-ary member
    std::size_t budget = 2'000'000;
};

TruncatedMinion from_function_minion(int sorts, std::vector<std::vector<MultiOp>> elements);
TruncatedMinion from_atoms(int sorts, const std::vector<Atom>& atoms, const MinionOptions& options);
TruncatedMinion from_core(const CoreId& core, const MinionOptions& options);
/// All idempotent k-sorted operations.
TruncatedMinion idempotent_minion(int sorts, const MinionOptions& options);

struct MinorGenerator {
    int target;
    std::vector<int> alpha;
};

/// Generators of the minor maps out of arity n within the cap: a
/// transposition, a cycle, identifying the last two coordinates and adding a
/// dummy coordinate.
std::vector<MinorGenerator> minor_generators(int n, int cap);

/// Every map [n] -> [m] as a 0-based vector, in lexicographic order.
std::vector<std::vector<int>> all_maps(int n, int m);

struct TruncatedHom {
    std::vector<std::vector<int>> map;  // map[n-1][i]: index of the image of M^(n)[i] in N^(n)
    std::vector<MultiOp> witness_images;

    const std::vector<int>& binary() const { return map.at(1); }
};

/// Checks that an explicit per-element map lands in N and commutes with all
/// in-cap minors; witnesses are checked for membership and for commuting with
/// minors into arity 2. Returns a description of the first failure.
std::optional<std::string> check_hom(const TruncatedMinion& M, const TruncatedMinion& N,
                                     const std::function<MultiOp(const MultiOp&)>& f);
struct StreamReport {
    std::vector<std::size_t> members;  // checked members per arity
    std::size_t witnesses = 0;
    std::optional<std::string> failure;
};

/// check_hom between the minions defined by two constraint sets, without
/// storing either side: members of the source are streamed arity by arity,
/// images are tested against the target's constraints and against the
/// generator minors.
StreamReport check_hom_stream(int sorts, const std::vector<Atom>& source, int target_sorts,
                              const std::vector<Atom>& target, const std::function<MultiOp(const MultiOp&)>& f,
                              const MinionOptions& options);

/// Builds the hom from an explicit map after check_hom succeeds.
std::optional<TruncatedHom> hom_from_function(const TruncatedMinion& M, const TruncatedMinion& N,
                                              const std::function<MultiOp(const MultiOp&)>& f);

struct ExtensionResult {
    std::optional<TruncatedHom> hom;
    std::string failure;
};

/// Extends a map on binary members (xi2[i] indexes N^(2)) by reading every
/// value off a binary minor, then validates it.
ExtensionResult extend_binary_map(const TruncatedMinion& M, const TruncatedMinion& N, const std::vector<int>& xi2);

struct SearchOptions {
    std::size_t budget = 5'000'000;  // candidate binary maps
    bool check_minors = true;        // re-verify minor commutation of found homs
};

/// First homomorphism in canonical candidate order. Candidates fix the binary
/// projections and commute with swapping the two variables.
std::optional<TruncatedHom> hom_search(const TruncatedMinion& M, const TruncatedMinion& N,
                                       const SearchOptions& options = {});
std::vector<TruncatedHom> endo_enumerate(const TruncatedMinion& M, const SearchOptions& options = {});
bool is_core_truncated(const TruncatedMinion& M, const SearchOptions& options = {});
/// Shrinks M by endomorphisms with minimal image sizes until every endomorphism
/// is bijective on binaries. Witnesses are dropped.
TruncatedMinion compute_core_truncated(const TruncatedMinion& M, const SearchOptions& options = {});

/// Image of a hom as a sub-minion of N.
TruncatedMinion image_minion(const TruncatedMinion& N, const TruncatedHom& hom);

/// A hom into the clone of all operations on [l]: f maps to the operation
/// c -> X(M^(c)(f)), tuples c in [l]^n read as maps [n] -> [l].
struct PointHom {
    int l = 2;
    std::vector<std::vector<FiniteOp>> images;  // per arity, per element
};

PointHom hom_from_point_map(const TruncatedMinion& M, const std::vector<int>& X, int l);
bool point_hom_commutes(const TruncatedMinion& M, const PointHom& hom);

}  // namespace minioncore
