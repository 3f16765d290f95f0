#pragma once

// Single-sorted Boolean operations stored as bit tables.
//
// The value at input tuple (a_1, ..., a_n) lives at bit index
// sum_j a_j * 2^(j-1), i.e. coordinate 1 is the least significant.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace minioncore {

class TruthTable {
public:
    static constexpr int kMaxArity = 6;

    TruthTable() = default;
    /// Bits above 2^arity are rejected.
    TruthTable(int arity, std::uint64_t bits);

    static TruthTable projection(int arity, int coordinate);
    static TruthTable meet_op(int arity);
    static TruthTable join_op(int arity);
    static TruthTable constant(int arity, bool value);

    int arity() const { return arity_; }
    std::uint64_t bits() const { return bits_; }
    std::size_t size() const { return std::size_t{1} << arity_; }
    std::uint64_t mask() const { return full_mask(arity_); }

    bool operator[](std::uint32_t index) const { return (bits_ >> index) & 1U; }
    bool eval(std::span<const int> input) const;

    bool is_idempotent() const;
    bool is_monotone() const;
    bool is_symmetric() const;

    static std::uint64_t full_mask(int arity);

    friend auto operator<=>(const TruthTable&, const TruthTable&) = default;

private:
    int arity_ = 1;
    std::uint64_t bits_ = 0b10;
};

/// result(c) = f(c o alpha) for every m-tuple c; alpha is 0-based, alpha[j] < m.
TruthTable minor(const TruthTable& f, std::span<const int> alpha, int target_arity);

/// A minor map with its row lookup precomputed, for applying one alpha to
/// many tables.
class MinorMap {
public:
    MinorMap(std::span<const int> alpha, int target_arity);
    int source_arity() const { return source_; }
    int target_arity() const { return target_; }
    TruthTable operator()(const TruthTable& f) const;

private:
    int source_;
    int target_;
    // Output bits contributed by each byte of the source table.
    std::vector<std::array<std::uint64_t, 256>> bytes_;
};

TruthTable dual(const TruthTable& f);
TruthTable meet(const TruthTable& f, const TruthTable& g);
TruthTable join(const TruthTable& f, const TruthTable& g);
bool leq(const TruthTable& f, const TruthTable& g);

/// Smallest monotone g with f <= g.
TruthTable upward_closure(const TruthTable& f);
/// Largest monotone g with g <= f.
TruthTable downward_interior(const TruthTable& f);

/// f(a) <= g(b) whenever a <= b.
bool triangle(const TruthTable& f, const TruthTable& g);

/// All idempotent n-ary tables in increasing bit order.
std::vector<TruthTable> enumerate_idempotent(int arity, int cap = 4);

std::string to_hex(const TruthTable& f);
TruthTable from_hex(int arity, const std::string& hex);

/// Values of a symmetric idempotent 5-ary operation on inputs of weight 1..4.
struct Sym5Profile {
    std::array<bool, 4> a{};

    friend auto operator<=>(const Sym5Profile&, const Sym5Profile&) = default;
};

enum class Sym5Relation { Leq, Triangle, SelfLeqDual, SelfTriangleDual, SelfDualEq };

TruthTable sym5_from_profile(const Sym5Profile& p);
/// Throws InputError unless f is a symmetric idempotent 5-ary table.
Sym5Profile sym5_profile_of(const TruthTable& f);
/// Decides the relation from the profiles alone; `q` is ignored for the self relations.
bool sym5_compare(const Sym5Profile& p, const Sym5Profile& q, Sym5Relation relation);
/// The 16 profiles in order (a1 least significant).
std::vector<Sym5Profile> all_sym5_profiles();
std::vector<TruthTable> enumerate_symmetric5();

}  // namespace minioncore
