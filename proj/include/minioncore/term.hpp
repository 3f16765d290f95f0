#pragma once

// Terms over function symbols in the signature {meet, join, dual}. A list of
// terms induces a minor-preserving map between multisorted clones.

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "minioncore/boolfun.hpp"
#include "minioncore/multisorted.hpp"

namespace minioncore {

class Term {
public:
    enum class Kind { Symbol, Meet, Join, Dual };

    static Term symbol(int index);
    static Term meet(Term a, Term b);
    static Term join(Term a, Term b);
    static Term dual(Term a);

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    const Term& left() const { return *args_.at(0); }
    const Term& right() const { return *args_.at(1); }

    /// Replaces every leaf i by leaves[i].
    Term substitute(std::span<const Term> leaves) const;
    int max_symbol() const;

    friend bool operator==(const Term& a, const Term& b);

private:
    Kind kind_ = Kind::Symbol;
    int index_ = 0;
    std::vector<std::shared_ptr<const Term>> args_;
};

TruthTable eval_term(const Term& t, std::span<const TruthTable> ops);
MultiOp apply_terms(std::span<const Term> terms, const MultiOp& op);

/// Prefix notation, e.g. meet(f1,dual(f2)).
std::string to_string(const Term& t, const std::function<std::string(int)>& name);
std::string to_string(const Term& t);

}  // namespace minioncore
