#include "minioncore/term.hpp"

#include <algorithm>

#include "minioncore/errors.hpp"

namespace minioncore {

Term Term::symbol(int index) {
    if (index < 0) {
        throw InputError("term leaf index must be nonnegative");
    }
    Term t;
    t.index_ = index;
    return t;
}

Term Term::meet(Term a, Term b) {
    Term t;
    t.kind_ = Kind::Meet;
    t.args_ = {std::make_shared<const Term>(std::move(a)), std::make_shared<const Term>(std::move(b))};
    return t;
}

Term Term::join(Term a, Term b) {
    Term t;
    t.kind_ = Kind::Join;
    t.args_ = {std::make_shared<const Term>(std::move(a)), std::make_shared<const Term>(std::move(b))};
    return t;
}

Term Term::dual(Term a) {
    Term t;
    t.kind_ = Kind::Dual;
    t.args_ = {std::make_shared<const Term>(std::move(a))};
    return t;
}

Term Term::substitute(std::span<const Term> leaves) const {
    switch (kind_) {
        case Kind::Symbol:
            if (index_ >= static_cast<int>(leaves.size())) {
                throw InputError("term leaf " + std::to_string(index_) + " has no substitute");
            }
            return leaves[index_];
        case Kind::Meet:
            return meet(left().substitute(leaves), right().substitute(leaves));
        case Kind::Join:
            return join(left().substitute(leaves), right().substitute(leaves));
        case Kind::Dual:
            return dual(left().substitute(leaves));
    }
    return *this;
}

int Term::max_symbol() const {
    if (kind_ == Kind::Symbol) {
        return index_;
    }
    int best = -1;
    for (const auto& a : args_) {
        best = std::max(best, a->max_symbol());
    }
    return best;
}

bool operator==(const Term& a, const Term& b) {
    if (a.kind_ != b.kind_ || a.index_ != b.index_ || a.args_.size() != b.args_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args_.size(); ++i) {
        if (!(*a.args_[i] == *b.args_[i])) {
            return false;
        }
    }
    return true;
}

TruthTable eval_term(const Term& t, std::span<const TruthTable> ops) {
    switch (t.kind()) {
        case Term::Kind::Symbol:
            if (t.index() >= static_cast<int>(ops.size())) {
                throw InputError("term leaf " + std::to_string(t.index()) + " out of range");
            }
            return ops[t.index()];
        case Term::Kind::Meet:
            return meet(eval_term(t.left(), ops), eval_term(t.right(), ops));
        case Term::Kind::Join:
            return join(eval_term(t.left(), ops), eval_term(t.right(), ops));
        case Term::Kind::Dual:
            return dual(eval_term(t.left(), ops));
    }
    return ops[0];
}

MultiOp apply_terms(std::span<const Term> terms, const MultiOp& op) {
    MultiOp out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        out.push_back(eval_term(t, op));
    }
    return out;
}

std::string to_string(const Term& t, const std::function<std::string(int)>& name) {
    switch (t.kind()) {
        case Term::Kind::Symbol:
            return name(t.index());
        case Term::Kind::Meet:
            return "meet(" + to_string(t.left(), name) + "," + to_string(t.right(), name) + ")";
        case Term::Kind::Join:
            return "join(" + to_string(t.left(), name) + "," + to_string(t.right(), name) + ")";
        case Term::Kind::Dual:
            return "dual(" + to_string(t.left(), name) + ")";
    }
    return {};
}

std::string to_string(const Term& t) {
    return to_string(t, [](int i) { return "s" + std::to_string(i + 1); });
}

}  // namespace minioncore
