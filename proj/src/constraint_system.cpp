#include "minioncore/constraint_system.hpp"

#include <algorithm>
#include <ostream>

#include "minioncore/errors.hpp"

namespace minioncore {

TruthTable literal_value(const Literal& lit, std::span<const TruthTable> ops) {
    if (lit.symbol < 0 || lit.symbol >= static_cast<int>(ops.size())) {
        throw InputError("literal refers to symbol " + std::to_string(lit.symbol) + " out of range");
    }
    const TruthTable& t = ops[lit.symbol];
    return lit.dual ? dual(t) : t;
}

bool holds(const Atom& atom, std::span<const TruthTable> ops) {
    const TruthTable a = literal_value(atom.lhs, ops);
    const TruthTable b = literal_value(atom.rhs, ops);
    switch (atom.relation) {
        case Relation::Triangle:
            return triangle(a, b);
        case Relation::Leq:
            return leq(a, b);
        case Relation::Eq:
            return a == b;
    }
    return false;
}

bool satisfies_all(std::span<const Atom> atoms, std::span<const TruthTable> ops) {
    return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return holds(a, ops); });
}

namespace {

struct Bounds {
    std::uint64_t lower;
    std::uint64_t upper;
};

// Lower/upper bit masks on symbol `s` implied by atoms against earlier symbols.
Bounds bounds_for(int s, int arity, std::span<const Atom> atoms, const MultiOp& assigned) {
    const std::uint64_t full = TruthTable::full_mask(arity);
    const std::uint64_t top = std::uint64_t{1} << ((1U << arity) - 1);
    Bounds b{top, full & ~std::uint64_t{1}};

    auto apply = [&](bool self_dual, bool is_lower, const TruthTable& bound) {
        // A bound on s^d is the dual bound on s.
        if (self_dual) {
            is_lower = !is_lower;
        }
        const std::uint64_t mask = (self_dual ? dual(bound) : bound).bits();
        if (is_lower) {
            b.lower |= mask;
        } else {
            b.upper &= mask;
        }
    };

    for (const auto& atom : atoms) {
        const bool lhs_s = atom.lhs.symbol == s;
        const bool rhs_s = atom.rhs.symbol == s;
        if (lhs_s == rhs_s) {
            continue;
        }
        const Literal& other = lhs_s ? atom.rhs : atom.lhs;
        if (other.symbol > s) {
            continue;
        }
        const TruthTable o = literal_value(other, assigned);
        const bool s_dual = lhs_s ? atom.lhs.dual : atom.rhs.dual;
        switch (atom.relation) {
            case Relation::Triangle:
                if (rhs_s) {
                    apply(s_dual, true, upward_closure(o));
                } else {
                    apply(s_dual, false, downward_interior(o));
                }
                break;
            case Relation::Leq:
                apply(s_dual, rhs_s, o);
                break;
            case Relation::Eq:
                apply(s_dual, true, o);
                apply(s_dual, false, o);
                break;
        }
    }
    return b;
}

}  // namespace

void for_each_solution(int symbols, std::span<const Atom> atoms, const EnumOptions& options,
                       const std::function<void(const MultiOp&)>& visit) {
    const int n = options.arity;
    if (options.mode == EnumMode::Full && (n < 1 || n > options.full_cap)) {
        throw BudgetError("full enumeration at arity " + std::to_string(n) + " exceeds cap " +
                          std::to_string(options.full_cap));
    }
    if (options.mode == EnumMode::Symmetric5 && n != 5) {
        throw InputError("symmetric mode is defined at arity 5 only");
    }
    for (const auto& a : atoms) {
        if (a.lhs.symbol < 0 || a.lhs.symbol >= symbols || a.rhs.symbol < 0 || a.rhs.symbol >= symbols) {
            throw InputError("constraint refers to a symbol out of range");
        }
    }

    std::vector<std::vector<Atom>> self_atoms(static_cast<std::size_t>(symbols));
    for (const auto& a : atoms) {
        if (a.lhs.symbol == a.rhs.symbol) {
            self_atoms[a.lhs.symbol].push_back(a);
        }
    }
    const std::vector<TruthTable> symmetric = options.mode == EnumMode::Symmetric5
                                                  ? enumerate_symmetric5()
                                                  : std::vector<TruthTable>{};

    MultiOp current(static_cast<std::size_t>(symbols), TruthTable::projection(n, 0));
    std::size_t nodes = 0;
    auto bump = [&] {
        if (++nodes > options.budget) {
            throw BudgetError("enumeration exceeded its budget of " + std::to_string(options.budget) +
                              " nodes at arity " + std::to_string(n));
        }
    };
    auto self_ok = [&](int s) {
        for (const auto& a : self_atoms[s]) {
            if (!holds(a, current)) {
                return false;
            }
        }
        return true;
    };

    auto recurse = [&](auto&& self, int s) -> void {
        if (s == symbols) {
            bump();
            visit(current);
            return;
        }
        const Bounds b = bounds_for(s, n, atoms, current);
        if ((b.lower & ~b.upper) != 0) {
            return;
        }
        if (options.mode == EnumMode::Symmetric5) {
            for (const auto& t : symmetric) {
                if ((t.bits() & ~b.upper) != 0 || (b.lower & ~t.bits()) != 0) {
                    continue;
                }
                bump();
                current[s] = t;
                if (self_ok(s)) {
                    self(self, s + 1);
                }
            }
            return;
        }
        // Ascending enumeration of the subsets of the free bits.
        const std::uint64_t free = b.upper & ~b.lower;
        std::uint64_t sub = 0;
        while (true) {
            bump();
            current[s] = TruthTable(n, b.lower | sub);
            if (self_ok(s)) {
                self(self, s + 1);
            }
            if (sub == free) {
                break;
            }
            sub = ((sub | ~free) + 1) & free;
        }
    };
    recurse(recurse, 0);
}

std::vector<MultiOp> all_solutions(int symbols, std::span<const Atom> atoms, const EnumOptions& options) {
    std::vector<MultiOp> out;
    for_each_solution(symbols, atoms, options, [&](const MultiOp& op) { out.push_back(op); });
    return out;
}

std::string to_string(const Literal& lit, const std::function<std::string(int)>& name) {
    return name(lit.symbol) + (lit.dual ? "^d" : "");
}

std::string to_string(const Atom& atom, const std::function<std::string(int)>& name) {
    const char* rel = atom.relation == Relation::Triangle ? " <| " : atom.relation == Relation::Leq ? " <= " : " = ";
    return to_string(atom.lhs, name) + rel + to_string(atom.rhs, name);
}

std::ostream& operator<<(std::ostream& os, const Atom& atom) {
    return os << to_string(atom, [](int s) { return "s" + std::to_string(s); });
}

}  // namespace minioncore
