#pragma once

// Definitional brute-force checks used as independent references in tests.
// Nothing here uses the bit tricks of the library.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "minioncore/boolfun.hpp"
#include "minioncore/canon.hpp"
#include "minioncore/descriptions.hpp"

namespace oracle {

using minioncore::TruthTable;

inline std::vector<int> tuple_of(std::uint32_t idx, int n) {
    std::vector<int> a(n);
    for (int j = 0; j < n; ++j) {
        a[j] = (idx >> j) & 1U;
    }
    return a;
}

inline bool value(const TruthTable& f, const std::vector<int>& a) { return f.eval(a); }

inline bool below(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
    }
    return true;
}

// f(a) <= g(b) for all a <= b.
inline bool triangle(const TruthTable& f, const TruthTable& g) {
    const int n = f.arity();
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
        for (std::uint32_t y = 0; y < (1U << n); ++y) {
            const auto a = tuple_of(x, n);
            const auto b = tuple_of(y, n);
            if (below(a, b) && value(f, a) && !value(g, b)) {
                return false;
            }
        }
    }
    return true;
}

inline bool leq(const TruthTable& f, const TruthTable& g) {
    const int n = f.arity();
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
        const auto a = tuple_of(x, n);
        if (value(f, a) && !value(g, a)) {
            return false;
        }
    }
    return true;
}

inline TruthTable dual(const TruthTable& f) {
    const int n = f.arity();
    std::uint64_t bits = 0;
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
        auto a = tuple_of(x, n);
        for (int& v : a) {
            v = 1 - v;
        }
        if (!value(f, a)) {
            bits |= std::uint64_t{1} << x;
        }
    }
    return {n, bits};
}

inline TruthTable from_function(int n, const auto& fn) {
    std::uint64_t bits = 0;
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
        if (fn(tuple_of(x, n))) {
            bits |= std::uint64_t{1} << x;
        }
    }
    return {n, bits};
}

// Smallest monotone g >= f: g(b) = max over a <= b of f(a).
inline TruthTable upward_closure(const TruthTable& f) {
    const int n = f.arity();
    return from_function(n, [&](const std::vector<int>& b) {
        for (std::uint32_t x = 0; x < (1U << n); ++x) {
            const auto a = tuple_of(x, n);
            if (below(a, b) && value(f, a)) {
                return true;
            }
        }
        return false;
    });
}

inline bool is_monotone(const TruthTable& f) { return oracle::triangle(f, f); }

// A self-complementary literal evaluates to false, except that a clause made
// of two of them is vacuous (its implication edges are loops on one node).
inline bool satisfiable(const minioncore::CnfFormula& phi) {
    const int v = phi.variables;
    auto self_comp = [&](int x) {
        return x < static_cast<int>(phi.self_complementary.size()) && phi.self_complementary[x];
    };
    for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
        auto lit = [&](const minioncore::CnfLiteral& l) {
            if (self_comp(l.var)) {
                return false;
            }
            const bool x = (mask >> l.var) & 1U;
            return l.negated ? !x : x;
        };
        bool all = true;
        for (const auto& c : phi.clauses) {
            if (self_comp(c.a.var) && self_comp(c.b.var)) {
                continue;
            }
            if (!lit(c.a) && !lit(c.b)) {
                all = false;
                break;
            }
        }
        if (all) {
            return true;
        }
    }
    return false;
}

inline bool satisfies(const minioncore::CnfFormula& phi, const std::vector<bool>& assignment) {
    auto self_comp = [&](int x) {
        return x < static_cast<int>(phi.self_complementary.size()) && phi.self_complementary[x];
    };
    auto lit = [&](const minioncore::CnfLiteral& l) {
        if (self_comp(l.var)) {
            return false;
        }
        return l.negated ? !assignment[l.var] : static_cast<bool>(assignment[l.var]);
    };
    for (const auto& c : phi.clauses) {
        if (!(self_comp(c.a.var) && self_comp(c.b.var)) && !lit(c.a) && !lit(c.b)) {
            return false;
        }
    }
    return true;
}

inline minioncore::CnfFormula random_formula(std::mt19937& rng, int max_vars, int max_clauses) {
    std::uniform_int_distribution<int> nv(1, max_vars);
    minioncore::CnfFormula phi;
    phi.variables = nv(rng);
    std::uniform_int_distribution<int> nc(0, max_clauses);
    std::uniform_int_distribution<int> var(0, phi.variables - 1);
    std::bernoulli_distribution coin(0.5);
    const int clauses = nc(rng);
    for (int i = 0; i < clauses; ++i) {
        phi.clauses.push_back({{var(rng), coin(rng)}, {var(rng), coin(rng)}});
    }
    return phi;
}

inline minioncore::Description random_description(std::mt19937& rng, int max_symbols, int max_constraints) {
    using namespace minioncore;
    std::uniform_int_distribution<int> nk(1, max_symbols);
    const int k = nk(rng);
    std::uniform_int_distribution<int> nc(0, max_constraints);
    std::uniform_int_distribution<int> sym(0, k - 1);
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution eq(0.2);
    std::vector<Atom> atoms;
    const int count = nc(rng);
    for (int i = 0; i < count; ++i) {
        atoms.push_back({eq(rng) ? Relation::Eq : Relation::Triangle, {sym(rng), coin(rng)}, {sym(rng), coin(rng)}});
    }
    return Description::make(k, atoms);
}

// Symmetric idempotent 5-ary table from its values at weights 1..4.
inline TruthTable sym5(const std::array<bool, 4>& a) {
    return from_function(5, [&](const std::vector<int>& x) {
        int w = 0;
        for (int v : x) {
            w += v;
        }
        return w == 0 ? false : w == 5 ? true : a[w - 1];
    });
}

inline bool idempotent(const TruthTable& f) {
    const int n = f.arity();
    return !value(f, std::vector<int>(n, 0)) && value(f, std::vector<int>(n, 1));
}

// The defining chains, checked with the definitional relations.
inline bool core_member(const minioncore::CoreId& c, const std::vector<TruthTable>& h) {
    using minioncore::CoreTag;
    for (const auto& t : h) {
        if (!idempotent(t)) {
            return false;
        }
    }
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            if (!oracle::triangle(h[i], h[i + 1])) {
                return false;
            }
        }
        return true;
    };
    const int k = c.k;
    switch (c.tag) {
        case CoreTag::T:
            return h.empty();
        case CoreTag::A:
            return chain(k) && oracle::leq(h[k - 1], oracle::dual(h[k - 1]));
        case CoreTag::B:
            return chain(k) && oracle::triangle(h[k - 1], oracle::dual(h[k - 1]));
        case CoreTag::C:
            return chain(k - 1) && oracle::leq(h[k - 2], h[k - 1]) && h[k - 1] == oracle::dual(h[k - 1]) &&
                   oracle::triangle(h[k - 2], oracle::dual(h[k - 2]));
        case CoreTag::D:
            return chain(k) && h[k - 1] == oracle::dual(h[k - 1]);
        case CoreTag::Binf:
            return oracle::triangle(h[0], h[0]) && oracle::triangle(h[0], oracle::dual(h[0]));
        case CoreTag::Cinf:
            return oracle::triangle(h[0], h[0]) && oracle::triangle(h[0], h[1]) && h[1] == oracle::dual(h[1]);
        case CoreTag::Dinf:
            return oracle::triangle(h[0], h[0]) && h[0] == oracle::dual(h[0]);
    }
    return false;
}

// All idempotent tables of arity n, by brute force over every table.
inline std::vector<TruthTable> idempotent_tables(int n) {
    std::vector<TruthTable> out;
    const std::uint64_t count = std::uint64_t{1} << (1U << n);
    for (std::uint64_t b = 0; b < count; ++b) {
        TruthTable t(n, b);
        if (idempotent(t)) {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace oracle
