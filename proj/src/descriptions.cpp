#include "minioncore/descriptions.hpp"

#include <algorithm>
#include <set>

#include "minioncore/errors.hpp"
#include "scc.hpp"

namespace minioncore {

namespace {

int node(const Literal& lit) { return 2 * lit.symbol + (lit.dual ? 1 : 0); }

Atom tri(Literal a, Literal b) { return {Relation::Triangle, a, b}; }

std::vector<Atom> sorted_unique(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

// One simple adjustment step over split symbols (f below n, g from n on).
std::optional<Atom> adjust_atom(Atom a, int n) {
    auto is_g = [n](const Literal& l) { return l.symbol >= n; };
    if (a.relation == Relation::Eq) {
        if (a.lhs.symbol != a.rhs.symbol) {
            throw InternalError("equality between distinct symbols survived the merge");
        }
        if (is_g(a.lhs)) {
            return Atom{Relation::Eq, {a.lhs.symbol, false}, {a.lhs.symbol, true}};
        }
        if (a.lhs.dual == a.rhs.dual) {
            return std::nullopt;
        }
        throw InternalError("f-symbol forced self-dual survived the merge");
    }
    if (a.relation != Relation::Triangle) {
        throw InternalError("unexpected relation in a description");
    }
    if (is_g(a.lhs)) {
        a.lhs.dual = false;
    }
    if (is_g(a.rhs)) {
        a.rhs.dual = false;
    }
    if (is_g(a.lhs) && is_g(a.rhs)) {
        if (a.lhs.symbol != a.rhs.symbol) {
            throw InternalError("g_i <| g_j with i != j survived the merge");
        }
        return a;
    }
    if (is_g(a.lhs)) {
        return tri(a.rhs.negated(), a.lhs);
    }
    if (is_g(a.rhs)) {
        return a;
    }
    const Literal& l = a.lhs;
    const Literal& r = a.rhs;
    if (l.dual && r.dual) {
        return tri(r.negated(), l.negated());
    }
    if (l.dual != r.dual) {
        // Skew symmetry: a <| b iff b^d <| a^d. Keep the smaller symbol on the left.
        if (r.symbol < l.symbol) {
            return tri(r.negated(), l.negated());
        }
    }
    return a;
}

std::vector<Atom> adjust(std::span<const Atom> atoms, int n, int m) {
    std::vector<Atom> out;
    for (const auto& a : atoms) {
        if (auto b = adjust_atom(a, n)) {
            out.push_back(*b);
        }
    }
    for (int j = n; j < n + m; ++j) {
        out.push_back({Relation::Eq, {j, false}, {j, true}});
    }
    return sorted_unique(std::move(out));
}

std::vector<std::vector<int>> f_graph(const ReducedDescription& rd) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(rd.f));
    for (const auto& a : rd.constraints) {
        if (a.relation == Relation::Triangle && !rd.is_g(a.lhs.symbol) && !rd.is_g(a.rhs.symbol) &&
            !a.lhs.dual && !a.rhs.dual && a.lhs.symbol != a.rhs.symbol) {
            adj[a.lhs.symbol].push_back(a.rhs.symbol);
        }
    }
    return adj;
}

std::string violation(const ReducedDescription& rd) {
    if (rd.f < 0 || rd.g < 0 || rd.f + rd.g < 1) {
        return "a reduced description needs at least one symbol";
    }
    std::vector<bool> has_eq(static_cast<std::size_t>(rd.symbols()), false);
    for (const auto& a : rd.constraints) {
        if (a.lhs.symbol < 0 || a.lhs.symbol >= rd.symbols() || a.rhs.symbol < 0 ||
            a.rhs.symbol >= rd.symbols()) {
            return "constraint symbol out of range";
        }
        const bool lg = rd.is_g(a.lhs.symbol);
        const bool rg = rd.is_g(a.rhs.symbol);
        if (a.relation == Relation::Eq) {
            if (!(lg && a.lhs.symbol == a.rhs.symbol && !a.lhs.dual && a.rhs.dual)) {
                return "equality other than g = g^d: " + to_string(a, [&](int s) { return rd.name(s); });
            }
            has_eq[a.lhs.symbol] = true;
            continue;
        }
        if (a.relation != Relation::Triangle) {
            return "only <| and = constraints are allowed";
        }
        bool ok = false;
        if (!lg && !a.lhs.dual) {
            ok = rg ? !a.rhs.dual : true;
        } else if (lg && rg) {
            ok = a.lhs.symbol == a.rhs.symbol && !a.lhs.dual && !a.rhs.dual;
        }
        if (!ok) {
            return "forbidden constraint shape: " + to_string(a, [&](int s) { return rd.name(s); });
        }
    }
    for (int j = rd.f; j < rd.symbols(); ++j) {
        if (!has_eq[j]) {
            return "missing " + rd.name(j) + " = " + rd.name(j) + "^d";
        }
    }
    const auto comp = detail::tarjan_scc(f_graph(rd));
    std::vector<int> size(comp.size(), 0);
    for (int c : comp) {
        if (++size[c] > 1) {
            return "<|-cycle of length more than 1";
        }
    }
    return {};
}

}  // namespace

Description Description::make(int k, std::vector<Atom> constraints) {
    if (k < 0) {
        throw InputError("negative symbol count");
    }
    for (const auto& a : constraints) {
        if (a.relation == Relation::Leq) {
            throw InputError("descriptions use <| and = constraints only");
        }
        if (a.lhs.symbol < 0 || a.lhs.symbol >= k || a.rhs.symbol < 0 || a.rhs.symbol >= k) {
            throw InputError("constraint symbol out of range");
        }
    }
    return {k, sorted_unique(std::move(constraints))};
}

std::string ReducedDescription::name(int symbol) const {
    return is_g(symbol) ? "g" + std::to_string(symbol - f + 1) : "f" + std::to_string(symbol + 1);
}

void validate_reduced(const ReducedDescription& rd) {
    if (auto v = violation(rd); !v.empty()) {
        throw InternalError("not in reduced form: " + v);
    }
}

bool is_reduced(const ReducedDescription& rd) { return violation(rd).empty(); }

Description extract_description(const IdempotentCore& core) {
    if (core.trivial) {
        throw InputError("a trivial core has no description");
    }
    for (int s = 0; s < core.signature.sort_count(); ++s) {
        if (core.signature.carrier_size(s) != 2) {
            throw InputError("descriptions need two-element sorts");
        }
    }
    std::vector<Atom> out;
    for (const auto& rel : core.relations) {
        if (rel.arity() > 2) {
            throw InputError("relations of arity above 2 have no description");
        }
        if (rel.arity() < 2) {
            continue;
        }
        const int i = rel.type[0];
        const int j = rel.type[1];
        std::set<std::pair<int, int>> t;
        for (const auto& tuple : rel.tuples) {
            t.insert({tuple[0], tuple[1]});
        }
        const Literal hi{i, false}, hid{i, true}, hj{j, false}, hjd{j, true};
        if (t.size() == 3) {
            if (!t.contains({1, 1})) {
                out.push_back(tri(hi, hjd));
            } else if (!t.contains({0, 0})) {
                out.push_back(tri(hid, hj));
            } else if (!t.contains({1, 0})) {
                out.push_back(tri(hi, hj));
            } else {
                out.push_back(tri(hid, hjd));
            }
        } else if (t == std::set<std::pair<int, int>>{{0, 0}, {1, 1}}) {
            out.push_back({Relation::Eq, hi, hj});
        } else if (t == std::set<std::pair<int, int>>{{0, 1}, {1, 0}}) {
            out.push_back({Relation::Eq, hi, hjd});
        }
        // Everything else is a product of unary relations, preserved by all
        // idempotent operations.
    }
    return Description::make(core.signature.sort_count(), std::move(out));
}

MergeResult forced_merge(const Description& d) {
    const int k = d.k;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * k));
    auto edge = [&](const Literal& a, const Literal& b) {
        adj[node(a)].push_back(node(b));
        adj[node(b.negated())].push_back(node(a.negated()));
    };
    for (const auto& a : d.constraints) {
        edge(a.lhs, a.rhs);
        if (a.relation == Relation::Eq) {
            edge(a.rhs, a.lhs);
        }
    }
    const auto comp = detail::tarjan_scc(adj);

    // Group symbols whose literals share a component; the highest index survives.
    std::vector<int> group(static_cast<std::size_t>(k), -1);
    std::vector<bool> relative(static_cast<std::size_t>(k), false);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < k; ++s) {
        if (group[s] >= 0) {
            continue;
        }
        const int id = static_cast<int>(members.size());
        members.push_back({});
        for (int t = s; t < k; ++t) {
            if (group[t] >= 0) {
                continue;
            }
            if (comp[2 * t] == comp[2 * s] || comp[2 * t + 1] == comp[2 * s]) {
                group[t] = id;
                relative[t] = comp[2 * t] != comp[2 * s];
                members.back().push_back(t);
            }
        }
    }
    std::vector<int> order(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<int>(i);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return members[a].back() < members[b].back(); });

    MergeResult r;
    r.image.assign(static_cast<std::size_t>(k), SymbolImage{-1, false});
    for (std::size_t target = 0; target < order.size(); ++target) {
        const auto& ms = members[order[target]];
        const int survivor = ms.back();
        r.self_dual.push_back(comp[2 * survivor] == comp[2 * survivor + 1]);
        for (int t : ms) {
            r.image[t] = {static_cast<int>(target), relative[t] != relative[survivor]};
        }
    }
    const int next = static_cast<int>(order.size());
    std::vector<Atom> merged;
    for (const auto& a : d.constraints) {
        auto map = [&](const Literal& l) {
            const auto& im = r.image[l.symbol];
            return Literal{im.target, l.dual != im.dual};
        };
        Atom b{a.relation, map(a.lhs), map(a.rhs)};
        if (b.relation == Relation::Eq && b.lhs == b.rhs) {
            continue;
        }
        merged.push_back(b);
    }
    r.merged = Description::make(next, std::move(merged));
    return r;
}

std::optional<std::vector<bool>> apt_solve(const CnfFormula& formula) {
    const int v = formula.variables;
    auto self_comp = [&](int var) {
        return var < static_cast<int>(formula.self_complementary.size()) && formula.self_complementary[var];
    };
    auto lit_node = [&](const CnfLiteral& l) {
        if (l.var < 0 || l.var >= v) {
            throw InputError("clause variable out of range");
        }
        return 2 * l.var + (l.negated && !self_comp(l.var) ? 1 : 0);
    };
    auto neg = [](CnfLiteral l) {
        l.negated = !l.negated;
        return l;
    };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * v));
    for (const auto& c : formula.clauses) {
        adj[lit_node(neg(c.a))].push_back(lit_node(c.b));
        adj[lit_node(neg(c.b))].push_back(lit_node(c.a));
    }
    const auto comp = detail::tarjan_scc(adj);
    const auto position = detail::canonical_topological_positions(adj, comp);
    std::vector<bool> assignment(static_cast<std::size_t>(v), false);
    for (int x = 0; x < v; ++x) {
        if (self_comp(x)) {
            continue;
        }
        if (comp[2 * x] == comp[2 * x + 1]) {
            return std::nullopt;
        }
        assignment[x] = position[comp[2 * x]] > position[comp[2 * x + 1]];
    }
    return assignment;
}

CnfFormula build_2cnf(const ReducedDescription& adjusted) {
    CnfFormula phi;
    phi.variables = adjusted.symbols();
    phi.self_complementary.assign(static_cast<std::size_t>(phi.variables), false);
    for (int j = adjusted.f; j < adjusted.symbols(); ++j) {
        phi.self_complementary[j] = true;
    }
    for (const auto& a : adjusted.constraints) {
        if (a.relation == Relation::Eq) {
            continue;
        }
        const bool lg = adjusted.is_g(a.lhs.symbol);
        const bool rg = adjusted.is_g(a.rhs.symbol);
        if (lg && rg) {
            continue;
        }
        if (lg || (rg && a.rhs.dual)) {
            throw InternalError("unexpected constraint shape for the 2-CNF");
        }
        const CnfLiteral x{a.lhs.symbol, !a.lhs.dual};
        if (rg) {
            phi.clauses.push_back({x, {a.rhs.symbol, !a.lhs.dual}});
        } else {
            phi.clauses.push_back({x, {a.rhs.symbol, a.rhs.dual}});
        }
    }
    return phi;
}

Reduction to_reduced(const Description& d) {
    if (d.k == 0) {
        throw InputError("a description without symbols describes T");
    }
    Reduction out;
    out.merge = forced_merge(d);
    const auto& merged = out.merge.merged;

    std::vector<int> split(static_cast<std::size_t>(merged.k));
    int n = 0;
    for (int s = 0; s < merged.k; ++s) {
        if (!out.merge.self_dual[s]) {
            split[s] = n++;
        }
    }
    int m = 0;
    for (int s = 0; s < merged.k; ++s) {
        if (out.merge.self_dual[s]) {
            split[s] = n + m++;
        }
    }
    std::vector<Atom> renamed;
    for (const auto& a : merged.constraints) {
        renamed.push_back({a.relation, {split[a.lhs.symbol], a.lhs.dual}, {split[a.rhs.symbol], a.rhs.dual}});
    }
    const ReducedDescription adjusted{n, m, adjust(renamed, n, m)};

    const auto assignment = apt_solve(build_2cnf(adjusted));
    if (!assignment) {
        throw InternalError("the reduction 2-CNF is unsatisfiable");
    }
    out.flipped.assign(assignment->begin(), assignment->begin() + n);
    std::vector<Atom> flipped;
    for (auto a : adjusted.constraints) {
        for (Literal* l : {&a.lhs, &a.rhs}) {
            if (l->symbol < n && out.flipped[l->symbol]) {
                l->dual = !l->dual;
            }
        }
        flipped.push_back(a);
    }
    out.reduced = {n, m, adjust(flipped, n, m)};
    validate_reduced(out.reduced);

    for (const auto& im : out.merge.image) {
        const int p = split[im.target];
        const bool flip = p < n && out.flipped[p];
        out.symbol_map.push_back({p, im.dual != flip});
    }
    return out;
}

MultiOp to_reduced_op(const Reduction& r, const MultiOp& op) {
    MultiOp out;
    out.reserve(static_cast<std::size_t>(r.reduced.symbols()));
    for (int p = 0; p < r.reduced.symbols(); ++p) {
        const auto it = std::find_if(r.symbol_map.begin(), r.symbol_map.end(),
                                     [p](const SymbolImage& im) { return im.target == p; });
        if (it == r.symbol_map.end()) {
            throw InternalError("reduced symbol without a preimage");
        }
        const TruthTable& t = op.at(static_cast<std::size_t>(it - r.symbol_map.begin()));
        out.push_back(it->dual ? dual(t) : t);
    }
    return out;
}

MultiOp from_reduced_op(const Reduction& r, const MultiOp& op) {
    MultiOp out;
    out.reserve(r.symbol_map.size());
    for (const auto& im : r.symbol_map) {
        const TruthTable& t = op.at(static_cast<std::size_t>(im.target));
        out.push_back(im.dual ? dual(t) : t);
    }
    return out;
}

bool has_monotone(const ReducedDescription& rd) {
    return std::any_of(rd.constraints.begin(), rd.constraints.end(), [](const Atom& a) {
        return a.relation == Relation::Triangle && a.lhs == a.rhs;
    });
}

std::vector<int> ranks(const ReducedDescription& rd) {
    if (has_monotone(rd)) {
        throw InternalError("rank is undefined in the presence of a monotone symbol");
    }
    validate_reduced(rd);
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(rd.f));
    const auto adj = f_graph(rd);
    for (int i = 0; i < rd.f; ++i) {
        for (int j : adj[i]) {
            pred[j].push_back(i);
        }
    }
    std::vector<int> r(static_cast<std::size_t>(rd.f), 0);
    auto compute = [&](auto&& self, int i) -> int {
        if (r[i] == 0) {
            int best = 0;
            for (int p : pred[i]) {
                best = std::max(best, self(self, p));
            }
            r[i] = best + 1;
        }
        return r[i];
    };
    for (int i = 0; i < rd.f; ++i) {
        compute(compute, i);
    }
    return r;
}

int rank(const ReducedDescription& rd, int f_symbol) {
    if (f_symbol < 0 || f_symbol >= rd.f) {
        throw InputError("rank is defined for f-symbols only");
    }
    return ranks(rd)[f_symbol];
}

int chain_rank(const ReducedDescription& rd) {
    const auto r = ranks(rd);
    int best = 0;
    for (int v : r) {
        best = std::max(best, v);
    }
    for (const auto& a : rd.constraints) {
        if (a.relation != Relation::Triangle || rd.is_g(a.lhs.symbol)) {
            continue;
        }
        if (rd.is_g(a.rhs.symbol)) {
            best = std::max(best, 2 * r[a.lhs.symbol] + 1);
        } else if (a.rhs.dual) {
            best = std::max(best, r[a.lhs.symbol] + r[a.rhs.symbol]);
        }
    }
    return best;
}

std::vector<MultiOp> clo_enumerate(const Description& d, const EnumOptions& options) {
    return all_solutions(d.k, d.constraints, options);
}

std::vector<MultiOp> clo_enumerate(const ReducedDescription& rd, const EnumOptions& options) {
    return all_solutions(rd.symbols(), rd.constraints, options);
}

std::string to_string(const Description& d) {
    std::string out = "k=" + std::to_string(d.k) + " {";
    for (std::size_t i = 0; i < d.constraints.size(); ++i) {
        out += (i ? ", " : "") + to_string(d.constraints[i], [](int s) { return "h" + std::to_string(s + 1); });
    }
    return out + "}";
}

std::string to_string(const ReducedDescription& rd) {
    std::string out = "f=" + std::to_string(rd.f) + " g=" + std::to_string(rd.g) + " {";
    for (std::size_t i = 0; i < rd.constraints.size(); ++i) {
        out += (i ? ", " : "") + to_string(rd.constraints[i], [&](int s) { return rd.name(s); });
    }
    return out + "}";
}

}  // namespace minioncore
