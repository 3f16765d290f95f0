#include "minioncore/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "minioncore/errors.hpp"
#include "minioncore/mincore.hpp"

namespace minioncore {

namespace {

bool is_monotone_symbol(const ReducedDescription& rd, int s) {
    return std::any_of(rd.constraints.begin(), rd.constraints.end(), [&](const Atom& a) {
        return a.relation == Relation::Triangle && a.lhs == Literal{s, false} && a.rhs == Literal{s, false};
    });
}

int first_monotone(const ReducedDescription& rd, int from, int to) {
    for (int s = from; s < to; ++s) {
        if (is_monotone_symbol(rd, s)) {
            return s;
        }
    }
    return -1;
}

bool has_atom(const ReducedDescription& rd, const Atom& a) {
    return std::binary_search(rd.constraints.begin(), rd.constraints.end(), a);
}

// A longest path f_{p_1} <| ... <| f_{p_r} to f_i: walk back through the
// smallest-index predecessor of rank one less.
std::vector<int> path_to(const ReducedDescription& rd, const std::vector<int>& rank, int i) {
    std::vector<int> path{i};
    int cur = i;
    while (rank[cur] > 1) {
        int next = -1;
        for (int p = 0; p < rd.f && next < 0; ++p) {
            if (rank[p] == rank[cur] - 1 &&
                has_atom(rd, {Relation::Triangle, {p, false}, {cur, false}})) {
                next = p;
            }
        }
        if (next < 0) {
            throw InternalError("rank table without a witnessing path");
        }
        path.push_back(next);
        cur = next;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Term f_term(int s, bool d) {
    Term t = Term::symbol(s);
    return d ? Term::dual(t) : t;
}

Term self_dual_above(const Term& g, const Term& u) { return Term::meet(Term::join(g, u), Term::dual(u)); }

}  // namespace

CoreId collapse_core(const ReducedDescription& rd) {
    validate_reduced(rd);
    const int m = rd.g;
    if (has_monotone(rd)) {
        if (m == 0) {
            return CoreId::make(CoreTag::Binf);
        }
        return first_monotone(rd, rd.f, rd.symbols()) >= 0 ? CoreId::make(CoreTag::Dinf)
                                                            : CoreId::make(CoreTag::Cinf);
    }
    const int chr = chain_rank(rd);
    const int l = (chr + 1) / 2;
    const bool odd = chr % 2 == 1;
    if (m == 0) {
        return CoreId::make(odd ? CoreTag::A : CoreTag::B, l);
    }
    return odd ? CoreId::make(CoreTag::D, l) : CoreId::make(CoreTag::C, l + 1);
}

std::vector<Term> witness_forward(const ReducedDescription& rd) {
    const CoreId core = collapse_core(rd);
    const int m = rd.g;
    const Term g1 = Term::symbol(rd.f);
    if (has_monotone(rd)) {
        const int g = first_monotone(rd, rd.f, rd.symbols());
        if (g >= 0) {
            return {Term::symbol(g)};
        }
        const int f = first_monotone(rd, 0, rd.f);
        const Term u = Term::meet(f_term(f, false), f_term(f, true));
        if (m == 0) {
            return {u};
        }
        return {u, self_dual_above(g1, u)};
    }

    const int chr = chain_rank(rd);
    if (chr == 0) {
        return {g1};
    }
    const int l = (chr + 1) / 2;
    const auto rank = ranks(rd);
    std::vector<Term> s, t;

    auto case_rank = [&]() {
        for (int i = 0; i < rd.f; ++i) {
            if (rank[i] == chr) {
                const auto p = path_to(rd, rank, i);
                const int r = chr;
                for (int q = 1; q <= l; ++q) {
                    s.push_back(f_term(p[q - 1], false));
                    t.push_back(f_term(p[r - q], true));
                }
                return true;
            }
        }
        return false;
    };
    auto case_pair = [&]() {
        std::optional<std::pair<int, int>> best;
        for (const auto& a : rd.constraints) {
            if (a.relation != Relation::Triangle || rd.is_g(a.lhs.symbol) || rd.is_g(a.rhs.symbol) ||
                a.lhs.dual || !a.rhs.dual) {
                continue;
            }
            int i = a.lhs.symbol, j = a.rhs.symbol;
            if (rank[i] + rank[j] != chr) {
                continue;
            }
            if (rank[j] > rank[i] || (rank[j] == rank[i] && j < i)) {
                std::swap(i, j);
            }
            if (!best || std::make_pair(i, j) < *best) {
                best = std::make_pair(i, j);
            }
        }
        if (!best) {
            return false;
        }
        const auto [i, j] = *best;
        const auto p = path_to(rd, rank, i);
        const auto q = path_to(rd, rank, j);
        const int r = rank[i], r2 = rank[j];
        for (int x = 1; x <= l; ++x) {
            s.push_back(f_term(p[x - 1], false));
        }
        for (int x = 1; x <= r2; ++x) {
            t.push_back(f_term(q[x - 1], false));
        }
        for (int x = r2 + 1; x <= l; ++x) {
            t.push_back(f_term(p[r - (x - r2 - 1) - 1], true));
        }
        return true;
    };
    auto case_g = [&]() {
        for (int i = 0; i < rd.f; ++i) {
            if (2 * rank[i] + 1 != chr) {
                continue;
            }
            for (int j = rd.f; j < rd.symbols(); ++j) {
                if (has_atom(rd, {Relation::Triangle, {i, false}, {j, false}})) {
                    for (int x : path_to(rd, rank, i)) {
                        s.push_back(f_term(x, false));
                    }
                    s.push_back(Term::symbol(j));
                    t = s;
                    return true;
                }
            }
        }
        return false;
    };
    if (!case_rank() && !case_pair() && !case_g()) {
        throw InternalError("no case of the chain-rank definition attains the chain rank");
    }
    if (static_cast<int>(s.size()) != l || static_cast<int>(t.size()) != l) {
        throw InternalError("chain terms have the wrong length");
    }

    const int k = core.sorts();
    std::vector<Term> h;
    const int plain = m == 0 ? k : k - 1;
    for (int i = 0; i < plain; ++i) {
        h.push_back(Term::meet(s[i], t[i]));
    }
    if (m > 0) {
        h.push_back(self_dual_above(g1, Term::meet(s[l - 1], t[l - 1])));
    }
    return h;
}

std::vector<SymbolImage> witness_backward(const ReducedDescription& rd, const CoreId& core) {
    std::vector<SymbolImage> out(static_cast<std::size_t>(rd.symbols()));
    const int k = core.sorts();
    if (has_monotone(rd)) {
        for (int s = 0; s < rd.symbols(); ++s) {
            out[s] = {core.tag == CoreTag::Cinf && rd.is_g(s) ? 1 : 0, false};
        }
        return out;
    }
    const int r = chain_rank(rd);
    const int l = (r + 1) / 2;
    const auto rank = ranks(rd);
    for (int i = 0; i < rd.f; ++i) {
        const int q = rank[i];  // 1-based position in h'
        out[i] = q <= l ? SymbolImage{q - 1, false} : SymbolImage{r - q, true};
    }
    for (int j = rd.f; j < rd.symbols(); ++j) {
        out[j] = {k - 1, false};
    }
    return out;
}

MultiOp apply_backward(const std::vector<SymbolImage>& backward, const MultiOp& h) {
    MultiOp out;
    out.reserve(backward.size());
    for (const auto& im : backward) {
        const TruthTable& t = h.at(static_cast<std::size_t>(im.target));
        out.push_back(im.dual ? dual(t) : t);
    }
    return out;
}

namespace {

MinionOptions minion_options(const VerifyOptions& options) {
    if (options.arity_cap < 2 || options.arity_cap > 5) {
        throw InputError("arity cap must lie in 2..5");
    }
    MinionOptions mo;
    mo.cap = std::min(options.arity_cap, 4);
    mo.witnesses = options.symmetric5 || options.arity_cap == 5;
    mo.budget = options.budget;
    return mo;
}

struct Side {
    int sorts;
    const std::vector<Atom>& atoms;
};

void check(const Side& from, const Side& to, const std::function<MultiOp(const MultiOp&)>& f,
           const MinionOptions& mo, const std::string& what, std::vector<std::string>& log) {
    const StreamReport r = check_hom_stream(from.sorts, from.atoms, to.sorts, to.atoms, f, mo);
    if (r.failure) {
        throw VerificationError(what + ": " + *r.failure);
    }
    std::string sizes;
    for (std::size_t n = 0; n < r.members.size(); ++n) {
        sizes += (n > 0 ? "," : "") + std::to_string(r.members[n]);
    }
    log.push_back(what + ": ok on " + sizes + " members by arity" +
                  (mo.witnesses ? " and " + std::to_string(r.witnesses) + " symmetric 5-ary members" : ""));
}

}  // namespace

std::vector<std::string> verify_witnesses(const Description& d, const Reduction& r, const CoreId& core,
                                          const std::vector<Term>& forward,
                                          const std::vector<SymbolImage>& backward, const VerifyOptions& options) {
    // The legs through the reduced form are checked at cap 3 at most; the
    // composites are checked at the full cap by classify_description.
    MinionOptions mo = minion_options(options);
    mo.cap = std::min(mo.cap, 3);
    const std::vector<Atom> core_cons = core_atoms(core);
    const Side D{d.k, d.constraints};
    const Side R{r.reduced.symbols(), r.reduced.constraints};
    const Side C{core.sorts(), core_cons};
    std::vector<std::string> log;
    check(D, R, [&](const MultiOp& op) { return to_reduced_op(r, op); }, mo, "description -> reduced", log);
    check(R, D, [&](const MultiOp& op) { return from_reduced_op(r, op); }, mo, "reduced -> description", log);
    check(R, C, [&](const MultiOp& op) { return apply_terms(forward, op); }, mo, "reduced -> " + to_string(core),
          log);
    check(C, R, [&](const MultiOp& op) { return apply_backward(backward, op); }, mo,
          to_string(core) + " -> reduced", log);
    return log;
}

ClassificationReport classify_description(const Description& d, const VerifyOptions& options) {
    ClassificationReport rep;
    rep.description = d;
    if (d.k == 0) {
        rep.core = CoreId::make(CoreTag::T);
        rep.log.push_back("no symbols: one operation per arity");
        rep.verified = true;
        return rep;
    }
    rep.reduction = to_reduced(d);
    const ReducedDescription& rd = rep.reduction.reduced;
    rep.core = collapse_core(rd);
    rep.forward = witness_forward(rd);
    rep.backward = witness_backward(rd, rep.core);
    if (static_cast<int>(rep.forward.size()) != rep.core.sorts()) {
        throw InternalError("forward witness length differs from the core's sort count");
    }

    // Compose with the symbol map of the reduction.
    std::vector<Term> leaves;
    for (int p = 0; p < rd.symbols(); ++p) {
        const auto& map = rep.reduction.symbol_map;
        const auto it = std::find_if(map.begin(), map.end(), [p](const SymbolImage& im) { return im.target == p; });
        const int s = static_cast<int>(it - map.begin());
        leaves.push_back(it->dual ? Term::dual(Term::symbol(s)) : Term::symbol(s));
    }
    for (const auto& t : rep.forward) {
        rep.forward_description.push_back(t.substitute(leaves));
    }
    for (const auto& im : rep.reduction.symbol_map) {
        const SymbolImage b = rep.backward.at(static_cast<std::size_t>(im.target));
        rep.backward_description.push_back({b.target, b.dual != im.dual});
    }

    rep.log = verify_witnesses(d, rep.reduction, rep.core, rep.forward, rep.backward, options);
    // The composites, checked directly on the description.
    const MinionOptions mo = minion_options(options);
    const std::vector<Atom> core_cons = core_atoms(rep.core);
    const Side D{d.k, d.constraints};
    const Side C{rep.core.sorts(), core_cons};
    check(D, C, [&](const MultiOp& op) { return apply_terms(rep.forward_description, op); }, mo,
          "description -> " + to_string(rep.core), rep.log);
    check(C, D, [&](const MultiOp& op) { return apply_backward(rep.backward_description, op); }, mo,
          to_string(rep.core) + " -> description", rep.log);
    rep.verified = true;
    return rep;
}

ClassificationReport classify_relations(const Signature& sig, std::span<const TypedRelation> relations,
                                        const VerifyOptions& options) {
    for (const auto& r : relations) {
        validate(sig, r);
    }
    ClassificationReport rep;
    const std::string digest = input_digest(sig, relations);
    if (sig.sort_count() == 0) {
        rep.digest = digest;
        rep.core = CoreId::make(CoreTag::T);
        rep.log.push_back("no sorts: one operation per arity");
        rep.verified = true;
        return rep;
    }
    IdempotentCore ic = idempotent_core(sig, relations, options.budget);
    if (ic.trivial) {
        rep.digest = digest;
        rep.idempotent = std::move(ic);
        rep.core = CoreId::make(CoreTag::T);
        rep.log.push_back("idempotent core: every sort collapses to a point");
        rep.verified = true;
        return rep;
    }
    if (!ic.signature.is_boolean()) {
        throw InputError("the Boolean pipeline needs two-element sorts; use the finite-domain path");
    }
    const Description d = extract_description(ic);

    // The description must define the idempotent polymorphisms of the core.
    PolOptions po;
    po.arity = 2;
    po.idempotent_only = true;
    po.budget = options.budget;
    const auto pol = pol_enumerate_boolean(ic.signature.sort_count(), ic.relations, po);
    EnumOptions eo;
    eo.budget = options.budget;
    const auto clo = clo_enumerate(d, eo);
    if (std::set<MultiOp>(pol.begin(), pol.end()) != std::set<MultiOp>(clo.begin(), clo.end())) {
        throw VerificationError("extracted description disagrees with the binary polymorphisms");
    }

    rep = classify_description(d, options);
    rep.log.insert(rep.log.begin(), "description matches " + std::to_string(pol.size()) +
                                        " binary idempotent polymorphisms of the core relations");
    rep.digest = digest;
    rep.idempotent = std::move(ic);
    return rep;
}

std::string text_digest(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string input_digest(const Signature& sig, std::span<const TypedRelation> relations) {
    std::string text = "sorts";
    for (const auto& c : sig.carriers) {
        text += "[";
        for (int v : c) {
            text += std::to_string(v) + ",";
        }
        text += "]";
    }
    for (const auto& r : relations) {
        text += "rel(";
        for (int t : r.type) {
            text += std::to_string(t) + ",";
        }
        text += ")";
        for (const auto& tup : r.tuples) {
            text += "(";
            for (int v : tup) {
                text += std::to_string(v) + ",";
            }
            text += ")";
        }
    }
    return text_digest(text);
}

}  // namespace minioncore
