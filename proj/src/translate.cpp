#include "minioncore/translate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minioncore/errors.hpp"

namespace minioncore {

void validate(const FiniteStructure& psi) {
    if (psi.domain < 0 || psi.domain > 255) {
        throw InputError("domain size must lie in 0..255");
    }
    for (std::size_t r = 0; r < psi.relations.size(); ++r) {
        const auto& rel = psi.relations[r];
        for (const auto& t : rel) {
            if (t.size() != rel.front().size() || t.empty()) {
                throw InputError("relation " + std::to_string(r) + " has tuples of different or zero length");
            }
            for (int v : t) {
                if (v < 0 || v >= psi.domain) {
                    throw InputError("relation " + std::to_string(r) + " uses element " + std::to_string(v) +
                                     " outside the domain");
                }
            }
        }
    }
}

namespace {

std::vector<std::set<int>> projections(const std::vector<std::vector<int>>& rel) {
    std::vector<std::set<int>> out(rel.empty() ? 0 : rel.front().size());
    for (const auto& t : rel) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            out[j].insert(t[j]);
        }
    }
    return out;
}

}  // namespace

bool small_projections_check(const FiniteStructure& psi) {
    for (const auto& rel : psi.relations) {
        for (const auto& p : projections(rel)) {
            if (p.size() > 2) {
                return false;
            }
        }
    }
    return true;
}

Translation translate_small_projections(const FiniteStructure& psi) {
    validate(psi);
    std::set<std::array<int, 2>> pairs;
    for (std::size_t r = 0; r < psi.relations.size(); ++r) {
        const auto proj = projections(psi.relations[r]);
        for (std::size_t j = 0; j < proj.size(); ++j) {
            if (proj[j].size() > 2) {
                throw InputError("relation " + std::to_string(r) + " has a projection of size " +
                                 std::to_string(proj[j].size()) + " at coordinate " + std::to_string(j));
            }
            if (proj[j].size() == 2) {
                pairs.insert({*proj[j].begin(), *proj[j].rbegin()});
            }
        }
    }
    Translation t;
    t.sorts.assign(pairs.begin(), pairs.end());
    t.signature = Signature::boolean(static_cast<int>(t.sorts.size()));
    auto sort_of = [&](const std::set<int>& p) {
        const std::array<int, 2> key{*p.begin(), *p.rbegin()};
        return static_cast<int>(std::lower_bound(t.sorts.begin(), t.sorts.end(), key) - t.sorts.begin());
    };
    for (const auto& rel : psi.relations) {
        if (rel.empty()) {
            continue;
        }
        const auto proj = projections(rel);
        std::vector<int> coords, type;
        for (std::size_t j = 0; j < proj.size(); ++j) {
            if (proj[j].size() == 2) {
                coords.push_back(static_cast<int>(j));
                type.push_back(sort_of(proj[j]));
            }
        }
        if (coords.empty()) {
            continue;
        }
        std::vector<std::vector<int>> tuples;
        for (const auto& tup : rel) {
            std::vector<int> b;
            for (std::size_t x = 0; x < coords.size(); ++x) {
                b.push_back(tup[coords[x]] == t.sorts[type[x]][0] ? 0 : 1);
            }
            tuples.push_back(std::move(b));
        }
        t.relations.push_back(TypedRelation::make(std::move(type), std::move(tuples)));
    }
    for (int s = 0; s < t.signature.sort_count(); ++s) {
        t.relations.push_back(TypedRelation::make({s}, {{0}}));
        t.relations.push_back(TypedRelation::make({s}, {{1}}));
    }
    std::sort(t.relations.begin(), t.relations.end());
    t.relations.erase(std::unique(t.relations.begin(), t.relations.end()), t.relations.end());
    return t;
}

MultiOp restrict_polymorphism(const FiniteOp& f, const std::vector<std::array<int, 2>>& sorts) {
    if (f.arity > 6) {
        throw InputError("restriction supports arity at most 6");
    }
    MultiOp out;
    std::vector<int> input(static_cast<std::size_t>(f.arity));
    for (const auto& p : sorts) {
        if (p[0] < 0 || p[1] >= f.size || p[0] >= p[1]) {
            throw InputError("sort is not a two-element subset of the domain");
        }
        std::uint64_t bits = 0;
        for (std::uint32_t idx = 0; idx < (1U << f.arity); ++idx) {
            for (int j = 0; j < f.arity; ++j) {
                input[j] = p[(idx >> j) & 1U];
            }
            const int v = f.at(input);
            if (v != p[0] && v != p[1]) {
                throw InputError("operation does not preserve {" + std::to_string(p[0]) + "," +
                                 std::to_string(p[1]) + "}");
            }
            if (v == p[1]) {
                bits |= std::uint64_t{1} << idx;
            }
        }
        out.emplace_back(f.arity, bits);
    }
    return out;
}

std::vector<int> essential_coordinates(const FiniteOp& g) {
    std::vector<int> out;
    for (int i = 0; i < g.arity; ++i) {
        const std::size_t stride = power(static_cast<std::size_t>(g.size), i);
        bool essential = false;
        for (std::size_t idx = 0; idx < g.values.size() && !essential; ++idx) {
            if ((idx / stride) % g.size != 0) {
                continue;
            }
            for (int b = 1; b < g.size; ++b) {
                if (g.values[idx + b * stride] != g.values[idx]) {
                    essential = true;
                    break;
                }
            }
        }
        if (essential) {
            out.push_back(i);
        }
    }
    return out;
}

FiniteStructure from_multisorted(const Signature& sig, const std::vector<TypedRelation>& relations) {
    if (!sig.is_boolean()) {
        throw InputError("the converse construction needs a Boolean signature");
    }
    FiniteStructure psi;
    psi.domain = 2 * sig.sort_count();
    for (const auto& r : relations) {
        validate(sig, r);
        std::vector<std::vector<int>> tuples;
        for (const auto& t : r.tuples) {
            std::vector<int> c;
            for (std::size_t j = 0; j < t.size(); ++j) {
                c.push_back(2 * r.type[j] + t[j]);
            }
            tuples.push_back(std::move(c));
        }
        psi.relations.push_back(std::move(tuples));
    }
    for (int s = 0; s < sig.sort_count(); ++s) {
        psi.relations.push_back({{2 * s}, {2 * s + 1}});
    }
    return psi;
}

int x_value(const Translation& t, int l, const MultiOp& f) {
    std::set<int> ess;
    for (const auto& c : f) {
        if (c.arity() != l) {
            throw InputError("X is defined on members of arity |C|");
        }
        for (int i : essential_coordinates(from_truth_table(c))) {
            ess.insert(i);
        }
    }
    if (ess.size() == 1) {
        return *ess.begin();
    }
    if (ess.size() == 2) {
        const std::array<int, 2> q{*ess.begin(), *ess.rbegin()};
        const auto it = std::lower_bound(t.sorts.begin(), t.sorts.end(), q);
        if (it != t.sorts.end() && *it == q) {
            // d^Q reads i at i in Q and q[0] elsewhere.
            std::vector<int> d(static_cast<std::size_t>(l), 0);
            d[q[1]] = 1;
            return q[f[it - t.sorts.begin()].eval(d)];
        }
    }
    return 0;
}

FiniteTranslation translate_finite(const FiniteStructure& psi, std::size_t budget) {
    validate(psi);
    if (!small_projections_check(psi)) {
        throw InputError("some relation has a projection with more than two elements");
    }
    Signature sig;
    sig.carriers.emplace_back();
    for (int v = 0; v < psi.domain; ++v) {
        sig.carriers[0].push_back(v);
    }
    std::vector<TypedRelation> typed;
    for (const auto& rel : psi.relations) {
        if (!rel.empty()) {
            typed.push_back(TypedRelation::make(std::vector<int>(rel.front().size(), 0), rel));
        }
    }
    FiniteTranslation out;
    out.digest = input_digest(sig, typed);
    if (psi.domain == 0) {
        out.trivial = true;
        return out;
    }
    out.idempotent = idempotent_core(sig, typed, budget);
    if (out.idempotent.trivial) {
        out.trivial = true;
        return out;
    }
    out.labels = out.idempotent.signature.carriers[0];
    out.core.domain = static_cast<int>(out.labels.size());
    for (const auto& r : out.idempotent.relations) {
        out.core.relations.push_back(r.tuples);
    }
    out.translation = translate_small_projections(out.core);
    for (const auto& p : out.translation.sorts) {
        out.sort_dictionary.push_back({out.labels[p[0]], out.labels[p[1]]});
    }
    return out;
}

FiniteReport classify_finite(const FiniteStructure& psi, const VerifyOptions& options) {
    FiniteReport out;
    static_cast<FiniteTranslation&>(out) = translate_finite(psi, options.budget);
    if (out.trivial) {
        out.report.digest = out.digest;
        out.report.core = CoreId::make(CoreTag::T);
        out.report.idempotent = out.idempotent;
        out.report.log.push_back(psi.domain == 0 ? "empty domain: one operation per arity"
                                                 : "idempotent core: the domain collapses to a point");
        out.report.verified = true;
        return out;
    }
    out.report = classify_relations(out.translation.signature, out.translation.relations, options);
    out.report.digest = out.digest;
    const IdempotentCore& ic = out.idempotent;

    // The restriction map on the binary polymorphisms of the core, checked
    // pointwise together with its minors into arities 1 and 2.
    PolOptions po;
    po.arity = 2;
    po.budget = options.budget;
    std::vector<FiniteMultiOp> pol2;
    try {
        pol2 = pol_enumerate(ic.signature, ic.relations, po);
    } catch (const BudgetError&) {
        out.report.log.push_back("restriction: not checked, " + std::to_string(out.core.domain) +
                                 "-element binary polymorphisms exceed the budget");
        return out;
    }
    const auto maps = all_maps(2, 2);
    const std::vector<int> diagonal{0, 0};
    for (const auto& f : pol2) {
        const MultiOp img = restrict_polymorphism(f[0], out.translation.sorts);
        for (const auto& r : out.translation.relations) {
            if (!preserves(img, r)) {
                throw VerificationError("restriction of a binary polymorphism breaks a translated relation");
            }
        }
        for (const auto& alpha : maps) {
            if (restrict_polymorphism(finite_minor(f[0], alpha, 2), out.translation.sorts) !=
                multi_minor(img, alpha, 2)) {
                throw VerificationError("restriction does not commute with a binary minor");
            }
        }
        if (restrict_polymorphism(finite_minor(f[0], diagonal, 1), out.translation.sorts) !=
            multi_minor(img, diagonal, 1)) {
            throw VerificationError("restriction does not commute with the diagonal minor");
        }
    }
    out.report.log.push_back("restriction: ok on " + std::to_string(pol2.size()) +
                             " binary polymorphisms of the core relations");
    return out;
}

}  // namespace minioncore
