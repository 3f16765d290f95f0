// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "minioncore/canon.hpp"
#include "minioncore/classify.hpp"
#include "minioncore/errors.hpp"
#include "minioncore/mincore.hpp"
#include "minioncore/translate.hpp"
#include "oracles.hpp"

using namespace minioncore;

namespace {

CoreId A(int k) { return CoreId::make(CoreTag::A, k); }
CoreId B(int k) { return CoreId::make(CoreTag::B, k); }
CoreId C(int k) { return CoreId::make(CoreTag::C, k); }
CoreId D(int k) { return CoreId::make(CoreTag::D, k); }
const CoreId kT = CoreId::make(CoreTag::T);
const CoreId kBinf = CoreId::make(CoreTag::Binf);
const CoreId kCinf = CoreId::make(CoreTag::Cinf);
const CoreId kDinf = CoreId::make(CoreTag::Dinf);

const TruthTable kX = TruthTable::projection(2, 0);
const TruthTable kY = TruthTable::projection(2, 1);
const TruthTable kAnd = TruthTable::meet_op(2);

// Collects the first few problems of a criterion.
struct Outcome {
    std::vector<std::string> problems;
    std::string note;

    void fail(const std::string& what) {
        if (problems.size() < 5) {
            problems.push_back(what);
        }
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            fail(what);
        }
    }
};

int failures = 0;

void run(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) {
        std::ostringstream ss;
        ss << "took " << secs << " s, limit " << limit_s << " s";
        out.fail(ss.str());
    }
    const bool ok = out.problems.empty();
    failures += ok ? 0 : 1;
    std::printf("%s %2d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs,
                out.note.empty() ? "" : ": ", out.note.c_str());
    for (const auto& p : out.problems) {
        std::printf("     %s\n", p.c_str());
    }
    std::fflush(stdout);
}

TypedRelation rel(std::vector<int> type, std::vector<std::vector<int>> tuples) {
    return TypedRelation::make(std::move(type), std::move(tuples));
}

std::vector<TypedRelation> with_constants(int sorts, std::vector<TypedRelation> rels) {
    for (int s = 0; s < sorts; ++s) {
        rels.push_back(rel({s}, {{0}}));
        rels.push_back(rel({s}, {{1}}));
    }
    return rels;
}

MinionOptions minion(int cap, bool witnesses) {
    MinionOptions o;
    o.cap = cap;
    o.witnesses = witnesses;
    return o;
}

void binary_parts(Outcome& out) {
    auto as_set = [](const std::vector<MultiOp>& v) { return std::set<MultiOp>(v.begin(), v.end()); };
    out.expect(as_set(binary_part(kDinf)) == std::set<MultiOp>{{kX}, {kY}}, "Dinf");
    out.expect(as_set(binary_part(kBinf)) == std::set<MultiOp>{{kX}, {kY}, {kAnd}}, "Binf");
    out.expect(as_set(binary_part(kCinf)) == std::set<MultiOp>{{kX, kX}, {kY, kY}, {kAnd, kX}, {kAnd, kY}}, "Cinf");
    for (int k = 1; k <= 3; ++k) {
        std::set<MultiOp> want;
        for (int i = 0; i <= k; ++i) {
            for (const auto& p : {kX, kY}) {
                MultiOp op(static_cast<std::size_t>(k), p);
                std::fill(op.begin(), op.begin() + i, kAnd);
                want.insert(op);
            }
        }
        out.expect(want.size() == static_cast<std::size_t>(2 * k + 1), "expected size");
        out.expect(as_set(binary_part(A(k))) == want, "A" + std::to_string(k));
        out.expect(as_set(binary_part(B(k))) == want, "B" + std::to_string(k));
    }
}

void example41(Outcome& out) {
    const std::vector<TypedRelation> gamma{rel({0, 1}, {{0, 1}, {1, 0}}), rel({1, 2}, {{0, 0}, {0, 1}, {1, 1}}),
                                           rel({2, 3}, {{0, 0}, {0, 1}, {1, 0}})};
    VerifyOptions o;
    o.arity_cap = 4;
    o.symmetric5 = true;
    const auto rep = classify_relations(Signature::boolean(4), with_constants(4, gamma), o);
    out.expect(rep.core == A(2), "core " + to_string(rep.core));
    out.expect(rep.verified, "not verified");
    bool saw_to = false, saw_from = false;
    for (const auto& line : rep.log) {
        if (line.rfind("description -> A2: ok", 0) == 0) {
            saw_to = line.find("symmetric 5-ary") != std::string::npos;
        }
        if (line.rfind("A2 -> description: ok", 0) == 0) {
            saw_from = line.find("symmetric 5-ary") != std::string::npos;
        }
    }
    out.expect(saw_to && saw_from, "missing composite checks at cap 4 with symmetric 5-ary members");
}

void battery(Outcome& out) {
    const Signature one = Signature::boolean(1);
    const Signature two = Signature::boolean(2);
    auto check = [&](const Signature& sig, const std::vector<TypedRelation>& rels, const CoreId& want,
                     const std::string& what) {
        const auto rep = classify_relations(sig, rels);
        out.expect(rep.core == want && rep.verified, what + " gave " + to_string(rep.core));
    };
    check(one, {}, kT, "empty");
    check(Signature{}, {}, kT, "no sorts");
    check(one, with_constants(1, {rel({0, 0}, {{0, 0}, {0, 1}, {1, 1}})}), kBinf, "<=");
    check(one, {rel({0, 0}, {{0, 1}, {1, 0}})}, D(1), "!=");
    check(one, with_constants(1, {rel({0, 0}, {{0, 0}, {0, 1}, {1, 0}})}), B(1), "complement of (1,1)");
    check(two, with_constants(2, {rel({0, 0}, {{0, 1}, {1, 0}}), rel({1, 0}, {{0, 0}, {1, 0}, {1, 1}})}), D(2),
          "f1 <| g1");
    const auto d2 = classify_description(
        Description::make(2, {{Relation::Eq, {0, false}, {0, true}}, {Relation::Triangle, {1, false}, {0, false}}}));
    out.expect(d2.core == D(2) && d2.verified, "description f1 <| g1 gave " + to_string(d2.core));
}

void reducer_corpus(Outcome& out) {
    std::mt19937 rng(2024);
    const MinionOptions mo = minion(3, true);
    std::size_t members = 0;
    const int rounds = 500;
    for (int round = 0; round < rounds; ++round) {
        const Description d = oracle::random_description(rng, 3, 4);
        const Reduction r = to_reduced(d);
        const std::string what = to_string(d);
        try {
            validate_reduced(r.reduced);
        } catch (const std::exception& e) {
            out.fail(what + ": " + e.what());
            continue;
        }
        const int rs = r.reduced.symbols();
        const auto there = check_hom_stream(
            d.k, d.constraints, rs, r.reduced.constraints, [&](const MultiOp& op) { return to_reduced_op(r, op); },
            mo);
        const auto back = check_hom_stream(
            rs, r.reduced.constraints, d.k, d.constraints, [&](const MultiOp& op) { return from_reduced_op(r, op); },
            mo);
        out.expect(!there.failure, what + " -> reduced: " + there.failure.value_or(""));
        out.expect(!back.failure, "reduced -> " + what + ": " + back.failure.value_or(""));
        for (auto n : there.members) {
            members += n;
        }
    }
    out.note = std::to_string(rounds) + " descriptions, " + std::to_string(members) + " source members";
}

void cores(Outcome& out) {
    auto list = all_cores(3);
    for (const auto& c : list) {
        out.expect(is_core_truncated(from_core(c, minion(3, true))), to_string(c) + " is not a core");
    }
    out.note = std::to_string(list.size()) + " canonical minions";
}

// The two-chain ladder: an edge a -> b means a minion homomorphism a -> b.
std::vector<std::pair<CoreId, CoreId>> ladder() {
    std::vector<std::pair<CoreId, CoreId>> e{{A(1), kT}, {D(1), A(1)}, {kCinf, kBinf}, {kDinf, kCinf}};
    for (int k = 1; k <= 3; ++k) {
        e.push_back({B(k), A(k)});
        e.push_back({D(k), A(k)});
        if (k > 1) {
            e.push_back({A(k), B(k - 1)});
            e.push_back({C(k), D(k - 1)});
            e.push_back({C(k), B(k - 1)});
            e.push_back({D(k), C(k)});
        }
    }
    e.push_back({kBinf, B(3)});
    e.push_back({kCinf, D(3)});
    return e;
}

void poset(Outcome& out) {
    const auto list = all_cores(3);
    std::map<std::string, std::set<std::string>> up;
    for (const auto& c : list) {
        up[to_string(c)].insert(to_string(c));
    }
    const auto edges = ladder();
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [a, b] : edges) {
            for (const auto& x : std::set<std::string>(up[to_string(b)])) {
                changed |= up[to_string(a)].insert(x).second;
            }
        }
    }
    for (const auto& a : list) {
        for (const auto& b : list) {
            const bool want = up[to_string(a)].count(to_string(b)) > 0;
            out.expect(poset_leq(a, b) == want, to_string(a) + " <= " + to_string(b));
        }
    }

    MinionOptions cap4 = minion(4, true);
    cap4.budget = 50'000'000;
    std::size_t verified = 0;
    for (const auto& [a, b] : table1_edges(3)) {
        const CoreHom h = table1_hom(a, b);
        const auto rep = check_hom_stream(a.sorts(), core_atoms(a), b.sorts(), core_atoms(b),
                                          [&](const MultiOp& op) { return h.apply(op); }, cap4);
        out.expect(!rep.failure, to_string(a) + " -> " + to_string(b) + ": " + rep.failure.value_or(""));
        ++verified;
    }

    const MinionOptions cap3 = minion(3, true);
    std::vector<std::pair<CoreId, CoreId>> non{{kBinf, D(1)}, {kCinf, kDinf}};
    for (int k = 2; k <= 3; ++k) {
        non.push_back({D(k), B(k)});
        non.push_back({C(k), A(k)});
    }
    for (const auto& [a, b] : non) {
        out.expect(!hom_search(from_core(a, cap3), from_core(b, cap3)).has_value(),
                   "found " + to_string(a) + " -> " + to_string(b));
        out.expect(!poset_leq(a, b), "poset has " + to_string(a) + " <= " + to_string(b));
    }
    out.note = std::to_string(verified) + " generator homs at cap 4, " + std::to_string(non.size()) +
               " separations";
}

void sym5(Outcome& out) {
    std::size_t checks = 0;
    for (const auto& p : all_sym5_profiles()) {
        const TruthTable h = oracle::sym5(p.a);
        out.expect(sym5_from_profile(p) == h, "profile table");
        const TruthTable hd = oracle::dual(h);
        for (const auto& q : all_sym5_profiles()) {
            const TruthTable h2 = oracle::sym5(q.a);
            out.expect(sym5_compare(p, q, Sym5Relation::Leq) == oracle::leq(h, h2), "leq");
            out.expect(sym5_compare(p, q, Sym5Relation::Triangle) == oracle::triangle(h, h2), "triangle");
            out.expect(sym5_compare(p, q, Sym5Relation::SelfLeqDual) == oracle::leq(h, hd), "h <= h^d");
            out.expect(sym5_compare(p, q, Sym5Relation::SelfTriangleDual) == oracle::triangle(h, hd), "h <| h^d");
            out.expect(sym5_compare(p, q, Sym5Relation::SelfDualEq) == (h == hd), "h = h^d");
            checks += 5;
        }
    }
    out.note = std::to_string(checks) + " comparisons";
}

void two_sat(Outcome& out) {
    std::mt19937 rng(33);
    int sat = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto phi = oracle::random_formula(rng, 12, 24);
        if (trial % 3 == 0) {
            phi.self_complementary.assign(static_cast<std::size_t>(phi.variables), false);
            phi.self_complementary[0] = true;
        }
        const auto got = apt_solve(phi);
        out.expect(got.has_value() == oracle::satisfiable(phi), "formula " + std::to_string(trial));
        if (got) {
            ++sat;
            out.expect(oracle::satisfies(phi, *got), "assignment " + std::to_string(trial));
        }
    }
    out.note = std::to_string(sat) + " of 1000 satisfiable";
}

void laws(Outcome& out) {
    for (int n = 1; n <= 3; ++n) {
        std::vector<TruthTable> tables;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1U << n)); ++b) {
            tables.emplace_back(n, b);
        }
        for (const auto& f : tables) {
            out.expect(dual(dual(f)) == f, "involution");
            out.expect(dual(f) == oracle::dual(f), "dual");
            for (const auto& g : tables) {
                if (n < 3) {
                    out.expect(triangle(f, g) == oracle::triangle(f, g), "triangle");
                }
                out.expect(dual(meet(f, g)) == join(dual(f), dual(g)), "De Morgan meet");
                out.expect(dual(join(f, g)) == meet(dual(f), dual(g)), "De Morgan join");
                out.expect(triangle(f, dual(g)) == triangle(g, dual(f)), "skew symmetry");
                if (triangle(f, g)) {
                    out.expect(leq(f, g), "triangle implies leq");
                }
                if (g == dual(g) && leq(f, dual(f))) {
                    const TruthTable h = meet(join(g, f), dual(f));
                    out.expect(leq(f, h) && h == dual(h), "self-dual h above f");
                }
                const bool fg_leq = leq(f, g);
                const bool fg_tri = triangle(f, g);
                for (const auto& h : tables) {
                    if (fg_leq && triangle(g, h)) {
                        out.expect(triangle(f, h), "leq then triangle");
                    }
                    if (fg_tri && leq(g, h)) {
                        out.expect(triangle(f, h), "triangle then leq");
                    }
                    if (fg_tri && triangle(g, h)) {
                        out.expect(triangle(f, h), "strong transitivity");
                    }
                }
            }
        }
    }
    // The relation itself against the pair scan at arity 3, on a sample.
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20000; ++i) {
        const TruthTable f(3, rng() & 0xFF);
        const TruthTable g(3, rng() & 0xFF);
        out.expect(triangle(f, g) == oracle::triangle(f, g), "triangle at arity 3");
        out.expect(leq(f, g) == oracle::leq(f, g), "leq at arity 3");
    }
}

FiniteStructure structure(int domain, std::vector<std::vector<std::vector<int>>> rels) {
    return {domain, std::move(rels)};
}

void translation(Outcome& out) {
    const auto neq = classify_finite(structure(3, {{{0, 1}, {1, 0}}}));
    out.expect(neq.report.core == D(1) && neq.report.verified, "!= gave " + to_string(neq.report.core));
    const auto less = classify_finite(structure(3, {{{0, 1}, {0, 2}, {1, 2}}}));
    out.expect(less.report.core == B(1) && less.report.verified, "< gave " + to_string(less.report.core));
    for (const auto* r : {&neq, &less}) {
        const auto& log = r->report.log;
        const bool ok = std::any_of(log.begin(), log.end(), [](const std::string& line) {
            return line.rfind("restriction: ok", 0) == 0;
        });
        out.expect(ok, "restriction not verified");
    }
}

void core_of_idempotent(Outcome& out) {
    const auto I1 = idempotent_minion(1, minion(3, false));
    const auto c = compute_core_truncated(I1);
    const auto a1 = from_core(A(1), minion(3, false));
    out.expect(hom_search(c, a1).has_value(), "no hom core -> A1");
    out.expect(hom_search(a1, c).has_value(), "no hom A1 -> core");
    out.expect(hom_search(c, I1).has_value() && hom_search(I1, c).has_value(), "core not equivalent to I1");
    out.note = "sizes " + std::to_string(c.size(1)) + "," + std::to_string(c.size(2)) + "," +
               std::to_string(c.size(3));
}

}  // namespace

int main() {
    run(1, "binary parts", 1, binary_parts);
    run(2, "example 4.1 classifies to A2", 10, example41);
    run(3, "single-relation battery", 0, battery);
    run(4, "reducer soundness corpus", 0, reducer_corpus);
    run(5, "canonical minions are cores", 0, cores);
    run(6, "poset, generator homs and separations", 0, poset);
    run(7, "symmetric 5-ary comparisons", 1, sym5);
    run(8, "2-SAT against exhaustive search", 0, two_sat);
    run(9, "Boolean operation laws", 0, laws);
    run(10, "translation examples", 60, translation);
    run(11, "core of the one-sorted idempotent clone", 0, core_of_idempotent);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
