#include <gtest/gtest.h>

#include <set>

#include "minioncore/errors.hpp"
#include "minioncore/mincore.hpp"
#include "oracles.hpp"

using namespace minioncore;

namespace {

const TruthTable kX = TruthTable::projection(2, 0);
const TruthTable kY = TruthTable::projection(2, 1);
const TruthTable kAnd = TruthTable::meet_op(2);

CoreId A(int k) { return CoreId::make(CoreTag::A, k); }
CoreId B(int k) { return CoreId::make(CoreTag::B, k); }
CoreId C(int k) { return CoreId::make(CoreTag::C, k); }
CoreId D(int k) { return CoreId::make(CoreTag::D, k); }
const CoreId kT = CoreId::make(CoreTag::T);
const CoreId kBinf = CoreId::make(CoreTag::Binf);
const CoreId kCinf = CoreId::make(CoreTag::Cinf);
const CoreId kDinf = CoreId::make(CoreTag::Dinf);

TruncatedMinion core(const CoreId& c, int cap = 3, bool witnesses = false) {
    MinionOptions o;
    o.cap = cap;
    o.witnesses = witnesses;
    return from_core(c, o);
}

std::vector<int> binary_map(const TruncatedMinion& M, const TruncatedMinion& N,
                            const std::vector<std::pair<MultiOp, MultiOp>>& pairs) {
    std::vector<int> xi2(M.size(2), -1);
    for (const auto& [a, b] : pairs) {
        xi2[M.find(2, a)] = N.find(2, b);
    }
    return xi2;
}

// Two homs with one binary part agree everywhere.
void expect_determined_by_binaries(const std::vector<TruncatedHom>& homs) {
    for (const auto& a : homs) {
        for (const auto& b : homs) {
            if (a.binary() == b.binary()) {
                EXPECT_EQ(a.map, b.map);
            }
        }
    }
}

}  // namespace

TEST(TruncatedMinion, Sizes) {
    const auto binf = core(kBinf);
    EXPECT_EQ(binf.size(1), 1U);
    EXPECT_EQ(binf.size(2), 3U);
    std::size_t expected = 0;
    for (const auto& t : oracle::idempotent_tables(3)) {
        if (oracle::core_member(kBinf, {t})) {
            ++expected;
        }
    }
    EXPECT_EQ(binf.size(3), expected);

    std::vector<std::vector<MultiOp>> projections;
    for (int n = 1; n <= 3; ++n) {
        std::vector<MultiOp> level;
        for (int i = 0; i < n; ++i) {
            level.push_back(multi_projection(1, n, i));
        }
        projections.push_back(level);
    }
    const auto proj = from_function_minion(1, projections);
    EXPECT_EQ(proj.size(1), 1U);
    EXPECT_EQ(proj.size(2), 2U);
    EXPECT_EQ(proj.size(3), 3U);

    const auto t = core(kT);
    EXPECT_EQ(t.size(3), 1U);
}

TEST(TruncatedMinion, RejectsNonClosedSets) {
    // Binary meet without its swapped counterpart's unary minors is fine, but
    // dropping the projections is not.
    std::vector<std::vector<MultiOp>> bad{{{TruthTable::projection(1, 0)}}, {{kAnd}}};
    EXPECT_THROW(from_function_minion(1, bad), InputError);
    EXPECT_THROW(TruncatedMinion(1, {{}}), InputError);
}

TEST(ExtendBinaryMap, Examples) {
    const auto binf = core(kBinf);
    auto id = extend_binary_map(binf, binf, binary_map(binf, binf, {{{kX}, {kX}}, {{kY}, {kY}}, {{kAnd}, {kAnd}}}));
    ASSERT_TRUE(id.hom.has_value()) << id.failure;
    for (int n = 1; n <= 3; ++n) {
        for (std::size_t i = 0; i < binf.size(n); ++i) {
            EXPECT_EQ(id.hom->map[n - 1][i], static_cast<int>(i));
        }
    }
    auto bad = extend_binary_map(binf, binf, binary_map(binf, binf, {{{kX}, {kX}}, {{kY}, {kY}}, {{kAnd}, {kX}}}));
    EXPECT_FALSE(bad.hom.has_value());
    EXPECT_FALSE(bad.failure.empty());

    const auto cinf = core(kCinf, 3, true);
    auto swap = extend_binary_map(cinf, cinf,
                                  binary_map(cinf, cinf,
                                             {{{kX, kX}, {kX, kX}},
                                              {{kY, kY}, {kY, kY}},
                                              {{kAnd, kX}, {kAnd, kY}},
                                              {{kAnd, kY}, {kAnd, kX}}}));
    ASSERT_TRUE(swap.hom.has_value()) << swap.failure;
    const int t = [&] {
        for (std::size_t w = 0; w < cinf.witnesses().size(); ++w) {
            if (cinf.witnesses()[w] == cinf_t()) {
                return static_cast<int>(w);
            }
        }
        return -1;
    }();
    ASSERT_GE(t, 0);
    EXPECT_EQ(swap.hom->witness_images[t], cinf_t_prime());
}

TEST(HomSearch, Examples) {
    const auto dinf = core(kDinf, 3, true);
    const auto cinf = core(kCinf, 3, true);
    const auto h = hom_search(dinf, cinf);
    ASSERT_TRUE(h.has_value());
    for (int n = 1; n <= 3; ++n) {
        for (std::size_t i = 0; i < dinf.size(n); ++i) {
            const MultiOp& src = dinf.at(n)[i];
            EXPECT_EQ(cinf.at(n)[h->map[n - 1][i]], (MultiOp{src[0], src[0]}));
        }
    }
    EXPECT_FALSE(hom_search(core(kBinf, 3, true), core(D(1), 3, true)).has_value());
    EXPECT_FALSE(hom_search(cinf, dinf).has_value());
    EXPECT_TRUE(is_core_truncated(dinf));
    EXPECT_FALSE(hom_search(core(kT), core(A(1))).has_value());
    EXPECT_TRUE(hom_search(core(A(1)), core(kT)).has_value());
}

TEST(HomSearch, SeparatesCanonicalPairsWithWitnesses) {
    for (int k = 2; k <= 3; ++k) {
        EXPECT_FALSE(hom_search(core(D(k), 3, true), core(B(k), 3, true)).has_value()) << k;
        EXPECT_FALSE(hom_search(core(C(k), 3, true), core(A(k), 3, true)).has_value()) << k;
        EXPECT_TRUE(hom_search(core(D(k), 3, true), core(A(k), 3, true)).has_value()) << k;
        EXPECT_TRUE(hom_search(core(C(k + 1), 3, true), core(B(k), 3, true)).has_value()) << k;
    }
}

TEST(Endomorphisms, CanonicalMinionsAreCores) {
    for (const auto& c : all_cores(2)) {
        const auto M = core(c, 3, true);
        const auto endos = endo_enumerate(M);
        EXPECT_FALSE(endos.empty());
        expect_determined_by_binaries(endos);
        // Projections are fixed.
        if (c.sorts() > 0) {
            for (const auto& e : endos) {
                for (int i = 0; i < 2; ++i) {
                    const int p = M.find(2, multi_projection(M.sorts(), 2, i));
                    EXPECT_EQ(e.binary()[p], p);
                }
            }
        }
        EXPECT_TRUE(is_core_truncated(M)) << to_string(c);
    }
}

TEST(Endomorphisms, IdempotentClonesAreNotCores) {
    MinionOptions o;
    o.cap = 3;
    EXPECT_FALSE(is_core_truncated(idempotent_minion(1, o)));
}

TEST(ComputeCore, IdempotentOneSortedIsA1) {
    MinionOptions o;
    o.cap = 3;
    const auto I1 = idempotent_minion(1, o);
    const auto c = compute_core_truncated(I1);
    EXPECT_EQ(c.size(2), 3U);
    EXPECT_TRUE(is_core_truncated(c));
    const auto a1 = core(A(1));
    EXPECT_TRUE(hom_search(c, a1).has_value());
    EXPECT_TRUE(hom_search(a1, c).has_value());
    EXPECT_TRUE(hom_search(c, I1).has_value());
    EXPECT_TRUE(hom_search(I1, c).has_value());
}

TEST(ComputeCore, FixedPoints) {
    const auto dinf = core(kDinf);
    const auto c = compute_core_truncated(dinf);
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(c.at(n), dinf.at(n));
    }
    const auto t = compute_core_truncated(core(kT));
    EXPECT_EQ(t.size(3), 1U);
}

TEST(CheckHom, Table1AtCapFour) {
    MinionOptions o;
    o.cap = 4;
    o.witnesses = true;
    for (const auto& [a, b] : table1_edges(2)) {
        const auto M = from_core(a, o);
        const auto N = from_core(b, o);
        const CoreHom h = table1_hom(a, b);
        const auto fail = check_hom(M, N, [&](const MultiOp& op) { return h.apply(op); });
        EXPECT_FALSE(fail.has_value()) << to_string(a) << " -> " << to_string(b) << ": " << fail.value_or("");
    }
}

TEST(CheckHom, DetectsBadMaps) {
    const auto binf = core(kBinf);
    const auto d1 = core(D(1));
    // Sending everything to the first projection breaks minors.
    const auto fail = check_hom(binf, binf, [](const MultiOp& op) {
        return multi_projection(1, op[0].arity(), 0);
    });
    EXPECT_TRUE(fail.has_value());
    EXPECT_TRUE(check_hom(binf, d1, [](const MultiOp& op) { return op; }).has_value());
}

TEST(PointHom, Examples) {
    std::vector<std::vector<MultiOp>> projections;
    for (int n = 1; n <= 3; ++n) {
        std::vector<MultiOp> level;
        for (int i = 0; i < n; ++i) {
            level.push_back(multi_projection(1, n, i));
        }
        projections.push_back(level);
    }
    const auto proj = from_function_minion(1, projections);
    const auto h = hom_from_point_map(proj, {0, 1}, 2);
    EXPECT_TRUE(point_hom_commutes(proj, h));
    for (int n = 1; n <= 3; ++n) {
        for (std::size_t i = 0; i < proj.size(n); ++i) {
            EXPECT_EQ(h.images[n - 1][i], FiniteOp::projection(2, n, static_cast<int>(i)));
        }
    }

    const auto binf = core(kBinf);
    std::vector<int> X(binf.size(2));
    X[binf.find(2, {kX})] = 0;
    X[binf.find(2, {kY})] = 1;
    X[binf.find(2, {kAnd})] = 0;
    EXPECT_TRUE(point_hom_commutes(binf, hom_from_point_map(binf, X, 2)));
    const auto constant = hom_from_point_map(binf, std::vector<int>(binf.size(2), 1), 2);
    EXPECT_TRUE(point_hom_commutes(binf, constant));
    for (const auto& g : constant.images[2]) {
        for (auto v : g.values) {
            EXPECT_EQ(v, 1);
        }
    }
}

// Hom checks use generating minor maps; re-verify over every map at cap 3.
TEST(Homs, CommuteWithEveryMinorAtCapThree) {
    auto exhaustive = [](const TruncatedMinion& M, const TruncatedMinion& N, const TruncatedHom& h) {
        for (int n = 1; n <= 3; ++n) {
            for (std::size_t e = 0; e < M.size(n); ++e) {
                const MultiOp img = N.at(n)[h.map[n - 1][e]];
                for (int m = 1; m <= 3; ++m) {
                    for (const auto& alpha : all_maps(n, m)) {
                        const int src = M.find(m, multi_minor(M.at(n)[e], alpha, m));
                        if (src < 0 || N.at(m)[h.map[m - 1][src]] != multi_minor(img, alpha, m)) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    };
    for (const auto& c : all_cores(2)) {
        const auto M = core(c);
        for (const auto& h : endo_enumerate(M)) {
            EXPECT_TRUE(exhaustive(M, M, h)) << to_string(c);
        }
    }
    const auto cinf = core(kCinf);
    const auto b2 = core(B(2));
    const auto h = hom_search(cinf, b2);
    ASSERT_TRUE(h.has_value());
    EXPECT_TRUE(exhaustive(cinf, b2, *h));
    MinionOptions o;
    o.cap = 3;
    const auto I1 = idempotent_minion(1, o);
    for (const auto& e : endo_enumerate(I1)) {
        EXPECT_TRUE(exhaustive(I1, I1, e));
    }
}
