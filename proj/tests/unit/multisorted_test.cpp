#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "minioncore/errors.hpp"
#include "minioncore/multisorted.hpp"
#include "oracles.hpp"

using namespace minioncore;

namespace {

const TruthTable kX = TruthTable::projection(2, 0);
const TruthTable kY = TruthTable::projection(2, 1);
const TruthTable kAnd = TruthTable::meet_op(2);
const TruthTable kOr = TruthTable::join_op(2);

TypedRelation rel(std::vector<int> type, std::vector<std::vector<int>> tuples) {
    return TypedRelation::make(std::move(type), std::move(tuples));
}

// Componentwise application over all member n-tuples, written out directly.
bool preserves_oracle(const MultiOp& op, const TypedRelation& r) {
    const int n = arity_of(op);
    const std::size_t count = r.tuples.size();
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> image;
        for (int c = 0; c < r.arity(); ++c) {
            std::vector<int> column;
            for (int j = 0; j < n; ++j) {
                column.push_back(r.tuples[pick[j]][c]);
            }
            image.push_back(op[r.type[c]].eval(column));
        }
        if (!std::binary_search(r.tuples.begin(), r.tuples.end(), image)) {
            return false;
        }
        int j = 0;
        while (j < n && ++pick[j] == count) {
            pick[j++] = 0;
        }
        if (j == n) {
            return true;
        }
    }
}

}  // namespace

TEST(Multisorted, PreservesExamples) {
    const auto leq_rel = rel({0, 1}, {{0, 0}, {0, 1}, {1, 1}});
    EXPECT_TRUE(preserves(MultiOp{kAnd, kOr}, leq_rel));
    EXPECT_TRUE(preserves_oracle(MultiOp{kAnd, kOr}, leq_rel));
    const auto neq = rel({0, 1}, {{0, 1}, {1, 0}});
    EXPECT_FALSE(preserves(MultiOp{kX, kY}, neq));
    EXPECT_FALSE(preserves_oracle(MultiOp{kX, kY}, neq));
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < n; ++i) {
            EXPECT_TRUE(preserves(multi_projection(2, n, i), neq));
        }
    }
}

TEST(Multisorted, PreservesMatchesOracleAndTupleOrder) {
    const auto leq_rel = rel({0, 1}, {{0, 0}, {0, 1}, {1, 1}});
    const auto shuffled = rel({0, 1}, {{1, 1}, {0, 0}, {0, 1}});
    EXPECT_EQ(leq_rel, shuffled);
    const auto ops = enumerate_idempotent(2);
    for (const auto& a : ops) {
        for (const auto& b : ops) {
            const MultiOp op{a, b};
            ASSERT_EQ(preserves(op, leq_rel), preserves_oracle(op, leq_rel));
        }
    }
}

TEST(Multisorted, PolEnumerateNeq) {
    const std::vector<TypedRelation> gamma = {rel({0, 1}, {{0, 1}, {1, 0}})};
    PolOptions opt;
    opt.arity = 2;
    opt.idempotent_only = true;
    const auto pols = pol_enumerate_boolean(2, gamma, opt);
    const std::set<MultiOp> got(pols.begin(), pols.end());
    const std::set<MultiOp> want = {{kX, kX}, {kY, kY}, {kAnd, kOr}, {kOr, kAnd}};
    EXPECT_EQ(got, want);
}

TEST(Multisorted, PolEnumerateEmptyGamma) {
    PolOptions opt;
    opt.idempotent_only = true;
    EXPECT_EQ(pol_enumerate_boolean(1, {}, opt).size(), 4U);
    opt.idempotent_only = false;
    EXPECT_EQ(pol_enumerate_boolean(1, {}, opt).size(), 16U);
}

TEST(Multisorted, PolEnumerateExample41MatchesChainSemantics) {
    const std::vector<TypedRelation> gamma = {
        rel({0, 1}, {{0, 1}, {1, 0}}),
        rel({1, 2}, {{0, 0}, {0, 1}, {1, 1}}),
        rel({2, 3}, {{0, 0}, {0, 1}, {1, 0}}),
    };
    for (int n = 1; n <= 3; ++n) {
        PolOptions opt;
        opt.arity = n;
        opt.idempotent_only = true;
        const auto pols = pol_enumerate_boolean(4, gamma, opt);
        std::set<MultiOp> want;
        const auto tables = enumerate_idempotent(n);
        for (const auto& h1 : tables) {
            for (const auto& h3 : tables) {
                for (const auto& h4 : tables) {
                    const TruthTable h2 = oracle::dual(h1);
                    if (oracle::triangle(h2, h3) && oracle::triangle(h3, oracle::dual(h4))) {
                        want.insert({h1, h2, h3, h4});
                    }
                }
            }
        }
        EXPECT_EQ(std::set<MultiOp>(pols.begin(), pols.end()), want) << "arity " << n;
    }
}

TEST(Multisorted, PolEnumerateClosedUnderMinors) {
    const std::vector<TypedRelation> gamma = {
        rel({0, 1}, {{0, 0}, {0, 1}, {1, 1}}),
        rel({1, 1}, {{0, 0}, {0, 1}, {1, 0}}),
    };
    PolOptions opt;
    std::vector<std::set<MultiOp>> by_arity(4);
    for (int n = 1; n <= 3; ++n) {
        opt.arity = n;
        const auto pols = pol_enumerate_boolean(2, gamma, opt);
        by_arity[n] = {pols.begin(), pols.end()};
    }
    for (int n = 1; n <= 3; ++n) {
        for (const auto& op : by_arity[n]) {
            for (int m = 1; m <= 3; ++m) {
                std::vector<int> alpha(n, 0);
                while (true) {
                    ASSERT_TRUE(by_arity[m].contains(multi_minor(op, alpha, m)));
                    int j = 0;
                    while (j < n && ++alpha[j] == m) {
                        alpha[j++] = 0;
                    }
                    if (j == n) {
                        break;
                    }
                }
            }
        }
    }
}

TEST(Multisorted, BinaryIdempotentComponentsAreLatticeOps) {
    const std::vector<TypedRelation> gamma = {rel({0, 1}, {{0, 0}, {1, 1}, {0, 1}})};
    PolOptions opt;
    opt.idempotent_only = true;
    const std::set<TruthTable> lattice = {kX, kY, kAnd, kOr};
    for (const auto& op : pol_enumerate_boolean(2, gamma, opt)) {
        for (const auto& t : op) {
            EXPECT_TRUE(lattice.contains(t));
        }
    }
}

TEST(Multisorted, PolEnumerateBudget) {
    PolOptions opt;
    opt.arity = 3;
    opt.budget = 10;
    EXPECT_THROW(pol_enumerate_boolean(2, {}, opt), BudgetError);
}

TEST(Multisorted, ValidateRejectsIllTypedRelations) {
    const Signature sig = Signature::boolean(2);
    EXPECT_THROW(validate(sig, rel({0, 2}, {{0, 0}})), InputError);
    EXPECT_THROW(validate(sig, rel({0, 1}, {{0, 2}})), InputError);
    EXPECT_THROW(validate(sig, rel({0, 1}, {{0}})), InputError);
}

TEST(Multisorted, IdempotentCoreFullRelationIsTrivial) {
    const std::vector<TypedRelation> gamma = {rel({0, 0}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})};
    EXPECT_TRUE(idempotent_core(Signature::boolean(1), gamma).trivial);
}

TEST(Multisorted, IdempotentCoreNeqKeepsSort) {
    const std::vector<TypedRelation> gamma = {rel({0, 0}, {{0, 1}, {1, 0}})};
    const auto core = idempotent_core(Signature::boolean(1), gamma);
    ASSERT_FALSE(core.trivial);
    EXPECT_EQ(core.signature.sort_count(), 1);
    const std::set<TypedRelation> got(core.relations.begin(), core.relations.end());
    const std::set<TypedRelation> want = {gamma[0], rel({0}, {{0}}), rel({0}, {{1}})};
    EXPECT_EQ(got, want);
}

TEST(Multisorted, IdempotentCoreEqualityIsTrivial) {
    const std::vector<TypedRelation> gamma = {rel({0, 1}, {{0, 0}, {1, 1}})};
    EXPECT_TRUE(idempotent_core(Signature::boolean(2), gamma).trivial);
}

TEST(Multisorted, IdempotentCoreDropsSingletonSorts) {
    // Sort 1 is pinned to 0, sort 0 is constrained by <=.
    const std::vector<TypedRelation> gamma = {
        rel({1}, {{0}}),
        rel({0, 1}, {{0, 0}}),
        rel({0, 0}, {{0, 0}, {0, 1}, {1, 1}}),
        rel({0, 0}, {{0, 1}, {1, 0}}),
    };
    const auto core = idempotent_core(Signature::boolean(2), gamma);
    ASSERT_FALSE(core.trivial);
    ASSERT_EQ(core.signature.sort_count(), 1);
    EXPECT_EQ(core.source_sort, std::vector<int>{0});
}

TEST(Multisorted, IdempotentCoreSatisfiesPolEqualsPolid) {
    const std::vector<std::vector<TypedRelation>> corpus = {
        {rel({0, 0}, {{0, 1}, {1, 0}})},
        {rel({0, 1}, {{0, 1}, {1, 0}}), rel({1, 2}, {{0, 0}, {0, 1}, {1, 1}})},
        {rel({0, 0}, {{0, 0}, {0, 1}, {1, 1}})},
    };
    for (const auto& gamma : corpus) {
        int sorts = 0;
        for (const auto& r : gamma) {
            for (int t : r.type) {
                sorts = std::max(sorts, t + 1);
            }
        }
        const auto core = idempotent_core(Signature::boolean(sorts), gamma);
        if (core.trivial) {
            continue;
        }
        for (int n = 1; n <= 2; ++n) {
            PolOptions opt;
            opt.arity = n;
            const auto all = pol_enumerate(core.signature, core.relations, opt);
            opt.idempotent_only = true;
            const auto id = pol_enumerate(core.signature, core.relations, opt);
            EXPECT_EQ(all, id);
        }
    }
}

TEST(Multisorted, FiniteOpRoundTrip) {
    const FiniteOp f = from_truth_table(kAnd);
    EXPECT_EQ(to_truth_table(f), kAnd);
    const std::vector<int> in = {1, 1};
    EXPECT_EQ(f.at(in), 1);
    const FiniteOp p = FiniteOp::projection(3, 2, 1);
    const std::vector<int> q = {2, 0};
    EXPECT_EQ(p.at(q), 0);
    EXPECT_TRUE(p.is_idempotent());
}
