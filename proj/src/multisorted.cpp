#include "minioncore/multisorted.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "minioncore/errors.hpp"

namespace minioncore {

int arity_of(const MultiOp& op) {
    if (op.empty()) {
        throw InputError("arity of a zero-sort operation is not recorded");
    }
    const int n = op.front().arity();
    for (const auto& c : op) {
        if (c.arity() != n) {
            throw InputError("multisorted components disagree on arity");
        }
    }
    return n;
}

bool is_idempotent(const MultiOp& op) {
    return std::all_of(op.begin(), op.end(), [](const TruthTable& t) { return t.is_idempotent(); });
}

MultiOp multi_projection(int sorts, int arity, int coordinate) {
    return MultiOp(static_cast<std::size_t>(sorts), TruthTable::projection(arity, coordinate));
}

MultiOp multi_minor(const MultiOp& op, std::span<const int> alpha, int target_arity) {
    MultiOp out;
    out.reserve(op.size());
    for (const auto& c : op) {
        out.push_back(minor(c, alpha, target_arity));
    }
    return out;
}

MultiOp multi_minor(const MultiOp& op, const MinorMap& map) {
    MultiOp out;
    out.reserve(op.size());
    for (const auto& c : op) {
        out.push_back(map(c));
    }
    return out;
}

std::size_t power(std::size_t base, int exponent) {
    std::size_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

FiniteOp FiniteOp::projection(int size, int arity, int coordinate) {
    FiniteOp f{size, arity, std::vector<std::uint8_t>(power(size, arity))};
    const std::size_t stride = power(size, coordinate);
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        f.values[idx] = static_cast<std::uint8_t>((idx / stride) % size);
    }
    return f;
}

int FiniteOp::at(std::span<const int> input) const {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (int a : input) {
        idx += static_cast<std::size_t>(a) * stride;
        stride *= size;
    }
    return values.at(idx);
}

bool FiniteOp::is_idempotent() const {
    std::size_t step = 0;
    for (int j = 0; j < arity; ++j) {
        step += power(size, j);
    }
    for (int a = 0; a < size; ++a) {
        if (values[a * step] != a) {
            return false;
        }
    }
    return true;
}

FiniteOp finite_minor(const FiniteOp& f, std::span<const int> alpha, int target_arity) {
    if (static_cast<int>(alpha.size()) != f.arity) {
        throw InputError("minor map must be total on the source arity");
    }
    for (int a : alpha) {
        if (a < 0 || a >= target_arity) {
            throw InputError("minor map image outside target arity");
        }
    }
    FiniteOp out{f.size, target_arity, std::vector<std::uint8_t>(power(f.size, target_arity))};
    std::vector<int> c(target_arity, 0);
    std::vector<int> a(f.arity, 0);
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        std::size_t rest = idx;
        for (int i = 0; i < target_arity; ++i) {
            c[i] = static_cast<int>(rest % f.size);
            rest /= f.size;
        }
        for (int j = 0; j < f.arity; ++j) {
            a[j] = c[alpha[j]];
        }
        out.values[idx] = static_cast<std::uint8_t>(f.at(a));
    }
    return out;
}

FiniteOp from_truth_table(const TruthTable& t) {
    FiniteOp f{2, t.arity(), std::vector<std::uint8_t>(t.size())};
    for (std::uint32_t i = 0; i < t.size(); ++i) {
        f.values[i] = t[i];
    }
    return f;
}

TruthTable to_truth_table(const FiniteOp& f) {
    if (f.size != 2) {
        throw InputError("operation is not Boolean");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        bits |= static_cast<std::uint64_t>(f.values[i] & 1U) << i;
    }
    return {f.arity, bits};
}

MultiOp to_boolean(const FiniteMultiOp& op) {
    MultiOp out;
    for (const auto& c : op) {
        out.push_back(to_truth_table(c));
    }
    return out;
}

FiniteMultiOp from_boolean(const MultiOp& op) {
    FiniteMultiOp out;
    for (const auto& c : op) {
        out.push_back(from_truth_table(c));
    }
    return out;
}

Signature Signature::boolean(int sorts) {
    return Signature{std::vector<std::vector<int>>(static_cast<std::size_t>(sorts), {0, 1})};
}

bool Signature::is_boolean() const {
    return std::all_of(carriers.begin(), carriers.end(), [](const auto& c) { return c.size() == 2; });
}

TypedRelation TypedRelation::make(std::vector<int> type, std::vector<std::vector<int>> tuples) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    return TypedRelation{std::move(type), std::move(tuples)};
}

void validate(const Signature& sig, const TypedRelation& rel) {
    if (rel.type.empty()) {
        throw InputError("relation of arity 0");
    }
    for (int s : rel.type) {
        if (s < 0 || s >= sig.sort_count()) {
            throw InputError("relation type refers to unknown sort " + std::to_string(s));
        }
    }
    for (const auto& t : rel.tuples) {
        if (t.size() != rel.type.size()) {
            throw InputError("relation tuple length does not match its type");
        }
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[j] < 0 || t[j] >= sig.carrier_size(rel.type[j])) {
                throw InputError("relation tuple entry outside its sort");
            }
        }
    }
}

namespace {

// Applies the components indexed by `rel.type` to every n-tuple of members.
template <typename Lookup>
bool preserves_impl(const TypedRelation& rel, int arity, Lookup&& component_value) {
    const std::size_t members = rel.tuples.size();
    if (members == 0) {
        return true;
    }
    const int m = rel.arity();
    std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
    std::vector<int> column(static_cast<std::size_t>(arity));
    std::vector<int> image(static_cast<std::size_t>(m));
    while (true) {
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < arity; ++i) {
                column[i] = rel.tuples[pick[i]][j];
            }
            image[j] = component_value(j, column);
        }
        if (!std::binary_search(rel.tuples.begin(), rel.tuples.end(), image)) {
            return false;
        }
        int pos = 0;
        while (pos < arity && ++pick[pos] == members) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == arity) {
            return true;
        }
    }
}

}  // namespace

bool preserves(const FiniteMultiOp& op, const TypedRelation& rel, const Signature& sig) {
    if (static_cast<int>(op.size()) != sig.sort_count()) {
        throw InputError("operation and relation use different signatures");
    }
    if (op.empty()) {
        return true;
    }
    const int arity = op.front().arity;
    for (std::size_t s = 0; s < op.size(); ++s) {
        if (op[s].size != sig.carrier_size(static_cast<int>(s)) || op[s].arity != arity) {
            throw InputError("operation component does not match its sort");
        }
    }
    return preserves_impl(rel, arity, [&](int j, const std::vector<int>& column) {
        return op[rel.type[j]].at(column);
    });
}

bool preserves(const MultiOp& op, const TypedRelation& rel) {
    for (int s : rel.type) {
        if (s < 0 || s >= static_cast<int>(op.size())) {
            throw InputError("relation type refers to a sort the operation lacks");
        }
    }
    if (op.empty()) {
        return true;
    }
    const int arity = arity_of(op);
    return preserves_impl(rel, arity, [&](int j, const std::vector<int>& column) {
        return static_cast<int>(op[rel.type[j]].eval(column));
    });
}

namespace {

std::vector<FiniteOp> all_tables(int size, int arity, bool idempotent_only, std::size_t budget) {
    const std::size_t rows = power(size, arity);
    std::size_t step = 0;
    for (int j = 0; j < arity; ++j) {
        step += power(size, j);
    }
    std::vector<bool> fixed(rows, false);
    if (idempotent_only) {
        for (int a = 0; a < size; ++a) {
            fixed[a * step] = true;
        }
    }
    std::vector<std::size_t> free_rows;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!fixed[r]) {
            free_rows.push_back(r);
        }
    }
    // size^free_rows, with overflow guard
    std::size_t count = 1;
    for (std::size_t i = 0; i < free_rows.size(); ++i) {
        if (count > budget / std::max(size, 1)) {
            throw BudgetError("per-sort table count exceeds budget at arity " + std::to_string(arity));
        }
        count *= size;
    }
    if (count > budget) {
        throw BudgetError("per-sort table count exceeds budget at arity " + std::to_string(arity));
    }
    FiniteOp base{size, arity, std::vector<std::uint8_t>(rows, 0)};
    if (idempotent_only) {
        for (int a = 0; a < size; ++a) {
            base.values[a * step] = static_cast<std::uint8_t>(a);
        }
    }
    std::vector<FiniteOp> out;
    out.reserve(count);
    // Odometer with the last free row most significant gives lexicographic order
    // when read from row 0 as the least significant digit; sort afterwards for a
    // plain lexicographic value order.
    while (true) {
        out.push_back(base);
        std::size_t pos = 0;
        while (pos < free_rows.size()) {
            auto& v = base.values[free_rows[pos]];
            if (++v < size) {
                break;
            }
            v = 0;
            ++pos;
        }
        if (pos == free_rows.size()) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const FiniteOp& x, const FiniteOp& y) { return x.values < y.values; });
    return out;
}

}  // namespace

std::vector<FiniteMultiOp> pol_enumerate(const Signature& sig, std::span<const TypedRelation> relations,
                                         const PolOptions& options) {
    for (const auto& r : relations) {
        validate(sig, r);
    }
    const int k = sig.sort_count();
    if (k == 0) {
        return {FiniteMultiOp{}};
    }
    const int n = options.arity;
    if (n < 1) {
        throw InputError("arity must be positive");
    }

    // Per-sort candidates filtered by single-sort relations.
    std::vector<std::vector<FiniteOp>> candidates(k);
    std::vector<std::vector<std::size_t>> multi_sort_relations_of(k);
    std::vector<std::vector<int>> adjacency(k);
    for (int s = 0; s < k; ++s) {
        candidates[s] = all_tables(sig.carrier_size(s), n, options.idempotent_only, options.budget);
    }
    std::vector<std::size_t> multi;
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& rel = relations[r];
        std::set<int> sorts(rel.type.begin(), rel.type.end());
        if (sorts.size() == 1) {
            const int s = *sorts.begin();
            Signature single{{sig.carriers[s]}};
            TypedRelation local = rel;
            std::fill(local.type.begin(), local.type.end(), 0);
            std::erase_if(candidates[s], [&](const FiniteOp& f) {
                return !preserves(FiniteMultiOp{f}, local, single);
            });
        } else {
            multi.push_back(r);
            for (int a : sorts) {
                for (int b : sorts) {
                    if (a != b) {
                        adjacency[a].push_back(b);
                    }
                }
            }
        }
    }

    // Sorts ordered along the relation graph (BFS from the lowest unvisited index).
    std::vector<int> order;
    std::vector<bool> seen(k, false);
    for (int root = 0; root < k; ++root) {
        if (seen[root]) {
            continue;
        }
        std::queue<int> q;
        q.push(root);
        seen[root] = true;
        while (!q.empty()) {
            const int s = q.front();
            q.pop();
            order.push_back(s);
            std::sort(adjacency[s].begin(), adjacency[s].end());
            for (int t : adjacency[s]) {
                if (!seen[t]) {
                    seen[t] = true;
                    q.push(t);
                }
            }
        }
    }
    std::vector<int> position(k);
    for (int i = 0; i < k; ++i) {
        position[order[i]] = i;
    }
    std::vector<std::vector<std::size_t>> check_at(k);
    for (std::size_t r : multi) {
        int last = 0;
        for (int s : relations[r].type) {
            last = std::max(last, position[s]);
        }
        check_at[last].push_back(r);
    }

    std::vector<FiniteMultiOp> out;
    FiniteMultiOp current(k);
    std::size_t nodes = 0;
    auto recurse = [&](auto&& self, int level) -> void {
        if (level == k) {
            out.push_back(current);
            return;
        }
        const int s = order[level];
        for (const auto& cand : candidates[s]) {
            if (++nodes > options.budget) {
                throw BudgetError("polymorphism search exceeded its node budget");
            }
            current[s] = cand;
            bool ok = true;
            for (std::size_t r : check_at[level]) {
                // only sorts at positions <= level are read
                if (!preserves_impl(relations[r], n, [&](int j, const std::vector<int>& column) {
                        return current[relations[r].type[j]].at(column);
                    })) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                self(self, level + 1);
            }
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiOp> pol_enumerate_boolean(int sorts, std::span<const TypedRelation> relations,
                                           const PolOptions& options) {
    std::vector<MultiOp> out;
    for (const auto& op : pol_enumerate(Signature::boolean(sorts), relations, options)) {
        out.push_back(to_boolean(op));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

FiniteMultiOp compose_unary(const FiniteMultiOp& outer, const FiniteMultiOp& inner) {
    FiniteMultiOp out = inner;
    for (std::size_t s = 0; s < out.size(); ++s) {
        for (auto& v : out[s].values) {
            v = outer[s].values[v];
        }
    }
    return out;
}

std::size_t image_size_sum(const FiniteMultiOp& u) {
    std::size_t total = 0;
    for (const auto& c : u) {
        total += std::set<std::uint8_t>(c.values.begin(), c.values.end()).size();
    }
    return total;
}

}  // namespace

IdempotentCore idempotent_core(const Signature& sig, std::span<const TypedRelation> relations,
                               std::size_t budget) {
    std::vector<TypedRelation> rels;
    for (const auto& r : relations) {
        validate(sig, r);
        if (!r.tuples.empty()) {
            rels.push_back(r);
        }
    }
    IdempotentCore result;
    const int k = sig.sort_count();
    if (k == 0) {
        result.trivial = true;
        return result;
    }

    const auto unary = pol_enumerate(sig, rels, PolOptions{1, false, budget});
    // Minimal image first, ties by lexicographic table order (pol_enumerate output is sorted).
    const FiniteMultiOp* best = nullptr;
    std::size_t best_size = 0;
    for (const auto& u : unary) {
        const std::size_t s = image_size_sum(u);
        if (best == nullptr || s < best_size) {
            best = &u;
            best_size = s;
        }
    }
    // Some power of a unary map on a finite set is idempotent.
    FiniteMultiOp e = *best;
    while (compose_unary(e, e) != e) {
        e = compose_unary(*best, e);
    }
    result.retraction = e;

    // Image carriers with positions renumbered in increasing order.
    std::vector<std::vector<int>> new_position(k);
    std::vector<std::vector<int>> image_carriers(k);
    for (int s = 0; s < k; ++s) {
        new_position[s].assign(sig.carrier_size(s), -1);
        std::set<std::uint8_t> image(e[s].values.begin(), e[s].values.end());
        int next = 0;
        for (auto v : image) {
            new_position[s][v] = next++;
            image_carriers[s].push_back(sig.carriers[s][v]);
        }
    }
    std::vector<TypedRelation> image_rels;
    for (const auto& r : rels) {
        std::vector<std::vector<int>> tuples;
        for (const auto& t : r.tuples) {
            std::vector<int> mapped(t.size());
            for (std::size_t j = 0; j < t.size(); ++j) {
                const int s = r.type[j];
                mapped[j] = new_position[s][e[s].values[t[j]]];
            }
            tuples.push_back(std::move(mapped));
        }
        image_rels.push_back(TypedRelation::make(r.type, std::move(tuples)));
    }
    for (int s = 0; s < k; ++s) {
        for (int b = 0; b < static_cast<int>(image_carriers[s].size()); ++b) {
            image_rels.push_back(TypedRelation::make({s}, {{b}}));
        }
    }

    // Drop singleton sorts together with the coordinates they type.
    std::vector<int> renumber(k, -1);
    for (int s = 0; s < k; ++s) {
        if (image_carriers[s].size() > 1) {
            renumber[s] = static_cast<int>(result.source_sort.size());
            result.source_sort.push_back(s);
            result.signature.carriers.push_back(image_carriers[s]);
        }
    }
    if (result.source_sort.empty()) {
        result.trivial = true;
        return result;
    }
    std::set<TypedRelation> kept;
    for (const auto& r : image_rels) {
        std::vector<int> coords;
        std::vector<int> type;
        for (int j = 0; j < r.arity(); ++j) {
            if (renumber[r.type[j]] >= 0) {
                coords.push_back(j);
                type.push_back(renumber[r.type[j]]);
            }
        }
        if (coords.empty()) {
            continue;
        }
        std::vector<std::vector<int>> tuples;
        for (const auto& t : r.tuples) {
            std::vector<int> projected;
            for (int j : coords) {
                projected.push_back(t[j]);
            }
            tuples.push_back(std::move(projected));
        }
        kept.insert(TypedRelation::make(std::move(type), std::move(tuples)));
    }
    result.relations.assign(kept.begin(), kept.end());
    return result;
}

}  // namespace minioncore
