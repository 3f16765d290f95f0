#include "minioncore/mincore.hpp"

#include <algorithm>
#include <set>

#include "minioncore/errors.hpp"

namespace minioncore {

TruncatedMinion::TruncatedMinion(int sorts, std::vector<std::vector<MultiOp>> elements, std::vector<MultiOp> witnesses,
                                 std::optional<std::vector<Atom>> atoms)
    : sorts_(sorts), elements_(std::move(elements)), witnesses_(std::move(witnesses)), atoms_(std::move(atoms)) {
    if (sorts_ < 0 || elements_.empty()) {
        throw InputError("a truncated minion needs a nonnegative sort count and cap >= 1");
    }
    for (std::size_t n = 0; n < elements_.size(); ++n) {
        auto& level = elements_[n];
        if (level.empty()) {
            throw InputError("minion has no members of arity " + std::to_string(n + 1));
        }
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        std::unordered_map<MultiOp, int, MultiOpHash> idx;
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (static_cast<int>(level[i].size()) != sorts_ ||
                (sorts_ > 0 && arity_of(level[i]) != static_cast<int>(n + 1))) {
                throw InputError("member of the wrong shape at arity " + std::to_string(n + 1));
            }
            idx.emplace(level[i], static_cast<int>(i));
        }
        index_.push_back(std::move(idx));
    }
}

int TruncatedMinion::find(int arity, const MultiOp& op) const {
    if (arity < 1 || arity > cap()) {
        return -1;
    }
    const auto& idx = index_[static_cast<std::size_t>(arity - 1)];
    const auto it = idx.find(op);
    return it == idx.end() ? -1 : it->second;
}

bool TruncatedMinion::contains(int arity, const MultiOp& op) const {
    if (arity <= cap()) {
        return find(arity, op) >= 0;
    }
    if (!atoms_ || static_cast<int>(op.size()) != sorts_) {
        return false;
    }
    for (const auto& c : op) {
        if (c.arity() != arity) {
            return false;
        }
    }
    return is_idempotent(op) && satisfies_all(*atoms_, op);
}

std::vector<std::vector<int>> all_maps(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(cur);
        int j = n - 1;
        while (j >= 0 && cur[j] == m - 1) {
            cur[j] = 0;
            --j;
        }
        if (j < 0) {
            break;
        }
        ++cur[j];
    }
    return out;
}

namespace {

// Every map [n] -> [m] is a composite of these within the cap.
std::vector<MinorGenerator> minor_specs(int n, int cap) {
    std::vector<MinorGenerator> out;
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        id[j] = j;
    }
    if (n >= 2) {
        auto swap = id;
        std::swap(swap[0], swap[1]);
        out.push_back({n, swap});
        auto merge = id;
        merge[n - 1] = n - 2;
        out.push_back({n - 1, merge});
    }
    if (n >= 3) {
        std::vector<int> cycle(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            cycle[j] = (j + 1) % n;
        }
        out.push_back({n, cycle});
    }
    if (n + 1 <= cap) {
        out.push_back({n + 1, id});
    }
    return out;
}

// table[n-1][e][s]: index of the s-th minor of M^(n)[e]. Throws InputError on
// a minor outside the minion.
std::vector<std::vector<std::vector<int>>> minor_table(const TruncatedMinion& M) {
    std::vector<std::vector<std::vector<int>>> out;
    for (int n = 1; n <= M.cap(); ++n) {
        const auto specs = minor_specs(n, M.cap());
        std::vector<std::vector<int>> level;
        for (const auto& f : M.at(n)) {
            std::vector<int> row;
            row.reserve(specs.size());
            for (const auto& s : specs) {
                const int i = M.find(s.target, multi_minor(f, s.alpha, s.target));
                if (i < 0) {
                    throw InputError("minion is not closed under a minor from arity " + std::to_string(n) +
                                     " to " + std::to_string(s.target));
                }
                row.push_back(i);
            }
            level.push_back(std::move(row));
        }
        out.push_back(std::move(level));
    }
    return out;
}

// Binary-minor indices of f: entry a is the index of f^(alpha_a) in M^(2),
// where alpha_a sends coordinate j to variable a_j.
std::vector<int> binary_signature(const TruncatedMinion& M, const MultiOp& f, int n) {
    std::vector<int> sig(std::size_t{1} << n);
    std::vector<int> alpha(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < sig.size(); ++a) {
        for (int j = 0; j < n; ++j) {
            alpha[j] = static_cast<int>((a >> j) & 1U);
        }
        sig[a] = M.find(2, multi_minor(f, alpha, 2));
        if (sig[a] < 0) {
            throw InputError("a binary minor lies outside the minion");
        }
    }
    return sig;
}

struct Signatures {
    std::vector<std::vector<std::vector<int>>> elements;  // [n-1][e]
    std::vector<std::vector<int>> witnesses;
};

Signatures signatures(const TruncatedMinion& M) {
    Signatures out;
    for (int n = 1; n <= M.cap(); ++n) {
        std::vector<std::vector<int>> level;
        for (const auto& f : M.at(n)) {
            level.push_back(binary_signature(M, f, n));
        }
        out.elements.push_back(std::move(level));
    }
    for (const auto& w : M.witnesses()) {
        out.witnesses.push_back(binary_signature(M, w, 5));
    }
    return out;
}

// The image read off binary minors: sort i at input a is xi2(f^(alpha_a))_i(0,1).
MultiOp assemble(const TruncatedMinion& N, const std::vector<int>& xi2, const std::vector<int>& sig, int n) {
    MultiOp out;
    const auto& N2 = N.at(2);
    for (int i = 0; i < N.sorts(); ++i) {
        std::uint64_t bits = 0;
        for (std::size_t a = 0; a < sig.size(); ++a) {
            if (N2[xi2[sig[a]]][i][2]) {
                bits |= std::uint64_t{1} << a;
            }
        }
        out.emplace_back(n, bits);
    }
    return out;
}

std::string element_name(const MultiOp& op) {
    std::string s = "(";
    for (std::size_t i = 0; i < op.size(); ++i) {
        s += (i ? "," : "") + to_hex(op[i]);
    }
    return s + ")";
}

ExtensionResult extend(const TruncatedMinion& M, const TruncatedMinion& N, const std::vector<int>& xi2,
                       const Signatures& sigs) {
    ExtensionResult r;
    TruncatedHom hom;
    for (std::size_t w = 0; w < M.witnesses().size(); ++w) {
        MultiOp img = assemble(N, xi2, sigs.witnesses[w], 5);
        if (!N.contains(5, img)) {
            r.failure = "witness " + element_name(M.witnesses()[w]) + " maps outside the target";
            return r;
        }
        hom.witness_images.push_back(std::move(img));
    }
    hom.map.resize(static_cast<std::size_t>(M.cap()));
    // Arity 2 first: the extension must reproduce xi2 itself.
    std::vector<int> order{2};
    for (int n = 1; n <= M.cap(); ++n) {
        if (n != 2) {
            order.push_back(n);
        }
    }
    for (int n : order) {
        if (n > M.cap()) {
            continue;
        }
        auto& level = hom.map[static_cast<std::size_t>(n - 1)];
        for (std::size_t e = 0; e < M.size(n); ++e) {
            const int i = N.find(n, assemble(N, xi2, sigs.elements[n - 1][e], n));
            if (i < 0) {
                r.failure = "member " + element_name(M.at(n)[e]) + " maps outside the target";
                return r;
            }
            if (n == 2 && i != xi2[e]) {
                r.failure = "binary map does not commute with binary minors at " + element_name(M.at(2)[e]);
                return r;
            }
            level.push_back(i);
        }
    }
    r.hom = std::move(hom);
    return r;
}

// Minor commutation for an index map, using both minor tables.
std::optional<std::string> commutation_failure(const TruncatedMinion& M, const TruncatedMinion& N,
                                               const TruncatedHom& hom,
                                               const std::vector<std::vector<std::vector<int>>>& tm,
                                               const std::vector<std::vector<std::vector<int>>>& tn) {
    for (int n = 1; n <= M.cap(); ++n) {
        const auto specs = minor_specs(n, M.cap());
        for (std::size_t e = 0; e < M.size(n); ++e) {
            const int img = hom.map[n - 1][e];
            for (std::size_t s = 0; s < specs.size(); ++s) {
                const int m = specs[s].target;
                if (hom.map[m - 1][tm[n - 1][e][s]] != tn[n - 1][img][s]) {
                    return "image of " + element_name(M.at(n)[e]) + " does not commute with a minor into arity " +
                           std::to_string(m);
                }
            }
        }
    }
    for (std::size_t w = 0; w < M.witnesses().size(); ++w) {
        for (const auto& alpha : all_maps(5, 2)) {
            const int src = M.find(2, multi_minor(M.witnesses()[w], alpha, 2));
            if (src < 0 || N.at(2)[hom.map[1][src]] != multi_minor(hom.witness_images[w], alpha, 2)) {
                return "witness image does not commute with a binary minor";
            }
        }
    }
    return std::nullopt;
}

void require_compatible(const TruncatedMinion& M, const TruncatedMinion& N) {
    if (M.cap() != N.cap()) {
        throw InputError("minions are truncated at different caps");
    }
    if (M.cap() < 2) {
        throw InputError("homomorphism search needs cap >= 2");
    }
}

}  // namespace

TruncatedMinion from_function_minion(int sorts, std::vector<std::vector<MultiOp>> elements) {
    TruncatedMinion M(sorts, std::move(elements));
    minor_table(M);
    return M;
}

TruncatedMinion from_atoms(int sorts, const std::vector<Atom>& atoms, const MinionOptions& options) {
    if (options.cap < 1 || options.cap > 4) {
        throw InputError("truncation cap must lie in 1..4");
    }
    EnumOptions eo;
    eo.budget = options.budget;
    std::vector<std::vector<MultiOp>> elements;
    for (int n = 1; n <= options.cap; ++n) {
        eo.arity = n;
        elements.push_back(all_solutions(sorts, atoms, eo));
    }
    std::vector<MultiOp> witnesses;
    if (options.witnesses) {
        eo.arity = 5;
        eo.mode = EnumMode::Symmetric5;
        witnesses = all_solutions(sorts, atoms, eo);
    }
    return TruncatedMinion(sorts, std::move(elements), std::move(witnesses), atoms);
}

TruncatedMinion from_core(const CoreId& core, const MinionOptions& options) {
    if (core.tag == CoreTag::T) {
        std::vector<std::vector<MultiOp>> elements(static_cast<std::size_t>(options.cap), {MultiOp{}});
        std::vector<MultiOp> witnesses;
        if (options.witnesses) {
            witnesses.push_back(MultiOp{});
        }
        return TruncatedMinion(0, std::move(elements), std::move(witnesses), std::vector<Atom>{});
    }
    return from_atoms(core.sorts(), core_atoms(core), options);
}

TruncatedMinion idempotent_minion(int sorts, const MinionOptions& options) {
    return from_atoms(sorts, {}, options);
}

std::optional<std::string> check_hom(const TruncatedMinion& M, const TruncatedMinion& N,
                                     const std::function<MultiOp(const MultiOp&)>& f) {
    if (M.cap() != N.cap()) {
        throw InputError("minions are truncated at different caps");
    }
    TruncatedHom hom;
    for (int n = 1; n <= M.cap(); ++n) {
        std::vector<int> level;
        for (const auto& op : M.at(n)) {
            const int i = N.find(n, f(op));
            if (i < 0) {
                return "member " + element_name(op) + " maps outside the target";
            }
            level.push_back(i);
        }
        hom.map.push_back(std::move(level));
    }
    for (const auto& w : M.witnesses()) {
        MultiOp img = f(w);
        if (!N.contains(5, img)) {
            return "witness " + element_name(w) + " maps outside the target";
        }
        hom.witness_images.push_back(std::move(img));
    }
    if (M.cap() < 2 && !M.witnesses().empty()) {
        throw InputError("witness checks need cap >= 2");
    }
    return commutation_failure(M, N, hom, minor_table(M), minor_table(N));
}

namespace {

struct StreamStop {
    std::string what;
};

bool member_of(int sorts, const std::vector<Atom>& atoms, int arity, const MultiOp& op) {
    if (static_cast<int>(op.size()) != sorts) {
        return false;
    }
    for (const auto& c : op) {
        if (c.arity() != arity) {
            return false;
        }
    }
    return is_idempotent(op) && satisfies_all(atoms, op);
}

}  // namespace

StreamReport check_hom_stream(int sorts, const std::vector<Atom>& source, int target_sorts,
                              const std::vector<Atom>& target, const std::function<MultiOp(const MultiOp&)>& f,
                              const MinionOptions& options) {
    if (sorts < 1) {
        throw InputError("streamed checks need a source with at least one sort");
    }
    if (options.cap < 2 || options.cap > 4) {
        throw InputError("truncation cap must lie in 2..4");
    }
    StreamReport rep;
    EnumOptions eo;
    eo.budget = options.budget;
    try {
        for (int n = 1; n <= options.cap; ++n) {
            eo.arity = n;
            std::vector<MinorMap> maps;
            for (const auto& s : minor_specs(n, options.cap)) {
                maps.emplace_back(s.alpha, s.target);
            }
            std::size_t count = 0;
            MultiOp minor_op, minor_img;
            auto apply = [](const MultiOp& op, const MinorMap& m, MultiOp& out) {
                out.resize(op.size());
                for (std::size_t i = 0; i < op.size(); ++i) {
                    out[i] = m(op[i]);
                }
                return std::cref(out);
            };
            for_each_solution(sorts, source, eo, [&](const MultiOp& op) {
                ++count;
                const MultiOp img = f(op);
                if (!member_of(target_sorts, target, n, img)) {
                    throw StreamStop{"member " + element_name(op) + " maps outside the target"};
                }
                for (const auto& m : maps) {
                    if (f(apply(op, m, minor_op)) != apply(img, m, minor_img).get()) {
                        throw StreamStop{"image of " + element_name(op) +
                                         " does not commute with a minor into arity " +
                                         std::to_string(m.target_arity())};
                    }
                }
            });
            rep.members.push_back(count);
        }
        if (options.witnesses) {
            eo.arity = 5;
            eo.mode = EnumMode::Symmetric5;
            std::vector<MinorMap> binary;
            for (const auto& alpha : all_maps(5, 2)) {
                binary.emplace_back(alpha, 2);
            }
            for_each_solution(sorts, source, eo, [&](const MultiOp& w) {
                ++rep.witnesses;
                const MultiOp img = f(w);
                if (!member_of(target_sorts, target, 5, img)) {
                    throw StreamStop{"witness " + element_name(w) + " maps outside the target"};
                }
                for (const auto& m : binary) {
                    if (f(multi_minor(w, m)) != multi_minor(img, m)) {
                        throw StreamStop{"witness image does not commute with a binary minor"};
                    }
                }
            });
        }
    } catch (const StreamStop& stop) {
        rep.failure = stop.what;
    }
    return rep;
}

std::optional<TruncatedHom> hom_from_function(const TruncatedMinion& M, const TruncatedMinion& N,
                                              const std::function<MultiOp(const MultiOp&)>& f) {
    if (check_hom(M, N, f)) {
        return std::nullopt;
    }
    TruncatedHom hom;
    for (int n = 1; n <= M.cap(); ++n) {
        std::vector<int> level;
        for (const auto& op : M.at(n)) {
            level.push_back(N.find(n, f(op)));
        }
        hom.map.push_back(std::move(level));
    }
    for (const auto& w : M.witnesses()) {
        hom.witness_images.push_back(f(w));
    }
    return hom;
}

ExtensionResult extend_binary_map(const TruncatedMinion& M, const TruncatedMinion& N, const std::vector<int>& xi2) {
    require_compatible(M, N);
    if (xi2.size() != M.size(2)) {
        throw InputError("binary map has the wrong length");
    }
    for (int v : xi2) {
        if (v < 0 || v >= static_cast<int>(N.size(2))) {
            throw InputError("binary map image out of range");
        }
    }
    auto r = extend(M, N, xi2, signatures(M));
    if (r.hom) {
        if (auto fail = commutation_failure(M, N, *r.hom, minor_table(M), minor_table(N))) {
            r.failure = *fail;
            r.hom.reset();
        }
    }
    return r;
}

namespace {

// Calls visit on every valid hom in canonical candidate order until it
// returns false.
void search(const TruncatedMinion& M, const TruncatedMinion& N, const SearchOptions& options,
            const std::function<bool(TruncatedHom)>& visit) {
    require_compatible(M, N);
    const auto& M2 = M.at(2);
    const auto& N2 = N.at(2);
    const std::vector<int> swap{1, 0};
    const int mx = M.find(2, multi_projection(M.sorts(), 2, 0));
    const int my = M.find(2, multi_projection(M.sorts(), 2, 1));
    const int nx = N.find(2, multi_projection(N.sorts(), 2, 0));
    const int ny = N.find(2, multi_projection(N.sorts(), 2, 1));
    if (mx < 0 || my < 0 || nx < 0 || ny < 0) {
        throw InputError("homomorphism search needs idempotent minions containing the projections");
    }
    if (mx == my && nx != ny) {
        return;
    }
    auto swapped = [&](const TruncatedMinion& X, int i) {
        const int j = X.find(2, multi_minor(X.at(2)[i], swap, 2));
        if (j < 0) {
            throw InputError("binary part is not closed under swapping variables");
        }
        return j;
    };
    std::vector<int> n_swap(N2.size());
    std::vector<int> n_fixed;
    for (std::size_t i = 0; i < N2.size(); ++i) {
        n_swap[i] = swapped(N, static_cast<int>(i));
        if (n_swap[i] == static_cast<int>(i)) {
            n_fixed.push_back(static_cast<int>(i));
        }
    }
    std::vector<int> all_n(N2.size());
    for (std::size_t i = 0; i < N2.size(); ++i) {
        all_n[i] = static_cast<int>(i);
    }

    // Free binary members: one representative per swap orbit.
    struct Slot {
        int rep;
        int partner;
        const std::vector<int>* choices;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < M2.size(); ++i) {
        const int e = static_cast<int>(i);
        if (e == mx || e == my) {
            continue;
        }
        const int p = swapped(M, e);
        if (p < e) {
            continue;
        }
        slots.push_back({e, p, p == e ? &n_fixed : &all_n});
    }
    for (const auto& s : slots) {
        if (s.choices->empty()) {
            return;
        }
    }

    const Signatures sigs = signatures(M);
    std::optional<std::vector<std::vector<std::vector<int>>>> tm, tn;
    std::vector<int> xi2(M2.size(), -1);
    xi2[mx] = nx;
    xi2[my] = ny;
    std::vector<std::size_t> digit(slots.size(), 0);
    std::size_t candidates = 0;
    while (true) {
        if (++candidates > options.budget) {
            throw BudgetError("homomorphism search exceeded its budget of " + std::to_string(options.budget) +
                              " candidate maps");
        }
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const int v = (*slots[s].choices)[digit[s]];
            xi2[slots[s].rep] = v;
            xi2[slots[s].partner] = n_swap[v];
        }
        auto r = extend(M, N, xi2, sigs);
        if (r.hom) {
            if (options.check_minors) {
                if (!tm) {
                    tm = minor_table(M);
                    tn = minor_table(N);
                }
                if (auto fail = commutation_failure(M, N, *r.hom, *tm, *tn)) {
                    throw InternalError("extended binary map fails minor commutation: " + *fail);
                }
            }
            if (!visit(std::move(*r.hom))) {
                return;
            }
        }
        std::size_t s = slots.size();
        while (s > 0) {
            --s;
            if (++digit[s] < slots[s].choices->size()) {
                break;
            }
            digit[s] = 0;
            if (s == 0) {
                return;
            }
        }
        if (slots.empty()) {
            return;
        }
    }
}

}  // namespace

std::optional<TruncatedHom> hom_search(const TruncatedMinion& M, const TruncatedMinion& N,
                                       const SearchOptions& options) {
    std::optional<TruncatedHom> found;
    search(M, N, options, [&](TruncatedHom h) {
        found = std::move(h);
        return false;
    });
    return found;
}

std::vector<TruncatedHom> endo_enumerate(const TruncatedMinion& M, const SearchOptions& options) {
    std::vector<TruncatedHom> out;
    search(M, M, options, [&](TruncatedHom h) {
        out.push_back(std::move(h));
        return true;
    });
    return out;
}

bool is_core_truncated(const TruncatedMinion& M, const SearchOptions& options) {
    bool core = true;
    search(M, M, options, [&](TruncatedHom h) {
        const std::set<int> image(h.binary().begin(), h.binary().end());
        if (image.size() != h.binary().size()) {
            core = false;
            return false;
        }
        return true;
    });
    return core;
}

TruncatedMinion image_minion(const TruncatedMinion& N, const TruncatedHom& hom) {
    std::vector<std::vector<MultiOp>> elements;
    for (int n = 1; n <= N.cap(); ++n) {
        std::set<int> idx(hom.map[n - 1].begin(), hom.map[n - 1].end());
        std::vector<MultiOp> level;
        for (int i : idx) {
            level.push_back(N.at(n)[i]);
        }
        elements.push_back(std::move(level));
    }
    return TruncatedMinion(N.sorts(), std::move(elements));
}

TruncatedMinion compute_core_truncated(const TruncatedMinion& M, const SearchOptions& options) {
    std::vector<std::vector<MultiOp>> elements;
    for (int n = 1; n <= M.cap(); ++n) {
        elements.push_back(M.at(n));
    }
    TruncatedMinion cur(M.sorts(), std::move(elements));
    while (true) {
        std::vector<std::size_t> current_sizes;
        for (int n = 1; n <= cur.cap(); ++n) {
            current_sizes.push_back(cur.size(n));
        }
        std::optional<TruncatedHom> best;
        std::vector<std::size_t> best_sizes;
        search(cur, cur, options, [&](TruncatedHom h) {
            std::vector<std::size_t> sizes;
            for (const auto& level : h.map) {
                sizes.push_back(std::set<int>(level.begin(), level.end()).size());
            }
            if (!best || sizes < best_sizes) {
                best_sizes = sizes;
                best = std::move(h);
            }
            return true;
        });
        if (!best) {
            throw InternalError("the identity endomorphism was not found");
        }
        if (best_sizes == current_sizes) {
            return cur;
        }
        cur = image_minion(cur, *best);
    }
}

PointHom hom_from_point_map(const TruncatedMinion& M, const std::vector<int>& X, int l) {
    if (l < 1 || l > M.cap()) {
        throw InputError("point map arity must lie within the cap");
    }
    if (X.size() != M.size(l)) {
        throw InputError("point map must assign a point to every member of arity " + std::to_string(l));
    }
    for (int v : X) {
        if (v < 0 || v >= l) {
            throw InputError("point map values must lie in [l]");
        }
    }
    PointHom out{l, {}};
    for (int n = 1; n <= M.cap(); ++n) {
        const auto inputs = all_maps(n, l);
        std::vector<FiniteOp> level;
        for (const auto& f : M.at(n)) {
            FiniteOp g{l, n, std::vector<std::uint8_t>(power(static_cast<std::size_t>(l), n))};
            for (const auto& c : inputs) {
                std::size_t row = 0;
                for (int j = n - 1; j >= 0; --j) {
                    row = row * static_cast<std::size_t>(l) + static_cast<std::size_t>(c[j]);
                }
                const int i = M.find(l, multi_minor(f, c, l));
                if (i < 0) {
                    throw InputError("minion is not closed under minors into arity " + std::to_string(l));
                }
                g.values[row] = static_cast<std::uint8_t>(X[i]);
            }
            level.push_back(std::move(g));
        }
        out.images.push_back(std::move(level));
    }
    return out;
}

bool point_hom_commutes(const TruncatedMinion& M, const PointHom& hom) {
    for (int n = 1; n <= M.cap(); ++n) {
        const auto specs = minor_specs(n, M.cap());
        for (std::size_t e = 0; e < M.size(n); ++e) {
            for (const auto& s : specs) {
                const int i = M.find(s.target, multi_minor(M.at(n)[e], s.alpha, s.target));
                if (i < 0 || hom.images[s.target - 1][i] != finite_minor(hom.images[n - 1][e], s.alpha, s.target)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<MinorGenerator> minor_generators(int n, int cap) { return minor_specs(n, cap); }

}  // namespace minioncore
