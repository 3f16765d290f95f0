#include "minioncore/canon.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

#include "minioncore/errors.hpp"

namespace minioncore {

CoreId CoreId::make(CoreTag tag, int k) {
    const bool indexed = tag == CoreTag::A || tag == CoreTag::B || tag == CoreTag::C || tag == CoreTag::D;
    if (!indexed) {
        return {tag, 0};
    }
    if (k < 1) {
        throw InputError("canonical minion index must be positive");
    }
    if (tag == CoreTag::C && k == 1) {
        return {CoreTag::D, 1};
    }
    return {tag, k};
}

CoreId CoreId::parse(const std::string& text) {
    if (text == "T") {
        return make(CoreTag::T);
    }
    if (text == "Binf") {
        return make(CoreTag::Binf);
    }
    if (text == "Cinf") {
        return make(CoreTag::Cinf);
    }
    if (text == "Dinf") {
        return make(CoreTag::Dinf);
    }
    if (text.size() >= 2 && std::string("ABCD").find(text[0]) != std::string::npos &&
        std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; }) && text.size() < 8) {
        const CoreTag tags[] = {CoreTag::A, CoreTag::B, CoreTag::C, CoreTag::D};
        return make(tags[text[0] - 'A'], std::stoi(text.substr(1)));
    }
    throw InputError("unknown canonical minion '" + text + "'");
}

int CoreId::sorts() const {
    switch (tag) {
        case CoreTag::T:
            return 0;
        case CoreTag::Binf:
        case CoreTag::Dinf:
            return 1;
        case CoreTag::Cinf:
            return 2;
        default:
            return k;
    }
}

std::string to_string(const CoreId& c) {
    switch (c.tag) {
        case CoreTag::T:
            return "T";
        case CoreTag::A:
            return "A" + std::to_string(c.k);
        case CoreTag::B:
            return "B" + std::to_string(c.k);
        case CoreTag::C:
            return "C" + std::to_string(c.k);
        case CoreTag::D:
            return "D" + std::to_string(c.k);
        case CoreTag::Binf:
            return "Binf";
        case CoreTag::Cinf:
            return "Cinf";
        case CoreTag::Dinf:
            return "Dinf";
    }
    return {};
}

std::vector<CoreId> all_cores(int max_k) {
    std::vector<CoreId> out{CoreId::make(CoreTag::T)};
    for (int k = 1; k <= max_k; ++k) {
        out.push_back(CoreId::make(CoreTag::A, k));
        out.push_back(CoreId::make(CoreTag::B, k));
    }
    out.push_back(CoreId::make(CoreTag::Binf));
    for (int k = 1; k <= max_k; ++k) {
        if (k >= 2) {
            out.push_back(CoreId::make(CoreTag::C, k));
        }
        out.push_back(CoreId::make(CoreTag::D, k));
    }
    out.push_back(CoreId::make(CoreTag::Cinf));
    out.push_back(CoreId::make(CoreTag::Dinf));
    return out;
}

namespace {

Atom tri(int a, bool ad, int b, bool bd) { return {Relation::Triangle, {a, ad}, {b, bd}}; }
Atom leq_atom(int a, bool ad, int b, bool bd) { return {Relation::Leq, {a, ad}, {b, bd}}; }
Atom eq(int a, bool ad, int b, bool bd) { return {Relation::Eq, {a, ad}, {b, bd}}; }

}  // namespace

std::vector<Atom> core_atoms(const CoreId& c) {
    std::vector<Atom> out;
    const int k = c.k;
    switch (c.tag) {
        case CoreTag::T:
            break;
        case CoreTag::A:
        case CoreTag::B:
        case CoreTag::D:
            for (int i = 0; i + 1 < k; ++i) {
                out.push_back(tri(i, false, i + 1, false));
            }
            if (c.tag == CoreTag::A) {
                out.push_back(leq_atom(k - 1, false, k - 1, true));
            } else if (c.tag == CoreTag::B) {
                out.push_back(tri(k - 1, false, k - 1, true));
            } else {
                out.push_back(eq(k - 1, false, k - 1, true));
            }
            break;
        case CoreTag::C:
            for (int i = 0; i + 2 < k; ++i) {
                out.push_back(tri(i, false, i + 1, false));
            }
            out.push_back(leq_atom(k - 2, false, k - 1, false));
            out.push_back(eq(k - 1, false, k - 1, true));
            out.push_back(tri(k - 2, false, k - 2, true));
            break;
        case CoreTag::Binf:
            out = {tri(0, false, 0, false), tri(0, false, 0, true)};
            break;
        case CoreTag::Cinf:
            out = {tri(0, false, 0, false), tri(0, false, 1, false), eq(1, false, 1, true)};
            break;
        case CoreTag::Dinf:
            out = {tri(0, false, 0, false), eq(0, false, 0, true)};
            break;
    }
    return out;
}

bool membership(const CoreId& c, const MultiOp& op) {
    if (static_cast<int>(op.size()) != c.sorts()) {
        throw InputError(to_string(c) + " has " + std::to_string(c.sorts()) + " sorts, operation has " +
                         std::to_string(op.size()));
    }
    return is_idempotent(op) && satisfies_all(core_atoms(c), op);
}

std::vector<MultiOp> core_enumerate(const CoreId& c, const EnumOptions& options) {
    if (c.tag == CoreTag::T) {
        return {MultiOp{}};
    }
    return all_solutions(c.sorts(), core_atoms(c), options);
}

std::vector<MultiOp> binary_part(const CoreId& c) {
    return core_enumerate(c, EnumOptions{});
}

namespace {

MultiOp from_profiles(const std::vector<std::array<bool, 4>>& columns) {
    MultiOp out;
    for (const auto& a : columns) {
        out.push_back(sym5_from_profile(Sym5Profile{a}));
    }
    return out;
}

}  // namespace

ChainOps chain_ops(int k) {
    if (k < 1) {
        throw InputError("chain operations need k >= 1");
    }
    using P = std::array<bool, 4>;
    const P zero{false, false, false, false};
    ChainOps out;
    for (int i = 1; i <= k; ++i) {
        std::vector<P> cols;
        for (int j = 1; j <= k; ++j) {
            cols.push_back(P{false, false, j > i - 1, j > i});
        }
        if (i == k) {
            std::fill(cols.begin(), cols.end(), zero);
            cols[k - 1] = P{false, false, true, false};
        }
        out.t.push_back(from_profiles(cols));
    }
    std::vector<P> cols(static_cast<std::size_t>(k), zero);
    if (k >= 2) {
        cols[k - 2] = P{false, false, true, false};
        cols[k - 1] = P{true, false, true, false};
        out.u = from_profiles(cols);
        cols[k - 2] = zero;
    }
    cols[k - 1] = P{true, false, true, false};
    out.v = from_profiles(cols);
    cols[k - 1] = P{false, true, false, true};
    out.w = from_profiles(cols);
    return out;
}

MultiOp cinf_t() {
    return from_profiles({{false, false, false, false}, {false, true, false, true}});
}

MultiOp cinf_t_prime() {
    return from_profiles({{false, false, false, false}, {true, false, true, false}});
}

std::vector<Identity> identity_suite(SuiteKind kind, int k) {
    if (k < 1) {
        throw InputError("identity suites need k >= 1");
    }
    const std::vector<int> xxxyy{0, 0, 0, 1, 1}, xxxxy{0, 0, 0, 0, 1}, yyyyx{1, 1, 1, 1, 0}, xxyyy{0, 0, 1, 1, 1};
    std::vector<Identity> out;
    switch (kind) {
        case SuiteKind::Chain:
            out.push_back({0, xxxyy, -1, {0}, 2});
            for (int i = 0; i + 1 < k; ++i) {
                out.push_back({i + 1, xxxyy, i, xxxxy, 2});
            }
            break;
        case SuiteKind::AB:
            out.push_back({k - 1, xxxxy, k - 1, yyyyx, 2});
            break;
        case SuiteKind::CD:
            out.push_back({k - 1, xxxxy, k - 1, xxyyy, 2});
            break;
        case SuiteKind::Sym:
            // A transposition and a 5-cycle generate the symmetric group.
            for (int i = 0; i < k; ++i) {
                out.push_back({i, {0, 1, 2, 3, 4}, i, {1, 0, 2, 3, 4}, 5});
                out.push_back({i, {0, 1, 2, 3, 4}, i, {1, 2, 3, 4, 0}, 5});
            }
            break;
    }
    return out;
}

namespace {

MultiOp side(const std::vector<MultiOp>& ops, int op, const std::vector<int>& word, int variables, int sorts) {
    if (op < 0) {
        if (word.size() != 1) {
            throw InputError("a variable side has exactly one letter");
        }
        return multi_projection(sorts, variables, word[0]);
    }
    const MultiOp& f = ops.at(static_cast<std::size_t>(op));
    if (arity_of(f) != static_cast<int>(word.size())) {
        throw InputError("identity word length does not match the operation arity");
    }
    return multi_minor(f, word, variables);
}

}  // namespace

bool check_identity(const std::vector<MultiOp>& ops, const Identity& id) {
    if (ops.empty()) {
        throw InputError("no operations to check");
    }
    const int sorts = static_cast<int>(ops[0].size());
    return side(ops, id.lhs_op, id.lhs_word, id.variables, sorts) ==
           side(ops, id.rhs_op, id.rhs_word, id.variables, sorts);
}

bool check_identities(const std::vector<MultiOp>& ops, const std::vector<Identity>& suite) {
    return std::all_of(suite.begin(), suite.end(), [&](const Identity& id) { return check_identity(ops, id); });
}

std::string to_string(const Identity& id) {
    const char* letters2 = "xy";
    auto word = [&](int op, const std::vector<int>& w) {
        std::string s;
        for (int c : w) {
            s += id.variables == 2 ? std::string(1, letters2[c]) : "x" + std::to_string(c + 1);
        }
        return op < 0 ? s : "h" + std::to_string(op + 1) + "(" + s + ")";
    };
    return word(id.lhs_op, id.lhs_word) + " = " + word(id.rhs_op, id.rhs_word);
}

namespace {

constexpr long kInf = std::numeric_limits<int>::max();

bool in_ab(const CoreId& c) {
    return c.tag == CoreTag::T || c.tag == CoreTag::A || c.tag == CoreTag::B || c.tag == CoreTag::Binf;
}

// Position along its chain; a larger position is lower in the order.
long position(const CoreId& c) {
    switch (c.tag) {
        case CoreTag::T:
            return 0;
        case CoreTag::A:
            return 2L * c.k - 1;
        case CoreTag::B:
            return 2L * c.k;
        case CoreTag::Binf:
            return kInf;
        case CoreTag::D:
            return 2L * c.k - 1;
        case CoreTag::C:
            return 2L * c.k - 2;
        case CoreTag::Cinf:
            return kInf;
        case CoreTag::Dinf:
            return kInf + 1;
    }
    return 0;
}

}  // namespace

bool poset_leq(const CoreId& a, const CoreId& b) {
    if (b.tag == CoreTag::T) {
        return true;
    }
    if (a.tag == CoreTag::T) {
        return false;
    }
    if (in_ab(a) == in_ab(b)) {
        return position(a) >= position(b);
    }
    if (in_ab(a)) {
        return false;
    }
    // a on the CD side, b on the AB side.
    if (a.tag == CoreTag::Cinf || a.tag == CoreTag::Dinf) {
        return true;
    }
    if (b.tag == CoreTag::Binf) {
        return false;
    }
    if (a.tag == CoreTag::D) {
        return b.tag == CoreTag::A ? b.k <= a.k : b.k <= a.k - 1;
    }
    return b.k <= a.k - 1;
}

std::vector<std::pair<CoreId, CoreId>> poset_covers(int max_k) {
    const auto cores = all_cores(max_k);
    std::vector<std::pair<CoreId, CoreId>> out;
    for (const auto& a : cores) {
        for (const auto& b : cores) {
            if (a == b || !poset_leq(a, b)) {
                continue;
            }
            const bool covered = std::any_of(cores.begin(), cores.end(), [&](const CoreId& c) {
                return c != a && c != b && poset_leq(a, c) && poset_leq(c, b);
            });
            if (!covered) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::string poset_dot(int max_k) {
    std::ostringstream out;
    out << "digraph minions {\n  rankdir=BT;\n";
    for (const auto& c : all_cores(max_k)) {
        out << "  \"" << to_string(c) << "\";\n";
    }
    for (const auto& [a, b] : poset_covers(max_k)) {
        out << "  \"" << to_string(a) << "\" -> \"" << to_string(b) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

MultiOp CoreHom::apply(const MultiOp& op) const {
    if (static_cast<int>(op.size()) != from.sorts()) {
        throw InputError("operation does not belong to " + to_string(from));
    }
    MultiOp out;
    for (int c : component) {
        out.push_back(op.at(static_cast<std::size_t>(c)));
    }
    return out;
}

namespace {

std::vector<int> iota(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[i] = i;
    }
    return v;
}

std::vector<CoreHom> generators(int max_k) {
    using T = CoreTag;
    std::vector<CoreHom> out;
    auto add = [&](CoreId a, CoreId b, std::vector<int> comp) { out.push_back({a, b, std::move(comp)}); };
    add(CoreId::make(T::Dinf), CoreId::make(T::Cinf), {0, 0});
    add(CoreId::make(T::Cinf), CoreId::make(T::Binf), {0});
    add(CoreId::make(T::A, 1), CoreId::make(T::T), {});
    for (int k = 1; k <= max_k; ++k) {
        const CoreId a = CoreId::make(T::A, k), b = CoreId::make(T::B, k), d = CoreId::make(T::D, k);
        add(CoreId::make(T::Binf), b, std::vector<int>(static_cast<std::size_t>(k), 0));
        add(b, a, iota(k));
        add(d, a, iota(k));
        if (k >= 2) {
            const CoreId c = CoreId::make(T::C, k);
            std::vector<int> comp(static_cast<std::size_t>(k - 1), 0);
            comp.push_back(1);
            add(CoreId::make(T::Cinf), c, comp);
            add(d, c, iota(k));
        }
        if (k + 1 <= max_k) {
            const CoreId c1 = CoreId::make(T::C, k + 1);
            add(CoreId::make(T::A, k + 1), b, iota(k));
            add(c1, b, iota(k));
            std::vector<int> comp = iota(k - 1);
            comp.push_back(k);
            add(c1, d, comp);
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<CoreId, CoreId>> table1_edges(int max_k) {
    std::vector<std::pair<CoreId, CoreId>> out;
    for (const auto& g : generators(max_k)) {
        out.emplace_back(g.from, g.to);
    }
    return out;
}

CoreHom table1_hom(const CoreId& a, const CoreId& b) {
    if (!poset_leq(a, b)) {
        throw InputError("no homomorphism " + to_string(a) + " -> " + to_string(b));
    }
    const int max_k = std::max(a.k, b.k) + 1;
    const auto gens = generators(max_k);
    // Breadth-first search over generator edges, composing as we go.
    std::map<CoreId, CoreHom> reached{{a, CoreHom{a, a, iota(a.sorts())}}};
    std::deque<CoreId> queue{a};
    while (!queue.empty()) {
        const CoreId c = queue.front();
        queue.pop_front();
        if (c == b) {
            return reached.at(c);
        }
        for (const auto& g : gens) {
            if (g.from != c || reached.count(g.to)) {
                continue;
            }
            const CoreHom& prev = reached.at(c);
            CoreHom next{a, g.to, {}};
            for (int i : g.component) {
                next.component.push_back(prev.component.at(static_cast<std::size_t>(i)));
            }
            reached.emplace(g.to, next);
            queue.push_back(g.to);
        }
    }
    throw InternalError("no generator path " + to_string(a) + " -> " + to_string(b));
}

}  // namespace minioncore
