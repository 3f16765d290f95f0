#include "minioncore/boolfun.hpp"

#include <bit>

#include "minioncore/errors.hpp"

namespace minioncore {

namespace {

// Bit j of the index is 0 exactly at the set positions.
constexpr std::array<std::uint64_t, 6> kZeroAt = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

void check_arity(int arity) {
    if (arity < 1 || arity > TruthTable::kMaxArity) {
        throw InputError("truth table arity " + std::to_string(arity) + " outside [1, 6]");
    }
}

void check_same_arity(const TruthTable& f, const TruthTable& g) {
    if (f.arity() != g.arity()) {
        throw InputError("arity mismatch: " + std::to_string(f.arity()) + " vs " +
                         std::to_string(g.arity()));
    }
}

std::uint64_t reverse64(std::uint64_t x) {
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
    return (x >> 32) | (x << 32);
}

std::uint64_t up_close(std::uint64_t bits, int arity) {
    for (int j = 0; j < arity; ++j) {
        bits |= (bits & kZeroAt[j]) << (1U << j);
    }
    return bits & TruthTable::full_mask(arity);
}

std::uint64_t down_close(std::uint64_t bits, int arity) {
    for (int j = 0; j < arity; ++j) {
        bits |= (bits & ~kZeroAt[j]) >> (1U << j);
    }
    return bits & TruthTable::full_mask(arity);
}

}  // namespace

std::uint64_t TruthTable::full_mask(int arity) {
    return arity >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1U << arity)) - 1);
}

TruthTable::TruthTable(int arity, std::uint64_t bits) : arity_(arity), bits_(bits) {
    check_arity(arity);
    if ((bits & ~full_mask(arity)) != 0) {
        throw InputError("truth table bits exceed 2^arity entries");
    }
}

TruthTable TruthTable::projection(int arity, int coordinate) {
    check_arity(arity);
    if (coordinate < 0 || coordinate >= arity) {
        throw InputError("projection coordinate out of range");
    }
    return {arity, ~kZeroAt[coordinate] & full_mask(arity)};
}

TruthTable TruthTable::meet_op(int arity) {
    check_arity(arity);
    return {arity, std::uint64_t{1} << ((1U << arity) - 1)};
}

TruthTable TruthTable::join_op(int arity) {
    check_arity(arity);
    return {arity, full_mask(arity) & ~std::uint64_t{1}};
}

TruthTable TruthTable::constant(int arity, bool value) {
    check_arity(arity);
    return {arity, value ? full_mask(arity) : 0};
}

bool TruthTable::eval(std::span<const int> input) const {
    if (static_cast<int>(input.size()) != arity_) {
        throw InputError("input length does not match arity");
    }
    std::uint32_t index = 0;
    for (std::size_t j = 0; j < input.size(); ++j) {
        if (input[j] != 0) {
            index |= 1U << j;
        }
    }
    return (*this)[index];
}

bool TruthTable::is_idempotent() const {
    return !(*this)[0] && (*this)[static_cast<std::uint32_t>(size() - 1)];
}

bool TruthTable::is_monotone() const { return up_close(bits_, arity_) == bits_; }

bool TruthTable::is_symmetric() const {
    // Invariance under adjacent transpositions generates the symmetric group.
    for (int j = 0; j + 1 < arity_; ++j) {
        std::vector<int> alpha(arity_);
        for (int i = 0; i < arity_; ++i) {
            alpha[i] = i;
        }
        std::swap(alpha[j], alpha[j + 1]);
        if (minor(*this, alpha, arity_) != *this) {
            return false;
        }
    }
    return true;
}

TruthTable minor(const TruthTable& f, std::span<const int> alpha, int target_arity) {
    if (static_cast<int>(alpha.size()) != f.arity()) {
        throw InputError("minor map must be total on the source arity");
    }
    check_arity(target_arity);
    for (int a : alpha) {
        if (a < 0 || a >= target_arity) {
            throw InputError("minor map image outside target arity");
        }
    }
    std::uint64_t out = 0;
    const std::uint32_t rows = 1U << target_arity;
    for (std::uint32_t c = 0; c < rows; ++c) {
        std::uint32_t a = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            a |= ((c >> alpha[j]) & 1U) << j;
        }
        out |= static_cast<std::uint64_t>(f[a]) << c;
    }
    return {target_arity, out};
}

MinorMap::MinorMap(std::span<const int> alpha, int target_arity)
    : source_(static_cast<int>(alpha.size())), target_(target_arity) {
    check_arity(source_);
    check_arity(target_);
    for (int a : alpha) {
        if (a < 0 || a >= target_arity) {
            throw InputError("minor map image outside target arity");
        }
    }
    bytes_.assign(((1U << source_) + 7) / 8, {});
    for (std::uint32_t c = 0; c < (1U << target_); ++c) {
        std::uint32_t a = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            a |= ((c >> alpha[j]) & 1U) << j;
        }
        auto& table = bytes_[a / 8];
        for (std::uint32_t v = 0; v < 256; ++v) {
            if ((v >> (a % 8)) & 1U) {
                table[v] |= std::uint64_t{1} << c;
            }
        }
    }
}

TruthTable MinorMap::operator()(const TruthTable& f) const {
    if (f.arity() != source_) {
        throw InputError("minor map must be total on the source arity");
    }
    const std::uint64_t bits = f.bits();
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < bytes_.size(); ++b) {
        out |= bytes_[b][(bits >> (8 * b)) & 0xFFU];
    }
    return {target_, out};
}

TruthTable dual(const TruthTable& f) {
    const int shift = 64 - static_cast<int>(f.size());
    const std::uint64_t reflected = reverse64(f.bits()) >> shift;
    return {f.arity(), ~reflected & f.mask()};
}

TruthTable meet(const TruthTable& f, const TruthTable& g) {
    check_same_arity(f, g);
    return {f.arity(), f.bits() & g.bits()};
}

TruthTable join(const TruthTable& f, const TruthTable& g) {
    check_same_arity(f, g);
    return {f.arity(), f.bits() | g.bits()};
}

bool leq(const TruthTable& f, const TruthTable& g) {
    check_same_arity(f, g);
    return (f.bits() & ~g.bits()) == 0;
}

TruthTable upward_closure(const TruthTable& f) { return {f.arity(), up_close(f.bits(), f.arity())}; }

TruthTable downward_interior(const TruthTable& f) {
    return {f.arity(), ~down_close(~f.bits() & f.mask(), f.arity()) & f.mask()};
}

bool triangle(const TruthTable& f, const TruthTable& g) {
    check_same_arity(f, g);
    return (up_close(f.bits(), f.arity()) & ~g.bits()) == 0;
}

std::vector<TruthTable> enumerate_idempotent(int arity, int cap) {
    check_arity(arity);
    if (arity > cap) {
        throw BudgetError("idempotent enumeration at arity " + std::to_string(arity) +
                          " exceeds cap " + std::to_string(cap));
    }
    const std::uint32_t rows = 1U << arity;
    const std::uint64_t top = std::uint64_t{1} << (rows - 1);
    const std::uint32_t free_bits = rows - 2;
    std::vector<TruthTable> out;
    out.reserve(std::size_t{1} << free_bits);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << free_bits); ++v) {
        out.emplace_back(arity, top | (v << 1));
    }
    return out;
}

std::string to_hex(const TruthTable& f) {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t digits = f.size() < 4 ? 1 : f.size() / 4;
    std::string out;
    out.reserve(digits);
    for (std::size_t d = 0; d < digits; ++d) {
        out.push_back(kDigits[(f.bits() >> (4 * d)) & 0xF]);
    }
    return out;
}

TruthTable from_hex(int arity, const std::string& hex) {
    check_arity(arity);
    const std::size_t rows = std::size_t{1} << arity;
    const std::size_t digits = rows < 4 ? 1 : rows / 4;
    if (hex.size() != digits) {
        throw InputError("hex table for arity " + std::to_string(arity) + " needs " +
                         std::to_string(digits) + " digits");
    }
    std::uint64_t bits = 0;
    for (std::size_t d = 0; d < digits; ++d) {
        const char c = hex[d];
        std::uint64_t v = 0;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw InputError(std::string("invalid hex digit '") + c + "'");
        }
        bits |= v << (4 * d);
    }
    return {arity, bits};
}

TruthTable sym5_from_profile(const Sym5Profile& p) {
    std::uint64_t bits = 0;
    for (std::uint32_t idx = 0; idx < 32; ++idx) {
        const int weight = std::popcount(idx);
        const bool value = weight == 5 || (weight > 0 && weight < 5 && p.a[weight - 1]);
        bits |= static_cast<std::uint64_t>(value) << idx;
    }
    return {5, bits};
}

Sym5Profile sym5_profile_of(const TruthTable& f) {
    if (f.arity() != 5 || !f.is_idempotent() || !f.is_symmetric()) {
        throw InputError("not a symmetric idempotent 5-ary table");
    }
    Sym5Profile p;
    for (int w = 1; w <= 4; ++w) {
        p.a[w - 1] = f[(1U << w) - 1];
    }
    return p;
}

bool sym5_compare(const Sym5Profile& p, const Sym5Profile& q, Sym5Relation relation) {
    const auto& a = p.a;
    switch (relation) {
        case Sym5Relation::Leq:
            for (int i = 0; i < 4; ++i) {
                if (a[i] && !q.a[i]) {
                    return false;
                }
            }
            return true;
        case Sym5Relation::Triangle:
            for (int i = 0; i < 4; ++i) {
                for (int j = i; j < 4; ++j) {
                    if (a[i] && !q.a[j]) {
                        return false;
                    }
                }
            }
            return true;
        case Sym5Relation::SelfLeqDual:
            return !(a[0] && a[3]) && !(a[1] && a[2]);
        case Sym5Relation::SelfTriangleDual:
            return !a[0] && !a[1];
        case Sym5Relation::SelfDualEq:
            return a[0] == !a[3] && a[1] == !a[2];
    }
    return false;
}

std::vector<Sym5Profile> all_sym5_profiles() {
    std::vector<Sym5Profile> out;
    for (int v = 0; v < 16; ++v) {
        Sym5Profile p;
        for (int i = 0; i < 4; ++i) {
            p.a[i] = (v >> i) & 1;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<TruthTable> enumerate_symmetric5() {
    std::vector<TruthTable> out;
    for (const auto& p : all_sym5_profiles()) {
        out.push_back(sym5_from_profile(p));
    }
    return out;
}

}  // namespace minioncore
