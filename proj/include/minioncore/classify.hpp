#pragma once

// Collapse: a reduced description names its canonical minion, with
// explicit homomorphisms in both directions that are checked before a report
// is returned.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minioncore/canon.hpp"
#include "minioncore/descriptions.hpp"
#include "minioncore/multisorted.hpp"
#include "minioncore/term.hpp"

namespace minioncore {

CoreId collapse_core(const ReducedDescription& rd);

/// One term per sort of collapse_core(rd), over the symbols of rd.
std::vector<Term> witness_forward(const ReducedDescription& rd);

/// Per symbol of rd, the core sort it is read from and whether dualized.
std::vector<SymbolImage> witness_backward(const ReducedDescription& rd, const CoreId& core);
MultiOp apply_backward(const std::vector<SymbolImage>& backward, const MultiOp& h);

struct VerifyOptions {
    int arity_cap = 4;
    bool symmetric5 = true;
    std::size_t budget = 50'000'000;
};

struct ClassificationReport {
    std::string digest;
    CoreId core;
    IdempotentCore idempotent;
    Description description;
    Reduction reduction;
    std::vector<Term> forward;                    // over reduced symbols
    std::vector<SymbolImage> backward;            // per reduced symbol
    std::vector<Term> forward_description;        // over description symbols
    std::vector<SymbolImage> backward_description;  // per description symbol
    std::vector<std::string> log;
    bool verified = false;
};

/// Checks the four legs through the reduced form at cap min(arity cap, 3);
/// throws VerificationError on the first failure.
std::vector<std::string> verify_witnesses(const Description& d, const Reduction& r, const CoreId& core,
                                          const std::vector<Term>& forward,
                                          const std::vector<SymbolImage>& backward, const VerifyOptions& options);

ClassificationReport classify_description(const Description& d, const VerifyOptions& options = {});
ClassificationReport classify_relations(const Signature& sig, std::span<const TypedRelation> relations,
                                        const VerifyOptions& options = {});

/// FNV-1a 64 of a text, as 16 hex digits.
std::string text_digest(std::string_view text);
/// text_digest of a canonical rendering of the input.
std::string input_digest(const Signature& sig, std::span<const TypedRelation> relations);

}  // namespace minioncore
