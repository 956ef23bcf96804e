#pragma once

// Exhaustive search for small biquandles and virtual biquandles, and
// canonical forms under relabeling of the carrier.

#include <optional>
#include <span>
#include <vector>

#include "vbq/algebra.hpp"

namespace vbq {

inline constexpr int kDefaultMaxEnumerationSize = 4;
inline constexpr int kHardMaxEnumerationSize = 5;
inline constexpr int kMaxCanonicalSize = 7;

struct EnumerationOptions {
    bool up_to_iso = false;
    // Permits n = 5 (slow); sizes above 5 are always refused.
    bool allow_large = false;
    int workers = 1;
};

struct VirtualStructure {
    OperatorTable op;
    Permutation f;

    friend bool operator==(const VirtualStructure&, const VirtualStructure&) = default;
};

// Serialization r1 ++ r2 [++ f], minimized over all n! relabelings.
using CanonicalKey = std::vector<Element>;

CanonicalKey canonical_key(const OperatorTable& op);
CanonicalKey canonical_key(const OperatorTable& op, std::span<const Element> f);

// The relabeled structure whose serialization is the canonical key.
OperatorTable canonical_form(const OperatorTable& op);
VirtualStructure canonical_form(const OperatorTable& op, std::span<const Element> f);

// Raw output is sorted by table contents; up_to_iso output holds one
// canonical form per class, sorted by canonical key. Throws ParameterError
// for sizes outside the supported range.
std::vector<OperatorTable> enumerate_biquandles(int n, const EnumerationOptions& options = {});
std::vector<VirtualStructure> enumerate_virtual(int n, const EnumerationOptions& options = {});

}  // namespace vbq
