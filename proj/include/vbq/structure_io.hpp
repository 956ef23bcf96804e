#pragma once

// Line-oriented text format for (virtual) biquandles:
//
//   vbq
//   size <n>
//   R1
//   <n rows of n space-separated integers>
//   R2
//   <n rows of n space-separated integers>
//   f                      (optional block; absent means identity)
//   <n space-separated integers>
//
// Lines starting with '#' and blank lines are ignored by the reader.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbq/algebra.hpp"

namespace vbq {

struct StructureFile {
    OperatorTable op;
    std::optional<Permutation> f;

    Permutation f_or_identity() const { return f ? *f : identity_permutation(op.size()); }
};

// Throws ParseError (a StructureError) on malformed text, including out-of-range entries.
StructureFile parse_structure(std::string_view text);

// Catalog: zero or more structures, each starting with a "vbq" line.
std::vector<StructureFile> parse_catalog(std::string_view text);

// Bit-exact writer; the f block is emitted only when f is present.
std::string format_structure(const OperatorTable& op, const std::optional<Permutation>& f = std::nullopt);

StructureFile read_structure_file(const std::string& path);

}  // namespace vbq
