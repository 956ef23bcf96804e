#pragma once

// Gauss codes of virtual links: classical crossings only.
//
// Text form: components separated by '|', tokens concatenated, each token
// O<id><sign> or U<id><sign>, e.g. "U1+O2+|O1+U2+". Whitespace is ignored by
// the reader and never written.

#include <string>
#include <string_view>
#include <vector>

namespace vbq {

enum class Passage { Over, Under };

struct GaussToken {
    Passage passage;
    int crossing;  // positive id
    int sign;      // +1 or -1

    friend bool operator==(const GaussToken&, const GaussToken&) = default;
};

struct GaussCode {
    std::vector<std::vector<GaussToken>> components;

    int crossing_count() const;
    friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// Throws StructureError: each id must occur exactly once Over and once Under
// with the same sign, and there must be at least one component.
void validate_gauss(const GaussCode& g);

// Throws ParseError on bad syntax or any validate_gauss violation.
GaussCode parse_gauss(std::string_view text);

std::string format_gauss(const GaussCode& g);

}  // namespace vbq
