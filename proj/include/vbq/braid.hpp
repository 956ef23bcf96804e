#pragma once

// Virtual braid words.
//
// Letters apply top to bottom: the word "a b" acts on the incoming strand
// tuple with a first, then b. Textual grammar: whitespace-separated tokens
// s<i> (sigma_i), S<i> (sigma_i^{-1}), v<i> (rho_i), with 1 <= i <= n-1.
//
// Crossing geometry: in sigma_i the strand entering at position i passes
// under and leaves at position i+1; in sigma_i^{-1} it passes over.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbq/gauss_code.hpp"

namespace vbq {

enum class GenKind { Sigma, SigmaInv, Rho };

struct Generator {
    GenKind kind;
    int index;  // 1-based

    static Generator sigma(int i) { return {GenKind::Sigma, i}; }
    static Generator sigma_inv(int i) { return {GenKind::SigmaInv, i}; }
    static Generator rho(int i) { return {GenKind::Rho, i}; }

    Generator inverse() const;
    friend bool operator==(const Generator&, const Generator&) = default;
};

struct BraidWord {
    int strands = 1;
    std::vector<Generator> letters;

    // Throws StructureError when strands < 1 or an index lies outside 1..strands-1.
    void validate() const;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Concatenation: a's letters followed by b's. Both must have equal strand counts.
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Without an explicit strand count, strands = 1 + max index (1 for the empty word).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

std::string format_generator(const Generator& g);
std::string format_braid(const BraidWord& b);

struct ClosureInfo {
    // permutation[s] is the bottom position (0-based) reached by the strand
    // entering at top position s.
    std::vector<int> permutation;
    int components = 0;
};

ClosureInfo closure_permutation(const BraidWord& b);

// g b g^{-1}.
BraidWord conjugate(const BraidWord& b, const Generator& g);

enum class StabilizeKind { Pos, Neg, Virt };

// b followed by sigma_n, sigma_n^{-1} or rho_n on n+1 strands.
BraidWord stabilize(const BraidWord& b, StabilizeKind kind);

// Letters uniform over the 3(n-1) generators; deterministic in seed.
BraidWord random_braid(int strands, int length, std::uint64_t seed);

// Gauss code of the closure. Crossing ids follow the order of the classical
// letters in the word; components are listed by smallest starting strand and
// each starts at the top of that strand. Virtual crossings are dropped.
GaussCode braid_to_gauss(const BraidWord& b);

}  // namespace vbq
