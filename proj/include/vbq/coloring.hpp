#pragma once

// Actions of the virtual braid group on X^n and fixed-point coloring counts.
//
// Phi colors virtual crossings with f: rho_i sends (x_i, x_{i+1}) to
// (f^{-1}(x_{i+1}), f(x_i)). Psi is the conjugate of Phi by
// theta = f^{n-1} x f^{n-2} x ... x f x id, written out directly: rho_i is a
// plain swap and sigma_i twists its inputs by f before applying R.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vbq/algebra.hpp"
#include "vbq/braid.hpp"

namespace vbq {

using StrandTuple = std::vector<Element>;

enum class RepKind { Phi, Psi };

std::string rep_name(RepKind r);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ColoringOptions {
    bool materialize = false;
    std::uint64_t budget = kDefaultBudget;
    int workers = 1;
};

struct ColoringResult {
    std::uint64_t count = 0;
    // Present only when materialized; lexicographic order.
    std::optional<std::vector<StrandTuple>> witnesses;
};

// In place on positions index-1 and index (0-based).
void act_generator(const VirtualBiquandle& vbq, const Generator& g, RepKind rep, std::span<Element> t);
StrandTuple act_generator(const VirtualBiquandle& vbq, const Generator& g, RepKind rep, StrandTuple t);

void act_braid(const VirtualBiquandle& vbq, const BraidWord& b, RepKind rep, std::span<Element> t);
StrandTuple act_braid(const VirtualBiquandle& vbq, const BraidWord& b, RepKind rep, StrandTuple t);

// Coordinate i (1-based) of an n-tuple goes through f^{n-i}.
StrandTuple theta(const VirtualBiquandle& vbq, const StrandTuple& t);
StrandTuple theta_inv(const VirtualBiquandle& vbq, const StrandTuple& t);

// |X|^n, saturating at UINT64_MAX.
std::uint64_t tuple_space_size(int carrier, int strands);

// Exhaustive fixed-point count over X^n. Throws BudgetExceeded when |X|^n
// exceeds options.budget. Results do not depend on options.workers.
ColoringResult count_colorings(const VirtualBiquandle& vbq, const BraidWord& b, RepKind rep,
                               const ColoringOptions& options = {});

struct BridgeReport {
    std::uint64_t phi_count = 0;
    std::uint64_t psi_count = 0;
    // Colorings by (X, VR) with identity on virtual crossings.
    std::uint64_t vr_count = 0;
    bool mechanism_ok = true;
    // A phi-fixed tuple t with psi(theta(t)) != theta(t), if one exists.
    std::optional<StrandTuple> counterexample;

    bool ok() const noexcept { return mechanism_ok && phi_count == psi_count && psi_count == vr_count; }
    std::string to_string() const;
};

BridgeReport verify_bridge(const VirtualBiquandle& vbq, const BraidWord& b, const ColoringOptions& options = {});

struct Relation {
    std::string family;
    BraidWord lhs;
    BraidWord rhs;
};

// Every defining relation of VB_n, each side as a word in application order.
std::vector<Relation> virtual_braid_relations(int strands);

struct RepresentationReport {
    std::size_t relations_checked = 0;
    std::optional<Relation> violated;
    StrandTuple witness;

    bool ok() const noexcept { return !violated.has_value(); }
    std::string to_string() const;
};

RepresentationReport check_representation(const VirtualBiquandle& vbq, int strands, RepKind rep,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace vbq
