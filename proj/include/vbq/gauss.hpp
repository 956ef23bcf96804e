#pragma once

// Colorings of Gauss codes by the labeling rules that absorb f into the
// classical crossings. At each crossing the four incident semiarcs play the
// roles x, y (incoming) and z, w (outgoing):
//
//   positive:  z = R1(x, f(y)),     w = R2(f^{-1}(x), y)
//   negative:  z = R1b(x, f(y)),    w = R2b(f^{-1}(x), y)
//
// with the chord tail on the Over passage. For a positive crossing x is the
// under strand (x -> w) and y the over strand (y -> z); for a negative crossing
// the strands trade roles: x is the over strand and y the under strand. This
// matches the braid picture where x is the left input of sigma_i^{+-1}.

#include <cstdint>
#include <optional>
#include <vector>

#include "vbq/algebra.hpp"
#include "vbq/coloring.hpp"
#include "vbq/gauss_code.hpp"
#include "vbq/terms.hpp"

namespace vbq {

struct CrossingRecord {
    int id;
    int sign;
    int over_in, over_out;
    int under_in, under_out;
};

// Semiarc k of a component is the arc arriving at its k-th token; the arc
// leaving token k is the one arriving at token k+1 (cyclically). A component
// with no tokens is a single free semiarc.
struct SemiarcGraph {
    int semiarc_count = 0;
    std::vector<int> component_of;  // per semiarc
    std::vector<CrossingRecord> crossings;  // sorted by id
};

SemiarcGraph build_semiarc_graph(const GaussCode& g);

struct CrossingEquations {
    int sign;
    int x, y, z, w;  // semiarc ids

    // (z, w) forced by (x, y).
    std::pair<Element, Element> outputs(const VirtualBiquandle& vbq, Element x_val, Element y_val) const;
    bool holds(const VirtualBiquandle& vbq, std::span<const Element> assignment) const;
};

CrossingEquations crossing_constraints(const CrossingRecord& c);

bool satisfies_all(const VirtualBiquandle& vbq, const SemiarcGraph& graph, std::span<const Element> assignment);

struct GaussColoringOptions {
    bool materialize = false;
    // Upper bound on backtracking decisions.
    std::uint64_t budget = kDefaultBudget;
};

// Witnesses, when materialized, are semiarc assignments in search order.
ColoringResult color_gauss(const VirtualBiquandle& vbq, const GaussCode& g, const GaussColoringOptions& options = {});

// Generators x1..xS are the semiarcs; two relations per crossing, ordered by crossing id.
Presentation gauss_presentation(const GaussCode& g);

}  // namespace vbq
