#pragma once

// Terms of the free virtual biquandle and presentations by relations.
//
// Terms are hash-consed into a TermArena: structurally equal terms share one
// id, so the exponential growth of braid actions stays linear in the number
// of distinct subterms. Node kinds:
//   x<i>           generator (1-based)
//   R1/R2/R1b/R2b  binary operators (R1b, R2b are the components of R^{-1})
//   f^k(t)         f applied k != 0 times; nested powers are merged
//
// An arena is not synchronized; confine each one to a single thread.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vbq/algebra.hpp"
#include "vbq/braid.hpp"
#include "vbq/coloring.hpp"

namespace vbq {

enum class TermOp : std::uint8_t { R1, R2, R1bar, R2bar };
enum class TermKind : std::uint8_t { Gen, App, FPow };

using TermId = std::uint32_t;

struct TermNode {
    TermKind kind;
    TermOp op;   // App only
    int value;   // generator index (Gen) or exponent (FPow)
    TermId left;
    TermId right;
};

class TermArena {
public:
    TermId gen(int i);
    TermId app(TermOp op, TermId left, TermId right);
    // Normalizes f^0(t) to t and f^a(f^b(t)) to f^{a+b}(t).
    TermId fpow(int k, TermId t);

    const TermNode& node(TermId id) const { return nodes_[id]; }
    std::size_t size() const noexcept { return nodes_.size(); }

    std::string to_string(TermId id) const;

private:
    struct Key {
        TermKind kind;
        TermOp op;
        int value;
        TermId left, right;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    TermId intern(const Key& k);

    std::vector<TermNode> nodes_;
    std::unordered_map<Key, TermId, KeyHash> index_;
};

struct Presentation {
    int generator_count = 0;
    std::shared_ptr<TermArena> arena = std::make_shared<TermArena>();
    std::vector<std::pair<TermId, TermId>> relations;

    // One "lhs = rhs" line per relation.
    std::string to_string() const;
};

// Term i is the i-th coordinate of the braid action applied to (x1, ..., xn);
// evaluating it at a tuple t gives act_braid(vbq, b, rep, t)[i].
std::vector<TermId> symbolic_action(TermArena& arena, const BraidWord& b, RepKind rep);

// Relations symbolic_action(b)[i] = x_{i+1}.
Presentation make_presentation(const BraidWord& b, RepKind rep);

// assignment[i] is the value of generator x_{i+1}.
Element eval_term(const TermArena& arena, TermId t, std::span<const Element> assignment,
                  const VirtualBiquandle& vbq);

// Evaluates a fixed set of roots repeatedly; each shared subterm is computed
// once per assignment.
class TermEvaluator {
public:
    TermEvaluator(const TermArena& arena, std::span<const TermId> roots);

    // out[k] receives the value of roots[k].
    void evaluate(std::span<const Element> assignment, const VirtualBiquandle& vbq, std::span<Element> out);

private:
    const TermArena* arena_;
    std::vector<TermId> order_;  // reachable nodes, children first
    std::vector<std::uint32_t> slot_;
    std::vector<std::uint32_t> root_slots_;
    std::vector<Element> values_;
};

// Generator assignments under which every relation holds. Throws
// BudgetExceeded when |X|^generators exceeds the budget.
ColoringResult count_homs(const Presentation& p, const VirtualBiquandle& vbq,
                          const ColoringOptions& options = {});

// Moves every f-power down to the generators using f(R(a,b)) = R(f(a), f(b)).
TermId push_f_inward(TermArena& arena, TermId t);

// Replaces each generator x_i by images[i-1].
TermId substitute(TermArena& arena, TermId t, std::span<const TermId> images);

// Applies x_i -> f^{n-i}(x_i) to both sides of every relation and pushes f inward.
Presentation theta_substitute(const Presentation& p);

}  // namespace vbq
