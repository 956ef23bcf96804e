#pragma once

// Finite biquandles and virtual biquandles over the carrier {0, ..., n-1}.
//
// An operator R : X x X -> X x X is stored as two row-major n x n tables,
// r1[x*n + y] = R1(x, y) and r2[x*n + y] = R2(x, y). Every exhaustive check
// in this header is O(n^3) time in the worst case (the Yang-Baxter check)
// and O(n^2) memory.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vbq/error.hpp"

namespace vbq {

using Element = int;
using Permutation = std::vector<Element>;
using Table = std::vector<Element>;

class OperatorTable {
public:
    OperatorTable() = default;

    // Throws StructureError when a table is not n x n or an entry is out of range.
    OperatorTable(int n, Table r1, Table r2);

    static OperatorTable from_rows(const std::vector<std::vector<Element>>& r1_rows,
                                   const std::vector<std::vector<Element>>& r2_rows);

    template <typename Fn>
    static OperatorTable tabulate(int n, Fn&& fn) {
        Table r1(static_cast<std::size_t>(n) * n), r2(r1.size());
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto [a, b] = fn(x, y);
                r1[x * n + y] = a;
                r2[x * n + y] = b;
            }
        return OperatorTable(n, std::move(r1), std::move(r2));
    }

    int size() const noexcept { return n_; }
    Element r1(Element x, Element y) const noexcept { return r1_[x * n_ + y]; }
    Element r2(Element x, Element y) const noexcept { return r2_[x * n_ + y]; }
    std::pair<Element, Element> apply(Element x, Element y) const noexcept {
        return {r1(x, y), r2(x, y)};
    }
    const Table& r1_table() const noexcept { return r1_; }
    const Table& r2_table() const noexcept { return r2_; }

    // Simultaneous relabeling of the carrier: the result maps (p(x), p(y)) to
    // (p(R1(x,y)), p(R2(x,y))).
    OperatorTable relabeled(std::span<const Element> p) const;

    friend bool operator==(const OperatorTable&, const OperatorTable&) = default;
    friend auto operator<=>(const OperatorTable&, const OperatorTable&) = default;

private:
    int n_ = 0;
    Table r1_;
    Table r2_;
};

enum class Axiom {
    YangBaxter,
    Invertible,
    LeftInvertible,
    RightInvertible,
    TypeI,        // unique x with R(x,a) = (x,a)
    TypeIDual,    // unique y with R(a,y) = (a,y)
    Automorphism  // f commutes with R1 and R2
};

std::string axiom_name(Axiom a);

struct AxiomVerdict {
    explicit AxiomVerdict(Axiom a) : axiom(a) {}

    Axiom axiom;
    bool pass = true;
    // Elements exhibiting the failure; layout depends on the axiom:
    //   YangBaxter      (x, y, z)
    //   Invertible      (x1, y1, x2, y2) with R(x1,y1) = R(x2,y2)
    //   LeftInvertible  (x, y1, y2) with R1(x,y1) = R1(x,y2)
    //   RightInvertible (y, x1, x2) with R2(x1,y) = R2(x2,y)
    //   TypeI           (a, x1, x2) two fixed pairs, or (a) when there is none
    //   TypeIDual       (a, y1, y2) or (a)
    //   Automorphism    (x, y)
    std::vector<Element> witness;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomVerdict> verdicts;

    bool ok() const noexcept;
    const AxiomVerdict* find(Axiom a) const noexcept;
    std::string to_string() const;
};

class AxiomFailure : public std::runtime_error {
public:
    explicit AxiomFailure(AxiomReport report);
    const AxiomReport& report() const noexcept { return report_; }

private:
    AxiomReport report_;
};

// Full report: every axiom is checked and every failure carries a witness.
AxiomReport validate_biquandle(const OperatorTable& op);

// Fast path for search: stops at the first violated axiom.
bool is_biquandle(const OperatorTable& op);

// Inverse operator tables (r1bar, r2bar). Throws StructureError naming a
// collision pair when R is not a bijection of X x X.
std::pair<Table, Table> invert_operator(const OperatorTable& op);

class ValidatedBiquandle {
public:
    // Throws AxiomFailure carrying the full report when op is not a biquandle.
    static ValidatedBiquandle from(OperatorTable op);

    int size() const noexcept { return op_.size(); }
    const OperatorTable& op() const noexcept { return op_; }

    Element r1(Element x, Element y) const noexcept { return op_.r1(x, y); }
    Element r2(Element x, Element y) const noexcept { return op_.r2(x, y); }
    Element r1bar(Element x, Element y) const noexcept { return r1bar_[x * size() + y]; }
    Element r2bar(Element x, Element y) const noexcept { return r2bar_[x * size() + y]; }

    // left_div(x, z) is the unique y with R1(x, y) = z.
    Element left_div(Element x, Element z) const noexcept { return left_div_[x * size() + z]; }
    // right_div(y, w) is the unique x with R2(x, y) = w.
    Element right_div(Element y, Element w) const noexcept { return right_div_[y * size() + w]; }

    // Pairs (a, x) with R(x, a) = (x, a), one per a, ordered by a.
    const std::vector<std::pair<Element, Element>>& fixed_pairs() const noexcept {
        return fixed_pairs_;
    }

private:
    ValidatedBiquandle() = default;

    OperatorTable op_;
    Table r1bar_, r2bar_;
    Table left_div_, right_div_;
    std::vector<std::pair<Element, Element>> fixed_pairs_;
};

// Throws StructureError unless f is a permutation of {0, ..., n-1}.
void check_permutation(std::span<const Element> f, int n);
Permutation identity_permutation(int n);
Permutation inverse_permutation(std::span<const Element> f);

// Full report for (X, f, R): the biquandle verdicts followed by the
// automorphism verdict. Throws StructureError when f is not a permutation.
AxiomReport validate_virtual(const OperatorTable& op, std::span<const Element> f);

bool is_automorphism(const OperatorTable& op, std::span<const Element> f);

class VirtualBiquandle {
public:
    // Throws AxiomFailure or StructureError.
    static VirtualBiquandle from(OperatorTable op, Permutation f);
    // f = identity.
    static VirtualBiquandle plain(OperatorTable op);

    int size() const noexcept { return bq_.size(); }
    const ValidatedBiquandle& bq() const noexcept { return bq_; }
    const OperatorTable& op() const noexcept { return bq_.op(); }
    const Permutation& f() const noexcept { return f_; }
    const Permutation& f_inv() const noexcept { return f_inv_; }

    Element f(Element x) const noexcept { return f_[x]; }
    Element f_inv(Element x) const noexcept { return f_inv_[x]; }
    // f applied k times; negative k applies f^{-1}.
    Element f_pow(Element x, int k) const noexcept;

private:
    VirtualBiquandle(ValidatedBiquandle bq, Permutation f, Permutation f_inv)
        : bq_(std::move(bq)), f_(std::move(f)), f_inv_(std::move(f_inv)) {}

    ValidatedBiquandle bq_;
    Permutation f_;
    Permutation f_inv_;
};

// VR(x, y) = (R1(x, f(y)), R2(f^{-1}(x), y)).
OperatorTable derive_vr(const VirtualBiquandle& vbq);

// True iff h commutes with R1, R2 and with f.
bool is_homomorphism(std::span<const Element> h, const VirtualBiquandle& src,
                     const VirtualBiquandle& dst);

// Finite groups given by Cayley tables: cayley[a*n + b] = a*b.
struct GroupTable {
    int n = 0;
    Table mul;
    Element identity = 0;
    Table inverse;

    Element operator()(Element a, Element b) const noexcept { return mul[a * n + b]; }
};

// Validates closure, identity, inverses and associativity by exhaustion.
GroupTable make_group(int n, Table cayley);
GroupTable cyclic_group(int n);
// Symmetric group on k letters; elements are permutations in lexicographic order.
GroupTable symmetric_group(int k);

// R(x, y) = (x^{-1} y^{-1} x, y^2 x).
OperatorTable wada_from_group(const GroupTable& g);
OperatorTable wada_from_group(int n, const Table& cayley);

// R(x, y) = ((1-alpha)x + alpha y, beta x + (1-beta) y) mod n. Throws
// ParameterError unless alpha, beta are units and (1-alpha)(1-beta) = 0 mod n.
OperatorTable linear_biquandle(int n, int alpha, int beta);

OperatorTable swap_operator(int n);

}  // namespace vbq
