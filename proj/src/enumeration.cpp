#include "vbq/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <thread>

namespace vbq {

namespace {

void check_size(int n, const EnumerationOptions& options) {
    if (n < 1) throw ParameterError("enumeration size must be at least 1");
    if (n > kHardMaxEnumerationSize)
        throw ParameterError("enumeration size " + std::to_string(n) + " exceeds the hard limit " +
                             std::to_string(kHardMaxEnumerationSize));
    if (n > kDefaultMaxEnumerationSize && !options.allow_large)
        throw ParameterError("enumeration size " + std::to_string(n) + " exceeds " +
                             std::to_string(kDefaultMaxEnumerationSize) + " without the large-size override");
    if (n > kDefaultMaxEnumerationSize)
        std::cerr << "warning: enumerating size " << n << " is slow\n";
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    Permutation p = identity_permutation(n);
    do fn(std::as_const(p));
    while (std::next_permutation(p.begin(), p.end()));
}

void serialize(const OperatorTable& op, std::span<const Element> f, std::span<const Element> p,
               std::vector<Element>& out) {
    const int n = op.size();
    const std::size_t sq = static_cast<std::size_t>(n) * n;
    out.assign(2 * sq + f.size(), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            out[p[x] * n + p[y]] = p[op.r1(x, y)];
            out[sq + p[x] * n + p[y]] = p[op.r2(x, y)];
        }
    for (std::size_t x = 0; x < f.size(); ++x) out[2 * sq + p[x]] = p[f[x]];
}

// Returns the minimizing relabeling and the key.
std::pair<Permutation, CanonicalKey> minimize(const OperatorTable& op, std::span<const Element> f) {
    if (op.size() > kMaxCanonicalSize)
        throw ParameterError("canonical keys are limited to size " + std::to_string(kMaxCanonicalSize));
    CanonicalKey best, current;
    Permutation best_p;
    for_each_permutation(op.size(), [&](const Permutation& p) {
        serialize(op, f, p, current);
        if (best.empty() || current < best) {
            best = current;
            best_p = p;
        }
    });
    return {best_p, best};
}

constexpr Element kUnset = -1;

// Backtracking over table cells. R1 rows and R2 columns are kept injective
// as they fill; R injectivity and the type I counts are tracked per completed
// cell; every Yang-Baxter component whose operands are all known is compared
// after each assignment.
class BiquandleSearch {
public:
    explicit BiquandleSearch(int n)
        : n_(n),
          r1_(static_cast<std::size_t>(n) * n, kUnset),
          r2_(r1_.size(), kUnset),
          row_used_(n, 0),
          col_used_(n, 0),
          pair_used_(r1_.size(), false),
          fixed_(n, 0),
          dual_fixed_(n, 0) {
        // R1 row by row, then R2 column by column.
        for (int c = 0; c < n * n; ++c) order_.push_back({true, c});
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) order_.push_back({false, x * n + y});
    }

    // Solutions with R1 row 0 equal to `row0`.
    std::vector<OperatorTable> run(const Permutation& row0) {
        std::vector<OperatorTable> out;
        for (int y = 0; y < n_; ++y) set(true, y, row0[y]);
        step(0, out);
        return out;
    }

private:
    struct Cell {
        bool is_r1;
        int index;
    };

    Element get1(Element x, Element y) const { return (x < 0 || y < 0) ? kUnset : r1_[x * n_ + y]; }
    Element get2(Element x, Element y) const { return (x < 0 || y < 0) ? kUnset : r2_[x * n_ + y]; }

    bool ybe_consistent() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                Element a = get1(x, y), b = get2(x, y);
                for (int z = 0; z < n_; ++z) {
                    Element c = get1(b, z), d = get2(b, z);
                    Element p = get1(y, z), q = get2(y, z);
                    Element u = get1(x, p), v = get2(x, p);
                    Element l0 = get1(a, c), l1 = get2(a, c);
                    Element r1 = get1(v, q), r2 = get2(v, q);
                    if (l0 != kUnset && u != kUnset && l0 != u) return false;
                    if (l1 != kUnset && r1 != kUnset && l1 != r1) return false;
                    if (d != kUnset && r2 != kUnset && d != r2) return false;
                }
            }
        return true;
    }

    // Updates constraint bookkeeping; returns false when a constraint breaks
    // (bookkeeping is still recorded so unset() can reverse it).
    bool set(bool is_r1, int cell, Element v) {
        const int x = cell / n_, y = cell % n_;
        bool ok = true;
        if (is_r1) {
            r1_[cell] = v;
            row_used_[x] |= 1u << v;
        } else {
            r2_[cell] = v;
            col_used_[y] |= 1u << v;
        }
        if (r1_[cell] != kUnset && r2_[cell] != kUnset) {
            auto key = static_cast<std::size_t>(r1_[cell] * n_ + r2_[cell]);
            if (pair_used_[key]) ok = false;
            pair_used_[key] = true;
            if (r1_[cell] == x && r2_[cell] == y) {
                if (++fixed_[y] > 1) ok = false;
                if (++dual_fixed_[x] > 1) ok = false;
            }
        }
        return ok;
    }

    void unset(bool is_r1, int cell, bool pair_was_new) {
        const int x = cell / n_, y = cell % n_;
        if (r1_[cell] != kUnset && r2_[cell] != kUnset) {
            auto key = static_cast<std::size_t>(r1_[cell] * n_ + r2_[cell]);
            if (pair_was_new) pair_used_[key] = false;
            if (r1_[cell] == x && r2_[cell] == y) {
                --fixed_[y];
                --dual_fixed_[x];
            }
        }
        if (is_r1) {
            row_used_[x] &= ~(1u << r1_[cell]);
            r1_[cell] = kUnset;
        } else {
            col_used_[y] &= ~(1u << r2_[cell]);
            r2_[cell] = kUnset;
        }
    }

    void step(std::size_t k, std::vector<OperatorTable>& out) {
        while (k < order_.size() && (order_[k].is_r1 ? r1_ : r2_)[order_[k].index] != kUnset) ++k;
        if (k == order_.size()) {
            OperatorTable op(n_, r1_, r2_);
            if (is_biquandle(op)) out.push_back(std::move(op));
            return;
        }
        const auto [is_r1, cell] = order_[k];
        const int x = cell / n_, y = cell % n_;
        const unsigned used = is_r1 ? row_used_[x] : col_used_[y];
        for (Element v = 0; v < n_; ++v) {
            if (used & (1u << v)) continue;
            // pair_used_ may already hold this pair from another cell; remember
            // whether this assignment introduced it.
            bool pair_was_new = true;
            const Element other = is_r1 ? r2_[cell] : r1_[cell];
            if (other != kUnset) {
                auto key = is_r1 ? v * n_ + other : other * n_ + v;
                pair_was_new = !pair_used_[static_cast<std::size_t>(key)];
            }
            bool ok = set(is_r1, cell, v);
            if (ok && ybe_consistent()) step(k + 1, out);
            unset(is_r1, cell, pair_was_new);
        }
    }

    int n_;
    std::vector<Element> r1_, r2_;
    std::vector<unsigned> row_used_, col_used_;
    std::vector<bool> pair_used_;
    std::vector<int> fixed_, dual_fixed_;
    std::vector<Cell> order_;
};

}  // namespace

CanonicalKey canonical_key(const OperatorTable& op) { return minimize(op, {}).second; }

CanonicalKey canonical_key(const OperatorTable& op, std::span<const Element> f) {
    check_permutation(f, op.size());
    return minimize(op, f).second;
}

OperatorTable canonical_form(const OperatorTable& op) { return op.relabeled(minimize(op, {}).first); }

VirtualStructure canonical_form(const OperatorTable& op, std::span<const Element> f) {
    check_permutation(f, op.size());
    auto p = minimize(op, f).first;
    Permutation g(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) g[p[x]] = p[f[x]];
    return {op.relabeled(p), std::move(g)};
}

std::vector<OperatorTable> enumerate_biquandles(int n, const EnumerationOptions& options) {
    check_size(n, options);

    std::vector<Permutation> rows;
    for_each_permutation(n, [&](const Permutation& p) { rows.push_back(p); });
    std::vector<std::vector<OperatorTable>> parts(rows.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) parts[i] = BiquandleSearch(n).run(rows[i]);
    };
    const int workers = std::clamp(options.workers, 1, static_cast<int>(rows.size()));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    std::vector<OperatorTable> raw;
    for (auto& part : parts)
        for (auto& op : part) raw.push_back(std::move(op));
    std::sort(raw.begin(), raw.end());
    if (!options.up_to_iso) return raw;

    std::map<CanonicalKey, OperatorTable> classes;
    for (const auto& op : raw) {
        auto [p, key] = minimize(op, {});
        classes.try_emplace(std::move(key), op.relabeled(p));
    }
    std::vector<OperatorTable> out;
    for (auto& [key, op] : classes) out.push_back(std::move(op));
    return out;
}

std::vector<VirtualStructure> enumerate_virtual(int n, const EnumerationOptions& options) {
    EnumerationOptions raw_options = options;
    raw_options.up_to_iso = false;
    auto biquandles = enumerate_biquandles(n, raw_options);

    std::vector<VirtualStructure> raw;
    for (const auto& op : biquandles)
        for_each_permutation(n, [&](const Permutation& f) {
            if (is_automorphism(op, f)) raw.push_back({op, f});
        });
    if (!options.up_to_iso) return raw;  // already sorted: biquandles sorted, f lexicographic

    std::map<CanonicalKey, VirtualStructure> classes;
    for (const auto& s : raw) {
        auto key = minimize(s.op, s.f).second;
        if (!classes.count(key)) classes.emplace(std::move(key), canonical_form(s.op, s.f));
    }
    std::vector<VirtualStructure> out;
    for (auto& [key, s] : classes) out.push_back(std::move(s));
    return out;
}

}  // namespace vbq
