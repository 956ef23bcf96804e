#include "vbq/gauss.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace vbq {

SemiarcGraph build_semiarc_graph(const GaussCode& g) {
    validate_gauss(g);
    SemiarcGraph graph;
    std::map<int, CrossingRecord> by_id;
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        const auto& tokens = g.components[c];
        const int base = graph.semiarc_count;
        const int len = static_cast<int>(tokens.size());
        const int arcs = std::max(len, 1);
        graph.semiarc_count += arcs;
        graph.component_of.insert(graph.component_of.end(), arcs, static_cast<int>(c));
        for (int k = 0; k < len; ++k) {
            const auto& t = tokens[k];
            auto& rec = by_id.try_emplace(t.crossing, CrossingRecord{t.crossing, t.sign, -1, -1, -1, -1}).first->second;
            const int in = base + k;
            const int out = base + (k + 1) % len;
            if (t.passage == Passage::Over) {
                rec.over_in = in;
                rec.over_out = out;
            } else {
                rec.under_in = in;
                rec.under_out = out;
            }
        }
    }
    for (auto& [id, rec] : by_id) graph.crossings.push_back(rec);
    return graph;
}

CrossingEquations crossing_constraints(const CrossingRecord& c) {
    if (c.sign > 0) return {c.sign, c.under_in, c.over_in, c.over_out, c.under_out};
    return {c.sign, c.over_in, c.under_in, c.under_out, c.over_out};
}

std::pair<Element, Element> CrossingEquations::outputs(const VirtualBiquandle& vbq, Element x_val,
                                                       Element y_val) const {
    const auto& bq = vbq.bq();
    if (sign > 0) return {bq.r1(x_val, vbq.f(y_val)), bq.r2(vbq.f_inv(x_val), y_val)};
    return {bq.r1bar(x_val, vbq.f(y_val)), bq.r2bar(vbq.f_inv(x_val), y_val)};
}

bool CrossingEquations::holds(const VirtualBiquandle& vbq, std::span<const Element> a) const {
    auto [zv, wv] = outputs(vbq, a[x], a[y]);
    return a[z] == zv && a[w] == wv;
}

bool satisfies_all(const VirtualBiquandle& vbq, const SemiarcGraph& graph, std::span<const Element> assignment) {
    if (static_cast<int>(assignment.size()) != graph.semiarc_count) return false;
    return std::all_of(graph.crossings.begin(), graph.crossings.end(), [&](const CrossingRecord& c) {
        return crossing_constraints(c).holds(vbq, assignment);
    });
}

namespace {

constexpr int kNone = -1;

// Lookup tables for one crossing sign. Roles are indexed x=0, y=1, z=2, w=3.
// solve[a][b] maps (value of role a, value of role b) to the value of the
// role the pair determines, when that map is well defined.
struct SignTables {
    int m = 0;
    std::vector<Element> z, w;
    std::vector<Element> from_zw;  // packed x*m+y, or kNone when not bijective
    // Recover the missing input from one input and one output.
    std::vector<Element> y_from_xz, x_from_yw, x_from_yz, y_from_xw;

    SignTables(const VirtualBiquandle& vbq, int sign) : m(vbq.size()) {
        const std::size_t sq = static_cast<std::size_t>(m) * m;
        z.resize(sq);
        w.resize(sq);
        CrossingEquations eq{sign, 0, 1, 2, 3};
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) std::tie(z[x * m + y], w[x * m + y]) = eq.outputs(vbq, x, y);

        from_zw.assign(sq, kNone);
        bool bijective = true;
        for (int x = 0; x < m && bijective; ++x)
            for (int y = 0; y < m && bijective; ++y) {
                auto& slot = from_zw[z[x * m + y] * m + w[x * m + y]];
                if (slot != kNone) bijective = false;
                slot = x * m + y;
            }
        if (!bijective) from_zw.clear();

        // known input k, output table out: missing input u with out(k,u) or out(u,k).
        auto build = [&](const std::vector<Element>& out, bool known_is_x) {
            std::vector<Element> t(sq, kNone);
            for (int k = 0; k < m; ++k)
                for (int u = 0; u < m; ++u) {
                    Element v = known_is_x ? out[k * m + u] : out[u * m + k];
                    if (t[k * m + v] != kNone) return std::vector<Element>{};
                    t[k * m + v] = u;
                }
            return t;
        };
        y_from_xz = build(z, true);
        y_from_xw = build(w, true);
        x_from_yz = build(z, false);
        x_from_yw = build(w, false);
    }
};

class GaussSolver {
public:
    GaussSolver(const VirtualBiquandle& vbq, const SemiarcGraph& graph, const GaussColoringOptions& options)
        : vbq_(vbq), graph_(graph), options_(options), pos_(vbq, 1), neg_(vbq, -1),
          values_(graph.semiarc_count, kNone), touching_(graph.semiarc_count) {
        for (std::size_t c = 0; c < graph.crossings.size(); ++c) {
            eqs_.push_back(crossing_constraints(graph.crossings[c]));
            const auto& e = eqs_.back();
            for (int v : {e.x, e.y, e.z, e.w}) {
                auto& list = touching_[v];
                if (list.empty() || list.back() != static_cast<int>(c)) list.push_back(static_cast<int>(c));
            }
        }
    }

    ColoringResult run() {
        if (options_.materialize) result_.witnesses.emplace();
        search(0);
        return std::move(result_);
    }

private:
    bool assign(int var, Element val) {
        if (values_[var] == kNone) {
            values_[var] = val;
            trail_.push_back(var);
            for (int c : touching_[var]) queue_.push_back(c);
            return true;
        }
        return values_[var] == val;
    }

    // Applies every rule of one crossing until nothing changes.
    bool settle(int c) {
        const auto& e = eqs_[c];
        const auto& t = e.sign > 0 ? pos_ : neg_;
        const int m = t.m;
        while (true) {
            const Element x = values_[e.x], y = values_[e.y], z = values_[e.z], w = values_[e.w];
            if (x != kNone && y != kNone) {
                if (!assign(e.z, t.z[x * m + y]) || !assign(e.w, t.w[x * m + y])) return false;
                return true;
            }
            if (z != kNone && w != kNone && !t.from_zw.empty()) {
                Element packed = t.from_zw[z * m + w];
                if (!assign(e.x, packed / m) || !assign(e.y, packed % m)) return false;
                continue;
            }
            if (x != kNone && z != kNone && !t.y_from_xz.empty()) {
                Element v = t.y_from_xz[x * m + z];
                if (v == kNone || !assign(e.y, v)) return false;
                continue;
            }
            if (x != kNone && w != kNone && !t.y_from_xw.empty()) {
                Element v = t.y_from_xw[x * m + w];
                if (v == kNone || !assign(e.y, v)) return false;
                continue;
            }
            if (y != kNone && z != kNone && !t.x_from_yz.empty()) {
                Element v = t.x_from_yz[y * m + z];
                if (v == kNone || !assign(e.x, v)) return false;
                continue;
            }
            if (y != kNone && w != kNone && !t.x_from_yw.empty()) {
                Element v = t.x_from_yw[y * m + w];
                if (v == kNone || !assign(e.x, v)) return false;
                continue;
            }
            return true;
        }
    }

    bool propagate() {
        while (!queue_.empty()) {
            int c = queue_.back();
            queue_.pop_back();
            if (!settle(c)) {
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            values_[trail_.back()] = kNone;
            trail_.pop_back();
        }
    }

    void search(int from) {
        int var = from;
        while (var < graph_.semiarc_count && values_[var] != kNone) ++var;
        if (var == graph_.semiarc_count) {
            if (!satisfies_all(vbq_, graph_, values_))
                throw std::logic_error("gauss solver produced an assignment violating a crossing");
            ++result_.count;
            if (options_.materialize) result_.witnesses->push_back(values_);
            return;
        }
        for (Element v = 0; v < vbq_.size(); ++v) {
            if (++decisions_ > options_.budget) throw BudgetExceeded(decisions_, options_.budget);
            const std::size_t mark = trail_.size();
            if (assign(var, v) && propagate()) search(var + 1);
            queue_.clear();
            undo(mark);
        }
    }

    const VirtualBiquandle& vbq_;
    const SemiarcGraph& graph_;
    GaussColoringOptions options_;
    SignTables pos_, neg_;
    std::vector<CrossingEquations> eqs_;
    std::vector<Element> values_;
    std::vector<std::vector<int>> touching_;
    std::vector<int> trail_;
    std::vector<int> queue_;
    std::uint64_t decisions_ = 0;
    ColoringResult result_;
};

}  // namespace

ColoringResult color_gauss(const VirtualBiquandle& vbq, const GaussCode& g, const GaussColoringOptions& options) {
    auto graph = build_semiarc_graph(g);
    return GaussSolver(vbq, graph, options).run();
}

Presentation gauss_presentation(const GaussCode& g) {
    auto graph = build_semiarc_graph(g);
    Presentation p;
    p.generator_count = graph.semiarc_count;
    auto& a = *p.arena;
    for (const auto& c : graph.crossings) {
        auto e = crossing_constraints(c);
        TermId x = a.gen(e.x + 1), y = a.gen(e.y + 1);
        TermOp first = e.sign > 0 ? TermOp::R1 : TermOp::R1bar;
        TermOp second = e.sign > 0 ? TermOp::R2 : TermOp::R2bar;
        p.relations.emplace_back(a.gen(e.z + 1), a.app(first, x, a.fpow(1, y)));
        p.relations.emplace_back(a.gen(e.w + 1), a.app(second, a.fpow(-1, x), y));
    }
    return p;
}

}  // namespace vbq
