#include "vbq/terms.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace vbq {

namespace {

const char* op_name(TermOp op) {
    switch (op) {
        case TermOp::R1: return "R1";
        case TermOp::R2: return "R2";
        case TermOp::R1bar: return "R1b";
        case TermOp::R2bar: return "R2b";
    }
    return "?";
}

Element apply_op(const ValidatedBiquandle& bq, TermOp op, Element a, Element b) {
    switch (op) {
        case TermOp::R1: return bq.r1(a, b);
        case TermOp::R2: return bq.r2(a, b);
        case TermOp::R1bar: return bq.r1bar(a, b);
        case TermOp::R2bar: return bq.r2bar(a, b);
    }
    return 0;
}

void print(const TermArena& arena, TermId id, std::ostream& os) {
    const auto& n = arena.node(id);
    switch (n.kind) {
        case TermKind::Gen: os << 'x' << n.value; break;
        case TermKind::FPow:
            os << "f^" << n.value << '(';
            print(arena, n.left, os);
            os << ')';
            break;
        case TermKind::App:
            os << op_name(n.op) << '(';
            print(arena, n.left, os);
            os << ',';
            print(arena, n.right, os);
            os << ')';
            break;
    }
}

}  // namespace

std::size_t TermArena::KeyHash::operator()(const Key& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(k.op));
    mix(static_cast<std::size_t>(static_cast<unsigned>(k.value)));
    mix(k.left);
    mix(k.right);
    return h;
}

TermId TermArena::intern(const Key& k) {
    auto [it, inserted] = index_.try_emplace(k, static_cast<TermId>(nodes_.size()));
    if (inserted) nodes_.push_back({k.kind, k.op, k.value, k.left, k.right});
    return it->second;
}

TermId TermArena::gen(int i) {
    if (i < 1) throw ParameterError("generator index must be at least 1");
    return intern({TermKind::Gen, TermOp::R1, i, 0, 0});
}

TermId TermArena::app(TermOp op, TermId left, TermId right) {
    return intern({TermKind::App, op, 0, left, right});
}

TermId TermArena::fpow(int k, TermId t) {
    const auto& inner = node(t);
    if (inner.kind == TermKind::FPow) {
        k += inner.value;
        t = inner.left;
    }
    if (k == 0) return t;
    return intern({TermKind::FPow, TermOp::R1, k, t, 0});
}

std::string TermArena::to_string(TermId id) const {
    std::ostringstream os;
    print(*this, id, os);
    return os.str();
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    for (const auto& [lhs, rhs] : relations) {
        print(*arena, lhs, os);
        os << " = ";
        print(*arena, rhs, os);
        os << '\n';
    }
    return os.str();
}

std::vector<TermId> symbolic_action(TermArena& arena, const BraidWord& b, RepKind rep) {
    b.validate();
    std::vector<TermId> t(b.strands);
    for (int i = 0; i < b.strands; ++i) t[i] = arena.gen(i + 1);
    for (const auto& g : b.letters) {
        TermId& a = t[g.index - 1];
        TermId& c = t[g.index];
        const TermId x = a, y = c;
        if (rep == RepKind::Phi) {
            switch (g.kind) {
                case GenKind::Sigma:
                    a = arena.app(TermOp::R1, x, y);
                    c = arena.app(TermOp::R2, x, y);
                    break;
                case GenKind::SigmaInv:
                    a = arena.app(TermOp::R1bar, x, y);
                    c = arena.app(TermOp::R2bar, x, y);
                    break;
                case GenKind::Rho:
                    a = arena.fpow(-1, y);
                    c = arena.fpow(1, x);
                    break;
            }
        } else {
            switch (g.kind) {
                case GenKind::Sigma:
                    a = arena.app(TermOp::R1, x, arena.fpow(1, y));
                    c = arena.app(TermOp::R2, arena.fpow(-1, x), y);
                    break;
                case GenKind::SigmaInv:
                    a = arena.app(TermOp::R1bar, x, arena.fpow(1, y));
                    c = arena.app(TermOp::R2bar, arena.fpow(-1, x), y);
                    break;
                case GenKind::Rho:
                    a = y;
                    c = x;
                    break;
            }
        }
    }
    return t;
}

Presentation make_presentation(const BraidWord& b, RepKind rep) {
    Presentation p;
    p.generator_count = b.strands;
    auto images = symbolic_action(*p.arena, b, rep);
    for (int i = 0; i < b.strands; ++i) p.relations.emplace_back(images[i], p.arena->gen(i + 1));
    return p;
}

Element eval_term(const TermArena& arena, TermId t, std::span<const Element> assignment,
                  const VirtualBiquandle& vbq) {
    TermId roots[] = {t};
    TermEvaluator ev(arena, roots);
    Element out[1];
    ev.evaluate(assignment, vbq, out);
    return out[0];
}

TermEvaluator::TermEvaluator(const TermArena& arena, std::span<const TermId> roots) : arena_(&arena) {
    constexpr std::uint32_t kUnseen = UINT32_MAX;
    std::unordered_map<TermId, std::uint32_t> slot_of;
    // Iterative post-order so deep terms do not exhaust the stack.
    for (TermId root : roots) {
        std::vector<std::pair<TermId, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [id, expanded] = stack.back();
            stack.pop_back();
            if (slot_of.count(id)) continue;
            const auto& n = arena.node(id);
            if (expanded || n.kind == TermKind::Gen) {
                slot_of[id] = static_cast<std::uint32_t>(order_.size());
                order_.push_back(id);
                continue;
            }
            stack.push_back({id, true});
            if (n.kind == TermKind::App) stack.push_back({n.right, false});
            stack.push_back({n.left, false});
        }
    }
    slot_.resize(order_.size() * 2, kUnseen);
    for (std::size_t k = 0; k < order_.size(); ++k) {
        const auto& n = arena.node(order_[k]);
        if (n.kind != TermKind::Gen) slot_[2 * k] = slot_of.at(n.left);
        if (n.kind == TermKind::App) slot_[2 * k + 1] = slot_of.at(n.right);
    }
    for (TermId root : roots) root_slots_.push_back(slot_of.at(root));
    values_.resize(order_.size());
}

void TermEvaluator::evaluate(std::span<const Element> assignment, const VirtualBiquandle& vbq,
                             std::span<Element> out) {
    const auto& bq = vbq.bq();
    for (std::size_t k = 0; k < order_.size(); ++k) {
        const auto& n = arena_->node(order_[k]);
        switch (n.kind) {
            case TermKind::Gen:
                if (n.value > static_cast<int>(assignment.size()))
                    throw ParameterError("assignment does not cover x" + std::to_string(n.value));
                values_[k] = assignment[n.value - 1];
                break;
            case TermKind::FPow: values_[k] = vbq.f_pow(values_[slot_[2 * k]], n.value); break;
            case TermKind::App:
                values_[k] = apply_op(bq, n.op, values_[slot_[2 * k]], values_[slot_[2 * k + 1]]);
                break;
        }
    }
    for (std::size_t r = 0; r < root_slots_.size(); ++r) out[r] = values_[root_slots_[r]];
}

ColoringResult count_homs(const Presentation& p, const VirtualBiquandle& vbq, const ColoringOptions& options) {
    const int m = vbq.size();
    const int g = p.generator_count;
    auto need = tuple_space_size(m, g);
    if (need > options.budget) throw BudgetExceeded(need, options.budget);

    std::vector<TermId> roots;
    for (const auto& [lhs, rhs] : p.relations) {
        roots.push_back(lhs);
        roots.push_back(rhs);
    }
    TermEvaluator ev(*p.arena, roots);
    std::vector<Element> values(roots.size());

    ColoringResult result;
    if (options.materialize) result.witnesses.emplace();
    std::vector<Element> a(g, 0);
    while (true) {
        ev.evaluate(a, vbq, values);
        bool holds = true;
        for (std::size_t k = 0; k < values.size() && holds; k += 2) holds = values[k] == values[k + 1];
        if (holds) {
            ++result.count;
            if (options.materialize) result.witnesses->push_back(a);
        }
        int pos = g - 1;
        while (pos >= 0 && ++a[pos] == m) a[pos--] = 0;
        if (pos < 0) break;
    }
    return result;
}

TermId push_f_inward(TermArena& arena, TermId t) {
    std::map<std::pair<int, TermId>, TermId> memo;
    std::function<TermId(int, TermId)> go = [&](int k, TermId id) -> TermId {
        auto key = std::pair{k, id};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const TermNode n = arena.node(id);
        TermId out;
        switch (n.kind) {
            case TermKind::Gen: out = arena.fpow(k, id); break;
            case TermKind::FPow: out = go(k + n.value, n.left); break;
            case TermKind::App: {
                TermId l = go(k, n.left);
                TermId r = go(k, n.right);
                out = arena.app(n.op, l, r);
                break;
            }
        }
        memo.emplace(key, out);
        return out;
    };
    return go(0, t);
}

TermId substitute(TermArena& arena, TermId t, std::span<const TermId> images) {
    std::map<TermId, TermId> memo;
    std::function<TermId(TermId)> go = [&](TermId id) -> TermId {
        if (auto it = memo.find(id); it != memo.end()) return it->second;
        const TermNode n = arena.node(id);
        TermId out;
        switch (n.kind) {
            case TermKind::Gen:
                if (n.value > static_cast<int>(images.size()))
                    throw ParameterError("no image for x" + std::to_string(n.value));
                out = images[n.value - 1];
                break;
            case TermKind::FPow: out = arena.fpow(n.value, go(n.left)); break;
            case TermKind::App: {
                TermId l = go(n.left);
                TermId r = go(n.right);
                out = arena.app(n.op, l, r);
                break;
            }
        }
        memo.emplace(id, out);
        return out;
    };
    return go(t);
}

Presentation theta_substitute(const Presentation& p) {
    Presentation out;
    out.generator_count = p.generator_count;
    out.arena = p.arena;  // append-only, existing ids stay valid
    auto& arena = *out.arena;
    const int n = p.generator_count;
    std::vector<TermId> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = arena.fpow(n - i, arena.gen(i));
    for (const auto& [lhs, rhs] : p.relations)
        out.relations.emplace_back(push_f_inward(arena, substitute(arena, lhs, images)),
                                   push_f_inward(arena, substitute(arena, rhs, images)));
    return out;
}

}  // namespace vbq
