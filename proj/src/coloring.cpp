#include "vbq/coloring.hpp"

#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

namespace vbq {

namespace {

std::string tuple_string(const StrandTuple& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

// Calls fn(tuple) for each tuple in X^n with first coordinate `first`, in lexicographic order.
template <typename Fn>
void for_each_with_first(int carrier, int strands, Element first, Fn&& fn) {
    StrandTuple t(strands, 0);
    t[0] = first;
    while (true) {
        fn(t);
        int p = strands - 1;
        while (p >= 1 && ++t[p] == carrier) t[p--] = 0;
        if (p < 1) return;
    }
}

template <typename Fn>
void for_each_tuple(int carrier, int strands, Fn&& fn) {
    for (Element v = 0; v < carrier; ++v) for_each_with_first(carrier, strands, v, fn);
}

void check_budget(int carrier, int strands, std::uint64_t budget) {
    auto need = tuple_space_size(carrier, strands);
    if (need > budget) throw BudgetExceeded(need, budget);
}

}  // namespace

std::string rep_name(RepKind r) { return r == RepKind::Phi ? "phi" : "psi"; }

void act_generator(const VirtualBiquandle& vbq, const Generator& g, RepKind rep, std::span<Element> t) {
    Element& a = t[g.index - 1];
    Element& b = t[g.index];
    const auto& bq = vbq.bq();
    const Element x = a, y = b;
    if (rep == RepKind::Phi) {
        switch (g.kind) {
            case GenKind::Sigma: a = bq.r1(x, y); b = bq.r2(x, y); break;
            case GenKind::SigmaInv: a = bq.r1bar(x, y); b = bq.r2bar(x, y); break;
            case GenKind::Rho: a = vbq.f_inv(y); b = vbq.f(x); break;
        }
    } else {
        switch (g.kind) {
            case GenKind::Sigma: a = bq.r1(x, vbq.f(y)); b = bq.r2(vbq.f_inv(x), y); break;
            case GenKind::SigmaInv: a = bq.r1bar(x, vbq.f(y)); b = bq.r2bar(vbq.f_inv(x), y); break;
            case GenKind::Rho: a = y; b = x; break;
        }
    }
}

StrandTuple act_generator(const VirtualBiquandle& vbq, const Generator& g, RepKind rep, StrandTuple t) {
    act_generator(vbq, g, rep, std::span<Element>(t));
    return t;
}

void act_braid(const VirtualBiquandle& vbq, const BraidWord& b, RepKind rep, std::span<Element> t) {
    for (const auto& g : b.letters) act_generator(vbq, g, rep, t);
}

StrandTuple act_braid(const VirtualBiquandle& vbq, const BraidWord& b, RepKind rep, StrandTuple t) {
    act_braid(vbq, b, rep, std::span<Element>(t));
    return t;
}

StrandTuple theta(const VirtualBiquandle& vbq, const StrandTuple& t) {
    const int n = static_cast<int>(t.size());
    StrandTuple out(t.size());
    for (int i = 0; i < n; ++i) out[i] = vbq.f_pow(t[i], n - 1 - i);
    return out;
}

StrandTuple theta_inv(const VirtualBiquandle& vbq, const StrandTuple& t) {
    const int n = static_cast<int>(t.size());
    StrandTuple out(t.size());
    for (int i = 0; i < n; ++i) out[i] = vbq.f_pow(t[i], -(n - 1 - i));
    return out;
}

std::uint64_t tuple_space_size(int carrier, int strands) {
    std::uint64_t total = 1;
    for (int i = 0; i < strands; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(carrier))
            return std::numeric_limits<std::uint64_t>::max();
        total *= static_cast<std::uint64_t>(carrier);
    }
    return total;
}

ColoringResult count_colorings(const VirtualBiquandle& vbq, const BraidWord& b, RepKind rep,
                               const ColoringOptions& options) {
    b.validate();
    const int m = vbq.size();
    const int n = b.strands;
    check_budget(m, n, options.budget);

    // One slot per first-coordinate value; merged in order so the result is
    // independent of scheduling.
    std::vector<std::uint64_t> counts(m, 0);
    std::vector<std::vector<StrandTuple>> found(m);
    std::atomic<int> next{0};

    auto work = [&] {
        StrandTuple image(n);
        for (int v = next++; v < m; v = next++) {
            for_each_with_first(m, n, v, [&](const StrandTuple& t) {
                std::copy(t.begin(), t.end(), image.begin());
                act_braid(vbq, b, rep, std::span<Element>(image));
                if (image == t) {
                    ++counts[v];
                    if (options.materialize) found[v].push_back(t);
                }
            });
        }
    };

    const int workers = std::max(1, std::min(options.workers, m));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    ColoringResult result;
    for (auto c : counts) result.count += c;
    if (options.materialize) {
        result.witnesses.emplace();
        for (auto& part : found)
            for (auto& t : part) result.witnesses->push_back(std::move(t));
    }
    return result;
}

std::string BridgeReport::to_string() const {
    std::ostringstream os;
    os << "phi-count " << phi_count << "\n"
       << "psi-count " << psi_count << "\n"
       << "vr-count " << vr_count << "\n"
       << "theta-bijection " << (mechanism_ok ? "ok" : "FAIL") << "\n";
    if (counterexample) os << "counterexample " << tuple_string(*counterexample) << "\n";
    os << (ok() ? "equal" : "MISMATCH") << "\n";
    return os.str();
}

BridgeReport verify_bridge(const VirtualBiquandle& vbq, const BraidWord& b, const ColoringOptions& options) {
    ColoringOptions with_witnesses = options;
    with_witnesses.materialize = true;
    BridgeReport r;
    auto phi = count_colorings(vbq, b, RepKind::Phi, with_witnesses);
    r.phi_count = phi.count;
    ColoringOptions counts_only = options;
    counts_only.materialize = false;
    r.psi_count = count_colorings(vbq, b, RepKind::Psi, counts_only).count;

    auto vr = VirtualBiquandle::plain(derive_vr(vbq));
    r.vr_count = count_colorings(vr, b, RepKind::Phi, counts_only).count;

    for (const auto& t : *phi.witnesses) {
        auto image = theta(vbq, t);
        if (act_braid(vbq, b, RepKind::Psi, image) != image) {
            r.mechanism_ok = false;
            r.counterexample = t;
            break;
        }
    }
    return r;
}

std::vector<Relation> virtual_braid_relations(int strands) {
    // Group products are written with the rightmost letter acting first, so
    // each side is reversed into application order.
    auto word = [strands](std::initializer_list<Generator> product) {
        BraidWord w{strands, {}};
        w.letters.assign(std::rbegin(product), std::rend(product));
        return w;
    };
    using G = Generator;
    std::vector<Relation> out;
    const int n = strands;
    for (int i = 1; i + 1 <= n - 1; ++i)
        out.push_back({"sigma braid", word({G::sigma(i), G::sigma(i + 1), G::sigma(i)}),
                       word({G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)})});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            out.push_back({"sigma far commutation", word({G::sigma(i), G::sigma(j)}),
                           word({G::sigma(j), G::sigma(i)})});
    for (int i = 1; i + 1 <= n - 1; ++i)
        out.push_back({"rho braid", word({G::rho(i), G::rho(i + 1), G::rho(i)}),
                       word({G::rho(i + 1), G::rho(i), G::rho(i + 1)})});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            out.push_back({"rho far commutation", word({G::rho(i), G::rho(j)}), word({G::rho(j), G::rho(i)})});
    for (int i = 1; i <= n - 1; ++i)
        out.push_back({"rho involution", word({G::rho(i), G::rho(i)}), word({})});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            if (std::abs(i - j) >= 2)
                out.push_back({"mixed far commutation", word({G::sigma(i), G::rho(j)}),
                               word({G::rho(j), G::sigma(i)})});
    for (int i = 1; i + 1 <= n - 1; ++i)
        out.push_back({"mixed", word({G::rho(i), G::rho(i + 1), G::sigma(i)}),
                       word({G::sigma(i + 1), G::rho(i), G::rho(i + 1)})});
    return out;
}

std::string RepresentationReport::to_string() const {
    std::ostringstream os;
    os << "relations checked " << relations_checked << "\n";
    if (violated)
        os << "violated " << violated->family << ": [" << format_braid(violated->lhs) << "] != ["
           << format_braid(violated->rhs) << "] at " << tuple_string(witness) << "\n";
    else
        os << "all relations hold\n";
    return os.str();
}

RepresentationReport check_representation(const VirtualBiquandle& vbq, int strands, RepKind rep,
                                          std::uint64_t budget) {
    check_budget(vbq.size(), strands, budget);
    RepresentationReport report;
    for (const auto& rel : virtual_braid_relations(strands)) {
        ++report.relations_checked;
        bool bad = false;
        for_each_tuple(vbq.size(), strands, [&](const StrandTuple& t) {
            if (bad) return;
            if (act_braid(vbq, rel.lhs, rep, t) != act_braid(vbq, rel.rhs, rep, t)) {
                bad = true;
                report.witness = t;
            }
        });
        if (bad) {
            report.violated = rel;
            return report;
        }
    }
    return report;
}

}  // namespace vbq
