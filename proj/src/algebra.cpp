#include "vbq/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace vbq {

namespace {

std::string join(const std::vector<Element>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void check_table(int n, const Table& t, const char* name) {
    const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (t.size() != expected)
        throw StructureError(std::string(name) + ": expected " + std::to_string(expected) +
                             " entries, got " + std::to_string(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < 0 || t[i] >= n)
            throw StructureError(std::string(name) + ": entry " + std::to_string(t[i]) +
                                 " at (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                                 ") out of range 0.." + std::to_string(n - 1));
}

// Components of (R x id)(id x R)(R x id) and (id x R)(R x id)(id x R) on (x,y,z),
// maps applied right to left.
struct YbeSides {
    Element lhs[3];
    Element rhs[3];
};

YbeSides ybe_sides(const OperatorTable& op, Element x, Element y, Element z) {
    YbeSides s{};
    // R x id first
    Element a = op.r1(x, y), b = op.r2(x, y);
    Element c = op.r1(b, z), d = op.r2(b, z);
    s.lhs[0] = op.r1(a, c);
    s.lhs[1] = op.r2(a, c);
    s.lhs[2] = d;
    // id x R first
    Element p = op.r1(y, z), q = op.r2(y, z);
    Element u = op.r1(x, p), v = op.r2(x, p);
    s.rhs[0] = u;
    s.rhs[1] = op.r1(v, q);
    s.rhs[2] = op.r2(v, q);
    return s;
}

AxiomVerdict check_ybe(const OperatorTable& op) {
    AxiomVerdict v{Axiom::YangBaxter};
    const int n = op.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto s = ybe_sides(op, x, y, z);
                if (!std::equal(s.lhs, s.lhs + 3, s.rhs)) {
                    v.pass = false;
                    v.witness = {x, y, z};
                    std::ostringstream os;
                    os << "lhs (" << s.lhs[0] << "," << s.lhs[1] << "," << s.lhs[2] << ") != rhs ("
                       << s.rhs[0] << "," << s.rhs[1] << "," << s.rhs[2] << ")";
                    v.detail = os.str();
                    return v;
                }
            }
    return v;
}

AxiomVerdict check_invertible(const OperatorTable& op) {
    AxiomVerdict v{Axiom::Invertible};
    const int n = op.size();
    std::vector<int> seen(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int key = op.r1(x, y) * n + op.r2(x, y);
            if (seen[key] >= 0) {
                v.pass = false;
                v.witness = {seen[key] / n, seen[key] % n, x, y};
                v.detail = "R(" + std::to_string(seen[key] / n) + "," + std::to_string(seen[key] % n) +
                           ") = R(" + std::to_string(x) + "," + std::to_string(y) + ")";
                return v;
            }
            seen[key] = x * n + y;
        }
    return v;
}

// Row (left) or column (right) sections must be permutations.
AxiomVerdict check_sideways(const OperatorTable& op, bool left) {
    AxiomVerdict v{left ? Axiom::LeftInvertible : Axiom::RightInvertible};
    const int n = op.size();
    for (int fixed = 0; fixed < n; ++fixed) {
        std::vector<int> seen(n, -1);
        for (int free = 0; free < n; ++free) {
            Element val = left ? op.r1(fixed, free) : op.r2(free, fixed);
            if (seen[val] >= 0) {
                v.pass = false;
                v.witness = {fixed, seen[val], free};
                v.detail = left ? "R1(" + std::to_string(fixed) + ",.) not injective"
                                : "R2(.," + std::to_string(fixed) + ") not injective";
                return v;
            }
            seen[val] = free;
        }
    }
    return v;
}

AxiomVerdict check_type_one(const OperatorTable& op, bool dual) {
    AxiomVerdict v{dual ? Axiom::TypeIDual : Axiom::TypeI};
    const int n = op.size();
    for (int a = 0; a < n; ++a) {
        std::vector<Element> hits;
        for (int x = 0; x < n && hits.size() < 2; ++x) {
            bool fixed = dual ? (op.r1(a, x) == a && op.r2(a, x) == x)
                              : (op.r1(x, a) == x && op.r2(x, a) == a);
            if (fixed) hits.push_back(x);
        }
        if (hits.size() != 1) {
            v.pass = false;
            v.witness = {a};
            v.witness.insert(v.witness.end(), hits.begin(), hits.end());
            v.detail = "a=" + std::to_string(a) +
                       (hits.empty() ? " has no fixed pair" : " has more than one fixed pair");
            return v;
        }
    }
    return v;
}

AxiomVerdict check_automorphism(const OperatorTable& op, std::span<const Element> f) {
    AxiomVerdict v{Axiom::Automorphism};
    const int n = op.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (op.r1(f[x], f[y]) != f[op.r1(x, y)] || op.r2(f[x], f[y]) != f[op.r2(x, y)]) {
                v.pass = false;
                v.witness = {x, y};
                v.detail = "f does not commute with R at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")";
                return v;
            }
    return v;
}

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

OperatorTable::OperatorTable(int n, Table r1, Table r2) : n_(n), r1_(std::move(r1)), r2_(std::move(r2)) {
    if (n < 1) throw StructureError("carrier size must be at least 1");
    check_table(n, r1_, "R1");
    check_table(n, r2_, "R2");
}

OperatorTable OperatorTable::from_rows(const std::vector<std::vector<Element>>& r1_rows,
                                       const std::vector<std::vector<Element>>& r2_rows) {
    const int n = static_cast<int>(r1_rows.size());
    if (r2_rows.size() != r1_rows.size()) throw StructureError("R1 and R2 have different row counts");
    Table r1, r2;
    for (const auto* rows : {&r1_rows, &r2_rows}) {
        Table& out = rows == &r1_rows ? r1 : r2;
        for (const auto& row : *rows) {
            if (static_cast<int>(row.size()) != n)
                throw StructureError("table is not square: row of length " + std::to_string(row.size()) +
                                     " for size " + std::to_string(n));
            out.insert(out.end(), row.begin(), row.end());
        }
    }
    return OperatorTable(n, std::move(r1), std::move(r2));
}

OperatorTable OperatorTable::relabeled(std::span<const Element> p) const {
    Table a(r1_.size()), b(r2_.size());
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            a[p[x] * n_ + p[y]] = p[r1(x, y)];
            b[p[x] * n_ + p[y]] = p[r2(x, y)];
        }
    return OperatorTable(n_, std::move(a), std::move(b));
}

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::YangBaxter: return "yang-baxter";
        case Axiom::Invertible: return "invertible";
        case Axiom::LeftInvertible: return "left-invertible";
        case Axiom::RightInvertible: return "right-invertible";
        case Axiom::TypeI: return "type I";
        case Axiom::TypeIDual: return "type I (dual form)";
        case Axiom::Automorphism: return "automorphism";
    }
    return "unknown";
}

bool AxiomReport::ok() const noexcept {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; });
}

const AxiomVerdict* AxiomReport::find(Axiom a) const noexcept {
    for (const auto& v : verdicts)
        if (v.axiom == a) return &v;
    return nullptr;
}

std::string AxiomReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : verdicts) {
        os << axiom_name(v.axiom) << ": " << (v.pass ? "pass" : "FAIL");
        if (!v.pass) os << " witness (" << join(v.witness) << ") " << v.detail;
        os << '\n';
    }
    return os.str();
}

AxiomFailure::AxiomFailure(AxiomReport report)
    : std::runtime_error("axiom check failed:\n" + report.to_string()), report_(std::move(report)) {}

AxiomReport validate_biquandle(const OperatorTable& op) {
    AxiomReport r;
    r.verdicts.push_back(check_ybe(op));
    r.verdicts.push_back(check_invertible(op));
    r.verdicts.push_back(check_sideways(op, true));
    r.verdicts.push_back(check_sideways(op, false));
    r.verdicts.push_back(check_type_one(op, false));
    r.verdicts.push_back(check_type_one(op, true));
    return r;
}

bool is_biquandle(const OperatorTable& op) {
    return check_sideways(op, true).pass && check_sideways(op, false).pass &&
           check_invertible(op).pass && check_type_one(op, false).pass &&
           check_type_one(op, true).pass && check_ybe(op).pass;
}

std::pair<Table, Table> invert_operator(const OperatorTable& op) {
    const int n = op.size();
    Table a(static_cast<std::size_t>(n) * n, -1), b(a.size(), -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int key = op.r1(x, y) * n + op.r2(x, y);
            if (a[key] >= 0)
                throw StructureError("R is not injective: R(" + std::to_string(a[key]) + "," +
                                     std::to_string(b[key]) + ") = R(" + std::to_string(x) + "," +
                                     std::to_string(y) + ")");
            a[key] = x;
            b[key] = y;
        }
    return {std::move(a), std::move(b)};
}

ValidatedBiquandle ValidatedBiquandle::from(OperatorTable op) {
    AxiomReport report = validate_biquandle(op);
    if (!report.ok()) throw AxiomFailure(std::move(report));

    ValidatedBiquandle bq;
    const int n = op.size();
    std::tie(bq.r1bar_, bq.r2bar_) = invert_operator(op);
    bq.left_div_.assign(static_cast<std::size_t>(n) * n, 0);
    bq.right_div_.assign(bq.left_div_.size(), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bq.left_div_[x * n + op.r1(x, y)] = y;
            bq.right_div_[y * n + op.r2(x, y)] = x;
        }
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            if (op.r1(x, a) == x && op.r2(x, a) == a) bq.fixed_pairs_.emplace_back(a, x);
    bq.op_ = std::move(op);
    return bq;
}

void check_permutation(std::span<const Element> f, int n) {
    if (static_cast<int>(f.size()) != n)
        throw StructureError("f has " + std::to_string(f.size()) + " entries, expected " +
                             std::to_string(n));
    std::vector<bool> seen(n, false);
    for (Element v : f) {
        if (v < 0 || v >= n) throw StructureError("f entry " + std::to_string(v) + " out of range");
        if (seen[v]) throw StructureError("f is not a permutation: " + std::to_string(v) + " repeats");
        seen[v] = true;
    }
}

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation inverse_permutation(std::span<const Element> f) {
    Permutation inv(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = static_cast<Element>(i);
    return inv;
}

AxiomReport validate_virtual(const OperatorTable& op, std::span<const Element> f) {
    check_permutation(f, op.size());
    AxiomReport r = validate_biquandle(op);
    r.verdicts.push_back(check_automorphism(op, f));
    return r;
}

bool is_automorphism(const OperatorTable& op, std::span<const Element> f) {
    return check_automorphism(op, f).pass;
}

VirtualBiquandle VirtualBiquandle::from(OperatorTable op, Permutation f) {
    AxiomReport report = validate_virtual(op, f);
    if (!report.ok()) throw AxiomFailure(std::move(report));
    auto f_inv = inverse_permutation(f);
    return VirtualBiquandle(ValidatedBiquandle::from(std::move(op)), std::move(f), std::move(f_inv));
}

VirtualBiquandle VirtualBiquandle::plain(OperatorTable op) {
    auto id = identity_permutation(op.size());
    return from(std::move(op), std::move(id));
}

Element VirtualBiquandle::f_pow(Element x, int k) const noexcept {
    for (; k > 0; --k) x = f_[x];
    for (; k < 0; ++k) x = f_inv_[x];
    return x;
}

OperatorTable derive_vr(const VirtualBiquandle& vbq) {
    const auto& op = vbq.op();
    return OperatorTable::tabulate(vbq.size(), [&](Element x, Element y) {
        return std::pair{op.r1(x, vbq.f(y)), op.r2(vbq.f_inv(x), y)};
    });
}

bool is_homomorphism(std::span<const Element> h, const VirtualBiquandle& src,
                     const VirtualBiquandle& dst) {
    const int n = src.size();
    if (static_cast<int>(h.size()) != n) return false;
    for (int x = 0; x < n; ++x) {
        if (h[x] < 0 || h[x] >= dst.size()) return false;
        if (h[src.f(x)] != dst.f(h[x])) return false;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (h[src.op().r1(x, y)] != dst.op().r1(h[x], h[y]) ||
                h[src.op().r2(x, y)] != dst.op().r2(h[x], h[y]))
                return false;
    return true;
}

GroupTable make_group(int n, Table cayley) {
    if (n < 1) throw StructureError("group: order must be at least 1");
    check_table(n, cayley, "group table");
    GroupTable g{n, std::move(cayley), -1, Table(n, -1)};
    for (int e = 0; e < n && g.identity < 0; ++e) {
        bool is_id = true;
        for (int a = 0; a < n && is_id; ++a) is_id = g(e, a) == a && g(a, e) == a;
        if (is_id) g.identity = e;
    }
    if (g.identity < 0) throw StructureError("group: identity axiom fails (no two-sided identity)");
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g(a, b) == g.identity && g(b, a) == g.identity) {
                g.inverse[a] = b;
                break;
            }
        if (g.inverse[a] < 0)
            throw StructureError("group: inverse axiom fails for element " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g(g(a, b), c) != g(a, g(b, c)))
                    throw StructureError("group: associativity fails at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");
    return g;
}

GroupTable cyclic_group(int n) {
    Table t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return make_group(n, std::move(t));
}

GroupTable symmetric_group(int k) {
    std::vector<Permutation> elems;
    Permutation p = identity_permutation(k);
    do elems.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    Table t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Permutation c(k);
            for (int i = 0; i < k; ++i) c[i] = elems[a][elems[b][i]];  // a after b
            t[a * n + b] = index[c];
        }
    return make_group(n, std::move(t));
}

OperatorTable wada_from_group(const GroupTable& g) {
    return OperatorTable::tabulate(g.n, [&](Element x, Element y) {
        Element first = g(g(g.inverse[x], g.inverse[y]), x);
        Element second = g(g(y, y), x);
        return std::pair{first, second};
    });
}

OperatorTable wada_from_group(int n, const Table& cayley) {
    return wada_from_group(make_group(n, cayley));
}

OperatorTable linear_biquandle(int n, int alpha, int beta) {
    if (n < 1) throw ParameterError("modulus must be at least 1");
    if (std::gcd(mod(alpha, n), static_cast<long long>(n)) != 1 && n > 1)
        throw ParameterError("alpha=" + std::to_string(alpha) + " is not a unit mod " + std::to_string(n));
    if (std::gcd(mod(beta, n), static_cast<long long>(n)) != 1 && n > 1)
        throw ParameterError("beta=" + std::to_string(beta) + " is not a unit mod " + std::to_string(n));
    if (mod((1LL - alpha) * (1LL - beta), n) != 0)
        throw ParameterError("(1-alpha)(1-beta) = " + std::to_string(mod((1LL - alpha) * (1LL - beta), n)) +
                             " != 0 mod " + std::to_string(n));
    return OperatorTable::tabulate(n, [&](Element x, Element y) {
        auto first = static_cast<Element>(mod((1LL - alpha) * x + 1LL * alpha * y, n));
        auto second = static_cast<Element>(mod(1LL * beta * x + (1LL - beta) * y, n));
        return std::pair{first, second};
    });
}

OperatorTable swap_operator(int n) {
    return OperatorTable::tabulate(n, [](Element x, Element y) { return std::pair{y, x}; });
}

}  // namespace vbq
