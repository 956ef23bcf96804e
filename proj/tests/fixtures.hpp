#pragma once

// Shared structures and independent brute-force oracles for the test suites.
// Oracles here never call the code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "vbq/algebra.hpp"
#include "vbq/braid.hpp"

namespace vbq::test {

inline Permutation shift(int n, int k) {
    Permutation p(n);
    for (int x = 0; x < n; ++x) p[x] = ((x + k) % n + n) % n;
    return p;
}

// Z3, alpha=1, beta=2: R(x,y) = (y, 2x+2y).
inline OperatorTable linear3() { return linear_biquandle(3, 1, 2); }

inline VirtualBiquandle linear3_shift() { return VirtualBiquandle::from(linear3(), shift(3, 1)); }

inline VirtualBiquandle wada3_double() {
    return VirtualBiquandle::from(wada_from_group(cyclic_group(3)), Permutation{0, 2, 1});
}

inline VirtualBiquandle swap3(Permutation f = {1, 2, 0}) { return VirtualBiquandle::from(swap_operator(3), std::move(f)); }

// The three structures named by the acceptance criteria.
inline std::vector<VirtualBiquandle> reference_structures() {
    return {linear3_shift(), wada3_double(), swap3()};
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Axioms written straight from their definitions, element by element.
inline bool naive_is_biquandle(int n, const std::vector<int>& r1, const std::vector<int>& r2) {
    auto R1 = [&](int x, int y) { return r1[x * n + y]; };
    auto R2 = [&](int x, int y) { return r2[x * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // (R x id)(id x R)(R x id), rightmost first
                int a1 = R1(x, y), a2 = R2(x, y), a3 = z;
                int b2 = R1(a2, a3), b3 = R2(a2, a3);
                int l1 = R1(a1, b2), l2 = R2(a1, b2), l3 = b3;
                // (id x R)(R x id)(id x R)
                int c2 = R1(y, z), c3 = R2(y, z);
                int d1 = R1(x, c2), d2 = R2(x, c2);
                int m2 = R1(d2, c3), m3 = R2(d2, c3);
                if (l1 != d1 || l2 != m2 || l3 != m3) return false;
            }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int hits = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) hits += (R1(x, y) == u && R2(x, y) == v);
            if (hits != 1) return false;
        }
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            int hits = 0;
            for (int y = 0; y < n; ++y) hits += R1(x, y) == z;
            if (hits != 1) return false;
        }
    for (int y = 0; y < n; ++y)
        for (int w = 0; w < n; ++w) {
            int hits = 0;
            for (int x = 0; x < n; ++x) hits += R2(x, y) == w;
            if (hits != 1) return false;
        }
    for (int a = 0; a < n; ++a) {
        int hits = 0;
        for (int x = 0; x < n; ++x) hits += (R1(x, a) == x && R2(x, a) == a);
        if (hits != 1) return false;
    }
    return true;
}

// All tables over {0..n-1} (n^(n*n) of them) for tiny n.
inline std::vector<std::vector<int>> all_tables(int n) {
    const int cells = n * n;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= n;
    std::vector<std::vector<int>> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<int> t(cells);
        std::uint64_t c = code;
        for (int i = 0; i < cells; ++i) {
            t[i] = static_cast<int>(c % n);
            c /= n;
        }
        out.push_back(std::move(t));
    }
    return out;
}

// Brute-force isomorphism test between two (op, f) structures.
inline bool isomorphic(const OperatorTable& a, const Permutation& fa, const OperatorTable& b, const Permutation& fb) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    for (const auto& p : all_permutations(n)) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (p[fa[x]] != fb[p[x]]) ok = false;
            for (int y = 0; y < n && ok; ++y)
                ok = p[a.r1(x, y)] == b.r1(p[x], p[y]) && p[a.r2(x, y)] == b.r2(p[x], p[y]);
        }
        if (ok) return true;
    }
    return false;
}

// Deterministic pool of random braids with 2..max_strands strands and length 0..max_len.
inline std::vector<BraidWord> braid_pool(int count, int max_strands, int max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BraidWord> out;
    for (int i = 0; i < count; ++i) {
        int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_strands - 1));
        int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
        out.push_back(random_braid(n, len, rng()));
    }
    return out;
}

inline std::vector<std::vector<int>> all_tuples(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(n, 0);
    while (true) {
        out.push_back(t);
        int p = n - 1;
        while (p >= 0 && ++t[p] == m) t[p--] = 0;
        if (p < 0) return out;
    }
}

}  // namespace vbq::test
