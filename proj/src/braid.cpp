#include "vbq/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

#include "vbq/error.hpp"

namespace vbq {

Generator Generator::inverse() const {
    switch (kind) {
        case GenKind::Sigma: return sigma_inv(index);
        case GenKind::SigmaInv: return sigma(index);
        case GenKind::Rho: return rho(index);
    }
    return *this;
}

void BraidWord::validate() const {
    if (strands < 1) throw StructureError("braid must have at least one strand");
    for (const auto& g : letters)
        if (g.index < 1 || g.index >= strands)
            throw StructureError("generator " + format_generator(g) + " out of range for " +
                                 std::to_string(strands) + " strands");
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw StructureError("cannot concatenate braids on different strand counts");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
    BraidWord b;
    int max_index = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string_view tok = text.substr(i, end - i);
        i = end;

        GenKind kind;
        switch (tok.front()) {
            case 's': kind = GenKind::Sigma; break;
            case 'S': kind = GenKind::SigmaInv; break;
            case 'v': kind = GenKind::Rho; break;
            default: throw ParseError("unknown braid token '" + std::string(tok) + "'");
        }
        int index = 0;
        auto digits = tok.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
            throw ParseError("unknown braid token '" + std::string(tok) + "'");
        if (index < 1) throw ParseError("generator index must be at least 1 in '" + std::string(tok) + "'");
        if (strands && index >= *strands)
            throw ParseError("generator '" + std::string(tok) + "' out of range for " +
                             std::to_string(*strands) + " strands");
        max_index = std::max(max_index, index);
        b.letters.push_back({kind, index});
    }
    if (strands && *strands < 1) throw ParseError("strand count must be at least 1");
    b.strands = strands ? *strands : max_index + 1;
    return b;
}

std::string format_generator(const Generator& g) {
    char c = g.kind == GenKind::Sigma ? 's' : g.kind == GenKind::SigmaInv ? 'S' : 'v';
    return c + std::to_string(g.index);
}

std::string format_braid(const BraidWord& b) {
    std::string out;
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out += ' ';
        out += format_generator(b.letters[i]);
    }
    return out;
}

ClosureInfo closure_permutation(const BraidWord& b) {
    const int n = b.strands;
    // at[p] = starting strand currently at position p
    std::vector<int> at(n);
    for (int p = 0; p < n; ++p) at[p] = p;
    for (const auto& g : b.letters) std::swap(at[g.index - 1], at[g.index]);

    ClosureInfo info;
    info.permutation.assign(n, 0);
    for (int p = 0; p < n; ++p) info.permutation[at[p]] = p;

    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++info.components;
        for (int p = s; !seen[p]; p = info.permutation[p]) seen[p] = true;
    }
    return info;
}

BraidWord conjugate(const BraidWord& b, const Generator& g) {
    BraidWord out{b.strands, {}};
    out.letters.reserve(b.letters.size() + 2);
    out.letters.push_back(g);
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    out.letters.push_back(g.inverse());
    out.validate();
    return out;
}

BraidWord stabilize(const BraidWord& b, StabilizeKind kind) {
    BraidWord out = b;
    const int n = b.strands;
    out.strands = n + 1;
    switch (kind) {
        case StabilizeKind::Pos: out.letters.push_back(Generator::sigma(n)); break;
        case StabilizeKind::Neg: out.letters.push_back(Generator::sigma_inv(n)); break;
        case StabilizeKind::Virt: out.letters.push_back(Generator::rho(n)); break;
    }
    return out;
}

BraidWord random_braid(int strands, int length, std::uint64_t seed) {
    if (strands < 2) throw ParameterError("random_braid needs at least two strands");
    if (length < 0) throw ParameterError("random_braid length must be non-negative");
    std::mt19937_64 rng(seed);
    const auto choices = static_cast<std::uint64_t>(3 * (strands - 1));
    BraidWord b{strands, {}};
    for (int k = 0; k < length; ++k) {
        auto c = static_cast<int>(rng() % choices);
        b.letters.push_back({static_cast<GenKind>(c % 3), c / 3 + 1});
    }
    return b;
}

GaussCode braid_to_gauss(const BraidWord& b) {
    b.validate();
    const int n = b.strands;
    std::vector<int> crossing_of(b.letters.size(), 0);
    int next_id = 0;
    for (std::size_t k = 0; k < b.letters.size(); ++k)
        if (b.letters[k].kind != GenKind::Rho) crossing_of[k] = ++next_id;

    GaussCode code;
    std::vector<bool> started(n, false);
    for (int s = 0; s < n; ++s) {
        if (started[s]) continue;
        auto& tokens = code.components.emplace_back();
        int pos = s;
        do {
            started[pos] = true;
            for (std::size_t k = 0; k < b.letters.size(); ++k) {
                const auto& g = b.letters[k];
                const int left = g.index - 1;
                if (pos != left && pos != left + 1) continue;
                const bool from_left = pos == left;
                if (g.kind != GenKind::Rho) {
                    // sigma: left strand goes under; sigma^{-1}: left strand goes over
                    bool under = (g.kind == GenKind::Sigma) == from_left;
                    tokens.push_back({under ? Passage::Under : Passage::Over, crossing_of[k],
                                      g.kind == GenKind::Sigma ? 1 : -1});
                }
                pos = from_left ? left + 1 : left;
            }
        } while (pos != s);
    }
    return code;
}

}  // namespace vbq
