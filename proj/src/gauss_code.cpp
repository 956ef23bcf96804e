#include "vbq/gauss_code.hpp"

#include <cctype>
#include <map>

#include "vbq/error.hpp"

namespace vbq {

int GaussCode::crossing_count() const {
    int tokens = 0;
    for (const auto& c : components) tokens += static_cast<int>(c.size());
    return tokens / 2;
}

void validate_gauss(const GaussCode& g) {
    if (g.components.empty()) throw StructureError("gauss code has no components");
    struct Seen {
        int over = 0, under = 0, sign = 0;
    };
    std::map<int, Seen> seen;
    for (const auto& comp : g.components)
        for (const auto& t : comp) {
            if (t.crossing < 1) throw StructureError("crossing id must be positive");
            if (t.sign != 1 && t.sign != -1) throw StructureError("crossing sign must be + or -");
            auto& s = seen[t.crossing];
            (t.passage == Passage::Over ? s.over : s.under)++;
            if (s.sign != 0 && s.sign != t.sign)
                throw StructureError("crossing " + std::to_string(t.crossing) + ": sign mismatch");
            s.sign = t.sign;
        }
    for (const auto& [id, s] : seen) {
        if (s.over > 1) throw StructureError("crossing " + std::to_string(id) + ": two Over passages");
        if (s.under > 1) throw StructureError("crossing " + std::to_string(id) + ": two Under passages");
        if (s.over != 1 || s.under != 1)
            throw StructureError("crossing " + std::to_string(id) + ": unpaired");
    }
}

GaussCode parse_gauss(std::string_view text) {
    GaussCode g;
    g.components.emplace_back();
    bool any = false;
    std::size_t i = 0;
    auto err = [&](const std::string& msg) {
        throw ParseError("gauss code, offset " + std::to_string(i) + ": " + msg);
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        any = true;
        if (c == '|') {
            g.components.emplace_back();
            ++i;
            continue;
        }
        if (c != 'O' && c != 'U') err(std::string("unexpected character '") + c + "'");
        GaussToken t{c == 'O' ? Passage::Over : Passage::Under, 0, 0};
        ++i;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (t.crossing > 100000000) err("crossing id too large");
            t.crossing = t.crossing * 10 + (text[i] - '0');
            ++i;
            ++digits;
        }
        if (digits == 0) err("expected crossing id");
        if (i >= text.size() || (text[i] != '+' && text[i] != '-')) err("expected sign");
        t.sign = text[i] == '+' ? 1 : -1;
        ++i;
        g.components.back().push_back(t);
    }
    if (!any) throw ParseError("empty gauss code");
    try {
        validate_gauss(g);
    } catch (const ParseError&) {
        throw;
    } catch (const StructureError& e) {
        throw ParseError(e.what());
    }
    return g;
}

std::string format_gauss(const GaussCode& g) {
    std::string out;
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        if (c) out += '|';
        for (const auto& t : g.components[c]) {
            out += t.passage == Passage::Over ? 'O' : 'U';
            out += std::to_string(t.crossing);
            out += t.sign > 0 ? '+' : '-';
        }
    }
    return out;
}

}  // namespace vbq
