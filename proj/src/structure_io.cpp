#include "vbq/structure_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace vbq {

namespace {

struct Line {
    int number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++number;
        auto t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        out.push_back({number, t});
    }
    return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
    throw ParseError("line " + std::to_string(l.number) + ": " + msg);
}

std::vector<int> parse_ints(const Line& l) {
    std::vector<int> out;
    std::string_view s = l.text;
    while (true) {
        s = trim(s);
        if (s.empty()) break;
        auto sp = s.find_first_of(" \t");
        auto tok = s.substr(0, sp);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(l, "expected integer, got '" + std::string(tok) + "'");
        out.push_back(v);
        if (sp == std::string_view::npos) break;
        s = s.substr(sp);
    }
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }
    const Line& next(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what);
        return lines_[pos_++];
    }
    void expect(std::string_view keyword) {
        const auto& l = next(std::string(keyword).c_str());
        if (l.text != keyword) fail(l, "expected '" + std::string(keyword) + "', got '" + std::string(l.text) + "'");
    }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

std::vector<std::vector<int>> read_rows(Cursor& c, int n, const char* name) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
        const auto& l = c.next(name);
        auto row = parse_ints(l);
        if (static_cast<int>(row.size()) != n)
            fail(l, std::string(name) + " row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        for (int v : row)
            if (v < 0 || v >= n) fail(l, std::string(name) + " entry " + std::to_string(v) + " out of range");
        rows.push_back(std::move(row));
    }
    return rows;
}

StructureFile parse_one(Cursor& c) {
    c.expect("vbq");
    const auto& size_line = c.next("size");
    if (size_line.text.substr(0, 5) != "size ") fail(size_line, "expected 'size <n>'");
    Line rest{size_line.number, size_line.text.substr(5)};
    auto sz = parse_ints(rest);
    if (sz.size() != 1 || sz[0] < 1) fail(size_line, "size must be a positive integer");
    const int n = sz[0];

    c.expect("R1");
    auto r1 = read_rows(c, n, "R1");
    c.expect("R2");
    auto r2 = read_rows(c, n, "R2");

    StructureFile out{OperatorTable::from_rows(r1, r2), std::nullopt};
    if (!c.done() && c.peek().text == "f") {
        c.next("f");
        const auto& l = c.next("f values");
        auto f = parse_ints(l);
        try {
            check_permutation(f, n);
        } catch (const StructureError& e) {
            fail(l, e.what());
        }
        out.f = std::move(f);
    }
    return out;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
    Cursor c(content_lines(text));
    auto s = parse_one(c);
    if (!c.done()) fail(c.peek(), "trailing content '" + std::string(c.peek().text) + "'");
    return s;
}

std::vector<StructureFile> parse_catalog(std::string_view text) {
    Cursor c(content_lines(text));
    std::vector<StructureFile> out;
    while (!c.done()) out.push_back(parse_one(c));
    return out;
}

std::string format_structure(const OperatorTable& op, const std::optional<Permutation>& f) {
    const int n = op.size();
    std::ostringstream os;
    os << "vbq\nsize " << n << "\n";
    for (const auto* t : {&op.r1_table(), &op.r2_table()}) {
        os << (t == &op.r1_table() ? "R1\n" : "R2\n");
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) os << (y ? " " : "") << (*t)[x * n + y];
            os << '\n';
        }
    }
    if (f) {
        os << "f\n";
        for (std::size_t i = 0; i < f->size(); ++i) os << (i ? " " : "") << (*f)[i];
        os << '\n';
    }
    return os.str();
}

StructureFile read_structure_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

}  // namespace vbq
