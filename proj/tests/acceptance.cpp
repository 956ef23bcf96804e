// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "vbq/cli.hpp"
#include "vbq/coloring.hpp"
#include "vbq/enumeration.hpp"
#include "vbq/gauss.hpp"
#include "vbq/structure_io.hpp"
#include "vbq/terms.hpp"

using namespace vbq;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

// The three structures of the representation and bridge criteria, with the
// swap operator taken under every permutation f.
std::vector<VirtualBiquandle> structures() {
    std::vector<VirtualBiquandle> out{test::linear3_shift(), test::wada3_double()};
    for (const auto& f : test::all_permutations(3)) out.push_back(test::swap3(f));
    return out;
}

Verdict validator_matches_oracle() {
    int agree = 0, accepted = 0;
    for (const auto& r1 : test::all_tables(2))
        for (const auto& r2 : test::all_tables(2)) {
            OperatorTable op(2, r1, r2);
            bool expect = test::naive_is_biquandle(2, r1, r2);
            if (validate_biquandle(op).ok() != expect || is_biquandle(op) != expect)
                return fail("disagreement on a size 2 table");
            agree++;
            accepted += expect;
        }
    return {agree == 256, std::to_string(agree) + " candidates, " + std::to_string(accepted) + " accepted"};
}

Verdict vr_closure() {
    int checked = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& s : enumerate_virtual(n)) {
            auto vr = derive_vr(VirtualBiquandle::from(s.op, s.f));
            if (!validate_biquandle(vr).ok() || !test::naive_is_biquandle(n, vr.r1_table(), vr.r2_table()))
                return fail("derived operator is not a biquandle");
            if (!is_automorphism(vr, s.f)) return fail("f is not an automorphism of the derived operator");
            ++checked;
        }
    return {true, std::to_string(checked) + " virtual biquandles"};
}

Verdict representations() {
    std::size_t relations = 0;
    for (const auto& v : structures())
        for (int n : {3, 4})
            for (auto rep : {RepKind::Phi, RepKind::Psi}) {
                auto r = check_representation(v, n, rep);
                if (!r.ok()) return fail(r.to_string());
                relations += r.relations_checked;
            }
    return {true, std::to_string(relations) + " relation instances"};
}

Verdict bridge() {
    auto braids = test::braid_pool(200, 4, 12, 20240601);
    int checked = 0;
    for (const auto& v : structures())
        for (const auto& b : braids) {
            auto r = verify_bridge(v, b);
            if (!r.ok()) return fail("[" + format_braid(b) + "] " + r.to_string());
            ++checked;
        }
    return {true, std::to_string(checked) + " braid/structure pairs"};
}

Verdict move_invariance() {
    int checked = 0;
    for (const auto& b : test::braid_pool(100, 4, 10, 20240602))
        for (const auto& v : structures())
            for (auto rep : {RepKind::Phi, RepKind::Psi}) {
                auto base = count_colorings(v, b, rep).count;
                std::vector<BraidWord> moved;
                for (int i = 1; i < b.strands; ++i)
                    for (auto g : {Generator::sigma(i), Generator::sigma_inv(i), Generator::rho(i)})
                        moved.push_back(conjugate(b, g));
                for (auto k : {StabilizeKind::Pos, StabilizeKind::Neg, StabilizeKind::Virt})
                    moved.push_back(stabilize(b, k));
                for (const auto& m : moved) {
                    if (count_colorings(v, m, rep).count != base)
                        return fail("[" + format_braid(b) + "] changed under [" + format_braid(m) + "]");
                    ++checked;
                }
            }
    return {true, std::to_string(checked) + " moved braids"};
}

Verdict gauss_consistency() {
    int checked = 0;
    for (const auto& b : test::braid_pool(100, 4, 12, 20240603))
        for (const auto& v : structures()) {
            auto g = braid_to_gauss(b);
            auto got = color_gauss(v, g).count;
            auto want = count_colorings(v, b, RepKind::Psi).count;
            if (got != want)
                return fail("[" + format_braid(b) + "] gauss " + std::to_string(got) + " psi " + std::to_string(want));
            ++checked;
        }
    return {true, std::to_string(checked) + " braid/structure pairs"};
}

Verdict presentation_coherence() {
    int checked = 0;
    for (const auto& b : test::braid_pool(100, 4, 12, 20240604)) {
        auto phi = make_presentation(b, RepKind::Phi);
        auto psi = make_presentation(b, RepKind::Psi);
        auto sub = theta_substitute(phi);
        for (const auto& v : structures()) {
            auto fixed = count_colorings(v, b, RepKind::Phi).count;
            auto phi_homs = count_homs(phi, v).count;
            auto sub_homs = count_homs(sub, v).count;
            auto psi_homs = count_homs(psi, v).count;
            if (phi_homs != fixed || sub_homs != psi_homs)
                return fail("[" + format_braid(b) + "] phi " + std::to_string(phi_homs) + "/" + std::to_string(fixed) +
                            " theta " + std::to_string(sub_homs) + "/" + std::to_string(psi_homs));
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " braid/structure pairs"};
}

Verdict type_one() {
    int checked = 0;
    for (int m = 1; m <= 4; ++m)
        for (const auto& s : enumerate_virtual(m, {.up_to_iso = true})) {
            auto v = VirtualBiquandle::from(s.op, s.f);
            for (auto rep : {RepKind::Phi, RepKind::Psi}) {
                if (count_colorings(v, parse_braid("s1"), rep).count != static_cast<std::uint64_t>(m))
                    return fail("unknot count differs from the carrier size");
                std::uint64_t expect = 1;
                for (int k = 1; k <= 4; ++k) {
                    expect *= m;
                    if (count_colorings(v, parse_braid("", k), rep).count != expect)
                        return fail("trivial braid count differs from m^k");
                }
            }
            ++checked;
        }
    return {true, std::to_string(checked) + " structures"};
}

Verdict determinism() {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "vbq_acceptance";
    fs::create_directories(dir);
    auto save = [&](const std::string& name, const std::string& text) {
        auto p = (dir / name).string();
        std::ofstream(p) << text;
        return p;
    };
    auto lin = save("lin3f.vbq", format_structure(test::linear3(), test::shift(3, 1)));
    auto wada = save("wada3.vbq", format_structure(wada_from_group(cyclic_group(3)), Permutation{0, 2, 1}));
    auto bad = save("id2.vbq", "vbq\nsize 2\nR1\n0 0\n1 1\nR2\n0 1\n0 1\n");

    std::vector<std::vector<std::string>> cmds{
        {"check", lin},
        {"check", bad},
        {"vr", wada},
        {"color", lin, "--braid", "s1 v2 S1 s3 v1 s2", "--witnesses"},
        {"color", wada, "--braid", "s1 v2 S1 s3 v1 s2", "--rep", "psi", "--witnesses"},
        {"color", wada, "--gauss", "U1+O2+|O1+U2+", "--witnesses"},
        {"color", lin, "--braid", "", "--strands", "14", "--budget", "1000"},
        {"bridge", wada, "--braid", "s1 v1 s1"},
        {"bridge", lin, "--fuzz", "25", "--seed", "7", "--strands", "4"},
        {"present", "--braid", "s1 v2 S1", "--rep", "phi"},
        {"present", "--gauss", "U1+O2-|O1+U2-"},
        {"enum", "--size", "3", "--iso"},
        {"enum", "--size", "3", "--virtual"},
        {"enum", "--size", "4", "--iso"},
    };
    int runs = 0;
    for (const auto& cmd : cmds) {
        std::optional<std::pair<int, std::string>> first;
        for (const char* w : {"1", "2", "8"})
            for (int rep = 0; rep < 2; ++rep) {
                std::vector<std::string> args{"vbq"};
                args.insert(args.end(), cmd.begin(), cmd.end());
                args.insert(args.end(), {"--workers", w, "--seed", "7"});
                std::ostringstream out, err;
                int code = cli::run(args, out, err);
                std::pair<int, std::string> got{code, out.str() + "\x1f" + err.str()};
                if (!first) first = got;
                else if (got != *first) return fail("output differs for " + cmd[0] + " with workers " + w);
                ++runs;
            }
    }
    return {true, std::to_string(cmds.size()) + " commands, " + std::to_string(runs) + " runs"};
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 means no limit
    std::function<Verdict()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "validator matches the naive oracle at size 2", 1.0, validator_matches_oracle},
        {2, "derived operator closure", 0, vr_closure},
        {3, "representation relations", 30.0, representations},
        {4, "phi and psi fixed-point counts agree", 120.0, bridge},
        {5, "move invariance", 0, move_invariance},
        {6, "Gauss colorings match psi", 0, gauss_consistency},
        {7, "presentation coherence", 0, presentation_coherence},
        {8, "type I sanity", 0, type_one},
        {9, "CLI determinism", 0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.pass && c.limit_seconds > 0 && secs > c.limit_seconds) v = fail("time limit exceeded");
        failures += !v.pass;
        std::ostringstream line;
        line.precision(3);
        line << std::fixed << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
             << v.detail << ", " << secs << " s";
        if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
        line << ")";
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
