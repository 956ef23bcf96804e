#include "vbq/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "vbq/algebra.hpp"
#include "vbq/braid.hpp"
#include "vbq/coloring.hpp"
#include "vbq/enumeration.hpp"
#include "vbq/gauss.hpp"
#include "vbq/structure_io.hpp"
#include "vbq/terms.hpp"

namespace vbq::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string braid;
    std::string gauss;
    std::optional<int> strands;
    std::string rep = "phi";
    bool witnesses = false;
    std::uint64_t budget = kDefaultBudget;
    int workers = 1;
    std::uint64_t seed = 0;
    int fuzz = 0;
    int length = 12;
    int size = 0;
    bool is_virtual = false;
    bool iso = false;
    bool allow_large = false;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RepKind parse_rep(const std::string& s) {
    if (s == "phi") return RepKind::Phi;
    if (s == "psi") return RepKind::Psi;
    throw InputError("--rep must be phi or psi");
}

std::string join(const std::vector<Element>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

VirtualBiquandle load_virtual(const std::string& path) {
    auto file = read_structure_file(path);
    return VirtualBiquandle::from(file.op, file.f_or_identity());
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    auto file = read_structure_file(cfg.input);
    auto report = file.f ? validate_virtual(file.op, *file.f) : validate_biquandle(file.op);
    out << report.to_string();
    out << (report.ok() ? (file.f ? "valid virtual biquandle" : "valid biquandle") : "invalid") << '\n';
    return report.ok() ? kOk : kSemanticFailure;
}

int cmd_vr(const RunConfig& cfg, std::ostream& out) {
    auto file = read_structure_file(cfg.input);
    auto vbq = VirtualBiquandle::from(file.op, file.f_or_identity());
    out << format_structure(derive_vr(vbq), file.f);
    return kOk;
}

int cmd_color(const RunConfig& cfg, bool has_braid, bool has_gauss, std::ostream& out) {
    if (has_braid == has_gauss) throw InputError("give exactly one of --braid and --gauss");
    auto vbq = load_virtual(cfg.input);
    if (has_braid) {
        auto b = parse_braid(cfg.braid, cfg.strands);
        ColoringOptions opt{cfg.witnesses, cfg.budget, cfg.workers};
        auto r = count_colorings(vbq, b, parse_rep(cfg.rep), opt);
        out << r.count << '\n';
        if (r.witnesses)
            for (const auto& t : *r.witnesses) out << join(t) << '\n';
    } else {
        auto g = parse_gauss(cfg.gauss);
        auto r = color_gauss(vbq, g, {cfg.witnesses, cfg.budget});
        out << r.count << '\n';
        if (r.witnesses)
            for (const auto& a : *r.witnesses) out << join(a) << '\n';
    }
    return kOk;
}

int cmd_bridge(const RunConfig& cfg, bool has_braid, std::ostream& out) {
    auto vbq = load_virtual(cfg.input);
    ColoringOptions opt{false, cfg.budget, cfg.workers};
    if (cfg.fuzz > 0) {
        const int strands = cfg.strands.value_or(3);
        if (strands < 2) throw InputError("--fuzz needs --strands of at least 2");
        if (cfg.length < 0) throw InputError("--length must be non-negative");
        int failures = 0;
        for (int i = 0; i < cfg.fuzz; ++i) {
            const std::uint64_t s = cfg.seed * 1000003ULL + static_cast<std::uint64_t>(i);
            auto b = random_braid(strands, static_cast<int>(s % static_cast<std::uint64_t>(cfg.length + 1)), s);
            auto r = verify_bridge(vbq, b, opt);
            out << "[" << format_braid(b) << "] phi " << r.phi_count << " psi " << r.psi_count << " vr "
                << r.vr_count << (r.ok() ? " ok" : " MISMATCH") << '\n';
            if (!r.ok()) {
                ++failures;
                out << r.to_string();
            }
        }
        out << "fuzz " << cfg.fuzz << " braids, " << failures << " mismatches\n";
        return failures == 0 ? kOk : kSemanticFailure;
    }
    if (!has_braid) throw InputError("bridge needs --braid or --fuzz");
    auto b = parse_braid(cfg.braid, cfg.strands);
    auto r = verify_bridge(vbq, b, opt);
    out << r.to_string();
    return r.ok() ? kOk : kSemanticFailure;
}

int cmd_present(const RunConfig& cfg, bool has_braid, bool has_gauss, std::ostream& out) {
    if (has_braid == has_gauss) throw InputError("give exactly one of --braid and --gauss");
    Presentation p = has_braid ? make_presentation(parse_braid(cfg.braid, cfg.strands), parse_rep(cfg.rep))
                               : gauss_presentation(parse_gauss(cfg.gauss));
    out << "# generators " << p.generator_count << '\n' << p.to_string();
    return kOk;
}

int cmd_enum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    EnumerationOptions opt{cfg.iso, cfg.allow_large, cfg.workers};
    std::size_t count = 0;
    bool first = true;
    auto emit = [&](const std::string& block) {
        if (!first) out << '\n';
        first = false;
        out << block;
        ++count;
    };
    try {
        if (cfg.is_virtual) {
            for (const auto& s : enumerate_virtual(cfg.size, opt)) emit(format_structure(s.op, s.f));
        } else {
            for (const auto& op : enumerate_biquandles(cfg.size, opt)) emit(format_structure(op));
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    out << "# " << count << (cfg.is_virtual ? " virtual biquandles" : " biquandles") << " of size "
        << cfg.size << (cfg.iso ? " up to isomorphism" : "") << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Finite virtual biquandles, braid representations and coloring invariants", "vbq"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Work budget (tuples or search decisions)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Random seed");
    };
    auto add_link = [&](CLI::App* sub) {
        sub->add_option("--braid", cfg.braid, "Braid word: s<i>, S<i>, v<i>");
        sub->add_option("--gauss", cfg.gauss, "Gauss code, e.g. U1+O2+|O1+U2+");
        sub->add_option("--strands", cfg.strands, "Strand count");
    };

    auto* check = app.add_subcommand("check", "Validate a (virtual) biquandle structure file");
    check->add_option("structure", cfg.input)->required();
    add_common(check);

    auto* vr = app.add_subcommand("vr", "Print the derived biquandle (X, VR)");
    vr->add_option("structure", cfg.input)->required();
    add_common(vr);

    auto* color = app.add_subcommand("color", "Count colorings of a braid closure or Gauss code");
    color->add_option("structure", cfg.input)->required();
    add_link(color);
    color->add_option("--rep", cfg.rep, "phi or psi (braid input only)");
    color->add_flag("--witnesses", cfg.witnesses, "Print each coloring");
    add_common(color);

    auto* bridge = app.add_subcommand("bridge", "Compare phi, psi and VR coloring counts");
    bridge->add_option("structure", cfg.input)->required();
    add_link(bridge);
    bridge->add_option("--fuzz", cfg.fuzz, "Check this many seeded random braids")->check(CLI::NonNegativeNumber);
    bridge->add_option("--length", cfg.length, "Maximum random braid length");
    add_common(bridge);

    auto* present = app.add_subcommand("present", "Print the presentation of a braid closure or Gauss code");
    add_link(present);
    present->add_option("--rep", cfg.rep, "phi or psi (braid input only)");
    add_common(present);

    auto* en = app.add_subcommand("enum", "Enumerate biquandles or virtual biquandles of a given size");
    en->add_option("--size", cfg.size, "Carrier size")->required();
    en->add_flag("--virtual", cfg.is_virtual, "Enumerate virtual biquandles");
    en->add_flag("--iso", cfg.iso, "One structure per isomorphism class");
    en->add_flag("--allow-large", cfg.allow_large, "Permit size 5");
    add_common(en);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    auto given = [](CLI::App* sub, const char* name) { return sub->get_option(name)->count() > 0; };
    try {
        if (check->parsed()) return cmd_check(cfg, out);
        if (vr->parsed()) return cmd_vr(cfg, out);
        if (color->parsed()) return cmd_color(cfg, given(color, "--braid"), given(color, "--gauss"), out);
        if (bridge->parsed()) return cmd_bridge(cfg, given(bridge, "--braid"), out);
        if (present->parsed()) return cmd_present(cfg, given(present, "--braid"), given(present, "--gauss"), out);
        if (en->parsed()) return cmd_enum(cfg, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const AxiomFailure& e) {
        err << "error: not a valid structure\n" << e.report().to_string();
        return kSemanticFailure;
    } catch (const StructureError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace vbq::cli
