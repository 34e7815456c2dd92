// cfdyn: continued-fraction expansion, orbit simulation, verification
// suites, and figure rendering for the diamond algorithm.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfdyn/config.hpp"
#include "cfdyn/natext.hpp"
#include "cfdyn/render.hpp"
#include "cfdyn/verify.hpp"

using namespace cfdyn;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitIo = 4;
constexpr int kExitRationalW = 5;

ChoiceFunction choice_from_name(const std::string& name) {
    if (name == "diamond") return ChoiceFunction::diamond();
    if (name == "hurwitz") return ChoiceFunction::hurwitz();
    throw ParseError("unknown algorithm: " + name);
}

json expansion_to_json(const Expansion& e, const std::vector<ConvergentPair>& conv,
                       FloatComplex z) {
    json digits = json::array(), remainders = json::array(), convs = json::array(),
         residuals = json::array();
    for (const auto& a : e.digits) digits.push_back(format_gaussian(a));
    for (const auto& r : e.remainders) remainders.push_back(format_float_complex(r));
    for (const auto& c : conv) {
        convs.push_back({{"n", c.index},
                         {"p", format_gaussian(c.p)},
                         {"q", format_gaussian(c.q)}});
    }
    for (int n = 0; n + 1 < static_cast<int>(e.remainders.size()) &&
                    n < static_cast<int>(e.digits.size());
         ++n)
        residuals.push_back(check_identity_residual(z, e, n));
    return {{"digits", digits},
            {"remainders", remainders},
            {"convergents", convs},
            {"residuals", residuals},
            {"exact", e.exact},
            {"terminated", e.terminated}};
}

void print_expansion_text(const Expansion& e, const std::vector<ConvergentPair>& conv,
                          FloatComplex z) {
    std::cout << "digits:";
    for (const auto& a : e.digits) std::cout << " " << format_gaussian(a);
    std::cout << "\nterminated: " << (e.terminated ? "yes" : "no") << "\n";
    std::cout << "remainders:";
    for (const auto& r : e.remainders) std::cout << " " << format_float_complex(r);
    std::cout << "\nconvergents:\n";
    for (const auto& c : conv)
        std::cout << "  n=" << c.index << "  p=" << format_gaussian(c.p)
                  << "  q=" << format_gaussian(c.q) << "\n";
    std::cout << "residuals:";
    for (int n = 0; n + 1 < static_cast<int>(e.remainders.size()) &&
                    n < static_cast<int>(e.digits.size());
         ++n)
        std::cout << " " << check_identity_residual(z, e, n);
    std::cout << "\n";
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + out);
    f << text;
    if (!f) throw IoError("write failed: " + out);
}

int cmd_expand(const std::string& literal, const std::string& algorithm, int steps,
               const std::string& format, bool convergents_only) {
    ParsedComplex z = parse_complex_literal(literal);
    ChoiceFunction choice = choice_from_name(algorithm);
    Expansion e = z.exact ? expand(z.value_exact, choice, steps)
                          : expand(z.value_float, choice, steps);
    auto conv = convergents(e.digits);
    FloatComplex zf = z.exact ? z.value_exact.to_complex() : z.value_float;
    if (convergents_only) {
        if (format == "json") {
            json convs = json::array();
            for (const auto& c : conv)
                convs.push_back({{"n", c.index},
                                 {"p", format_gaussian(c.p)},
                                 {"q", format_gaussian(c.q)}});
            std::cout << convs.dump(2) << "\n";
        } else {
            for (const auto& c : conv)
                std::cout << "n=" << c.index << "  p=" << format_gaussian(c.p)
                          << "  q=" << format_gaussian(c.q) << "\n";
        }
        return kExitOk;
    }
    if (format == "json")
        std::cout << expansion_to_json(e, conv, zf).dump(2) << "\n";
    else
        print_expansion_text(e, conv, zf);
    return kExitOk;
}

int cmd_classify(const std::string& literal, const std::string& format) {
    ParsedComplex z = parse_complex_literal(literal);
    PartitionCell cell =
        z.exact ? classify_cell(z.value_exact) : classify_cell(z.value_float);
    FloatComplex zf = z.exact ? z.value_exact.to_complex() : z.value_float;
    Branch b = z.exact ? branch_of(z.value_exact) : branch_of(zf);
    if (format == "json") {
        json j = {{"input", literal},
                  {"dih", cell.g.name()},
                  {"k", cell.k},
                  {"branch", branch_name(b)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cell: " << cell.g.name() << "(W" << cell.k << ")\n"
                  << "branch: " << branch_name(b) << "\n";
    }
    return kExitOk;
}

int cmd_orbit(const std::string& z_lit, const std::string& w_lit, int steps,
              const std::string& format) {
    ParsedComplex z = parse_complex_literal(z_lit);
    ParsedComplex w = parse_complex_literal(w_lit);
    if (w.exact) {
        std::cerr << "error: w = " << w_lit
                  << " is an exact rational literal; rational w has a finite orbit ending "
                     "at a pole, so orbit simulation excludes it (use a decimal literal)\n";
        return kExitRationalW;
    }
    FloatComplex zf = z.exact ? z.value_exact.to_complex() : z.value_float;
    FloatComplex wf = w.value_float;

    OrbitResult orbit = orbit_until_V(zf, wf, steps);
    ProductSet psi = build_psi().product();

    json trace = json::array();
    for (const auto& pt : orbit.full_trace) {
        bool in_psi = psi.contains(pt.z, pt.w, 1e-9);
        bool in_d = D_contains(pt.z, pt.w);
        if (format == "json") {
            trace.push_back({{"step", pt.step},
                             {"branch", pt.step == 0 ? "-" : branch_name(pt.branch)},
                             {"z", format_float_complex(pt.z)},
                             {"w", format_float_complex(pt.w)},
                             {"in_V", pt.in_V},
                             {"in_Psi", in_psi},
                             {"in_D", in_d}});
        } else {
            std::cout << pt.step << "  " << (pt.step == 0 ? "-" : branch_name(pt.branch))
                      << "  z=" << format_float_complex(pt.z)
                      << "  w=" << format_float_complex(pt.w) << "  V=" << pt.in_V
                      << " Psi=" << in_psi << " D=" << in_d << "\n";
        }
    }
    if (format == "json") {
        json j = {{"entry_index", orbit.entry_index}, {"trace", trace}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "first V entry at step " << orbit.entry_index << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyConfig& cfg, const std::string& out) {
    SuiteReport report = run_suite(suite, cfg);
    write_output(out, report.to_json() + "\n");
    return report.exit_code();
}

int cmd_render(const std::string& figure, const std::string& out) {
    auto fig = figure_from_name(figure);
    if (!fig) throw ParseError("unknown figure: " + figure);
    write_output(out, render_figure(*fig));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"diamond complex continued fractions: expansion, dynamics, verification"};
    app.require_subcommand(1);

    std::string literal, w_literal, algorithm = "diamond", format = "text", out, suite, figure;
    int steps = 30;
    VerifyConfig cfg;
    try {
        cfg = load_default_config();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    auto* expand_cmd = app.add_subcommand("expand", "continued fraction digits of z");
    expand_cmd->add_option("z", literal, "complex literal a+bi")->required();
    expand_cmd->add_option("--algorithm", algorithm, "diamond|hurwitz");
    expand_cmd->add_option("--steps", steps, "maximum digits");
    expand_cmd->add_option("--format", format, "text|json");

    auto* conv_cmd = app.add_subcommand("convergents", "convergent pairs p_n, q_n of z");
    conv_cmd->add_option("z", literal, "complex literal a+bi")->required();
    conv_cmd->add_option("--algorithm", algorithm, "diamond|hurwitz");
    conv_cmd->add_option("--steps", steps, "maximum digits");
    conv_cmd->add_option("--format", format, "text|json");

    auto* classify_cmd = app.add_subcommand("classify", "partition cell and branch of z");
    classify_cmd->add_option("z", literal, "complex literal a+bi")->required();
    classify_cmd->add_option("--format", format, "text|json");

    auto* orbit_cmd = app.add_subcommand("orbit", "natural-extension orbit of (z, w)");
    orbit_cmd->add_option("z", literal, "complex literal a+bi")->required();
    orbit_cmd->add_option("w", w_literal, "complex literal a+bi (irrational)")->required();
    orbit_cmd->add_option("--steps", steps, "V-entry budget");
    orbit_cmd->add_option("--format", format, "text|json");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "identities|partition|bijectivity|psi|trapping")
        ->required();
    verify_cmd->add_option("--samples", cfg.samples, "random sample count");
    verify_cmd->add_option("--seed", cfg.seed, "random seed");
    verify_cmd->add_option("--epsilon", cfg.epsilon, "float tolerance");
    verify_cmd->add_option("--out", out, "write the JSON report to a file");

    auto* render_cmd = app.add_subcommand("render", "deterministic SVG figure");
    render_cmd->add_option("figure", figure, "regions|partition|dne|z1hat|psi")->required();
    render_cmd->add_option("--out", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (expand_cmd->parsed()) return cmd_expand(literal, algorithm, steps, format, false);
        if (conv_cmd->parsed()) return cmd_expand(literal, algorithm, steps, format, true);
        if (classify_cmd->parsed()) return cmd_classify(literal, format);
        if (orbit_cmd->parsed()) return cmd_orbit(literal, w_literal, steps, format);
        if (verify_cmd->parsed()) return cmd_verify(suite, cfg, out);
        if (render_cmd->parsed()) return cmd_render(figure, out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailedCheck;
    }
    return kExitOk;
}
