#include "mixc1_cli/cli.hpp"

#include "mixc1/errors.hpp"
#include "mixc1/examples.hpp"
#include "mixc1/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mixc1::cli {

namespace {

enum Exit { Ok = 0, Failure = 1, ParseFailure = 2, Invalid = 3 };

int exit_code(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Parse: return ParseFailure;
    case ErrorCode::EdgeMismatch:
    case ErrorCode::IrregularOnInterface:
    case ErrorCode::IrregularGluing:
    case ErrorCode::DegenerateEdge:
    case ErrorCode::MixedOrientation:
    case ErrorCode::InvalidArgument: return Invalid;
    default: return Failure;
    }
}

struct Config {
    std::string command;
    std::string mesh_path;
    std::string example;
    unsigned degree = 3;
    std::string scaling = "paper";
    bool no_mu_orthogonalize = false;
    std::string format = "json";
    bool with_float = false;
    bool oracle = false;
    bool identity = false;
    unsigned gradient_samples = 0;
    bool cond = false;
    unsigned n = 10;
    std::size_t function = 0;
};

MeshPair load_mesh(const Config& cfg)
{
    if (!cfg.example.empty()) {
        for (const auto& e : bundled_examples())
            if (e.name == cfg.example)
                return bundled_example(cfg.example);
        throw Error(ErrorCode::Parse, "unknown example '" + cfg.example + "' (see 'example list')");
    }
    if (cfg.mesh_path.empty())
        throw Error(ErrorCode::Parse, "no mesh file given");
    std::ifstream in(cfg.mesh_path);
    if (!in)
        throw Error(ErrorCode::Parse, "cannot open '" + cfg.mesh_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_mesh_json(ss.str());
}

BasisOptions basis_options(const Config& cfg)
{
    BasisOptions o;
    o.scaling = parse_functional_scaling(cfg.scaling);
    o.mu_orthogonalize = !cfg.no_mu_orthogonalize;
    return o;
}

int execute(const Config& cfg, std::ostream& out)
{
    const ReportOptions ro{cfg.with_float};
    const Analysis a = analyze(load_mesh(cfg), cfg.degree);
    if (cfg.command == "analyze") {
        out << analysis_to_json(a, ro) << "\n";
        return Ok;
    }
    if (cfg.command == "basis" || cfg.command == "sample") {
        const BasisSet b = generate_basis(a.mesh, a.gluing, a.space, basis_options(cfg));
        if (cfg.command == "basis" && cfg.format == "json") {
            out << basis_to_json(a, b, ro) << "\n";
            return Ok;
        }
        if (cfg.format != "json" && cfg.format != "csv-sample")
            throw Error(ErrorCode::Parse, "format must be json or csv-sample");
        if (cfg.function >= b.size())
            throw Error(ErrorCode::InvalidArgument, "function index " + std::to_string(cfg.function) +
                                                        " out of range (basis has " + std::to_string(b.size()) + ")");
        const IsoFunction& f = cfg.function < b.interface_functions.size()
                                   ? b.interface_functions[cfg.function]
                                   : b.interior_functions[cfg.function - b.interface_functions.size()];
        out << samples_to_csv(sample_surface(f, a.mesh, cfg.n));
        return Ok;
    }
    if (cfg.command == "verify") {
        VerifyOptions vo;
        vo.oracle = cfg.oracle;
        vo.cond = cfg.cond;
        vo.gradient_samples = cfg.gradient_samples;
        // with no explicit check requested, run the identity check
        vo.identity = cfg.identity || !(cfg.oracle || cfg.cond || cfg.gradient_samples > 0);
        vo.basis = basis_options(cfg);
        const VerifyOutcome v = run_verification(a, vo, ro);
        out << v.json << "\n";
        return v.pass ? Ok : Failure;
    }
    throw Error(ErrorCode::Parse, "unknown command '" + cfg.command + "'");
}

} // namespace

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args = raw;
    Config cfg;
    if (!args.empty() && args[0] == "example") {
        if (args.size() >= 2 && args[1] == "list") {
            for (const auto& e : bundled_examples())
                out << e.name << "\t" << e.description << "\n";
            return Ok;
        }
        if (args.size() < 3) {
            err << "usage: example <name> <analyze|basis|verify|sample> [options]\n";
            return ParseFailure;
        }
        cfg.example = args[1];
        args.erase(args.begin(), args.begin() + 2);
    }

    CLI::App app{"C1 isogeometric spline spaces on two-element quadratic meshes"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub, bool basis_flags) {
        if (cfg.example.empty())
            sub->add_option("mesh", cfg.mesh_path, "mesh JSON file")->required();
        sub->add_option("--degree,-d", cfg.degree, "spline degree d >= 2")->check(CLI::Range(2u, 64u));
        sub->add_flag("--float", cfg.with_float, "add decimal companions to rational output");
        if (basis_flags) {
            sub->add_option("--functional-scaling", cfg.scaling, "interpolation functional scaling")
                ->check(CLI::IsMember({"paper", "unit"}));
            sub->add_flag("--no-mu-orthogonalize", cfg.no_mu_orthogonalize, "skip Gram-Schmidt on the mu functions");
        }
    };
    auto* analyze_cmd = app.add_subcommand("analyze", "interface case, gluing data and dimension");
    add_common(analyze_cmd, false);
    auto* basis_cmd = app.add_subcommand("basis", "emit the full basis");
    add_common(basis_cmd, true);
    basis_cmd->add_option("--format", cfg.format, "json or csv-sample")->check(CLI::IsMember({"json", "csv-sample"}));
    basis_cmd->add_option("--n", cfg.n, "sample grid resolution for csv-sample");
    basis_cmd->add_option("--function", cfg.function, "basis function index for csv-sample");
    auto* verify_cmd = app.add_subcommand("verify", "run exact and floating-point checks");
    add_common(verify_cmd, true);
    verify_cmd->add_flag("--oracle", cfg.oracle, "compare with the brute-force dimension");
    verify_cmd->add_flag("--identity", cfg.identity, "exact C1 identity on every basis function");
    verify_cmd->add_option("--gradient-samples", cfg.gradient_samples, "interface samples for the gradient jump");
    verify_cmd->add_flag("--cond", cfg.cond, "condition number of the collocation matrix");
    auto* sample_cmd = app.add_subcommand("sample", "CSV samples of one basis function");
    add_common(sample_cmd, true);
    sample_cmd->add_option("--n", cfg.n, "grid resolution")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--function", cfg.function, "basis function index");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return ParseFailure;
    }
    for (auto* sub : {analyze_cmd, basis_cmd, verify_cmd, sample_cmd})
        if (sub->parsed())
            cfg.command = sub->get_name();
    if (cfg.command == "sample")
        cfg.format = "csv-sample";

    try {
        return execute(cfg, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Failure;
    }
}

} // namespace mixc1::cli
