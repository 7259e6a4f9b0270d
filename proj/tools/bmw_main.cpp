// Command-line front end: evaluate distribution functions over grids, emit
// the built-in figure curve data, classify parameter sets against the
// sub-distribution catalog, and draw reproducible samples.
//
// Exit codes: 0 success, 2 usage or parameter-domain error, 3 evaluation
// error, 4 I/O error.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmw/beta_modified_weibull.hpp"
#include "bmw/errors.hpp"
#include "bmw/figures.hpp"
#include "bmw/numerics.hpp"
#include "bmw/reductions.hpp"
#include "bmw/sampler.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEval = 3;
constexpr int kExitIo = 4;

struct ParamArgs {
    double a = NAN, b = NAN, lambda = NAN, beta = NAN, gamma = NAN, tau = NAN;
    std::string params_file;
    std::string set_name;
    std::vector<double> positional;   // (a, b, lambda, beta, gamma, tau)
};

void add_param_options(CLI::App* cmd, ParamArgs& args, bool with_positional) {
    cmd->add_option("--a", args.a, "Beta shape a");
    cmd->add_option("--b", args.b, "Beta shape b");
    cmd->add_option("--lambda", args.lambda, "lambda");
    cmd->add_option("--beta", args.beta, "scale beta");
    cmd->add_option("--gamma", args.gamma, "shape gamma");
    cmd->add_option("--tau", args.tau, "tau (any sign; 0 = limit form)");
    cmd->add_option("--params-file", args.params_file,
                    "JSON file of named parameter sets");
    cmd->add_option("--set", args.set_name,
                    "name of the set to load from --params-file");
    if (with_positional) {
        cmd->add_option("params", args.positional,
                        "six values in (a, b, lambda, beta, gamma, tau) order")
            ->expected(0, 6);
    }
}

// Resolution order: positional six-pack, then params file, then explicit
// flags override.
bmw::Bmw6Params resolve_params(const ParamArgs& args) {
    double a = NAN, b = NAN, lambda = NAN, beta = NAN, gamma = NAN, tau = NAN;

    if (!args.positional.empty()) {
        if (args.positional.size() != 6)
            throw bmw::DomainError("expected exactly six positional values "
                                   "(a, b, lambda, beta, gamma, tau)");
        a = args.positional[0];
        b = args.positional[1];
        lambda = args.positional[2];
        beta = args.positional[3];
        gamma = args.positional[4];
        tau = args.positional[5];
    }

    if (!args.params_file.empty() || !args.set_name.empty()) {
        if (args.params_file.empty() || args.set_name.empty())
            throw bmw::DomainError("--params-file and --set must be given together");
        std::ifstream in(args.params_file);
        if (!in)
            throw std::ios_base::failure("cannot open " + args.params_file);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw bmw::DomainError(std::string("bad JSON in params file: ") + e.what());
        }
        if (!doc.contains(args.set_name))
            throw bmw::DomainError("params file has no set named '" + args.set_name + "'");
        const auto& set = doc.at(args.set_name);
        try {
            a = set.at("a").get<double>();
            b = set.at("b").get<double>();
            lambda = set.at("lambda").get<double>();
            beta = set.at("beta").get<double>();
            gamma = set.at("gamma").get<double>();
            tau = set.at("tau").get<double>();
        } catch (const nlohmann::json::exception& e) {
            throw bmw::DomainError(std::string("set '") + args.set_name
                                   + "' must define a, b, lambda, beta, gamma, tau: "
                                   + e.what());
        }
    }

    if (!std::isnan(args.a)) a = args.a;
    if (!std::isnan(args.b)) b = args.b;
    if (!std::isnan(args.lambda)) lambda = args.lambda;
    if (!std::isnan(args.beta)) beta = args.beta;
    if (!std::isnan(args.gamma)) gamma = args.gamma;
    if (!std::isnan(args.tau)) tau = args.tau;

    if (std::isnan(a) || std::isnan(b) || std::isnan(lambda) || std::isnan(beta)
        || std::isnan(gamma) || std::isnan(tau))
        throw bmw::DomainError("all six parameters must be given "
                               "(flags, positionals, or --params-file/--set)");

    bmw::Bmw6Params p{{a, b}, {gamma, beta, lambda, tau}};
    p.check();
    return p;
}

int run_eval(const ParamArgs& args, const std::string& func_name, double xmin,
             double xmax, std::size_t npoints, const std::string& spacing) {
    bmw::Bmw6Params params{{1, 1}, {1, 1, 1, 1}};
    bmw::CurveFunc func{};
    try {
        params = resolve_params(args);
        func = bmw::parse_curve_func(func_name);
        if (npoints < 2)
            throw bmw::DomainError("need npoints >= 2");
        if ((func == bmw::CurveFunc::Pdf || func == bmw::CurveFunc::Hazard)
            && !(xmin > 0.0))
            throw bmw::DomainError("pdf and hazard require xmin > 0");
        if (spacing != "linear" && spacing != "log")
            throw bmw::DomainError("spacing must be 'linear' or 'log'");
    } catch (const bmw::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const auto grid = spacing == "log" ? bmw::log_grid(xmin, xmax, npoints)
                                           : bmw::linear_grid(xmin, xmax, npoints);
        const bmw::CurveTable table = bmw::eval_curve(func, params, grid);
        bmw::write_csv(table, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
    return kExitOk;
}

int run_figure(const std::string& panel, const std::string& out_dir) {
    std::optional<bmw::FigurePanel> wanted;
    if (panel == "FigA")
        wanted = bmw::FigurePanel::FigA;
    else if (panel == "FigB")
        wanted = bmw::FigurePanel::FigB;
    else if (panel != "all") {
        std::cerr << "error: panel must be FigA, FigB, or all\n";
        return kExitUsage;
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
        return kExitIo;
    }
    for (const auto& set : bmw::builtin_figure_sets()) {
        if (wanted && set.panel != *wanted)
            continue;
        bmw::CurveTable table;
        try {
            table = bmw::figure_curve(set);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitEval;
        }
        const auto path = std::filesystem::path(out_dir) / bmw::figure_filename(set);
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot write " << path.string() << "\n";
            return kExitIo;
        }
        bmw::write_csv(table, out);
        out.flush();
        if (!out) {
            std::cerr << "error: short write to " << path.string() << "\n";
            return kExitIo;
        }
        std::cout << path.string() << "\n";
    }
    return kExitOk;
}

int run_reduce(const ParamArgs& args, bool as_csv) {
    bmw::Bmw6Params params{{1, 1}, {1, 1, 1, 1}};
    try {
        params = resolve_params(args);
    } catch (const bmw::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const bmw::NamedFamily family = bmw::classify(params);
        std::string free;
        for (const auto& name : family.free_params)
            free += (free.empty() ? "" : " ") + name;
        if (family.tag == bmw::FamilyTag::Bmw6) {
            if (as_csv) {
                std::cout << "family,free_params,max_cdf_diff,max_pdf_diff\n";
                std::cout << bmw::family_name(family.tag) << "," << free << ",,\n";
            } else {
                std::cout << "family   " << bmw::family_name(family.tag) << "\n";
                std::cout << "free     " << free << "\n";
            }
            return kExitOk;
        }
        const auto grid = bmw::log_grid(1e-3 * params.inner.beta,
                                        10.0 * params.inner.beta, 200);
        const bmw::EquivalenceReport report =
            bmw::equivalence_report(params, family.tag, grid);
        if (as_csv) {
            std::cout << "family,free_params,max_cdf_diff,max_pdf_diff\n";
            std::cout << bmw::family_name(family.tag) << "," << free << ","
                      << bmw::format_csv_value(report.max_cdf_diff) << ","
                      << bmw::format_csv_value(report.max_pdf_diff) << "\n";
        } else {
            std::cout << "family        " << bmw::family_name(family.tag) << "\n";
            std::cout << "free          " << free << "\n";
            std::cout << "max_cdf_diff  "
                      << bmw::format_csv_value(report.max_cdf_diff) << "\n";
            std::cout << "max_pdf_diff  "
                      << bmw::format_csv_value(report.max_pdf_diff) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
    return kExitOk;
}

int run_sample(const ParamArgs& args, std::size_t n, std::uint64_t seed,
               std::uint64_t stream) {
    bmw::Bmw6Params params{{1, 1}, {1, 1, 1, 1}};
    try {
        params = resolve_params(args);
        if (n == 0)
            throw bmw::DomainError("need n >= 1");
    } catch (const bmw::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const auto draws = bmw::sample(params, n, bmw::SeedSpec{seed, stream});
        std::size_t finite = 0;
        for (const auto& d : draws) {
            if (d.finite()) {
                ++finite;
                std::cout << bmw::format_csv_value(d.x) << "\n";
            } else {
                std::cout << "cured\n";
            }
        }
        std::cout << "# finite=" << finite << " cured=" << (n - finite) << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Six-parameter Beta modified Weibull distribution toolkit"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one function over a grid as CSV");
    ParamArgs eval_args;
    std::string func_name;
    double xmin = NAN, xmax = NAN;
    std::size_t npoints = 0;
    std::string spacing = "linear";
    eval_cmd->add_option("func", func_name, "pdf|cdf|survival|hazard|quantile")
        ->required();
    add_param_options(eval_cmd, eval_args, false);
    eval_cmd->add_option("--xmin", xmin, "grid start (probability for quantile)")
        ->required();
    eval_cmd->add_option("--xmax", xmax, "grid end")->required();
    eval_cmd->add_option("-n,--npoints", npoints, "number of grid points")
        ->required();
    eval_cmd->add_option("--spacing", spacing, "linear|log (default linear)");

    // figure
    auto* figure_cmd = app.add_subcommand(
        "figure", "write the built-in figure curve CSVs to a directory");
    std::string panel = "all";
    std::string out_dir = ".";
    figure_cmd->add_option("panel", panel, "FigA|FigB|all (default all)");
    figure_cmd->add_option("--out", out_dir, "output directory (default .)");

    // reduce
    auto* reduce_cmd = app.add_subcommand(
        "reduce", "classify parameters against the sub-distribution catalog");
    ParamArgs reduce_args;
    bool reduce_csv = false;
    add_param_options(reduce_cmd, reduce_args, true);
    reduce_cmd->add_flag("--csv", reduce_csv, "emit the report as CSV");

    // sample
    auto* sample_cmd = app.add_subcommand(
        "sample", "draw inverse-transform samples, one outcome per line");
    ParamArgs sample_args;
    std::size_t n = 0;
    std::uint64_t seed = 0, stream = 0;
    add_param_options(sample_cmd, sample_args, false);
    sample_cmd->add_option("-n,--count", n, "number of draws")->required();
    sample_cmd->add_option("--seed", seed, "64-bit seed (default 0)");
    sample_cmd->add_option("--stream", stream, "stream index (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {   // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (eval_cmd->parsed())
        return run_eval(eval_args, func_name, xmin, xmax, npoints, spacing);
    if (figure_cmd->parsed())
        return run_figure(panel, out_dir);
    if (reduce_cmd->parsed())
        return run_reduce(reduce_args, reduce_csv);
    if (sample_cmd->parsed())
        return run_sample(sample_args, n, seed, stream);
    return kExitUsage;
}
