#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lndkit/danielewski.hpp>
#include <lndkit/derivation.hpp>
#include <lndkit/dualgraph.hpp>
#include <lndkit/parser.hpp>
#include <lndkit_tools/verify.hpp>

namespace {

using namespace lnd;

int run_verify(const std::vector<std::string> &only, const std::string &json_path,
               const std::vector<std::string> &derivation_files, const std::vector<std::string> &map_pair,
               bool timing, unsigned jobs)
{
    auto registry = tools::builtin_cases();
    for (std::size_t i = 0; i < derivation_files.size(); ++i) {
        registry.push_back(tools::derivation_file_case("user-derivation-" + std::to_string(i + 1), derivation_files[i],
                                                       default_nilpotency_bound()));
    }
    for (std::size_t i = 0; i + 1 < map_pair.size(); i += 2) {
        registry.push_back(
            tools::map_pair_case("user-map-pair-" + std::to_string(i / 2 + 1), map_pair[i], map_pair[i + 1]));
    }
    std::optional<std::vector<std::string>> selection;
    if (!only.empty()) {
        selection = only;
    }
    const auto report = tools::run_suite(registry, selection, jobs);
    std::cout << tools::report_text(report, timing);
    if (!json_path.empty()) {
        const std::string body = tools::report_json(report, timing).dump(2) + "\n";
        if (json_path == "-") {
            std::cout << body;
        } else {
            std::ofstream out(json_path, std::ios::binary);
            if (!out) {
                throw std::runtime_error("cannot write '" + json_path + "'");
            }
            out << body;
        }
    }
    return report.ok() ? 0 : 1;
}

int run_fiber(const std::string &at)
{
    const auto s = danielewski::canonical_surface();
    const Rational a = Rational::from_string(at);
    const auto fd = danielewski::fiber_over(s, a);
    if (const auto *split = std::get_if<danielewski::SplitFiber>(&fd.shape)) {
        std::cout << "fiber over x = " << a << ": " << split->lines.size() << " lines\n";
        for (const auto &l : split->lines) {
            std::cout << "  x = " << a << ", y = " << l.root << "  multiplicity " << l.multiplicity << '\n';
        }
        if (!split->fully_split()) {
            std::cout << "  unfactored: " << split->unfactored << '\n';
        }
        std::cout << (split->reduced() ? "reduced\n" : "not reduced\n");
        return 0;
    }
    const auto &line = std::get<danielewski::GenericLine>(fd.shape);
    std::cout << "fiber over x = " << a << ": affine line with coordinate f = x*z - y^2 ("
              << (line.parametrization_verified ? "parametrization verified" : "parametrization FAILED") << ")\n";
    return line.parametrization_verified ? 0 : 1;
}

int run_cocycle(unsigned max_n)
{
    const auto c = danielewski::build_cocycle();
    for (int a : c.labels) {
        std::cout << "sigma_" << a << " = " << c.sigma.at(a) << '\n';
    }
    for (int a : c.labels) {
        for (int b : c.labels) {
            if (a != b) {
                std::cout << "g(" << a << "," << b << ") = " << c.transition(a, b) << '\n';
            }
        }
    }
    const bool ok = danielewski::antisymmetric(c) && danielewski::satisfies_cocycle_identity(c);
    std::cout << "antisymmetry and cocycle identity: " << (ok ? "hold" : "FAIL") << '\n';
    for (const auto &[a, v] : danielewski::component_values(danielewski::canonical_surface())) {
        std::cout << "g_" << a << " on C_" << a << " = " << v << '\n';
    }
    const auto r = danielewski::distinguishing_function_search(c, max_n);
    if (const auto *none = std::get_if<danielewski::NoSolution>(&r)) {
        std::cout << "no distinguishing function for n = 1.." << max_n << '\n';
        for (const auto &o : none->per_n) {
            std::cout << "  n = " << o.n << ": " << o.detail << '\n';
        }
    } else {
        const auto &sol = std::get<danielewski::Solution>(r);
        std::cout << "distinguishing function at n = " << sol.n << '\n';
    }
    return ok ? 0 : 1;
}

int run_graph(std::optional<int> build_paper, const std::string &input, const std::string &check)
{
    WeightedCurveGraph g;
    if (build_paper) {
        g = build_paper_compactification(*build_paper);
    } else {
        g = parse_graph(tools::read_file(input));
    }
    if (check.empty()) {
        std::cout << format_graph(g);
        return 0;
    }
    if (check == "chain") {
        std::cout << "chain: " << (is_chain(g) ? "yes" : "no") << '\n';
        return 0;
    }
    const auto r = can_contract_to_fiber(g);
    std::cout << "fiber: " << (r.contractible ? "yes" : "no");
    if (r.contractible) {
        std::cout << " (contract";
        for (const auto &v : r.sequence) {
            std::cout << ' ' << v;
        }
        std::cout << ")\n";
    } else {
        std::cout << " (" << r.reason << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification toolkit for locally nilpotent derivations and polynomial automorphisms"};
    app.require_subcommand(1);

    auto *verify = app.add_subcommand("verify", "run the verification suite");
    std::vector<std::string> only;
    std::string json_path;
    std::vector<std::string> derivation_files;
    std::vector<std::string> map_pair;
    bool timing = false;
    unsigned jobs = 0;
    verify->add_option("--only", only, "case ids to run (default: all)");
    verify->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
    verify->add_option("--derivation", derivation_files, "extra derivation files to certify")->check(CLI::ExistingFile);
    verify->add_option("--map-pair", map_pair, "FORWARD INVERSE map files to check as an inverse pair")
        ->expected(2)
        ->check(CLI::ExistingFile);
    verify->add_flag("--timing", timing, "include wall-times in the reports");
    verify->add_option("--jobs", jobs, "worker threads (0: one per core)");
    verify->add_flag_callback(
        "--list",
        [] {
            for (const auto &c : lnd::tools::builtin_cases()) {
                std::cout << c.id << "  [" << c.category << "] " << c.title << '\n';
            }
            std::exit(0);
        },
        "list built-in case ids");

    auto *exp = app.add_subcommand("exp", "print exp(m*d) for a derivation file");
    std::string derivation_file;
    std::string multiplier;
    unsigned bound = lnd::default_nilpotency_bound();
    exp->add_option("--derivation", derivation_file, "derivation file")->required()->check(CLI::ExistingFile);
    exp->add_option("--multiplier", multiplier, "multiplier expression (lets from the file allowed)")->required();
    exp->add_option("--bound", bound, "nilpotency bound")->capture_default_str();

    auto *fiber = app.add_subcommand("fiber", "fiber of the projection to x over a rational point");
    std::string at;
    fiber->add_option("--at", at, "base value, e.g. 0 or -3/2")->required();

    auto *cocycle = app.add_subcommand("cocycle", "transition cocycle and the distinguishing-function search");
    unsigned max_n = 5;
    cocycle->add_option("--max-n", max_n, "largest exponent to search")->capture_default_str();

    auto *surface = app.add_subcommand("surface", "surface summary report");
    bool surface_json = false;
    surface->add_flag("--json", surface_json, "emit JSON");

    auto *graph = app.add_subcommand("graph", "weighted dual graphs");
    std::optional<int> build_paper;
    std::string input;
    std::string check;
    auto *bp = graph->add_option("--build-paper", build_paper, "compactification with D of weight -N");
    auto *in = graph->add_option("--input", input, "graph file")->check(CLI::ExistingFile);
    bp->excludes(in);
    graph->add_option("--check", check, "fiber or chain")->check(CLI::IsMember({"fiber", "chain"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (map_pair.size() % 2 != 0) {
                throw CLI::ValidationError("--map-pair", "expects FORWARD INVERSE");
            }
            return run_verify(only, json_path, derivation_files, map_pair, timing, jobs);
        }
        if (*exp) {
            std::cout << lnd::tools::exp_command(lnd::tools::read_file(derivation_file), multiplier, bound).to_string();
            return 0;
        }
        if (*fiber) {
            return run_fiber(at);
        }
        if (*cocycle) {
            return run_cocycle(max_n);
        }
        if (*surface) {
            if (surface_json) {
                std::cout << lnd::tools::surface_report_json().dump(2) << '\n';
            } else {
                std::cout << lnd::tools::surface_report_text();
            }
            return 0;
        }
        if (*graph) {
            if (!build_paper && input.empty()) {
                std::cerr << "graph: one of --build-paper or --input is required\n";
                return 2;
            }
            return run_graph(build_paper, input, check);
        }
    } catch (const lnd::tools::UnknownCase &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
