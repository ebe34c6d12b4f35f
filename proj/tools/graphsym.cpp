#include <CLI11.hpp>
#include <iostream>

#include "gsym/accept.hpp"
#include "gsym/error.hpp"
#include "gsym/graph_io.hpp"
#include "gsym/report.hpp"

namespace {

int exit_code_for(const gsym::Error& e) {
    if (e.kind() == "BudgetExceeded") return 3;
    if (e.kind() == "ParseError" || e.kind() == "SelfLoop" || e.kind() == "DuplicateEdge")
        return 2;
    return 1;
}

void print_report(const gsym::Report& r, const std::string& format) {
    if (format == "text")
        std::cout << r.to_text();
    else
        std::cout << r.to_json() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph symmetry analysis toolkit"};
    app.require_subcommand(1);

    gsym::AnalyzeOptions opt;
    std::uint64_t cap = 10'000'000;
    app.add_option("--hadwiger-budget", opt.hadwiger_budget, "minor search node budget");
    app.add_option("--group-order-cap", cap, "composition factor order cap");
    app.add_option("--seed", opt.seed, "corpus sampling seed (never affects algorithm results)");
    app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string path;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a graph file ('-' for stdin)");
    analyze_cmd->add_option("file", path, "graph file")->required();

    std::string family_spec;
    auto* family_cmd = app.add_subcommand("family", "analyze generated family members");
    family_cmd->add_option("spec", family_spec,
                           "family spec, e.g. twisted_grid(5,5) or family:cycle:8")
        ->required();

    int only = 0;
    auto* accept_cmd = app.add_subcommand("accept", "run the acceptance suite");
    accept_cmd->add_option("--only", only, "run a single criterion (1-10)");

    CLI11_PARSE(app, argc, argv);
    opt.group_order_cap = gsym::BigInt(cap);

    try {
        if (*analyze_cmd) {
            gsym::ParsedGraph pg =
                path == "-" ? gsym::parse_graph(std::cin) : gsym::parse_graph_file(path);
            gsym::Report r = gsym::analyze(pg.graph, path, opt);
            print_report(r, opt.format);
            return r.hadwiger_exact ? 0 : 3;
        }
        if (*family_cmd) {
            int budget_hit = 0;
            for (const auto& [name, graph] : gsym::expand_family_spec(family_spec)) {
                gsym::Report r = gsym::analyze(graph, name, opt);
                print_report(r, opt.format);
                if (!r.hadwiger_exact) budget_hit = 3;
            }
            return budget_hit;
        }
        if (*accept_cmd) {
            int failures = gsym::run_acceptance(opt.seed, std::cout, only);
            return failures == 0 ? 0 : 1;
        }
    } catch (const gsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
