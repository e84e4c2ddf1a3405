#include <hyperturan/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

using hyperturan::cli::RunConfig;

namespace {

void add_family_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--family", cfg.family,
                    "triangle | k4minus | expanded-triangle | suspended-expanded-triangle | matching | <file>");
    sub->add_option("--input", cfg.input, "hypergraph text file");
    sub->add_option("--k", cfg.k, "expanded-triangle half-uniformity k");
    sub->add_option("--i", cfg.i, "suspended-expanded-triangle parameter i");
    sub->add_option("--r", cfg.r, "uniformity");
    sub->add_option("--m", cfg.m, "matching edge count");
}

void add_budget_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--budget-nodes", cfg.budget.max_nodes, "branch-and-bound node limit");
    sub->add_option("--budget-secs", cfg.budget.max_seconds, "wall-clock limit in seconds");
    sub->add_flag("--seed-construction", cfg.seed_construction,
                  "start from the odd-bipartite construction when it applies");
    sub->add_option("--cache", cfg.cache_path, "result cache (JSON lines)");
    sub->add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    cfg.budget = hyperturan::cli::default_budget();

    CLI::App app{"hyperturan: three-edge hypergraph Turán workbench"};
    app.require_subcommand(1);
    app.add_flag("--quiet", cfg.quiet, "terse reports");

    auto* construct = app.add_subcommand("construct", "emit a named construction as hypergraph text");
    construct->add_option("--family", cfg.family, "expanded-triangle | suspension | odd-bipartite | matching | complete")
        ->required();
    construct->add_option("--input", cfg.input, "base hypergraph for suspension");
    construct->add_option("--k", cfg.k, "k (expanded triangle T_2k; odd-bipartite uniformity 2k)");
    construct->add_option("--r", cfg.r, "uniformity");
    construct->add_option("--m", cfg.m, "matching edge count");
    construct->add_option("--n", cfg.n, "vertex count");
    construct->add_option("--part1", cfg.part1, "comma-separated V1 for odd-bipartite");
    construct->add_flag("--best", cfg.best, "largest odd-bipartite hypergraph on n vertices");
    construct->add_option("--format", cfg.output_format, "table | json");
    construct->add_option("--output", cfg.output_path, "write to file instead of stdout");

    auto* classify = app.add_subcommand("classify", "catalog of three-edge r-graphs");
    classify->add_option("--r", cfg.r, "uniformity, 2..8")->required();
    classify->add_option("--format", cfg.output_format, "table | csv | json");

    auto* reduce = app.add_subcommand("reduce", "fold a minimum-degree-one three-edge hypergraph");
    add_family_options(reduce, cfg);
    reduce->add_flag("--max-degree3", cfg.max_degree3, "reduce onto a target with a degree-three vertex");

    auto* hom = app.add_subcommand("hom", "search for a homomorphism");
    add_family_options(hom, cfg);
    hom->add_option("--to", cfg.target, "target hypergraph file or family (name:params)")->required();
    hom->add_option("--format", cfg.output_format, "table | json");

    auto* solve = app.add_subcommand("solve", "exact ex(n, F)");
    add_family_options(solve, cfg);
    add_budget_options(solve, cfg);
    solve->add_option("--n", cfg.n, "vertex count")->required();
    solve->add_option("--format", cfg.output_format, "table | json");
    solve->add_option("--output", cfg.output_path, "write the witness hypergraph to a file");

    auto* density = app.add_subcommand("density", "ex(n, F) / C(n, r) over a range of n");
    add_family_options(density, cfg);
    add_budget_options(density, cfg);
    density->add_option("--n-from", cfg.n_from, "first n")->required();
    density->add_option("--n-to", cfg.n_to, "last n")->required();
    density->add_option("--format", cfg.output_format, "table | csv | json");

    auto* exp = app.add_subcommand("export", "write the conflict system for an external solver");
    add_family_options(exp, cfg);
    exp->add_option("--n", cfg.n, "vertex count")->required();
    exp->add_option("--format", cfg.export_format, "cnf | ilp");
    exp->add_option("--at-least", cfg.at_least, "cnf only: require at least this many edges");
    exp->add_option("--output", cfg.output_path, "write to file instead of stdout");

    auto* stability = app.add_subcommand("stability", "distance to odd-bipartite form");
    stability->add_option("--input", cfg.input, "hypergraph text file")->required();
    stability->add_flag("--balanced", cfg.balanced, "only partitions with ||V1| - |V2|| <= 1");
    stability->add_option("--threshold", cfg.threshold, "report vertices with missing degree >= t");
    stability->add_option("--format", cfg.output_format, "table | csv");

    auto* audit = app.add_subcommand("audit", "check every cached density sequence is non-increasing");
    audit->add_option("--cache", cfg.cache_path, "result cache (JSON lines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hyperturan::cli::kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return hyperturan::cli::run(cfg, std::cout, std::cerr);
}
