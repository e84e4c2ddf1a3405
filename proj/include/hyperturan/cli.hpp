#pragma once

#include "hyperturan.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperturan::cli {

inline constexpr int kExitOptimal = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitLowerBound = 2;

inline constexpr const char* kReferenceLabel = "asymptotic reference — not asserted";

class UsageError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Table, Csv, Json };

inline OutputFormat parse_output_format(const std::string& s)
{
    if (s == "table")
        return OutputFormat::Table;
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "json")
        return OutputFormat::Json;
    throw UsageError("unknown output format '" + s + "' (expected table, csv or json)");
}

struct RunConfig
{
    std::string command;

    // Input source: a named family (with parameters) or a hypergraph file.
    std::string family;
    std::string input;
    std::string target; // second hypergraph for `hom`
    int k = 0;
    int i = 0;
    int r = 0;
    int m = 0;

    int n = 0;
    int n_from = 0;
    int n_to = 0;
    std::string part1; // comma-separated V1 for odd-bipartite
    bool best = false;
    bool max_degree3 = false;

    SolveBudget budget{};
    bool seed_construction = false;

    std::string output_format = "table";
    std::string export_format = "cnf";
    std::optional<std::size_t> at_least;
    std::string output_path;

    std::string cache_path = "turan-cache.jsonl";
    bool no_cache = false;
    bool quiet = false;

    bool balanced = false;
    std::optional<std::uint64_t> threshold;
    bool scan = false;
};

/// Default budget, overridable by HYPERTURAN_BUDGET_NODES / HYPERTURAN_BUDGET_SECS.
inline SolveBudget default_budget()
{
    SolveBudget b;
    if (const char* nodes = std::getenv("HYPERTURAN_BUDGET_NODES"))
        b.max_nodes = std::stoull(nodes);
    if (const char* secs = std::getenv("HYPERTURAN_BUDGET_SECS"))
        b.max_seconds = std::stod(secs);
    return b;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    return parts;
}

inline int require_positive(int value, const char* flag, const std::string& family)
{
    if (value < 1)
        throw UsageError("family " + family + " needs " + flag + " >= 1");
    return value;
}

inline std::string map_text(const VertexMap& map)
{
    std::string s;
    for (int v = 0; v < map.domain_size(); ++v)
        s += (v == 0 ? "" : " ") + std::to_string(v) + "->" + std::to_string(map(v));
    return s;
}

/// "{012, 013}" for n <= 10, "{[0 1 12], ...}" otherwise.
inline std::string edges_text(const Hypergraph& h)
{
    const bool compact = h.order() <= 10;
    std::string s = "{";
    for (std::size_t k = 0; k < h.size(); ++k) {
        s += k == 0 ? "" : ", ";
        const auto vs = members(h.edge(k));
        s += compact ? "" : "[";
        for (std::size_t j = 0; j < vs.size(); ++j)
            s += (compact || j == 0 ? "" : " ") + std::to_string(vs[j]);
        s += compact ? "" : "]";
    }
    return s + "}";
}

inline std::string fraction(std::uint64_t a, std::uint64_t b)
{
    std::ostringstream out;
    out << a << '/' << b << " = " << std::fixed << std::setprecision(6)
        << (b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b));
    return out.str();
}

} // namespace detail

/// Resolves a family selector. `selector` is a file path or one of
/// triangle, k4minus, expanded-triangle, suspended-expanded-triangle, matching;
/// parameters come from the config flags or inline as name:p1:p2
/// (expanded-triangle:k, suspended-expanded-triangle:i:r, matching:m:r).
inline ForbiddenFamily resolve_family(const std::string& selector, const RunConfig& cfg)
{
    if (selector.empty())
        throw UsageError("no family given (use --family or --input)");
    if (std::filesystem::exists(selector))
        return {"file:" + selector, read_hypergraph(selector)};
    auto parts = detail::split(selector, ':');
    const std::string name = parts.empty() ? selector : parts[0];
    auto param = [&](std::size_t idx, int fallback) {
        if (parts.size() > idx) {
            try {
                return std::stoi(parts[idx]);
            } catch (const std::exception&) {
                throw UsageError("bad family parameter '" + parts[idx] + "'");
            }
        }
        return fallback;
    };
    if (name == "triangle")
        return {"triangle", triangle()};
    if (name == "k4minus")
        return {"k4minus", k4_minus()};
    if (name == "expanded-triangle") {
        const int k = detail::require_positive(param(1, cfg.k), "--k", name);
        return {"expanded-triangle(" + std::to_string(k) + ")", expanded_triangle(k)};
    }
    if (name == "suspended-expanded-triangle") {
        const int i = detail::require_positive(param(1, cfg.i), "--i", name);
        const int r = detail::require_positive(param(2, cfg.r), "--r", name);
        if (r < 2 * i)
            throw UsageError("suspended-expanded-triangle needs r >= 2i");
        return {"suspended-expanded-triangle(" + std::to_string(i) + "," + std::to_string(r) + ")",
                suspended_expanded_triangle(i, r)};
    }
    if (name == "matching") {
        const int m = detail::require_positive(param(1, cfg.m), "--m", name);
        const int r = detail::require_positive(param(2, cfg.r), "--r", name);
        return {"matching(" + std::to_string(m) + "," + std::to_string(r) + ")", matching(r, m)};
    }
    throw UsageError("unknown family '" + selector + "'");
}

inline ForbiddenFamily input_family(const RunConfig& cfg)
{
    if (!cfg.family.empty() && !cfg.input.empty())
        throw UsageError("give exactly one of --family and --input");
    return resolve_family(cfg.input.empty() ? cfg.family : cfg.input, cfg);
}

/// Display name for three-edge classes of minimum degree two.
inline std::string suspended_name(int i, int r)
{
    return "suspended-expanded-triangle(" + std::to_string(i) + "," + std::to_string(r) + ")";
}

/// Reference densities that apply to the forbidden hypergraph, display only.
inline std::vector<std::string> reference_lines(const Hypergraph& forbidden)
{
    std::vector<std::string> lines;
    const Hypergraph core = remove_isolated(forbidden).graph;
    const int r = core.uniformity();
    auto line = [](const std::string& what, const std::string& value) {
        return "reference " + what + " = " + value + "  [" + kReferenceLabel + "]";
    };
    lines.push_back(line("three-edge density bound", "1/2"));
    lines.push_back(line("floor(r/2)/r (r=" + std::to_string(r) + ")",
                         std::to_string(r / 2) + "/" + std::to_string(r)));
    if (core.size() == 3 && r == 5) {
        if (is_isomorphic(core, suspended_expanded_triangle(1, 5)))
            lines.push_back(line("flag-algebra bound for " + suspended_name(1, 5), "1/5"));
        if (is_isomorphic(core, suspended_expanded_triangle(2, 5)))
            lines.push_back(line("flag-algebra bound for " + suspended_name(2, 5), "152/499"));
    }
    return lines;
}

namespace detail {

inline void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path);
    if (!file)
        throw UsageError("cannot write " + cfg.output_path);
    file << text;
}

inline nlohmann::json hypergraph_json(const Hypergraph& h)
{
    return {{"n", h.order()}, {"r", h.uniformity()}, {"edges", edge_lists(h)}};
}

inline VertexSet parse_vertex_list(const std::string& s, int n)
{
    VertexSet mask = 0;
    if (s.empty())
        return mask;
    for (const auto& tok : split(s, ',')) {
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw UsageError("bad vertex '" + tok + "' in --part1");
        }
        if (v < 0 || v >= n)
            throw UsageError("vertex " + tok + " in --part1 out of range");
        mask |= singleton(v);
    }
    return mask;
}

inline int run_construct(const RunConfig& cfg, std::ostream& out)
{
    const std::string& fam = cfg.family;
    Hypergraph h;
    std::vector<std::string> notes;
    if (fam == "expanded-triangle") {
        h = expanded_triangle(require_positive(cfg.k, "--k", fam));
    } else if (fam == "suspension") {
        const Hypergraph base = cfg.input.empty() ? expanded_triangle(require_positive(cfg.k, "--k", fam))
                                                  : read_hypergraph(cfg.input);
        h = suspension(base, require_positive(cfg.r, "--r", fam));
    } else if (fam == "odd-bipartite") {
        const int u = 2 * require_positive(cfg.k, "--k", fam);
        if (cfg.n < u)
            throw UsageError("odd-bipartite needs --n >= 2k");
        if (cfg.best) {
            const auto opt = max_odd_bipartite(cfg.n, u);
            h = opt.graph;
            notes.push_back("split " + std::to_string(opt.partition.size1()) + " " +
                            std::to_string(opt.partition.size2()));
        } else {
            if (cfg.part1.empty())
                throw UsageError("odd-bipartite needs --part1 or --best");
            const Partition p{cfg.n, parse_vertex_list(cfg.part1, cfg.n)};
            h = odd_bipartite(p, u);
            notes.push_back("split " + std::to_string(p.size1()) + " " + std::to_string(p.size2()));
        }
    } else if (fam == "matching") {
        h = matching(require_positive(cfg.r, "--r", fam), require_positive(cfg.m, "--m", fam));
    } else if (fam == "complete") {
        h = complete_rgraph(require_positive(cfg.n, "--n", fam), require_positive(cfg.r, "--r", fam));
    } else {
        throw UsageError("construct --family must be one of expanded-triangle, suspension, "
                         "odd-bipartite, matching, complete");
    }
    notes.push_back("edges " + std::to_string(h.size()));

    const OutputFormat format = parse_output_format(cfg.output_format);
    std::string text;
    if (format == OutputFormat::Json) {
        auto j = hypergraph_json(h);
        if (fam == "odd-bipartite") {
            const auto parts = split(notes.front(), ' ');
            j["split"] = {std::stoi(parts[1]), std::stoi(parts[2])};
        }
        text = j.dump() + "\n";
    } else {
        for (const auto& note : notes)
            text += "# " + note + "\n";
        text += to_text(h);
    }
    write_output(cfg, text, out);
    return kExitOptimal;
}

inline int run_classify(const RunConfig& cfg, std::ostream& out)
{
    const ThreeEdgeCatalog catalog = enumerate_three_edge(cfg.r);
    const ClassificationReport report = classify_min_degree_two(catalog);
    const OutputFormat format = parse_output_format(cfg.output_format);
    if (format == OutputFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& e : catalog.entries)
            rows.push_back({{"profile", e.profile.regions()},
                            {"vertices", e.representative.order()},
                            {"min_degree", e.min_degree},
                            {"max_degree", e.max_degree},
                            {"class", to_string(e.tag)},
                            {"i", e.expanded_i ? nlohmann::json(*e.expanded_i) : nlohmann::json(nullptr)}});
        out << nlohmann::json{{"r", catalog.r},
                              {"classes", report.classes},
                              {"min_degree_two_classes", report.min_degree_two_classes},
                              {"entries", rows}}
                   .dump()
            << '\n';
        return kExitOptimal;
    }
    if (format == OutputFormat::Csv) {
        out << "a1,a2,a3,a12,a13,a23,a123,vertices,min_degree,max_degree,class,i\n";
        for (const auto& e : catalog.entries) {
            for (int a : e.profile.regions())
                out << a << ',';
            out << e.representative.order() << ',' << e.min_degree << ',' << e.max_degree << ','
                << to_string(e.tag) << ',' << (e.expanded_i ? std::to_string(*e.expanded_i) : "") << '\n';
        }
        return kExitOptimal;
    }
    out << "three-edge " << catalog.r << "-graphs: " << report.classes << " classes, "
        << report.min_degree_two_classes << " with minimum degree >= 2 (expected " << report.expected << ")\n";
    out << std::left << std::setw(24) << "profile" << std::setw(6) << "min" << std::setw(6) << "max"
        << std::setw(7) << "class" << "match\n";
    for (const auto& e : catalog.entries) {
        out << std::left << std::setw(24) << e.profile.to_string() << std::setw(6) << e.min_degree
            << std::setw(6) << e.max_degree << std::setw(7) << to_string(e.tag)
            << (e.expanded_i ? suspended_name(*e.expanded_i, catalog.r) : "") << '\n';
    }
    return kExitOptimal;
}

inline void print_steps(const std::vector<FoldStep>& steps, std::ostream& out)
{
    for (std::size_t s = 0; s < steps.size(); ++s)
        out << "step " << s + 1 << ": fold " << steps[s].folded << " -> " << steps[s].target << "  "
            << edges_text(steps[s].result) << '\n';
}

inline int run_reduce(const RunConfig& cfg, std::ostream& out)
{
    const ForbiddenFamily fam = input_family(cfg);
    const Hypergraph& f = fam.graph;
    out << "input " << fam.name << ": " << edges_text(f) << '\n';
    if (cfg.max_degree3) {
        const DegreeThreeReduction red = reduce_to_max_degree3(f);
        out << "route " << to_string(red.route) << '\n';
        if (red.fold_pair)
            out << "pair " << red.fold_pair->first << ' ' << red.fold_pair->second << '\n';
        print_steps(red.steps, out);
        out << "target " << edges_text(red.target) << " ≅ " << suspended_name(red.expanded_i, f.uniformity())
            << '\n';
        out << "map " << map_text(red.map) << '\n';
        return kExitOptimal;
    }
    const ReductionTrace trace = reduce_to_core(f);
    print_steps(trace.steps, out);
    out << "status " << to_string(trace.status) << '\n';
    out << "terminal " << edges_text(trace.terminal) << '\n';
    out << "map " << map_text(trace.composed) << '\n';
    return kExitOptimal;
}

inline int run_hom(const RunConfig& cfg, std::ostream& out)
{
    const ForbiddenFamily from = resolve_family(cfg.input.empty() ? cfg.family : cfg.input, cfg);
    const ForbiddenFamily to = resolve_family(cfg.target, cfg);
    const auto map = find_homomorphism(from.graph, to.graph);
    const OutputFormat format = parse_output_format(cfg.output_format);
    if (format == OutputFormat::Json) {
        out << nlohmann::json{{"from", from.name},
                              {"to", to.name},
                              {"map", map ? nlohmann::json(std::vector<int>(map->images().begin(),
                                                                            map->images().end()))
                                          : nlohmann::json(nullptr)}}
                   .dump()
            << '\n';
    } else {
        out << (map ? detail::map_text(*map) : std::string("none")) << '\n';
    }
    return kExitOptimal;
}

inline int run_solve(const RunConfig& cfg, std::ostream& out)
{
    const ForbiddenFamily fam = input_family(cfg);
    if (cfg.n < 1)
        throw UsageError("solve needs --n >= 1");
    std::optional<ResultCache> cache;
    if (!cfg.no_cache)
        cache.emplace(cfg.cache_path);
    DensityOptions options{cfg.budget, cfg.seed_construction, cache ? &*cache : nullptr};
    bool hit = false;
    const SolveRecord rec = solve_cached(fam, cfg.n, options, &hit);
    const OutputFormat format = parse_output_format(cfg.output_format);
    if (format == OutputFormat::Json) {
        out << to_json(rec).dump() << '\n';
    } else {
        out << "family " << rec.family_name << " profile " << rec.family_profile.to_string() << '\n';
        out << "ex(" << rec.n << ") = " << rec.optimum << "  [" << to_string(rec.status) << "]\n";
        out << "density " << fraction(rec.optimum, binomial(rec.n, rec.r)) << '\n';
        if (!cfg.quiet) {
            out << "nodes " << rec.nodes << "  millis " << rec.millis << (hit ? "  (cached)" : "") << '\n';
            out << "witness " << edges_text(rec.witness) << '\n';
            for (const auto& line : reference_lines(fam.graph))
                out << line << '\n';
        }
    }
    if (!cfg.output_path.empty())
        write_hypergraph(cfg.output_path, rec.witness);
    return rec.status == SolveStatus::ProvedOptimal ? kExitOptimal : kExitLowerBound;
}

inline int run_density(const RunConfig& cfg, std::ostream& out)
{
    const ForbiddenFamily fam = input_family(cfg);
    if (cfg.n_from < 1 || cfg.n_to < cfg.n_from)
        throw UsageError("density needs 1 <= --n-from <= --n-to");
    std::optional<ResultCache> cache;
    if (!cfg.no_cache)
        cache.emplace(cfg.cache_path);
    DensityOptions options{cfg.budget, cfg.seed_construction, cache ? &*cache : nullptr};
    const auto points = density_sequence(fam, cfg.n_from, cfg.n_to, options);
    const OutputFormat format = parse_output_format(cfg.output_format);
    bool all_optimal = true;
    for (const auto& p : points)
        all_optimal = all_optimal && p.status == SolveStatus::ProvedOptimal;
    if (format == OutputFormat::Csv) {
        out << "n,ex,binomial,density,status\n";
        for (const auto& p : points)
            out << p.n << ',' << p.ex << ',' << p.total << ',' << std::setprecision(10) << p.density() << ','
                << to_string(p.status) << '\n';
    } else if (format == OutputFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : points)
            rows.push_back({{"n", p.n}, {"ex", p.ex}, {"binomial", p.total}, {"status", to_string(p.status)}});
        out << nlohmann::json{{"family", fam.name}, {"points", rows}, {"monotone", true}}.dump() << '\n';
    } else {
        out << "family " << fam.name << '\n';
        out << std::left << std::setw(5) << "n" << std::setw(8) << "ex" << std::setw(26) << "density"
            << "status\n";
        for (const auto& p : points)
            out << std::left << std::setw(5) << p.n << std::setw(8) << p.ex << std::setw(26)
                << fraction(p.ex, p.total) << to_string(p.status) << '\n';
        out << "monotonicity audit: non-increasing\n";
        for (const auto& line : reference_lines(fam.graph))
            out << line << '\n';
    }
    return all_optimal ? kExitOptimal : kExitLowerBound;
}

inline int run_export(const RunConfig& cfg, std::ostream& out)
{
    const ForbiddenFamily fam = input_family(cfg);
    if (cfg.n < 1)
        throw UsageError("export needs --n >= 1");
    const TripleSystem sys = forbidden_triples(fam, cfg.n);
    const ExportFormat format = parse_export_format(cfg.export_format);
    if (format == ExportFormat::Ilp && cfg.at_least)
        throw UsageError("--at-least applies to cnf export only");
    write_output(cfg, export_constraints(sys, format, cfg.at_least), out);
    return kExitOptimal;
}

inline int run_stability(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.input.empty())
        throw UsageError("stability needs --input <hypergraph file>");
    const Hypergraph h = read_hypergraph(cfg.input);
    const OutputFormat format = parse_output_format(cfg.output_format);
    auto vertex_list = [](VertexSet s) {
        std::string t;
        for (int v : members(s))
            t += (t.empty() ? "" : " ") + std::to_string(v);
        return t;
    };

    if (h.uniformity() % 2 == 1) {
        const LinkScan scan = link_partition_scan(h, cfg.balanced);
        if (format == OutputFormat::Csv) {
            out << "vertex,link_edges,part1,bad,missing,total\n";
            for (const auto& row : scan.rows)
                out << row.vertex << ',' << row.link_edges << ",\"" << vertex_list(row.best.partition.part1())
                    << "\"," << row.best.bad_count() << ',' << row.best.missing_count() << ','
                    << row.best.total() << '\n';
            return kExitOptimal;
        }
        out << "link partition scan (" << h.order() << " vertices)\n";
        for (const auto& row : scan.rows)
            out << "vertex " << row.vertex << ": link edges " << row.link_edges << ", V1 {"
                << vertex_list(row.best.partition.part1()) << "}, bad " << row.best.bad_count() << ", missing "
                << row.best.missing_count() << ", deviation " << row.best.total() << '\n';
        out << "dist matrix\n";
        for (const auto& line : scan.dist) {
            for (std::size_t y = 0; y < line.size(); ++y)
                out << (y == 0 ? "" : " ") << line[y];
            out << '\n';
        }
        out << "max dist " << scan.max_dist << "  mean dist " << std::fixed << std::setprecision(4)
            << scan.mean_dist << '\n';
        return kExitOptimal;
    }

    const DeviationReport report = best_partition(h, cfg.balanced);
    std::optional<HeavyVertices> heavy;
    if (cfg.threshold)
        heavy = heavy_missing_vertices(h, report.partition, *cfg.threshold);
    if (format == OutputFormat::Csv) {
        out << "part1,part2,bad,missing,total" << (heavy ? ",heavy" : "") << '\n';
        out << '"' << vertex_list(report.partition.part1()) << "\",\"" << vertex_list(report.partition.part2())
            << "\"," << report.bad_count() << ',' << report.missing_count() << ',' << report.total();
        if (heavy)
            out << ",\"" << vertex_list(heavy->vertices) << '"';
        out << '\n';
        return kExitOptimal;
    }
    out << "best partition" << (cfg.balanced ? " (balanced)" : "") << ": V1 {"
        << vertex_list(report.partition.part1()) << "} V2 {" << vertex_list(report.partition.part2()) << "}\n";
    out << "bad " << report.bad_count() << "  missing " << report.missing_count() << "  total "
        << report.total() << '\n';
    if (heavy) {
        out << "heavy vertices (missing degree >= " << *cfg.threshold << "): {" << vertex_list(heavy->vertices)
            << "}" << (heavy->threshold_zero ? "  [threshold 0 selects every vertex]" : "") << '\n';
    }
    return kExitOptimal;
}

inline int run_audit(const RunConfig& cfg, std::ostream& out)
{
    const ResultCache cache(cfg.cache_path);
    const AuditResult audit = audit_cache(cache);
    out << "audited " << audit.sequences << " sequences, " << audit.points << " points\n";
    for (const auto& v : audit.violations)
        out << "violation " << v << '\n';
    return audit.violations.empty() ? kExitOptimal : kExitUsage;
}

} // namespace detail

/// Dispatches one subcommand. Validation problems are reported on `err` with
/// exit status 1; an unfinished solve exits with 2.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.budget.max_nodes == 0 || cfg.budget.max_seconds <= 0)
            throw UsageError("budgets must be positive");
        if (cfg.command == "construct")
            return detail::run_construct(cfg, out);
        if (cfg.command == "classify")
            return detail::run_classify(cfg, out);
        if (cfg.command == "reduce")
            return detail::run_reduce(cfg, out);
        if (cfg.command == "hom")
            return detail::run_hom(cfg, out);
        if (cfg.command == "solve")
            return detail::run_solve(cfg, out);
        if (cfg.command == "density")
            return detail::run_density(cfg, out);
        if (cfg.command == "export")
            return detail::run_export(cfg, out);
        if (cfg.command == "stability")
            return detail::run_stability(cfg, out);
        if (cfg.command == "audit")
            return detail::run_audit(cfg, out);
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace hyperturan::cli
