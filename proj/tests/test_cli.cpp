#include <hyperturan/cli.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hyperturan;
using cli::RunConfig;

namespace {

struct Outcome
{
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run_in_process(RunConfig cfg)
{
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(cfg, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

RunConfig config(const std::string& command)
{
    RunConfig cfg;
    cfg.command = command;
    cfg.no_cache = true;
    return cfg;
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "hyperturan-cli-test";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::filesystem::remove(p);
    return p;
}

Outcome run_binary(const std::string& args)
{
    const auto err_path = scratch("stderr.txt");
    const std::string cmd = std::string(HYPERTURAN_CLI) + " " + args + " 2>" + err_path.string();
    Outcome o;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, "", "popen failed"};
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        o.out.append(buf.data(), got);
    const int status = pclose(pipe);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream e(err_path);
    std::stringstream ss;
    ss << e.rdbuf();
    o.err = ss.str();
    return o;
}

} // namespace

TEST(CliInProcess, ClassifyFive)
{
    auto cfg = config("classify");
    cfg.r = 5;
    const auto o = run_in_process(cfg);
    EXPECT_EQ(o.code, cli::kExitOptimal);
    EXPECT_NE(o.out.find("2 with minimum degree >= 2"), std::string::npos);
    EXPECT_NE(o.out.find("suspended-expanded-triangle(1,5)"), std::string::npos);
    EXPECT_NE(o.out.find("suspended-expanded-triangle(2,5)"), std::string::npos);

    cfg.output_format = "json";
    const auto j = nlohmann::json::parse(run_in_process(cfg).out);
    EXPECT_EQ(j["min_degree_two_classes"], 2);
}

TEST(CliInProcess, SolveTriangleSix)
{
    auto cfg = config("solve");
    cfg.family = "triangle";
    cfg.n = 6;
    const auto o = run_in_process(cfg);
    EXPECT_EQ(o.code, cli::kExitOptimal);
    EXPECT_NE(o.out.find("ex(6) = 9  [proved-optimal]"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("not asserted"), std::string::npos);
}

TEST(CliInProcess, SolveBudgetExhaustionExitsTwo)
{
    auto cfg = config("solve");
    cfg.family = "k4minus";
    cfg.n = 7;
    cfg.budget.max_nodes = 3;
    EXPECT_EQ(run_in_process(cfg).code, cli::kExitLowerBound);
}

TEST(CliInProcess, InlineFamilyParameters)
{
    auto cfg = config("solve");
    cfg.family = "expanded-triangle:2";
    cfg.n = 6;
    cfg.quiet = true;
    EXPECT_NE(run_in_process(cfg).out.find("ex(6) = 10"), std::string::npos);
    cfg.family = "suspended-expanded-triangle:1:3";
    EXPECT_NE(run_in_process(cfg).out.find("ex(6) = 10"), std::string::npos);
}

TEST(CliInProcess, ConstructBestOddBipartite)
{
    auto cfg = config("construct");
    cfg.family = "odd-bipartite";
    cfg.n = 6;
    cfg.k = 2;
    cfg.best = true;
    const auto o = run_in_process(cfg);
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("# split 1 5"), std::string::npos);
    EXPECT_NE(o.out.find("# edges 10"), std::string::npos);
    // the text after the comments parses back to the same hypergraph
    EXPECT_EQ(parse_text(o.out), max_odd_bipartite(6, 4).graph);
}

TEST(CliInProcess, UsageErrorsExitOne)
{
    auto cfg = config("solve");
    cfg.family = "nonsense";
    cfg.n = 5;
    auto o = run_in_process(cfg);
    EXPECT_EQ(o.code, cli::kExitUsage);
    EXPECT_NE(o.err.find("unknown family"), std::string::npos);

    cfg.family = "expanded-triangle";
    EXPECT_EQ(run_in_process(cfg).code, cli::kExitUsage);

    auto bad = config("frobnicate");
    EXPECT_EQ(run_in_process(bad).code, cli::kExitUsage);

    auto cls = config("classify");
    cls.r = 12;
    EXPECT_EQ(run_in_process(cls).code, cli::kExitUsage);
}

TEST(CliInProcess, ReduceAndHom)
{
    const auto path = scratch("path3.txt");
    write_hypergraph(path.string(), make_hypergraph(8, 4, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}}));
    auto cfg = config("reduce");
    cfg.input = path.string();
    cfg.max_degree3 = true;
    auto o = run_in_process(cfg);
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("route"), std::string::npos);
    EXPECT_NE(o.out.find("pair 0 4"), std::string::npos);

    auto hom = config("hom");
    hom.family = "triangle";
    hom.target = "triangle";
    EXPECT_NE(run_in_process(hom).out.find("0->"), std::string::npos);
    hom.family = "k4minus";
    hom.target = "matching:3:3";
    EXPECT_EQ(run_in_process(hom).out, "none\n");
}

TEST(CliInProcess, CacheAndAudit)
{
    const auto cache = scratch("cache.jsonl");
    auto cfg = config("density");
    cfg.family = "triangle";
    cfg.n_from = 3;
    cfg.n_to = 7;
    cfg.no_cache = false;
    cfg.cache_path = cache.string();
    EXPECT_EQ(run_in_process(cfg).code, 0);
    auto audit = config("audit");
    audit.cache_path = cache.string();
    const auto o = run_in_process(audit);
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("audited 1 sequences, 5 points"), std::string::npos);
}

TEST(CliInProcess, StabilityReports)
{
    const auto even = scratch("b.txt");
    write_hypergraph(even.string(), odd_bipartite(Partition{8, 0b111}, 4));
    auto cfg = config("stability");
    cfg.input = even.string();
    cfg.threshold = 1;
    auto o = run_in_process(cfg);
    EXPECT_NE(o.out.find("V1 {0 1 2}"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("total 0"), std::string::npos);

    const auto odd = scratch("k4m.txt");
    write_hypergraph(odd.string(), complete_rgraph(5, 3));
    cfg.input = odd.string();
    cfg.threshold.reset();
    o = run_in_process(cfg);
    EXPECT_NE(o.out.find("dist matrix"), std::string::npos);
}

TEST(CliBinary, EndToEnd)
{
    auto o = run_binary("classify --r 5");
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("2 with minimum degree >= 2"), std::string::npos);

    o = run_binary("solve --family triangle --n 6 --no-cache");
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("ex(6) = 9"), std::string::npos);

    o = run_binary("construct --family odd-bipartite --n 6 --k 2 --best");
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("# split 1 5"), std::string::npos);
    EXPECT_NE(o.out.find("# edges 10"), std::string::npos);

    o = run_binary("solve --family k4minus --n 7 --no-cache --budget-nodes 3");
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.out.find("lower-bound-only"), std::string::npos);

    EXPECT_EQ(run_binary("solve --family triangle").code, 1);
    EXPECT_EQ(run_binary("no-such-command").code, 1);
    EXPECT_EQ(run_binary("--help").code, 0);

    const auto lp = scratch("t5.lp");
    o = run_binary("export --family triangle --n 5 --format ilp --output " + lp.string());
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(std::filesystem::exists(lp));
}
