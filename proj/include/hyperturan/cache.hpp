#pragma once

#include "io.hpp"
#include "turan.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hyperturan {

class CacheError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json to_json(const SolveRecord& rec)
{
    return nlohmann::json{{"family_profile", rec.family_profile.regions()},
                          {"family_name", rec.family_name},
                          {"n", rec.n},
                          {"r", rec.r},
                          {"optimum", rec.optimum},
                          {"status", to_string(rec.status)},
                          {"witness", edge_lists(rec.witness)},
                          {"nodes", rec.nodes},
                          {"millis", rec.millis},
                          {"version", rec.version}};
}

inline SolveRecord record_from_json(const nlohmann::json& j)
{
    SolveRecord rec;
    rec.family_profile = RegionProfile::canonical(j.at("family_profile").get<RegionProfile::Regions>());
    rec.family_name = j.at("family_name").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.r = j.at("r").get<int>();
    rec.optimum = j.at("optimum").get<std::uint64_t>();
    rec.status = parse_status(j.at("status").get<std::string>());
    rec.witness = make_hypergraph(rec.n, rec.r, j.at("witness").get<std::vector<std::vector<int>>>());
    rec.nodes = j.at("nodes").get<std::uint64_t>();
    rec.millis = j.at("millis").get<std::uint64_t>();
    rec.version = j.at("version").get<std::string>();
    if (rec.witness.size() != rec.optimum && rec.status == SolveStatus::ProvedOptimal)
        throw CacheError("record witness size differs from its optimum");
    return rec;
}

/// Append-only JSON-lines store of solve results. One self-contained object
/// per line; a trailing partial line (an append in progress) is ignored.
class ResultCache
{
  public:
    explicit ResultCache(std::string path) : path_(std::move(path)) { load(); }

    const std::string& path() const noexcept { return path_; }
    const std::vector<SolveRecord>& records() const noexcept { return records_; }

    void load()
    {
        records_.clear();
        std::ifstream in(path_);
        if (!in)
            return;
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        std::size_t pos = 0;
        int line_no = 0;
        while (pos < text.size()) {
            const std::size_t end = text.find('\n', pos);
            ++line_no;
            const bool terminated = end != std::string::npos;
            const std::string line = text.substr(pos, terminated ? end - pos : std::string::npos);
            pos = terminated ? end + 1 : text.size();
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            try {
                records_.push_back(record_from_json(nlohmann::json::parse(line)));
            } catch (const std::exception& e) {
                if (!terminated)
                    break;
                throw CacheError(path_ + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
    }

    /// A proved-optimal record for this family profile, n and solver version.
    std::optional<SolveRecord> lookup(const RegionProfile& profile, int n,
                                      const std::string& version = kSolverVersion) const
    {
        for (auto it = records_.rbegin(); it != records_.rend(); ++it)
            if (it->family_profile == profile && it->n == n && it->version == version &&
                it->status == SolveStatus::ProvedOptimal)
                return *it;
        return std::nullopt;
    }

    void append(const SolveRecord& rec)
    {
        std::ofstream out(path_, std::ios::app);
        if (!out)
            throw CacheError("cannot append to " + path_);
        out << to_json(rec).dump() << '\n';
        out.flush();
        records_.push_back(rec);
    }

  private:
    std::string path_;
    std::vector<SolveRecord> records_;
};

} // namespace hyperturan
