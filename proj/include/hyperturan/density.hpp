#pragma once

#include "cache.hpp"
#include "constructions.hpp"
#include "turan.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hyperturan {

class DensityError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct DensityPoint
{
    int n = 0;
    std::uint64_t ex = 0;
    std::uint64_t total = 0; // C(n, r)
    SolveStatus status = SolveStatus::ProvedOptimal;
    bool from_cache = false;

    double density() const { return total == 0 ? 0.0 : static_cast<double>(ex) / static_cast<double>(total); }
};

/// a.ex / a.total <= b.ex / b.total, exactly.
inline bool density_at_most(const DensityPoint& a, const DensityPoint& b)
{
    return static_cast<unsigned __int128>(a.ex) * b.total <= static_cast<unsigned __int128>(b.ex) * a.total;
}

/// Index of the first point whose density exceeds its predecessor's, looking
/// only at consecutive proved-optimal points; nullopt when non-increasing.
inline std::optional<std::size_t> first_density_increase(const std::vector<DensityPoint>& points)
{
    for (std::size_t i = 1; i < points.size(); ++i) {
        const auto& prev = points[i - 1];
        const auto& cur = points[i];
        if (prev.status != SolveStatus::ProvedOptimal || cur.status != SolveStatus::ProvedOptimal)
            continue;
        if (!density_at_most(cur, prev))
            return i;
    }
    return std::nullopt;
}

struct DensityOptions
{
    SolveBudget budget{};
    bool seed_construction = false;
    ResultCache* cache = nullptr;
};

/// The largest odd-bipartite hypergraph, a starting incumbent for expanded triangles.
inline std::optional<Hypergraph> construction_seed(const Hypergraph& forbidden, int n)
{
    const Hypergraph core = remove_isolated(forbidden).graph;
    const int u = core.uniformity();
    if (u % 2 != 0 || n < u || !is_isomorphic(core, expanded_triangle(u / 2)))
        return std::nullopt;
    return max_odd_bipartite(n, u).graph;
}

/// Solves (or fetches) ex(n, F) and appends fresh results to the cache.
inline SolveRecord solve_cached(const ForbiddenFamily& family, int n, const DensityOptions& options,
                                bool* from_cache = nullptr)
{
    const TripleSystem sys = forbidden_triples(family, n);
    if (options.cache) {
        if (auto hit = options.cache->lookup(sys.profile(), n)) {
            if (from_cache)
                *from_cache = true;
            return *hit;
        }
    }
    std::optional<Hypergraph> seed;
    if (options.seed_construction)
        seed = construction_seed(family.graph, n);
    SolveRecord rec = solve_exact(sys, options.budget, seed);
    if (options.cache)
        options.cache->append(rec);
    if (from_cache)
        *from_cache = false;
    return rec;
}

/// ex(n, F) / C(n, r) for n in [n_from, n_to]. Throws DensityError if the
/// proved-optimal part of the sequence ever increases.
inline std::vector<DensityPoint> density_sequence(const ForbiddenFamily& family, int n_from, int n_to,
                                                  const DensityOptions& options = {})
{
    if (n_from > n_to)
        throw HypergraphError("empty n range");
    std::vector<DensityPoint> points;
    for (int n = n_from; n <= n_to; ++n) {
        DensityPoint p;
        const SolveRecord rec = solve_cached(family, n, options, &p.from_cache);
        p.n = n;
        p.ex = rec.optimum;
        p.total = binomial(n, rec.r);
        p.status = rec.status;
        points.push_back(p);
    }
    if (auto bad = first_density_increase(points))
        throw DensityError("density increases from n=" + std::to_string(points[*bad - 1].n) +
                           " to n=" + std::to_string(points[*bad].n));
    return points;
}

struct AuditResult
{
    std::size_t sequences = 0;
    std::size_t points = 0;
    std::vector<std::string> violations;
};

/// Groups proved-optimal cache records by (profile, version) and checks every
/// resulting density sequence is non-increasing in n.
inline AuditResult audit_cache(const ResultCache& cache)
{
    std::map<std::pair<RegionProfile, std::string>, std::map<int, DensityPoint>> groups;
    for (const auto& rec : cache.records()) {
        if (rec.status != SolveStatus::ProvedOptimal)
            continue;
        auto& seq = groups[{rec.family_profile, rec.version}];
        DensityPoint p{rec.n, rec.optimum, binomial(rec.n, rec.r), rec.status, true};
        auto [it, inserted] = seq.emplace(rec.n, p);
        if (!inserted && it->second.ex != rec.optimum)
            throw CacheError("conflicting optima for " + rec.family_profile.to_string() +
                             " at n=" + std::to_string(rec.n));
    }
    AuditResult out;
    for (const auto& [key, seq] : groups) {
        std::vector<DensityPoint> points;
        for (const auto& [n, p] : seq)
            points.push_back(p);
        ++out.sequences;
        out.points += points.size();
        if (auto bad = first_density_increase(points))
            out.violations.push_back(key.first.to_string() + " n=" + std::to_string(points[*bad].n));
    }
    return out;
}

} // namespace hyperturan
