#pragma once

#include "constructions.hpp"
#include "hypergraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperturan {

inline constexpr int kMaxScanVertices = 24;

/// H against the complete odd-bipartite hypergraph B[V1, V2] of the same
/// uniformity. Bad edges lie in H but not in B; missing edges lie in B but not in H.
struct DeviationReport
{
    Partition partition;
    std::vector<VertexSet> bad;
    std::vector<VertexSet> missing;

    std::size_t bad_count() const noexcept { return bad.size(); }
    std::size_t missing_count() const noexcept { return missing.size(); }
    std::size_t total() const noexcept { return bad.size() + missing.size(); }
};

inline void require_even_uniformity(const Hypergraph& h)
{
    if (h.uniformity() % 2 != 0)
        throw HypergraphError("deviation needs even uniformity, got " + std::to_string(h.uniformity()));
}

/// One pass over all u-subsets of [n], classified by parity against V1 and
/// membership in H.
inline DeviationReport deviation(const Hypergraph& h, const Partition& p)
{
    require_even_uniformity(h);
    if (p.order() != h.order())
        throw HypergraphError("partition and hypergraph have different vertex counts");
    DeviationReport report;
    report.partition = p;
    for_each_subset(h.order(), h.uniformity(), [&](VertexSet e) {
        const bool in_b = set_size(e & p.part1()) % 2 == 1;
        const bool in_h = h.contains(e);
        if (in_h && !in_b)
            report.bad.push_back(e);
        else if (in_b && !in_h)
            report.missing.push_back(e);
    });
    return report;
}

/// |H △ B[V1, V2]| from |H|, |B| and the number of H-edges meeting V1 oddly.
inline std::uint64_t deviation_total(const Hypergraph& h, const Partition& p)
{
    std::uint64_t odd = 0;
    for (VertexSet e : h.edges())
        odd += static_cast<std::uint64_t>(set_size(e & p.part1()) % 2);
    const std::uint64_t b = odd_bipartite_count(h.order(), p.size1(), h.uniformity());
    return h.size() + b - 2 * odd;
}

inline bool balanced(const Partition& p)
{
    const int diff = p.size1() - p.size2();
    return diff >= -1 && diff <= 1;
}

/// Exhaustive minimizer of |H △ B[V1, V2]| over partitions with 0 ∈ V1 (the
/// deviation is swap-invariant). Ties go to the numerically smallest V1.
inline DeviationReport best_partition(const Hypergraph& h, bool balanced_only = false)
{
    require_even_uniformity(h);
    const int n = h.order();
    if (n > kMaxScanVertices)
        throw HypergraphError("partition scan supports n <= " + std::to_string(kMaxScanVertices));
    if (n == 0)
        return deviation(h, Partition{0, 0});
    std::optional<Partition> best;
    std::uint64_t best_total = 0;
    const VertexSet rest = VertexSet{1} << (n - 1);
    for (VertexSet upper = 0; upper < rest; ++upper) {
        const Partition p{n, (upper << 1) | 1U};
        if (balanced_only && !balanced(p))
            continue;
        const std::uint64_t total = deviation_total(h, p);
        if (!best || total < best_total) {
            best = p;
            best_total = total;
        }
    }
    return deviation(h, *best);
}

/// min(|P1 △ Q1|, |P1 △ Q2|).
inline int partition_dist(const Partition& p, const Partition& q)
{
    if (p.order() != q.order())
        throw HypergraphError("partition distance between different vertex counts");
    return std::min(set_size(p.part1() ^ q.part1()), set_size(p.part1() ^ q.part2()));
}

struct HeavyVertices
{
    VertexSet vertices = 0;
    std::vector<int> missing_degree;
    std::size_t missing_edges = 0;
    /// threshold 0 selects every vertex; reported so callers can flag it.
    bool threshold_zero = false;
};

/// Vertices whose degree in the missing-edge set is at least `threshold`.
inline HeavyVertices heavy_missing_vertices(const Hypergraph& h, const Partition& p, std::uint64_t threshold)
{
    const DeviationReport report = deviation(h, p);
    HeavyVertices out;
    out.missing_degree.assign(static_cast<std::size_t>(h.order()), 0);
    out.missing_edges = report.missing_count();
    for (VertexSet e : report.missing)
        for (int v : members(e))
            ++out.missing_degree[static_cast<std::size_t>(v)];
    out.threshold_zero = threshold == 0;
    for (int v = 0; v < h.order(); ++v)
        if (static_cast<std::uint64_t>(out.missing_degree[static_cast<std::size_t>(v)]) >= threshold)
            out.vertices |= singleton(v);
    return out;
}

struct LinkScanRow
{
    int vertex = 0;
    std::size_t link_edges = 0;
    DeviationReport best;
};

struct LinkScan
{
    std::vector<LinkScanRow> rows;
    std::vector<std::vector<int>> dist; // dist[x][y] between best link partitions
    int max_dist = 0;
    double mean_dist = 0.0;            // over unordered pairs x < y
};

/// For each vertex of an odd-uniformity hypergraph: the best partition of its
/// link, then pairwise distances between those partitions.
inline LinkScan link_partition_scan(const Hypergraph& h, bool balanced_only = false)
{
    if (h.uniformity() < 3 || h.uniformity() % 2 == 0)
        throw HypergraphError("link scan needs odd uniformity at least 3");
    if (h.order() > kMaxScanVertices)
        throw HypergraphError("link scan supports n <= " + std::to_string(kMaxScanVertices));
    LinkScan scan;
    for (int x = 0; x < h.order(); ++x) {
        const Hypergraph l = link(h, x);
        scan.rows.push_back({x, l.size(), best_partition(l, balanced_only)});
    }
    const std::size_t n = scan.rows.size();
    scan.dist.assign(n, std::vector<int>(n, 0));
    long long sum = 0;
    long long pairs = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            scan.dist[x][y] = partition_dist(scan.rows[x].best.partition, scan.rows[y].best.partition);
            if (x < y) {
                sum += scan.dist[x][y];
                ++pairs;
                scan.max_dist = std::max(scan.max_dist, scan.dist[x][y]);
            }
        }
    scan.mean_dist = pairs == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(pairs);
    return scan;
}

} // namespace hyperturan
