#pragma once

#include "hypergraph.hpp"

#include <string>

namespace hyperturan {

/// An ordered bipartition (V1, V2) of {0..n-1}; V2 is the complement of V1.
class Partition
{
  public:
    Partition() = default;

    Partition(int n, VertexSet part1) : n_(n), part1_(part1)
    {
        if (n < 0 || n > kMaxVertices)
            throw HypergraphError("partition vertex count out of range");
        if ((part1 & ~full_set(n)) != 0)
            throw HypergraphError("partition part has a vertex outside 0.." + std::to_string(n - 1));
    }

    /// V1 = {0..size1-1}.
    static Partition leading(int n, int size1)
    {
        if (size1 < 0 || size1 > n)
            throw HypergraphError("part size out of range");
        return Partition{n, full_set(size1)};
    }

    int order() const noexcept { return n_; }
    VertexSet part1() const noexcept { return part1_; }
    VertexSet part2() const noexcept { return full_set(n_) & ~part1_; }
    int size1() const noexcept { return set_size(part1_); }
    int size2() const noexcept { return n_ - size1(); }
    Partition swapped() const { return Partition{n_, part2()}; }

    /// Same unordered pair {V1, V2}.
    bool same_split(const Partition& other) const noexcept
    {
        return n_ == other.n_ && (part1_ == other.part1_ || part1_ == other.part2());
    }

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    int n_ = 0;
    VertexSet part1_ = 0;
};

/// Expanded triangle on 3k vertices: S1 = {0..k-1}, S2 = {k..2k-1}, S3 = {2k..3k-1},
/// edges S1∪S2, S2∪S3, S3∪S1.
inline Hypergraph expanded_triangle(int k)
{
    if (k < 1)
        throw HypergraphError("expanded triangle needs k >= 1");
    if (3 * k > kMaxVertices)
        throw HypergraphError("expanded triangle exceeds vertex capacity");
    const VertexSet s1 = full_set(k);
    const VertexSet s2 = s1 << k;
    const VertexSet s3 = s2 << k;
    return Hypergraph::from_masks(3 * k, 2 * k, {s1 | s2, s2 | s3, s3 | s1});
}

/// Adds r - s fresh apex vertices n, n+1, ... to every edge of an s-graph.
inline Hypergraph suspension(const Hypergraph& f, int r)
{
    const int s = f.uniformity();
    if (r < s)
        throw HypergraphError("suspension target uniformity " + std::to_string(r) +
                              " is below " + std::to_string(s));
    const int n = f.order() + (r - s);
    if (n > kMaxVertices)
        throw HypergraphError("suspension exceeds vertex capacity");
    const VertexSet apex = full_set(n) & ~full_set(f.order());
    std::vector<VertexSet> edges;
    for (VertexSet e : f.edges())
        edges.push_back(e | apex);
    return Hypergraph::from_masks(n, r, std::move(edges));
}

/// The r-suspension of the expanded triangle T_{2i}.
inline Hypergraph suspended_expanded_triangle(int i, int r)
{
    return suspension(expanded_triangle(i), r);
}

inline Hypergraph triangle() { return expanded_triangle(1); }

/// Three triples on four vertices sharing vertex 0: {012, 013, 023}.
inline Hypergraph k4_minus() { return make_hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }

/// All u-subsets meeting V1 (hence also V2) in an odd number of vertices.
inline Hypergraph odd_bipartite(const Partition& p, int u)
{
    if (u < 2 || u % 2 != 0)
        throw HypergraphError("odd-bipartite uniformity must be even and at least 2");
    if (p.order() < u)
        throw HypergraphError("odd-bipartite hypergraph needs n >= uniformity");
    std::vector<VertexSet> edges;
    for_each_subset(p.order(), u, [&](VertexSet e) {
        if (set_size(e & p.part1()) % 2 == 1)
            edges.push_back(e);
    });
    return Hypergraph::from_masks(p.order(), u, std::move(edges));
}

/// Number of edges of an odd-bipartite u-graph with |V1| = size1 on n vertices.
inline std::uint64_t odd_bipartite_count(int n, int size1, int u)
{
    std::uint64_t total = 0;
    for (int j = 1; j <= u; j += 2)
        total += binomial(size1, j) * binomial(n - size1, u - j);
    return total;
}

struct OddBipartiteOptimum
{
    Partition partition;
    Hypergraph graph;
    std::uint64_t edges = 0;
};

/// Largest odd-bipartite u-graph on n vertices; ties go to the more balanced split.
inline OddBipartiteOptimum max_odd_bipartite(int n, int u)
{
    if (u < 2 || u % 2 != 0)
        throw HypergraphError("odd-bipartite uniformity must be even and at least 2");
    if (n < u)
        throw HypergraphError("odd-bipartite hypergraph needs n >= uniformity");
    int best_size = 0;
    std::uint64_t best = 0;
    for (int s = 0; s <= n / 2; ++s) {
        const std::uint64_t count = odd_bipartite_count(n, s, u);
        if (count >= best) {
            best = count;
            best_size = s;
        }
    }
    const Partition p = Partition::leading(n, best_size);
    return {p, odd_bipartite(p, u), best};
}

/// m pairwise disjoint r-edges on r*m vertices.
inline Hypergraph matching(int r, int m)
{
    if (r < 1 || m < 0)
        throw HypergraphError("matching needs r >= 1 and m >= 0");
    if (r * m > kMaxVertices)
        throw HypergraphError("matching exceeds vertex capacity");
    std::vector<VertexSet> edges;
    for (int i = 0; i < m; ++i)
        edges.push_back(full_set(r) << (i * r));
    return Hypergraph::from_masks(r * m, r, std::move(edges));
}

inline Hypergraph complete_rgraph(int n, int r)
{
    if (r < 1 || n < r)
        throw HypergraphError("complete r-graph needs 1 <= r <= n");
    if (n > kMaxVertices)
        throw HypergraphError("complete r-graph exceeds vertex capacity");
    return Hypergraph::from_masks(n, r, all_subsets(n, r));
}

} // namespace hyperturan
