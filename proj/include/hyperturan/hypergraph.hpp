#pragma once

#include "bits.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperturan {

class HypergraphError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// An r-uniform hypergraph on vertices {0..n-1}. Edges are bit vectors kept
/// sorted by numeric value and free of duplicates, so equality of two
/// hypergraphs is equality of their edge sequences.
class Hypergraph
{
  public:
    Hypergraph() = default;

    /// Validates, deduplicates and sorts. Throws HypergraphError on an edge of
    /// the wrong size, an out-of-range vertex, or n above capacity.
    static Hypergraph from_masks(int n, int r, std::vector<VertexSet> edges)
    {
        check_shape(n, r);
        const VertexSet universe = full_set(n);
        for (VertexSet e : edges) {
            if ((e & ~universe) != 0)
                throw HypergraphError("edge has a vertex outside 0.." + std::to_string(n - 1));
            if (set_size(e) != r)
                throw HypergraphError("edge of size " + std::to_string(set_size(e)) +
                                      " in a " + std::to_string(r) + "-graph");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Hypergraph{n, r, std::move(edges)};
    }

    int order() const noexcept { return n_; }
    int uniformity() const noexcept { return r_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    std::span<const VertexSet> edges() const noexcept { return edges_; }
    VertexSet edge(std::size_t i) const { return edges_.at(i); }

    bool contains(VertexSet e) const
    {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    /// Union of all edges: the non-isolated vertices.
    VertexSet support() const noexcept
    {
        return std::accumulate(edges_.begin(), edges_.end(), VertexSet{0},
                               [](VertexSet a, VertexSet b) { return a | b; });
    }

    int degree(int v) const noexcept
    {
        return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                              [v](VertexSet e) { return contains_vertex(e, v); }));
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  private:
    Hypergraph(int n, int r, std::vector<VertexSet> edges)
        : n_(n), r_(r), edges_(std::move(edges))
    {
    }

    static void check_shape(int n, int r)
    {
        if (n < 0 || n > kMaxVertices)
            throw HypergraphError("vertex count " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxVertices));
        if (r < 1 || r > kMaxVertices)
            throw HypergraphError("uniformity must be at least 1, got " + std::to_string(r));
    }

    int n_ = 0;
    int r_ = 1;
    std::vector<VertexSet> edges_;
};

inline Hypergraph make_hypergraph(int n, int r, const std::vector<std::vector<int>>& edges)
{
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (const auto& edge : edges) {
        VertexSet mask = 0;
        for (int v : edge) {
            if (v < 0 || v >= n || v >= kMaxVertices)
                throw HypergraphError("vertex " + std::to_string(v) + " out of range for n=" +
                                      std::to_string(n));
            if (contains_vertex(mask, v))
                throw HypergraphError("vertex " + std::to_string(v) + " repeated within an edge");
            mask |= singleton(v);
        }
        if (static_cast<int>(edge.size()) != r)
            throw HypergraphError("edge with " + std::to_string(edge.size()) + " vertices in a " +
                                  std::to_string(r) + "-graph");
        masks.push_back(mask);
    }
    return Hypergraph::from_masks(n, r, std::move(masks));
}

struct DegreeProfile
{
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    double average = 0.0;
};

/// Degrees over the full vertex set {0..n-1}, isolated vertices included.
inline DegreeProfile degree_profile(const Hypergraph& h)
{
    DegreeProfile p;
    p.degrees.assign(static_cast<std::size_t>(h.order()), 0);
    for (VertexSet e : h.edges())
        for (int v : members(e))
            ++p.degrees[static_cast<std::size_t>(v)];
    if (!p.degrees.empty()) {
        const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *lo;
        p.max_degree = *hi;
        p.average = static_cast<double>(h.uniformity()) * static_cast<double>(h.size()) /
                    static_cast<double>(h.order());
    }
    return p;
}

/// Minimum and maximum degree over non-isolated vertices; (0, 0) for no edges.
inline std::pair<int, int> active_degree_range(const Hypergraph& h)
{
    const auto degrees = degree_profile(h).degrees;
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (int d : degrees) {
        if (d == 0)
            continue;
        lo = first ? d : std::min(lo, d);
        hi = first ? d : std::max(hi, d);
        first = false;
    }
    return {lo, hi};
}

inline Hypergraph link(const Hypergraph& h, int v)
{
    if (v < 0 || v >= h.order())
        throw HypergraphError("link vertex out of range");
    if (h.uniformity() < 2)
        throw HypergraphError("link of a 1-graph is undefined");
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        if (contains_vertex(e, v))
            out.push_back(e & ~singleton(v));
    return Hypergraph::from_masks(h.order(), h.uniformity() - 1, std::move(out));
}

/// Deletes x from every edge. x must lie in every edge; uniformity drops by one.
inline Hypergraph truncate_vertex(const Hypergraph& h, int x)
{
    if (x < 0 || x >= h.order())
        throw HypergraphError("vertex out of range");
    if (h.uniformity() < 2)
        throw HypergraphError("cannot truncate a 1-graph");
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges()) {
        if (!contains_vertex(e, x))
            throw HypergraphError("vertex " + std::to_string(x) + " is missing from some edge");
        out.push_back(e & ~singleton(x));
    }
    return Hypergraph::from_masks(h.order(), h.uniformity() - 1, std::move(out));
}

/// Drops every edge through x; x stays in the vertex set as an isolated vertex.
inline Hypergraph drop_vertex(const Hypergraph& h, int x)
{
    if (x < 0 || x >= h.order())
        throw HypergraphError("vertex out of range");
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        if (!contains_vertex(e, x))
            out.push_back(e);
    return Hypergraph::from_masks(h.order(), h.uniformity(), std::move(out));
}

enum class RemovalMode { Truncate, Drop };

inline Hypergraph remove_vertex(const Hypergraph& h, int x, RemovalMode mode)
{
    return mode == RemovalMode::Truncate ? truncate_vertex(h, x) : drop_vertex(h, x);
}

/// Relabels the non-isolated vertices to 0..m-1 preserving order.
/// relabel[v] is the new index of v, or -1 when v is isolated.
struct Compacted
{
    Hypergraph graph;
    std::vector<int> relabel;
};

inline Compacted remove_isolated(const Hypergraph& h)
{
    Compacted out;
    out.relabel.assign(static_cast<std::size_t>(h.order()), -1);
    const VertexSet support = h.support();
    int next = 0;
    for (int v = 0; v < h.order(); ++v)
        if (contains_vertex(support, v))
            out.relabel[static_cast<std::size_t>(v)] = next++;
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        VertexSet mapped = 0;
        for (int v : members(e))
            mapped |= singleton(out.relabel[static_cast<std::size_t>(v)]);
        edges.push_back(mapped);
    }
    out.graph = Hypergraph::from_masks(next, h.uniformity(), std::move(edges));
    return out;
}

// ---------------------------------------------------------------------------
// Three-edge invariant

/// Venn-region sizes (a1, a2, a3, a12, a13, a23, a123) of three edges,
/// minimized lexicographically over the six relabelings of the edges. Two
/// three-edge hypergraphs without isolated vertices are isomorphic exactly
/// when their profiles agree.
class RegionProfile
{
  public:
    using Regions = std::array<int, 7>;

    RegionProfile() = default;

    static Regions raw_regions(VertexSet e1, VertexSet e2, VertexSet e3)
    {
        return {set_size(e1 & ~e2 & ~e3), set_size(e2 & ~e1 & ~e3), set_size(e3 & ~e1 & ~e2),
                set_size(e1 & e2 & ~e3),  set_size(e1 & e3 & ~e2),  set_size(e2 & e3 & ~e1),
                set_size(e1 & e2 & e3)};
    }

    static RegionProfile of(VertexSet e1, VertexSet e2, VertexSet e3)
    {
        return canonical(raw_regions(e1, e2, e3));
    }

    static RegionProfile of(const Hypergraph& h)
    {
        if (h.size() != 3)
            throw HypergraphError("region profile needs exactly three edges");
        return of(h.edge(0), h.edge(1), h.edge(2));
    }

    static RegionProfile canonical(const Regions& raw)
    {
        for (int x : raw)
            if (x < 0)
                throw HypergraphError("negative region size");
        Regions best = raw;
        for (const auto& p : kPermutations) {
            const Regions candidate = relabel(raw, p);
            if (candidate < best)
                best = candidate;
        }
        RegionProfile out;
        out.regions_ = best;
        return out;
    }

    /// Regions after renaming: new edge i is old edge p[i].
    static Regions relabel(const Regions& raw, const std::array<int, 3>& p)
    {
        Regions out{};
        for (int i = 0; i < 3; ++i)
            out[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
        out[3] = raw[pair_index(p[0], p[1])];
        out[4] = raw[pair_index(p[0], p[2])];
        out[5] = raw[pair_index(p[1], p[2])];
        out[6] = raw[6];
        return out;
    }

    const Regions& regions() const noexcept { return regions_; }
    int vertex_count() const noexcept { return std::accumulate(regions_.begin(), regions_.end(), 0); }

    /// Sizes of the three edges; all equal for a uniform hypergraph.
    std::array<int, 3> edge_sizes() const noexcept
    {
        const auto& a = regions_;
        return {a[0] + a[3] + a[4] + a[6], a[1] + a[3] + a[5] + a[6], a[2] + a[4] + a[5] + a[6]};
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < regions_.size(); ++i) {
            if (i != 0)
                s += ',';
            s += std::to_string(regions_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const RegionProfile&, const RegionProfile&) = default;

    static constexpr std::array<std::array<int, 3>, 6> kPermutations{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  private:
    static std::size_t pair_index(int i, int j)
    {
        if (i > j)
            std::swap(i, j);
        if (i == 0)
            return j == 1 ? 3 : 4;
        return 5;
    }

    Regions regions_{};
};

// ---------------------------------------------------------------------------
// Vertex maps

/// A map from {0..domain-1} into {0..codomain-1}, not necessarily injective.
class VertexMap
{
  public:
    VertexMap() = default;

    VertexMap(int domain, int codomain, std::vector<int> image)
        : domain_(domain), codomain_(codomain), image_(std::move(image))
    {
        if (static_cast<int>(image_.size()) != domain_)
            throw HypergraphError("vertex map image has the wrong length");
        for (int v : image_)
            if (v < 0 || v >= codomain_)
                throw HypergraphError("vertex map image " + std::to_string(v) +
                                      " outside the codomain");
    }

    static VertexMap identity(int n)
    {
        std::vector<int> image(static_cast<std::size_t>(n));
        std::iota(image.begin(), image.end(), 0);
        return VertexMap{n, n, std::move(image)};
    }

    int domain_size() const noexcept { return domain_; }
    int codomain_size() const noexcept { return codomain_; }
    std::span<const int> images() const noexcept { return image_; }
    int operator()(int v) const { return image_.at(static_cast<std::size_t>(v)); }

    VertexSet image_of(VertexSet s) const
    {
        VertexSet out = 0;
        for (int v : members(s))
            out |= singleton((*this)(v));
        return out;
    }

    /// next ∘ this.
    VertexMap then(const VertexMap& next) const
    {
        if (next.domain_ != codomain_)
            throw HypergraphError("cannot compose vertex maps with mismatched sizes");
        std::vector<int> image(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i)
            image[i] = next(image_[i]);
        return VertexMap{domain_, next.codomain_, std::move(image)};
    }

    friend bool operator==(const VertexMap&, const VertexMap&) = default;

  private:
    int domain_ = 0;
    int codomain_ = 0;
    std::vector<int> image_;
};

/// True iff the map sends every edge of `from` onto an edge of `to`.
inline bool is_homomorphism(const VertexMap& map, const Hypergraph& from, const Hypergraph& to)
{
    if (map.domain_size() != from.order() || map.codomain_size() != to.order())
        return false;
    if (from.uniformity() != to.uniformity())
        return false;
    return std::all_of(from.edges().begin(), from.edges().end(), [&](VertexSet e) {
        const VertexSet img = map.image_of(e);
        return set_size(img) == to.uniformity() && to.contains(img);
    });
}

// ---------------------------------------------------------------------------
// Isomorphism

/// bijection[v] is the image of v in F2, or -1 for an isolated vertex of F1.
struct IsomorphismResult
{
    bool isomorphic = false;
    std::vector<int> bijection;
};

namespace detail {

struct IsoSearch
{
    const Hypergraph& a;
    const Hypergraph& b;
    std::vector<int> order;       // active vertices of a, decreasing degree
    std::vector<int> degree_a;
    std::vector<int> degree_b;
    std::vector<int> image;       // per vertex of a
    VertexSet used = 0;

    bool consistent(int v) const
    {
        // Every edge of a through v whose vertices are all mapped must land on an edge of b.
        for (VertexSet e : a.edges()) {
            if (!contains_vertex(e, v))
                continue;
            VertexSet img = 0;
            bool complete = true;
            for (int u : members(e)) {
                if (image[static_cast<std::size_t>(u)] < 0) {
                    complete = false;
                    break;
                }
                img |= singleton(image[static_cast<std::size_t>(u)]);
            }
            if (complete && !b.contains(img))
                return false;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        const VertexSet candidates = b.support() & ~used;
        for (int w : members(candidates)) {
            if (degree_b[static_cast<std::size_t>(w)] != degree_a[static_cast<std::size_t>(v)])
                continue;
            image[static_cast<std::size_t>(v)] = w;
            used |= singleton(w);
            if (consistent(v) && extend(depth + 1))
                return true;
            used &= ~singleton(w);
            image[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

inline bool same_shape(const Hypergraph& a, const Hypergraph& b)
{
    if (a.uniformity() != b.uniformity() || a.size() != b.size())
        return false;
    if (set_size(a.support()) != set_size(b.support()))
        return false;
    auto da = degree_profile(a).degrees;
    auto db = degree_profile(b).degrees;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    da.erase(std::remove(da.begin(), da.end(), 0), da.end());
    db.erase(std::remove(db.begin(), db.end(), 0), db.end());
    return da == db;
}

} // namespace detail

/// Backtracking isomorphism test over degree-compatible assignments.
/// Isolated vertices are ignored on both sides.
inline IsomorphismResult isomorphism_backtrack(const Hypergraph& a, const Hypergraph& b)
{
    IsomorphismResult result;
    if (!detail::same_shape(a, b))
        return result;
    detail::IsoSearch search{a, b, {}, degree_profile(a).degrees, degree_profile(b).degrees,
                             std::vector<int>(static_cast<std::size_t>(a.order()), -1)};
    search.order = members(a.support());
    std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
        return search.degree_a[static_cast<std::size_t>(x)] >
               search.degree_a[static_cast<std::size_t>(y)];
    });
    if (search.extend(0)) {
        result.isomorphic = true;
        result.bijection = std::move(search.image);
    }
    return result;
}

/// Isomorphism via Venn regions, for two hypergraphs with exactly three edges.
inline IsomorphismResult isomorphism_three_edge(const Hypergraph& a, const Hypergraph& b)
{
    IsomorphismResult result;
    if (a.size() != 3 || b.size() != 3)
        throw HypergraphError("three-edge isomorphism needs three edges on both sides");
    if (a.uniformity() != b.uniformity())
        return result;
    const std::array<VertexSet, 3> ea{a.edge(0), a.edge(1), a.edge(2)};
    const std::array<VertexSet, 3> eb{b.edge(0), b.edge(1), b.edge(2)};
    const auto target = RegionProfile::raw_regions(eb[0], eb[1], eb[2]);

    auto region_sets = [](const std::array<VertexSet, 3>& e) {
        return std::array<VertexSet, 7>{e[0] & ~e[1] & ~e[2], e[1] & ~e[0] & ~e[2],
                                        e[2] & ~e[0] & ~e[1], e[0] & e[1] & ~e[2],
                                        e[0] & e[2] & ~e[1],  e[1] & e[2] & ~e[0],
                                        e[0] & e[1] & e[2]};
    };

    for (const auto& p : RegionProfile::kPermutations) {
        const std::array<VertexSet, 3> permuted{ea[static_cast<std::size_t>(p[0])],
                                                ea[static_cast<std::size_t>(p[1])],
                                                ea[static_cast<std::size_t>(p[2])]};
        if (RegionProfile::raw_regions(permuted[0], permuted[1], permuted[2]) != target)
            continue;
        result.isomorphic = true;
        result.bijection.assign(static_cast<std::size_t>(a.order()), -1);
        const auto from = region_sets(permuted);
        const auto to = region_sets(eb);
        for (std::size_t region = 0; region < 7; ++region) {
            const auto src = members(from[region]);
            const auto dst = members(to[region]);
            for (std::size_t i = 0; i < src.size(); ++i)
                result.bijection[static_cast<std::size_t>(src[i])] = dst[i];
        }
        return result;
    }
    return result;
}

/// Three-edge inputs are decided by Venn regions, everything else by backtracking.
inline IsomorphismResult find_isomorphism(const Hypergraph& a, const Hypergraph& b)
{
    if (a.size() == 3 && b.size() == 3)
        return isomorphism_three_edge(a, b);
    return isomorphism_backtrack(a, b);
}

inline bool is_isomorphic(const Hypergraph& a, const Hypergraph& b)
{
    return find_isomorphism(a, b).isomorphic;
}

// ---------------------------------------------------------------------------
// Copies of a three-edge pattern

using EdgeTriple = std::array<std::size_t, 3>;

/// Calls visit(triple) for every 3-subset of H's edges (indices ascending)
/// forming a copy of F. Stops early when visit returns false.
template <typename Visitor>
void for_each_copy(const Hypergraph& pattern, const Hypergraph& host, Visitor&& visit)
{
    if (pattern.size() != 3)
        throw HypergraphError("copy search needs a pattern with exactly three edges");
    if (pattern.uniformity() != host.uniformity())
        throw HypergraphError("pattern and host have different uniformities");
    const RegionProfile want = RegionProfile::of(pattern);
    const int span = want.vertex_count();
    const auto edges = host.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const VertexSet ij = edges[i] | edges[j];
            if (set_size(ij) > span)
                continue;
            for (std::size_t k = j + 1; k < edges.size(); ++k) {
                if (set_size(ij | edges[k]) != span)
                    continue;
                if (RegionProfile::of(edges[i], edges[j], edges[k]) != want)
                    continue;
                if (!visit(EdgeTriple{i, j, k}))
                    return;
            }
        }
    }
}

inline std::vector<EdgeTriple> copies_of(const Hypergraph& pattern, const Hypergraph& host)
{
    std::vector<EdgeTriple> out;
    for_each_copy(pattern, host, [&](const EdgeTriple& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

inline bool contains_copy(const Hypergraph& pattern, const Hypergraph& host)
{
    bool found = false;
    for_each_copy(pattern, host, [&](const EdgeTriple&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace hyperturan
