#pragma once

#include "constructions.hpp"
#include "hypergraph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperturan {

namespace detail {

struct HomSearch
{
    const Hypergraph& from;
    const Hypergraph& to;
    std::vector<std::vector<VertexSet>> incident; // edges of `from` through each vertex
    std::vector<int> order;
    std::vector<int> image;

    // Every edge through v must still extend to an edge of `to`: images of its
    // assigned vertices are distinct and lie inside a common target edge.
    bool feasible(int v) const
    {
        for (VertexSet e : incident[static_cast<std::size_t>(v)]) {
            VertexSet img = 0;
            int assigned = 0;
            for (int u : members(e)) {
                const int w = image[static_cast<std::size_t>(u)];
                if (w < 0)
                    continue;
                ++assigned;
                img |= singleton(w);
            }
            if (set_size(img) != assigned)
                return false;
            bool covered = false;
            for (VertexSet f : to.edges())
                if ((img & ~f) == 0) {
                    covered = true;
                    break;
                }
            if (!covered)
                return false;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        for (int w : members(to.support())) {
            image[static_cast<std::size_t>(v)] = w;
            if (feasible(v) && extend(depth + 1))
                return true;
        }
        image[static_cast<std::size_t>(v)] = -1;
        return false;
    }
};

} // namespace detail

/// Exhaustive homomorphism search; vertices are assigned in decreasing-degree
/// order with forward checking on partially mapped edges. Isolated source
/// vertices map to vertex 0.
inline std::optional<VertexMap> find_homomorphism(const Hypergraph& from, const Hypergraph& to)
{
    if (from.uniformity() != to.uniformity())
        throw HypergraphError("homomorphism between different uniformities");
    if (to.order() == 0)
        return from.order() == 0 ? std::optional<VertexMap>{VertexMap{0, 0, {}}} : std::nullopt;
    if (!from.empty() && to.empty())
        return std::nullopt;

    detail::HomSearch search{from, to, {}, {}, std::vector<int>(static_cast<std::size_t>(from.order()), -1)};
    search.incident.resize(static_cast<std::size_t>(from.order()));
    for (VertexSet e : from.edges())
        for (int v : members(e))
            search.incident[static_cast<std::size_t>(v)].push_back(e);
    search.order = members(from.support());
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return search.incident[static_cast<std::size_t>(a)].size() >
               search.incident[static_cast<std::size_t>(b)].size();
    });
    if (!search.extend(0))
        return std::nullopt;
    for (int& w : search.image)
        if (w < 0)
            w = 0;
    VertexMap map{from.order(), to.order(), std::move(search.image)};
    if (!is_homomorphism(map, from, to))
        throw std::logic_error("homomorphism search returned an invalid map");
    return map;
}

struct FoldResult
{
    Hypergraph graph;
    VertexMap map;
};

/// Replaces the unique edge E through x by (E \ {x}) ∪ {y}, merging a
/// duplicate if one appears. The map fixes every vertex except x ↦ y.
inline FoldResult fold_vertex(const Hypergraph& f, int x, int y)
{
    if (x < 0 || x >= f.order() || y < 0 || y >= f.order())
        throw HypergraphError("fold vertex out of range");
    if (f.degree(x) != 1)
        throw HypergraphError("fold source " + std::to_string(x) + " does not have degree 1");
    std::vector<VertexSet> edges;
    for (VertexSet e : f.edges()) {
        if (contains_vertex(e, x)) {
            if (contains_vertex(e, y))
                throw HypergraphError("fold target " + std::to_string(y) +
                                      " lies in the edge of " + std::to_string(x));
            edges.push_back((e & ~singleton(x)) | singleton(y));
        } else {
            edges.push_back(e);
        }
    }
    Hypergraph folded = Hypergraph::from_masks(f.order(), f.uniformity(), std::move(edges));
    std::vector<int> image(static_cast<std::size_t>(f.order()));
    std::iota(image.begin(), image.end(), 0);
    image[static_cast<std::size_t>(x)] = y;
    VertexMap map{f.order(), f.order(), std::move(image)};
    if (!is_homomorphism(map, f, folded))
        throw std::logic_error("fold map is not a homomorphism");
    return {std::move(folded), std::move(map)};
}

inline int count_degree_one(const Hypergraph& h)
{
    const auto degrees = degree_profile(h).degrees;
    return static_cast<int>(std::count(degrees.begin(), degrees.end(), 1));
}

struct FoldStep
{
    int folded = 0; // x
    int target = 0; // y
    Hypergraph result;
    VertexMap map;
};

enum class ReductionStatus { MinDegreeTwo, Collapsed };

inline const char* to_string(ReductionStatus s)
{
    return s == ReductionStatus::MinDegreeTwo ? "reached-min-degree-2" : "collapsed-to-<=2-edges";
}

struct ReductionTrace
{
    Hypergraph original;
    std::vector<FoldStep> steps;
    VertexMap composed;
    Hypergraph terminal;
    ReductionStatus status = ReductionStatus::MinDegreeTwo;
};

/// A three-edge hypergraph whose minimum degree over non-isolated vertices is 1.
inline bool in_min_degree_one_family(const Hypergraph& h)
{
    return h.size() == 3 && active_degree_range(h).first == 1;
}

inline bool in_min_degree_two_family(const Hypergraph& h)
{
    return h.size() == 3 && active_degree_range(h).first >= 2;
}

namespace detail {

inline void fold_until_core(ReductionTrace& trace)
{
    Hypergraph current = trace.steps.empty() ? trace.original : trace.steps.back().result;
    while (current.size() == 3 && active_degree_range(current).first == 1) {
        const auto degrees = degree_profile(current).degrees;
        int x = -1;
        for (int v = 0; v < current.order() && x < 0; ++v)
            if (degrees[static_cast<std::size_t>(v)] == 1)
                x = v;
        VertexSet home = 0;
        for (VertexSet e : current.edges())
            if (contains_vertex(e, x))
                home = e;
        const VertexSet choices = current.support() & ~home;
        if (choices == 0)
            throw std::logic_error("no fold target outside the edge of a degree-one vertex");
        const int y = std::countr_zero(choices);
        const int before = count_degree_one(current);
        FoldResult folded = fold_vertex(current, x, y);
        if (folded.graph.size() == 3 && count_degree_one(folded.graph) >= before)
            throw std::logic_error("fold did not reduce the number of degree-one vertices");
        trace.composed = trace.composed.then(folded.map);
        trace.steps.push_back({x, y, folded.graph, folded.map});
        current = std::move(folded.graph);
    }
    trace.terminal = current;
    trace.status = current.size() == 3 ? ReductionStatus::MinDegreeTwo : ReductionStatus::Collapsed;
}

} // namespace detail

/// Repeatedly folds the smallest degree-one vertex into the smallest vertex
/// outside its edge, until every vertex has degree at least two or at most
/// two edges remain.
inline ReductionTrace reduce_to_core(const Hypergraph& f)
{
    if (!in_min_degree_one_family(f))
        throw HypergraphError("reduction needs three edges and minimum degree 1");
    ReductionTrace trace;
    trace.original = f;
    trace.composed = VertexMap::identity(f.order());
    detail::fold_until_core(trace);
    if (!is_homomorphism(trace.composed, trace.original, trace.terminal))
        throw std::logic_error("composed reduction map is not a homomorphism");
    return trace;
}

/// Smallest (x, y) with d(x) = 1, d(y) = 2 and no edge containing both.
inline std::optional<std::pair<int, int>> find_fold_pair(const Hypergraph& f)
{
    const auto degrees = degree_profile(f).degrees;
    for (int x = 0; x < f.order(); ++x) {
        if (degrees[static_cast<std::size_t>(x)] != 1)
            continue;
        for (int y = 0; y < f.order(); ++y) {
            if (degrees[static_cast<std::size_t>(y)] != 2)
                continue;
            const VertexSet both = singleton(x) | singleton(y);
            const bool shared = std::any_of(f.edges().begin(), f.edges().end(),
                                            [both](VertexSet e) { return (e & both) == both; });
            if (!shared)
                return std::pair{x, y};
        }
    }
    return std::nullopt;
}

enum class DegreeThreeRoute { DisjointEdges, CoreFolding, PairFold };

inline const char* to_string(DegreeThreeRoute r)
{
    switch (r) {
    case DegreeThreeRoute::DisjointEdges: return "disjoint-edges";
    case DegreeThreeRoute::CoreFolding: return "core-folding";
    case DegreeThreeRoute::PairFold: return "pair-fold";
    }
    return "?";
}

struct DegreeThreeReduction
{
    Hypergraph target;     // three edges, minimum degree >= 2, maximum degree 3
    VertexMap map;         // homomorphism from the input onto target
    int expanded_i = 0;    // target ≅ suspension(expanded_triangle(i), r)
    DegreeThreeRoute route = DegreeThreeRoute::CoreFolding;
    std::optional<std::pair<int, int>> fold_pair;
    std::vector<FoldStep> steps;
};

/// Maps a three-edge r-graph of minimum degree 1 (r >= 3) homomorphically onto
/// a three-edge r-graph with minimum degree >= 2 and a vertex of degree three.
inline DegreeThreeReduction reduce_to_max_degree3(const Hypergraph& f)
{
    const int r = f.uniformity();
    if (r < 3)
        throw HypergraphError("degree-three reduction needs uniformity at least 3");
    if (!in_min_degree_one_family(f))
        throw HypergraphError("degree-three reduction needs three edges and minimum degree 1");

    DegreeThreeReduction out;
    const Hypergraph fallback = suspended_expanded_triangle(1, r);

    // Lands a hypergraph with at most two edges on the fallback target.
    auto land_collapsed = [&](const Hypergraph& collapsed, const VertexMap& so_far) {
        auto hom = find_homomorphism(collapsed, fallback);
        if (!hom)
            throw std::logic_error("no homomorphism from a collapsed hypergraph to a single edge");
        out.target = fallback;
        out.map = so_far.then(*hom);
    };

    const int max_degree = active_degree_range(f).second;
    if (max_degree == 1) {
        out.route = DegreeThreeRoute::DisjointEdges;
        std::vector<int> image(static_cast<std::size_t>(f.order()), 0);
        for (std::size_t j = 0; j < 3; ++j) {
            const auto src = members(f.edge(j));
            const auto dst = members(fallback.edge(j));
            for (std::size_t p = 0; p < src.size(); ++p)
                image[static_cast<std::size_t>(src[p])] = dst[p];
        }
        out.target = fallback;
        out.map = VertexMap{f.order(), fallback.order(), std::move(image)};
    } else {
        ReductionTrace trace;
        trace.composed = VertexMap::identity(f.order());
        if (max_degree == 2) {
            out.route = DegreeThreeRoute::PairFold;
            out.fold_pair = find_fold_pair(f);
            if (!out.fold_pair)
                throw std::logic_error("no degree-one/degree-two pair outside a common edge");
            FoldResult folded = fold_vertex(f, out.fold_pair->first, out.fold_pair->second);
            trace.composed = folded.map;
            trace.steps.push_back({out.fold_pair->first, out.fold_pair->second, folded.graph, folded.map});
        } else {
            out.route = DegreeThreeRoute::CoreFolding;
        }
        trace.original = f;
        detail::fold_until_core(trace);
        out.steps = trace.steps;
        if (trace.status == ReductionStatus::Collapsed) {
            land_collapsed(trace.terminal, trace.composed);
        } else {
            out.target = trace.terminal;
            out.map = trace.composed;
        }
    }

    const auto [lo, hi] = active_degree_range(out.target);
    if (out.target.size() != 3 || lo < 2 || hi != 3)
        throw std::logic_error("degree-three reduction produced an invalid target");
    if (!is_homomorphism(out.map, f, out.target))
        throw std::logic_error("degree-three reduction map is not a homomorphism");
    int matches = 0;
    for (int i = 1; 2 * i < r; ++i)
        if (is_isomorphic(out.target, suspended_expanded_triangle(i, r))) {
            out.expanded_i = i;
            ++matches;
        }
    if (matches != 1)
        throw std::logic_error("degree-three target matches " + std::to_string(matches) +
                               " suspended expanded triangles");
    return out;
}

} // namespace hyperturan
