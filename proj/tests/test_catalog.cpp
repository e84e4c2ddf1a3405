#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hyperturan;

namespace {

std::vector<CatalogEntry> min_degree_two(const ThreeEdgeCatalog& c)
{
    std::vector<CatalogEntry> out;
    for (const auto& e : c.entries)
        if (e.tag == ThreeEdgeClass::MinDegreeTwo)
            out.push_back(e);
    return out;
}

} // namespace

TEST(Catalog, GraphsHaveOnlyTheTriangle)
{
    const auto c = enumerate_three_edge(2);
    const auto t2 = min_degree_two(c);
    ASSERT_EQ(t2.size(), 1u);
    EXPECT_TRUE(is_isomorphic(t2.front().representative, triangle()));
    // triangle, path P4, star K_{1,3}, P3 + K2, 3K2
    EXPECT_EQ(c.entries.size(), 5u);
}

TEST(Catalog, ThreeUniformOnlyK4Minus)
{
    const auto t2 = min_degree_two(enumerate_three_edge(3));
    ASSERT_EQ(t2.size(), 1u);
    EXPECT_TRUE(is_isomorphic(t2.front().representative, k4_minus()));
    EXPECT_EQ(t2.front().expanded_i, 1);
}

TEST(Catalog, FourUniformHasTwo)
{
    const auto t2 = min_degree_two(enumerate_three_edge(4));
    ASSERT_EQ(t2.size(), 2u);
    std::set<int> is;
    for (const auto& e : t2) {
        is.insert(*e.expanded_i);
        EXPECT_TRUE(is_isomorphic(e.representative, suspended_expanded_triangle(*e.expanded_i, 4)));
    }
    EXPECT_EQ(is, (std::set<int>{1, 2}));
}

TEST(Catalog, ClassifyCounts)
{
    for (int r = kCatalogMinUniformity; r <= kCatalogMaxUniformity; ++r) {
        const auto report = classify_min_degree_two(r);
        EXPECT_EQ(report.min_degree_two_classes, static_cast<std::size_t>(r / 2)) << r;
        EXPECT_EQ(report.expected, static_cast<std::size_t>(r / 2));
        EXPECT_GT(report.classes, report.min_degree_two_classes);
    }
    EXPECT_EQ(classify_min_degree_two(5).min_degree_two_classes, 2u);
    EXPECT_EQ(classify_min_degree_two(7).min_degree_two_classes, 3u);
}

TEST(Catalog, OddUniformityForcesADegreeThreeVertex)
{
    for (int r = 3; r <= kCatalogMaxUniformity; r += 2)
        for (const auto& e : min_degree_two(enumerate_three_edge(r)))
            EXPECT_EQ(e.max_degree, 3) << e.profile.to_string();
}

TEST(Catalog, EvenMaxExpandedTriangleIsTwoRegular)
{
    for (int r = 2; r <= kCatalogMaxUniformity; r += 2)
        for (const auto& e : min_degree_two(enumerate_three_edge(r)))
            EXPECT_EQ(e.max_degree == 2, *e.expanded_i == r / 2);
}

TEST(Catalog, RepresentativesArePairwiseNonIsomorphicAndRealizeTheirProfile)
{
    for (int r = 2; r <= 4; ++r) {
        const auto c = enumerate_three_edge(r);
        for (std::size_t a = 0; a < c.entries.size(); ++a) {
            const auto& e = c.entries[a];
            EXPECT_EQ(e.representative.size(), 3u);
            EXPECT_EQ(e.representative.uniformity(), r);
            EXPECT_EQ(RegionProfile::of(e.representative), e.profile);
            for (std::size_t b = a + 1; b < c.entries.size(); ++b)
                EXPECT_FALSE(isomorphism_backtrack(e.representative, c.entries[b].representative).isomorphic);
        }
    }
}

// Labeled cross-check: fix E1 = {0..r-1}, take every pair of further r-sets
// on 3r vertices, and bucket by backtracking isomorphism.
TEST(Catalog, LabeledEnumerationAgrees)
{
    for (int r = 2; r <= 3; ++r) {
        const int n = 3 * r;
        const VertexSet e1 = full_set(r);
        const auto sets = all_subsets(n, r);
        std::vector<Hypergraph> classes;
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = a + 1; b < sets.size(); ++b) {
                if (sets[a] == e1 || sets[b] == e1)
                    continue;
                const auto h = remove_isolated(Hypergraph::from_masks(n, r, {e1, sets[a], sets[b]})).graph;
                const bool known = std::any_of(classes.begin(), classes.end(), [&](const Hypergraph& c) {
                    return isomorphism_backtrack(c, h).isomorphic;
                });
                if (!known)
                    classes.push_back(h);
            }
        const auto catalog = enumerate_three_edge(r);
        EXPECT_EQ(classes.size(), catalog.entries.size()) << r;
        for (const auto& c : classes)
            EXPECT_EQ(std::count_if(catalog.entries.begin(), catalog.entries.end(),
                                    [&](const CatalogEntry& e) { return e.profile == RegionProfile::of(c); }),
                      1);
    }
}

TEST(Catalog, RangeErrors)
{
    EXPECT_THROW(enumerate_three_edge(1), HypergraphError);
    EXPECT_THROW(enumerate_three_edge(9), HypergraphError);
}
