#pragma once

#include "constructions.hpp"
#include "hypergraph.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperturan {

inline constexpr int kCatalogMinUniformity = 2;
inline constexpr int kCatalogMaxUniformity = 8;

enum class ThreeEdgeClass { MinDegreeOne, MinDegreeTwo };

inline const char* to_string(ThreeEdgeClass c)
{
    return c == ThreeEdgeClass::MinDegreeOne ? "T1" : "T2";
}

struct CatalogEntry
{
    RegionProfile profile;
    Hypergraph representative;
    int min_degree = 0;
    int max_degree = 0;
    ThreeEdgeClass tag = ThreeEdgeClass::MinDegreeOne;
    /// For MinDegreeTwo classes: the unique i with class ≅ suspension(T_{2i}, r).
    std::optional<int> expanded_i;
};

struct ThreeEdgeCatalog
{
    int r = 0;
    std::vector<CatalogEntry> entries;

    std::size_t count(ThreeEdgeClass c) const
    {
        return static_cast<std::size_t>(std::count_if(
            entries.begin(), entries.end(), [c](const CatalogEntry& e) { return e.tag == c; }));
    }
};

/// Realizes a profile with one contiguous block of vertices per Venn region,
/// blocks ordered a1, a2, a3, a12, a13, a23, a123.
inline Hypergraph realize_profile(const RegionProfile& profile)
{
    const auto& a = profile.regions();
    const auto sizes = profile.edge_sizes();
    if (sizes[0] != sizes[1] || sizes[1] != sizes[2])
        throw HypergraphError("profile " + profile.to_string() + " has unequal edge sizes");
    std::array<VertexSet, 7> block{};
    int next = 0;
    for (std::size_t i = 0; i < 7; ++i) {
        block[i] = full_set(a[i]) << next;
        next += a[i];
    }
    const VertexSet e1 = block[0] | block[3] | block[4] | block[6];
    const VertexSet e2 = block[1] | block[3] | block[5] | block[6];
    const VertexSet e3 = block[2] | block[4] | block[5] | block[6];
    return Hypergraph::from_masks(next, sizes[0], {e1, e2, e3});
}

/// Every region profile of three distinct r-edges, one per isomorphism class.
inline std::vector<RegionProfile> three_edge_profiles(int r)
{
    std::set<RegionProfile> seen;
    for (int a123 = 0; a123 <= r; ++a123)
        for (int a12 = 0; a12 + a123 <= r; ++a12)
            for (int a13 = 0; a12 + a13 + a123 <= r; ++a13)
                for (int a23 = 0; a12 + a23 + a123 <= r && a13 + a23 + a123 <= r; ++a23) {
                    const int a1 = r - a12 - a13 - a123;
                    const int a2 = r - a12 - a23 - a123;
                    const int a3 = r - a13 - a23 - a123;
                    // E1 != E2, E1 != E3, E2 != E3
                    if (a1 + a13 == 0 || a1 + a12 == 0 || a2 + a12 == 0)
                        continue;
                    seen.insert(RegionProfile::canonical({a1, a2, a3, a12, a13, a23, a123}));
                }
    return {seen.begin(), seen.end()};
}

inline ThreeEdgeCatalog enumerate_three_edge(int r)
{
    if (r < kCatalogMinUniformity || r > kCatalogMaxUniformity)
        throw HypergraphError("three-edge enumeration supports 2 <= r <= 8, got " + std::to_string(r));
    ThreeEdgeCatalog catalog;
    catalog.r = r;
    for (const RegionProfile& profile : three_edge_profiles(r)) {
        CatalogEntry entry;
        entry.profile = profile;
        entry.representative = realize_profile(profile);
        std::tie(entry.min_degree, entry.max_degree) = active_degree_range(entry.representative);
        entry.tag = entry.min_degree >= 2 ? ThreeEdgeClass::MinDegreeTwo : ThreeEdgeClass::MinDegreeOne;
        if (entry.tag == ThreeEdgeClass::MinDegreeTwo) {
            int matches = 0;
            for (int i = 1; 2 * i <= r; ++i)
                if (is_isomorphic(entry.representative, suspended_expanded_triangle(i, r))) {
                    entry.expanded_i = i;
                    ++matches;
                }
            if (matches > 1)
                entry.expanded_i.reset();
        }
        catalog.entries.push_back(std::move(entry));
    }
    return catalog;
}

class ClassificationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct ClassificationReport
{
    int r = 0;
    std::size_t classes = 0;
    std::size_t min_degree_two_classes = 0;
    std::size_t expected = 0;
    /// (profile, i) for every minimum-degree-two class.
    std::vector<std::pair<RegionProfile, int>> matches;
};

/// Checks that the minimum-degree-two classes are exactly the suspended
/// expanded triangles suspension(T_{2i}, r), 1 <= i <= floor(r/2), one each.
/// Any discrepancy throws ClassificationError with the offending classes.
inline ClassificationReport classify_min_degree_two(const ThreeEdgeCatalog& catalog)
{
    ClassificationReport report;
    report.r = catalog.r;
    report.classes = catalog.entries.size();
    report.expected = static_cast<std::size_t>(catalog.r / 2);
    std::ostringstream problems;
    std::vector<int> hits(report.expected + 1, 0);
    for (const auto& entry : catalog.entries) {
        if (entry.tag != ThreeEdgeClass::MinDegreeTwo)
            continue;
        ++report.min_degree_two_classes;
        if (!entry.expanded_i) {
            problems << "class " << entry.profile.to_string()
                     << " matches no unique suspended expanded triangle\n";
            continue;
        }
        ++hits[static_cast<std::size_t>(*entry.expanded_i)];
        report.matches.emplace_back(entry.profile, *entry.expanded_i);
    }
    if (report.min_degree_two_classes != report.expected)
        problems << report.min_degree_two_classes << " minimum-degree-two classes, expected "
                 << report.expected << '\n';
    for (std::size_t i = 1; i <= report.expected; ++i) {
        const auto target = RegionProfile::of(suspended_expanded_triangle(static_cast<int>(i), catalog.r));
        if (hits[i] != 1)
            problems << "suspension of T_" << 2 * i << " " << target.to_string() << " matched "
                     << hits[i] << " classes\n";
    }
    const std::string dump = problems.str();
    if (!dump.empty())
        throw ClassificationError("classification failed for r=" + std::to_string(catalog.r) + ":\n" + dump);
    return report;
}

inline ClassificationReport classify_min_degree_two(int r)
{
    return classify_min_degree_two(enumerate_three_edge(r));
}

} // namespace hyperturan
