#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace hyperturan {

/// A set of vertices drawn from {0, ..., 63}, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet full_set(int n)
{
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

inline constexpr int set_size(VertexSet s) { return std::popcount(s); }

inline constexpr bool contains_vertex(VertexSet s, int v) { return (s >> v) & 1U; }

inline std::vector<int> members(VertexSet s)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

/// Binomial coefficient; exact for every n <= 64.
inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 result = 1;
    for (int i = 0; i < k; ++i)
        result = result * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    return static_cast<std::uint64_t>(result);
}

/// Visits every k-subset of {0..n-1} in increasing numeric order (Gosper's hack).
/// The visitor may return false to stop early.
template <typename Visitor>
void for_each_subset(int n, int k, Visitor&& visit)
{
    if (k < 0 || k > n || n > kMaxVertices)
        return;
    if (k == 0) {
        visit(VertexSet{0});
        return;
    }
    const VertexSet last = full_set(n) & ~full_set(n - k);
    VertexSet x = full_set(k);
    while (true) {
        if constexpr (std::is_same_v<decltype(visit(x)), bool>) {
            if (!visit(x))
                return;
        } else {
            visit(x);
        }
        if (x == last)
            return;
        const VertexSet low = x & (~x + 1);
        const VertexSet ripple = x + low;
        x = (((ripple ^ x) >> 2) / low) | ripple;
    }
}

inline std::vector<VertexSet> all_subsets(int n, int k)
{
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    for_each_subset(n, k, [&](VertexSet s) { out.push_back(s); });
    return out;
}

} // namespace hyperturan
