#pragma once

#include "hypergraph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperturan {

inline constexpr const char* kSolverVersion = "hyperturan-bnb/1";
inline constexpr std::size_t kMaxGroundEdges = 4096;

/// A forbidden three-edge hypergraph together with a display name.
struct ForbiddenFamily
{
    std::string name;
    Hypergraph graph;
};

/// The complete r-graph on [n] as a ground set, plus every triple of ground
/// edges forming a copy of the forbidden hypergraph. A set of ground edges is
/// F-free exactly when it contains no conflict triple entirely.
class TripleSystem
{
  public:
    using Conflict = std::array<std::uint32_t, 3>;

    static TripleSystem build(const ForbiddenFamily& family, int n)
    {
        TripleSystem sys;
        sys.family_ = family;
        sys.family_.graph = remove_isolated(family.graph).graph;
        const Hypergraph& f = sys.family_.graph;
        if (f.size() != 3)
            throw HypergraphError("forbidden hypergraph must have exactly three edges");
        if (n < 0 || n > kMaxVertices)
            throw HypergraphError("n outside 0..64");
        sys.n_ = n;
        sys.r_ = f.uniformity();
        sys.profile_ = RegionProfile::of(f);
        if (binomial(n, sys.r_) > kMaxGroundEdges)
            throw HypergraphError("ground set C(" + std::to_string(n) + "," + std::to_string(sys.r_) +
                                  ") exceeds the solver capacity of " + std::to_string(kMaxGroundEdges));
        sys.ground_ = all_subsets(n, sys.r_);
        sys.incidence_.resize(sys.ground_.size());

        const int span = sys.profile_.vertex_count();
        if (n >= span) {
            const auto& g = sys.ground_;
            for (std::uint32_t a = 0; a < g.size(); ++a)
                for (std::uint32_t b = a + 1; b < g.size(); ++b) {
                    const VertexSet ab = g[a] | g[b];
                    if (set_size(ab) > span)
                        continue;
                    for (std::uint32_t c = b + 1; c < g.size(); ++c) {
                        if (set_size(ab | g[c]) != span)
                            continue;
                        if (RegionProfile::of(g[a], g[b], g[c]) != sys.profile_)
                            continue;
                        const auto id = static_cast<std::uint32_t>(sys.conflicts_.size());
                        sys.conflicts_.push_back({a, b, c});
                        sys.incidence_[a].push_back(id);
                        sys.incidence_[b].push_back(id);
                        sys.incidence_[c].push_back(id);
                    }
                }
        }
        return sys;
    }

    int order() const noexcept { return n_; }
    int uniformity() const noexcept { return r_; }
    const ForbiddenFamily& family() const noexcept { return family_; }
    const RegionProfile& profile() const noexcept { return profile_; }
    const std::vector<VertexSet>& ground() const noexcept { return ground_; }
    const std::vector<Conflict>& conflicts() const noexcept { return conflicts_; }
    const std::vector<std::uint32_t>& incident(std::size_t edge) const { return incidence_.at(edge); }

    /// n is below the forbidden hypergraph's size, so nothing is excluded.
    bool trivially_unconstrained() const noexcept { return conflicts_.empty(); }

    std::optional<std::size_t> index_of(VertexSet e) const
    {
        const auto it = std::lower_bound(ground_.begin(), ground_.end(), e);
        if (it == ground_.end() || *it != e)
            return std::nullopt;
        return static_cast<std::size_t>(it - ground_.begin());
    }

    /// True when the selected ground edges contain no conflict triple.
    bool independent(const std::vector<char>& selected) const
    {
        for (const auto& c : conflicts_)
            if (selected[c[0]] && selected[c[1]] && selected[c[2]])
                return false;
        return true;
    }

    std::vector<char> selection_of(const Hypergraph& h) const
    {
        if (h.order() != n_ || h.uniformity() != r_)
            throw HypergraphError("hypergraph does not live on this ground set");
        std::vector<char> selected(ground_.size(), 0);
        for (VertexSet e : h.edges())
            selected[*index_of(e)] = 1;
        return selected;
    }

    Hypergraph hypergraph_of(const std::vector<char>& selected) const
    {
        std::vector<VertexSet> edges;
        for (std::size_t i = 0; i < ground_.size(); ++i)
            if (selected[i])
                edges.push_back(ground_[i]);
        return Hypergraph::from_masks(n_, r_, std::move(edges));
    }

  private:
    ForbiddenFamily family_;
    int n_ = 0;
    int r_ = 1;
    RegionProfile profile_;
    std::vector<VertexSet> ground_;
    std::vector<Conflict> conflicts_;
    std::vector<std::vector<std::uint32_t>> incidence_;
};

inline TripleSystem forbidden_triples(const ForbiddenFamily& family, int n)
{
    return TripleSystem::build(family, n);
}

enum class SolveStatus { ProvedOptimal, LowerBoundOnly };

inline const char* to_string(SolveStatus s)
{
    return s == SolveStatus::ProvedOptimal ? "proved-optimal" : "lower-bound-only";
}

inline SolveStatus parse_status(const std::string& s)
{
    if (s == "proved-optimal")
        return SolveStatus::ProvedOptimal;
    if (s == "lower-bound-only")
        return SolveStatus::LowerBoundOnly;
    throw std::invalid_argument("unknown solve status '" + s + "'");
}

struct SolveBudget
{
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
};

struct SolveRecord
{
    std::string family_name;
    RegionProfile family_profile;
    int n = 0;
    int r = 0;
    std::uint64_t optimum = 0;
    Hypergraph witness;
    SolveStatus status = SolveStatus::ProvedOptimal;
    std::uint64_t nodes = 0;
    std::uint64_t millis = 0;
    std::string version = kSolverVersion;
};

namespace detail {

/// Depth-first branch and bound for the largest conflict-free set of ground
/// edges. A conflict with two included members forces its third member out,
/// so no conflict is ever fully included.
class ConflictSearch
{
  public:
    ConflictSearch(const TripleSystem& sys, const SolveBudget& budget)
        : sys_(sys), budget_(budget), m_(sys.ground().size()), state_(m_, kFree),
          in_count_(sys.conflicts().size(), 0), out_count_(sys.conflicts().size(), 0),
          stamp_(m_, 0), start_(std::chrono::steady_clock::now())
    {
        undecided_ = m_;
    }

    void set_incumbent(const std::vector<char>& selection)
    {
        const auto size = static_cast<std::size_t>(std::count(selection.begin(), selection.end(), 1));
        if (size > best_size_ || best_.empty()) {
            best_size_ = size;
            best_ = selection;
        }
    }

    void run()
    {
        // Every ground edge lies in some optimal solution: the symmetric group
        // of [n] acts transitively on the ground set.
        if (m_ > 0) {
            const std::size_t mark = trail_.size();
            if (include(0))
                search();
            undo(mark);
        }
    }

    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<char>& best() const noexcept { return best_; }
    std::size_t best_size() const noexcept { return best_size_; }

  private:
    static constexpr char kFree = 0;
    static constexpr char kIn = 1;
    static constexpr char kOut = 2;

    bool out_of_budget()
    {
        if (nodes_ >= budget_.max_nodes)
            return true;
        if ((nodes_ & 0x3FF) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() >= budget_.max_seconds)
                return true;
        }
        return false;
    }

    void assign(std::size_t e, char value)
    {
        state_[e] = value;
        --undecided_;
        if (value == kIn)
            ++included_;
        for (std::uint32_t c : sys_.incident(e))
            ++(value == kIn ? in_count_ : out_count_)[c];
        trail_.push_back(e);
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const std::size_t e = trail_.back();
            trail_.pop_back();
            const char value = state_[e];
            for (std::uint32_t c : sys_.incident(e))
                --(value == kIn ? in_count_ : out_count_)[c];
            if (value == kIn)
                --included_;
            ++undecided_;
            state_[e] = kFree;
        }
    }

    bool include(std::size_t e)
    {
        assign(e, kIn);
        for (std::uint32_t c : sys_.incident(e)) {
            if (out_count_[c] != 0 || in_count_[c] < 2)
                continue;
            if (in_count_[c] == 3)
                return false;
            for (std::uint32_t other : sys_.conflicts()[c])
                if (state_[other] == kFree)
                    assign(other, kOut);
        }
        return true;
    }

    /// Included edges plus undecided edges, minus one forced exclusion per
    /// conflict in a greedy family of live conflicts with disjoint undecided members.
    std::size_t upper_bound()
    {
        ++generation_;
        std::size_t forced = 0;
        for (int pass = 1; pass >= 0; --pass) {
            // pass 1: conflicts with one included member (two undecided) pack tighter
            for (std::size_t c = 0; c < in_count_.size(); ++c) {
                if (out_count_[c] != 0 || in_count_[c] != pass)
                    continue;
                bool free = true;
                for (std::uint32_t e : sys_.conflicts()[c])
                    if (state_[e] == kFree && stamp_[e] == generation_)
                        free = false;
                if (!free)
                    continue;
                for (std::uint32_t e : sys_.conflicts()[c])
                    if (state_[e] == kFree)
                        stamp_[e] = generation_;
                ++forced;
            }
        }
        return included_ + undecided_ - forced;
    }

    std::size_t pick_branch_edge() const
    {
        std::size_t best_edge = m_;
        std::size_t best_score = 0;
        for (std::size_t e = 0; e < m_; ++e) {
            if (state_[e] != kFree)
                continue;
            std::size_t score = 0;
            for (std::uint32_t c : sys_.incident(e))
                if (out_count_[c] == 0)
                    score += 1 + in_count_[c];
            if (best_edge == m_ || score > best_score) {
                best_edge = e;
                best_score = score;
            }
        }
        return best_edge;
    }

    void record()
    {
        if (included_ <= best_size_ && !best_.empty())
            return;
        best_.assign(m_, 0);
        for (std::size_t e = 0; e < m_; ++e)
            best_[e] = state_[e] == kIn ? 1 : 0;
        best_size_ = included_;
    }

    void search()
    {
        if (exhausted_ || out_of_budget()) {
            exhausted_ = true;
            return;
        }
        ++nodes_;
        if (undecided_ == 0) {
            record();
            return;
        }
        const std::size_t bound = upper_bound();
        if (bound <= best_size_)
            return;
        const std::size_t e = pick_branch_edge();
        const bool dive = best_size_ + 1 < bound;
        for (int attempt = 0; attempt < 2; ++attempt) {
            const bool take = (attempt == 0) == dive;
            const std::size_t mark = trail_.size();
            const bool ok = take ? include(e) : (assign(e, kOut), true);
            if (ok)
                search();
            undo(mark);
            if (exhausted_)
                return;
        }
    }

    const TripleSystem& sys_;
    SolveBudget budget_;
    std::size_t m_;
    std::vector<char> state_;
    std::vector<std::uint8_t> in_count_;
    std::vector<std::uint8_t> out_count_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t generation_ = 0;
    std::vector<std::size_t> trail_;
    std::size_t undecided_ = 0;
    std::size_t included_ = 0;
    std::vector<char> best_;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Adds ground edges in index order whenever they complete no conflict.
inline std::vector<char> greedy_independent(const TripleSystem& sys)
{
    std::vector<char> selected(sys.ground().size(), 0);
    for (std::size_t e = 0; e < selected.size(); ++e) {
        selected[e] = 1;
        for (std::uint32_t c : sys.incident(e)) {
            const auto& t = sys.conflicts()[c];
            if (selected[t[0]] && selected[t[1]] && selected[t[2]]) {
                selected[e] = 0;
                break;
            }
        }
    }
    return selected;
}

/// Exact ex(n, F) by branch and bound. The witness is always F-free; status is
/// LowerBoundOnly when the budget ran out before the search finished.
inline SolveRecord solve_exact(const TripleSystem& sys, const SolveBudget& budget = {},
                               const std::optional<Hypergraph>& seed = std::nullopt)
{
    const auto start = std::chrono::steady_clock::now();
    detail::ConflictSearch search(sys, budget);
    search.set_incumbent(greedy_independent(sys));
    if (seed) {
        const auto selection = sys.selection_of(*seed);
        if (!sys.independent(selection))
            throw HypergraphError("seed witness contains a copy of the forbidden hypergraph");
        search.set_incumbent(selection);
    }
    search.run();

    SolveRecord rec;
    rec.family_name = sys.family().name;
    rec.family_profile = sys.profile();
    rec.n = sys.order();
    rec.r = sys.uniformity();
    rec.witness = sys.hypergraph_of(search.best());
    rec.optimum = rec.witness.size();
    rec.status = search.exhausted() ? SolveStatus::LowerBoundOnly : SolveStatus::ProvedOptimal;
    rec.nodes = search.nodes();
    rec.millis = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    if (contains_copy(sys.family().graph, rec.witness))
        throw std::logic_error("solver witness contains a forbidden copy");
    return rec;
}

} // namespace hyperturan
