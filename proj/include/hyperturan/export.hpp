#pragma once

#include "turan.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace hyperturan {

enum class ExportFormat { Cnf, Ilp };

inline ExportFormat parse_export_format(const std::string& s)
{
    if (s == "cnf")
        return ExportFormat::Cnf;
    if (s == "ilp")
        return ExportFormat::Ilp;
    throw std::invalid_argument("unknown export format '" + s + "' (expected cnf or ilp)");
}

namespace detail {

inline std::string edge_label(VertexSet e)
{
    std::string s;
    for (int v : members(e))
        s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

inline void export_header(std::ostringstream& out, const TripleSystem& sys, const char* prefix)
{
    out << prefix << " hyperturan conflict system\n";
    out << prefix << " family " << sys.family().name << " profile " << sys.profile().to_string()
        << " n=" << sys.order() << " r=" << sys.uniformity() << '\n';
    out << prefix << " ground " << sys.ground().size() << " conflicts " << sys.conflicts().size() << '\n';
    for (std::size_t i = 0; i < sys.ground().size(); ++i)
        out << prefix << " x" << i + 1 << " = {" << edge_label(sys.ground()[i]) << "}\n";
}

} // namespace detail

/// DIMACS CNF. Variable i (1-based) is ground edge i-1. One clause
/// "-a -b -c 0" per conflict. With at_least = t, a sequential counter
/// enforcing "at most m - t of the negated edge literals are true" follows:
/// auxiliary s(i, j) for i = 1..m-1, j = 1..k (k = m - t) is variable
/// m + (i - 1) * k + j.
inline std::string export_cnf(const TripleSystem& sys, std::optional<std::size_t> at_least = std::nullopt)
{
    const std::size_t m = sys.ground().size();
    std::vector<std::vector<long long>> clauses;
    for (const auto& c : sys.conflicts())
        clauses.push_back({-static_cast<long long>(c[0] + 1), -static_cast<long long>(c[1] + 1),
                           -static_cast<long long>(c[2] + 1)});
    std::size_t aux = 0;
    if (at_least && *at_least > 0) {
        const std::size_t t = *at_least;
        if (t > m) {
            clauses.push_back({});
        } else if (t == m) {
            for (std::size_t i = 1; i <= m; ++i)
                clauses.push_back({static_cast<long long>(i)});
        } else {
            // literal l_i = -x_i; at most k of l_1..l_m true
            const std::size_t k = m - t;
            auto lit = [](std::size_t i) { return -static_cast<long long>(i); };
            auto s = [&](std::size_t i, std::size_t j) { return static_cast<long long>(m + (i - 1) * k + j); };
            aux = (m - 1) * k;
            clauses.push_back({-lit(1), s(1, 1)});
            for (std::size_t j = 2; j <= k; ++j)
                clauses.push_back({-s(1, j)});
            for (std::size_t i = 2; i < m; ++i) {
                clauses.push_back({-lit(i), s(i, 1)});
                clauses.push_back({-s(i - 1, 1), s(i, 1)});
                for (std::size_t j = 2; j <= k; ++j) {
                    clauses.push_back({-lit(i), -s(i - 1, j - 1), s(i, j)});
                    clauses.push_back({-s(i - 1, j), s(i, j)});
                }
                clauses.push_back({-lit(i), -s(i - 1, k)});
            }
            clauses.push_back({-lit(m), -s(m - 1, k)});
        }
    }

    std::ostringstream out;
    detail::export_header(out, sys, "c");
    if (at_least)
        out << "c at-least " << *at_least << " edges (sequential counter)\n";
    out << "p cnf " << m + aux << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
        for (long long l : clause)
            out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

/// CPLEX LP text: maximize the number of selected edges subject to
/// x_a + x_b + x_c <= 2 per conflict, all x binary.
inline std::string export_ilp(const TripleSystem& sys)
{
    const std::size_t m = sys.ground().size();
    std::ostringstream out;
    detail::export_header(out, sys, "\\");
    if (sys.trivially_unconstrained())
        out << "\\ unconstrained: optimum " << m << '\n';
    out << "Maximize\n obj:";
    for (std::size_t i = 0; i < m; ++i) {
        out << (i == 0 ? " " : " + ") << 'x' << i + 1;
        if (i % 10 == 9 && i + 1 < m)
            out << "\n     ";
    }
    out << "\nSubject To\n";
    for (std::size_t c = 0; c < sys.conflicts().size(); ++c) {
        const auto& t = sys.conflicts()[c];
        out << " c" << c + 1 << ": x" << t[0] + 1 << " + x" << t[1] + 1 << " + x" << t[2] + 1 << " <= 2\n";
    }
    out << "Binary\n";
    for (std::size_t i = 0; i < m; ++i)
        out << " x" << i + 1 << '\n';
    out << "End\n";
    return out.str();
}

inline std::string export_constraints(const TripleSystem& sys, ExportFormat format,
                                      std::optional<std::size_t> at_least = std::nullopt)
{
    return format == ExportFormat::Cnf ? export_cnf(sys, at_least) : export_ilp(sys);
}

} // namespace hyperturan
