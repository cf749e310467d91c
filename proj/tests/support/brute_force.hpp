#pragma once

// Test-only reference implementations. They work on plain bitmasks and
// never call into the library's enumeration or verification code.

#include <hhl/core.hpp>
#include <hhl/coverfree.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace hhl::testing {

using Mask = std::uint32_t;

/// All nonempty masks over t vertices with popcount <= l, in increasing order.
inline std::vector<Mask> candidate_edges(unsigned t, unsigned l)
{
    std::vector<Mask> out;
    for (Mask m = 1; m < (Mask{1} << t); ++m)
        if (static_cast<unsigned>(std::popcount(m)) <= l)
            out.push_back(m);
    return out;
}

/// Calls `visit` with every set of at most s distinct candidate edges.
inline void enumerate_edge_sets(unsigned t, unsigned s, unsigned l,
                                const std::function<void(const std::vector<Mask>&)>& visit)
{
    auto pool = candidate_edges(t, l);
    std::vector<Mask> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        visit(chosen);
        if (chosen.size() == s)
            return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

inline std::uint64_t count_family_brute(unsigned t, unsigned s, unsigned l)
{
    std::uint64_t n = 0;
    enumerate_edge_sets(t, s, l, [&](const std::vector<Mask>&) { ++n; });
    return n;
}

inline bool sperner_masks(const std::vector<Mask>& edges)
{
    for (auto a : edges)
        for (auto b : edges)
            if (a != b && (a & b) == a)
                return false;
    return true;
}

inline Hypergraph to_hypergraph(unsigned t, const std::vector<Mask>& edges)
{
    std::vector<Edge> out;
    for (auto m : edges) {
        std::vector<Vertex> vs;
        for (unsigned i = 0; i < t; ++i)
            if (m & (Mask{1} << i))
                vs.push_back(i + 1);
        out.emplace_back(t, vs);
    }
    return Hypergraph(t, std::move(out));
}

/// Every Sperner hypergraph in F(t,s,l).
inline std::vector<Hypergraph> sperner_family(unsigned t, unsigned s, unsigned l)
{
    std::vector<Hypergraph> out;
    enumerate_edge_sets(t, s, l, [&](const std::vector<Mask>& edges) {
        if (sperner_masks(edges))
            out.push_back(to_hypergraph(t, edges));
    });
    return out;
}

/// Definition check by double enumeration over column masks and rows.
inline bool is_cover_free_brute(const BinaryCode& code, unsigned s, unsigned l)
{
    const unsigned t = static_cast<unsigned>(code.cols());
    for (Mask sigma = 0; sigma < (Mask{1} << t); ++sigma) {
        if (static_cast<unsigned>(std::popcount(sigma)) != s)
            continue;
        for (Mask lambda = 0; lambda < (Mask{1} << t); ++lambda) {
            if (static_cast<unsigned>(std::popcount(lambda)) != l || (sigma & lambda) != 0)
                continue;
            bool covered = false;
            for (std::size_t r = 0; r < code.rows() && !covered; ++r) {
                bool ok = true;
                for (unsigned j = 0; j < t && ok; ++j) {
                    if ((sigma >> j) & 1U)
                        ok = !code.get(r, j);
                    else if ((lambda >> j) & 1U)
                        ok = code.get(r, j);
                }
                covered = ok;
            }
            if (!covered)
                return false;
        }
    }
    return true;
}

/// Direct re-check of a claimed violation against the definition.
inline bool violates(const BinaryCode& code, const CoverFreeViolation& v)
{
    for (std::size_t r = 0; r < code.rows(); ++r) {
        bool ok = true;
        for (auto c : v.zero_columns)
            ok = ok && !code.get(r, c);
        for (auto c : v.one_columns)
            ok = ok && code.get(r, c);
        if (ok)
            return false;
    }
    return true;
}

} // namespace hhl::testing
