#pragma once

#include <string>
#include <vector>

#include "cuspcalc/cusp.hpp"
#include "cuspcalc/dual_graph.hpp"
#include "cuspcalc/errors.hpp"
#include "cuspcalc/linear_chain.hpp"

namespace cuspcalc {

/// One cluster of the minimal embedded resolution: chains A_i, B_i and the
/// sprouting count o_i, bound by A_i = TW_{o_i} * B_i^* and A_i^* = [B_i, o_i+1].
struct CuspCluster {
    LinearChain a;
    LinearChain b;
    int o = 0;
};

/// The (A_i, B_i, o_i, D_0) decomposition of a cusp's minimal embedded
/// resolution. The assembled graph is the spine A_1 ... A_g D_0 with each
/// B_i hanging off the vertex after A_i (its first entry adjacent to it);
/// D_0 is the unique (-1)-vertex.
struct CuspResolutionGraph {
    std::vector<CuspCluster> clusters;
    DualGraph assembled;
    int d0_id = -1;

    int g() const { return static_cast<int>(clusters.size()); }

    /// 1 + sum of r(A_i) + r(B_i) = number of blow-ups of the resolution.
    int blowups() const { return assembled.size(); }
};

namespace detail {

inline int checked_quotient(long long a) {
    if (a > 1000000)
        throw InvalidArgument("characteristic sequence too large to resolve (quotient " +
                              std::to_string(a) + ")");
    return static_cast<int>(a);
}

// Star factors of the A-chain for one Euclid row. Subscripts are 1-based in
// the formulas; `a` is 0-based. Odd j get TW_{a_j+1} except the final odd
// j = n, which gets TW_{a_n}; even j get [a_j].
inline LinearChain euclid_chain_a(const std::vector<long long>& a) {
    const int n = static_cast<int>(a.size());
    LinearChain out;
    for (int j = 1; j <= n; ++j) {
        const long long aj = a[static_cast<std::size_t>(j - 1)];
        LinearChain factor;
        if (j % 2 == 1)
            factor = (j == n) ? tw(checked_quotient(aj)) : tw(checked_quotient(aj) + 1);
        else
            factor = LinearChain{checked_quotient(aj)};
        out = out.empty() ? factor : star(out, factor);
    }
    return out;
}

// Descending factors j = n..2: the outermost j = n and j = 2 carry no +1;
// strictly interior even j get TW_{a_j+1}, odd j get [a_j]. The n = 2 row
// degenerates to TW_{a_2 - 1}.
inline LinearChain euclid_chain_b(const std::vector<long long>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 2) return tw(checked_quotient(a[1]) - 1);
    LinearChain out;
    for (int j = n; j >= 2; --j) {
        const long long aj = a[static_cast<std::size_t>(j - 1)];
        LinearChain factor;
        if (j == n)
            factor = (n % 2 == 1) ? LinearChain{checked_quotient(aj)} : tw(checked_quotient(aj));
        else if (j == 2)
            factor = tw(checked_quotient(aj));
        else if (j % 2 == 0)
            factor = tw(checked_quotient(aj) + 1);
        else
            factor = LinearChain{checked_quotient(aj)};
        out = out.empty() ? factor : star(out, factor);
    }
    return out;
}

// o_i is the unique integer with A_i = TW_{o_i} * B_i^* ; read it off the
// leading 2-run of A_i and verify both cluster identities.
inline int solve_sprouting_count(const LinearChain& a, const LinearChain& b) {
    const LinearChain b_star = adjoint(b);
    int lead = 0;
    while (lead < a.size() && a[lead] == 2) ++lead;
    for (int o = 1; o <= lead + 1; ++o) {
        if (star(tw(o), b_star) == a) {
            if (adjoint(a) != concat(b, o + 1))
                throw InternalError("resolution_graph: A* = [B, o+1] fails for A=" + a.str() +
                                    ", B=" + b.str());
            return o;
        }
    }
    throw InternalError("resolution_graph: no o with A = TW_o * B* for A=" + a.str() +
                        ", B=" + b.str());
}

} // namespace detail

/// Builds the resolution dual graph of a cusp from its characteristic
/// sequence: g = k clusters with their continued-fraction chains, sprouting counts,
/// and the assembled weighted tree including D_0.
inline CuspResolutionGraph resolution_graph(const CharacteristicSequence& ch) {
    const EuclidTable table = euclid_decompose(ch);
    CuspResolutionGraph out;
    for (const auto& row : table.rows) {
        CuspCluster cluster;
        cluster.a = detail::euclid_chain_a(row.quotients);
        cluster.b = detail::euclid_chain_b(row.quotients);
        if (!admissible(cluster.a) || !admissible(cluster.b))
            throw InternalError("resolution_graph: non-admissible cluster chain");
        if (std::ranges::none_of(cluster.a.entries(), [](int e) { return e >= 3; }))
            throw InternalError("resolution_graph: A_" +
                                std::to_string(out.clusters.size() + 1) +
                                " has no entry >= 3");
        cluster.o = detail::solve_sprouting_count(cluster.a, cluster.b);
        out.clusters.push_back(std::move(cluster));
    }

    // Spine A_1 ... A_g D_0, then the B_i arms. B_i's first vertex attaches
    // to the vertex after A_i (A_{i+1,1}, or D_0 for i = g).
    DualGraph& g = out.assembled;
    std::vector<int> branch_targets; // vertex after A_i, per cluster
    int prev = -1;
    for (std::size_t i = 0; i < out.clusters.size(); ++i) {
        const auto& a = out.clusters[i].a;
        for (int j = 0; j < a.size(); ++j) {
            const int id = g.add_vertex(-a[j], "A" + std::to_string(i + 1) + "." + std::to_string(j + 1));
            if (prev >= 0) g.add_edge(prev, id);
            if (i > 0 && j == 0) branch_targets.push_back(id); // A_{i,1} closes cluster i-1
            prev = id;
        }
    }
    out.d0_id = g.add_vertex(-1, "D0");
    g.add_edge(prev, out.d0_id);
    branch_targets.push_back(out.d0_id);

    for (std::size_t i = 0; i < out.clusters.size(); ++i) {
        const auto& b = out.clusters[i].b;
        int attach = branch_targets[i];
        for (int j = 0; j < b.size(); ++j) {
            const int id = g.add_vertex(-b[j], "B" + std::to_string(i + 1) + "." + std::to_string(j + 1));
            g.add_edge(attach, id);
            attach = id;
        }
    }
    return out;
}

} // namespace cuspcalc
