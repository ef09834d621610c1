#pragma once

// Shared enumeration helpers and independent oracles for the test suites.
// Everything here recomputes results by a route different from the library's
// production path.

#include <numeric>
#include <random>
#include <vector>

#include "cuspcalc/cusp.hpp"
#include "cuspcalc/dual_graph.hpp"
#include "cuspcalc/linear_chain.hpp"
#include "cuspcalc/numeric.hpp"

namespace testutil {

using cuspcalc::CharacteristicSequence;
using cuspcalc::DualGraph;
using cuspcalc::Integer;
using cuspcalc::LinearChain;
using cuspcalc::Rational;

/// All admissible chains with 1 <= r <= max_len and entries in [2, max_entry].
inline std::vector<LinearChain> admissible_chains(int max_len, int max_entry) {
    std::vector<LinearChain> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int e = 2; e <= max_entry; ++e) {
            cur.push_back(e);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

/// Determinant oracle: the full r x r intersection matrix (-D_i D_j) reduced
/// by fraction-free Gaussian elimination (Bareiss), independent of the
/// continuant recurrence used in production.
inline Integer tridiagonal_det(const LinearChain& chain) {
    const int n = chain.size();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = chain[i];
        if (i + 1 < n) {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

/// Adjoint by its definition e^{-1}(1 - e(tA)); the production path uses the
/// star-product identity instead.
inline LinearChain adjoint_by_definition(const LinearChain& a) {
    return cuspcalc::chain_from_inductance(1 - cuspcalc::inductance(cuspcalc::reverse(a)));
}

/// All valid characteristic sequences with alpha_0 <= max_a0 and every term
/// <= max_ak.
inline std::vector<CharacteristicSequence> char_sequences_in_box(long long max_a0,
                                                                 long long max_ak) {
    std::vector<CharacteristicSequence> out;
    std::vector<long long> alphas;
    auto rec = [&](auto&& self, long long gcd_so_far) -> void {
        if (gcd_so_far == 1) {
            out.emplace_back(alphas);
            return;
        }
        for (long long next = alphas.back() + 1; next <= max_ak; ++next) {
            const long long g = std::gcd(gcd_so_far, next);
            if (g >= gcd_so_far) continue;
            alphas.push_back(next);
            self(self, g);
            alphas.pop_back();
        }
    };
    for (long long a0 = 2; a0 <= max_a0; ++a0) {
        alphas = {a0};
        rec(rec, a0);
    }
    return out;
}

/// Random exceptional set of a composite of blow-ups over a point, built by
/// forward simulation: start from one (-1)-curve, then blow up either a
/// smooth point of a random component or a random node.
inline DualGraph random_contractible_tree(std::mt19937& rng, int extra_blowups) {
    DualGraph g;
    g.add_vertex(-1);
    for (int step = 0; step < extra_blowups; ++step) {
        const bool at_node =
            !g.edges().empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        if (at_node) {
            auto it = g.edges().begin();
            std::advance(it, std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng));
            const auto [u, v] = *it;
            // rebuild without the split edge; ids stay stable
            DualGraph rebuilt;
            for (const auto& vert : g.vertices())
                rebuilt.add_vertex_with_id(vert.id, vert.weight, vert.label);
            for (const auto& e : g.edges())
                if (e != std::pair<int, int>(u, v)) rebuilt.add_edge(e.first, e.second);
            const int w = rebuilt.add_vertex(-1);
            rebuilt.set_weight(u, rebuilt.weight(u) - 1);
            rebuilt.set_weight(v, rebuilt.weight(v) - 1);
            rebuilt.add_edge(u, w);
            rebuilt.add_edge(v, w);
            g = rebuilt;
        } else {
            const auto& verts = g.vertices();
            const int v =
                verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)].id;
            const int w = g.add_vertex(-1);
            g.set_weight(v, g.weight(v) - 1);
            g.add_edge(v, w);
        }
    }
    return g;
}

/// Random eligible-vertex picker for order-independence tests.
inline cuspcalc::ContractionPolicy random_policy(std::mt19937& rng) {
    return [&rng](const std::vector<int>& eligible) {
        return eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
    };
}

} // namespace testutil
