#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cuspcalc/cusp.hpp"
#include "cuspcalc/dual_graph.hpp"
#include "cuspcalc/errors.hpp"
#include "cuspcalc/resolution.hpp"

namespace cuspcalc {

/// Degree plus the (unordered) multiplicity sequences of the two cusps.
/// Stored with the cusps in descending lexicographic order of their full
/// sequences so equal data compare equal.
class NumericalData {
public:
    NumericalData(long long degree, MultiplicitySequence first, MultiplicitySequence second)
        : degree_(degree), cusps_{std::move(first), std::move(second)} {
        if (cusps_[0].full() < cusps_[1].full()) std::swap(cusps_[0], cusps_[1]);
        if (degree_ < 1) throw InvalidArgument("numerical data: degree must be positive");
        for (const auto& c : cusps_)
            if (degree_ < c.full().front())
                throw InvalidArgument("numerical data: degree " + std::to_string(degree_) +
                                      " is below the multiplicity " +
                                      std::to_string(c.full().front()) + " of cusp " + c.str());
    }

    /// Parses "d=5 {(3),(2_3)}".
    static NumericalData parse(std::string_view text);

    long long degree() const { return degree_; }
    const std::array<MultiplicitySequence, 2>& cusps() const { return cusps_; }

    bool operator==(const NumericalData&) const = default;
    auto operator<=>(const NumericalData&) const = default;

    std::string str() const {
        return "d=" + std::to_string(degree_) + " {" + cusps_[0].str() + "," + cusps_[1].str() + "}";
    }

private:
    long long degree_;
    std::array<MultiplicitySequence, 2> cusps_;
};

/// Parameters (family row, a, b) of the classification table.
struct FamilyParams {
    int family = 0;
    long long a = 0;
    long long b = 0;

    FamilyParams(int family_, long long a_, long long b_) : family(family_), a(a_), b(b_) {
        if (family < 1 || family > 4)
            throw InvalidArgument("family must be 1..4");
        if (a < 1) throw InvalidArgument("family parameter a must be >= 1");
        const long long min_b = family <= 2 ? 2 : 3;
        if (b < min_b)
            throw InvalidArgument("family " + std::to_string(family) + " requires b >= " +
                                  std::to_string(min_b));
    }

    bool operator==(const FamilyParams&) const = default;

    std::string str() const {
        return std::to_string(family) + " (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
    }
};

namespace detail {

inline std::vector<long long> repeat(long long value, long long count) {
    return std::vector<long long>(static_cast<std::size_t>(count), value);
}

inline std::vector<long long> cat(std::vector<long long> head, const std::vector<long long>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

} // namespace detail

/// Table row of the classification: the two written multiplicity sequences
/// (entries equal to 1 are genuine and kept) and the degree column.
inline NumericalData family_data(const FamilyParams& p) {
    using detail::cat;
    using detail::repeat;
    const long long a = p.a;
    const long long b = p.b;
    std::vector<long long> c1;
    std::vector<long long> c2;
    long long degree = 0;
    switch (p.family) {
        case 1:
            c1 = cat(cat({a * b + b - 1, a * b - 1}, repeat(b, a - 1)), {b - 1});
            c2 = cat({a * b, a * b}, repeat(b, a));
            degree = 2 * a * b + b - 1;
            break;
        case 2:
            c1 = cat({a * b + b, a * b}, repeat(b, a));
            c2 = cat({a * b + 1, a * b + 1}, repeat(b, a));
            degree = 2 * a * b + b + 1;
            break;
        case 3:
            c1 = cat({a * b + 1, a * b - b + 1}, repeat(b, a - 1));
            c2 = cat({a * b, a * b}, repeat(b, a));
            degree = 2 * a * b + 1;
            break;
        case 4:
            c1 = cat({a * b + b, a * b}, repeat(b, a));
            c2 = cat(cat({a * b + b - 1, a * b + b - 1}, repeat(b, a)), {b - 1});
            degree = 2 * a * b + 2 * b - 1;
            break;
    }
    return NumericalData(degree, MultiplicitySequence::from_written(std::move(c1)),
                         MultiplicitySequence::from_written(std::move(c2)));
}

/// Genus-0 consistency: (d-1)(d-2)/2 equals the sum of the two deltas.
inline bool genus_check(const NumericalData& nd) {
    const long long d = nd.degree();
    long long delta = 0;
    for (const auto& c : nd.cusps()) delta += local_invariants(c).delta;
    return (d - 1) * (d - 2) / 2 == delta;
}

/// (C')^2 = d^2 - sum of m^2 over all blow-ups of both cusps.
inline long long strict_transform_selfint(const NumericalData& nd) {
    long long sq = 0;
    for (const auto& c : nd.cusps()) sq += local_invariants(c).sum_sq;
    return nd.degree() * nd.degree() - sq;
}

/// Resolution dual graph of the whole curve: both cusps' exceptional trees
/// joined to the strict transform C' through their D_0 vertices.
struct GlobalGraph {
    DualGraph graph;
    int c_prime_id = -1;
    std::array<CuspResolutionGraph, 2> cusps; // ids local to each subtree
};

inline GlobalGraph assemble_global_graph(const NumericalData& nd) {
    GlobalGraph out{{},
                    -1,
                    {resolution_graph(char_from_mult(nd.cusps()[0])),
                     resolution_graph(char_from_mult(nd.cusps()[1]))}};
    std::array<int, 2> d0{};
    int offset = 0;
    for (std::size_t c = 0; c < 2; ++c) {
        const DualGraph& tree = out.cusps[c].assembled;
        const std::string prefix = "P" + std::to_string(c + 1) + ".";
        for (const auto& v : tree.vertices())
            out.graph.add_vertex_with_id(v.id + offset, v.weight, prefix + v.label);
        for (const auto& [x, y] : tree.edges()) out.graph.add_edge(x + offset, y + offset);
        d0[c] = out.cusps[c].d0_id + offset;
        offset += tree.size();
    }
    out.c_prime_id = out.graph.add_vertex(static_cast<int>(strict_transform_selfint(nd)), "C'");
    out.graph.add_edge(d0[0], out.c_prime_id);
    out.graph.add_edge(d0[1], out.c_prime_id);
    return out;
}

/// Scan hit: numerical data passing the filter, with the table membership
/// (if any) reported alongside.
struct ScanRecord {
    NumericalData data;
    bool genus_ok = true;
    long long c_prime_sq = 0;
    std::optional<FamilyParams> family;
};

/// Finds the table row producing this data, if any.
inline std::optional<FamilyParams> match_family(const NumericalData& nd) {
    for (int family = 1; family <= 4; ++family) {
        const long long min_b = family <= 2 ? 2 : 3;
        for (long long b = min_b; 2 * b + min_b <= nd.degree() + 2; ++b) {
            // invert the degree column for this row
            long long num = 0;
            switch (family) {
                case 1: num = nd.degree() + 1 - b; break;
                case 2: num = nd.degree() - 1 - b; break;
                case 3: num = nd.degree() - 1; break;
                case 4: num = nd.degree() + 1 - 2 * b; break;
            }
            if (num <= 0 || num % (2 * b) != 0) continue;
            const long long a = num / (2 * b);
            if (a < 1) continue;
            const FamilyParams params(family, a, b);
            if (family_data(params) == nd) return params;
        }
    }
    return std::nullopt;
}

namespace detail {

// All realizable cusps with multiplicity <= max_mult and delta <= max_delta,
// enumerated through characteristic sequences so realizability is built in.
inline std::vector<MultiplicitySequence> enumerate_cusps(long long max_mult, long long max_delta) {
    std::vector<MultiplicitySequence> out;
    std::vector<long long> alphas;
    auto partial_delta = [&]() {
        // delta of the multiplicity entries fixed so far (alpha_0 + the
        // Euclid rows of every completed step)
        long long delta = alphas[0] * (alphas[0] - 1) / 2;
        long long m1 = alphas[0];
        for (std::size_t i = 1; i < alphas.size(); ++i) {
            long long x = alphas[i] - alphas[i - 1];
            long long y = m1;
            while (true) {
                long long q = x / y;
                delta += q * (y * (y - 1) / 2);
                long long r = x % y;
                if (r == 0) break;
                x = y;
                y = r;
            }
            m1 = y;
        }
        return delta;
    };
    auto extend = [&](auto&& self) -> void {
        long long g = alphas[0];
        for (std::size_t i = 1; i < alphas.size(); ++i) g = std::gcd(g, alphas[i]);
        if (g == 1) {
            out.push_back(mult_from_char(CharacteristicSequence(alphas)));
            return;
        }
        // gamma = a_{i,1} g' + m_{i,2} with a_{i,1} <= delta budget and g' <= alpha_0
        const long long cap = alphas.back() + (max_delta + 1) * alphas[0];
        for (long long next = alphas.back() + 1; next <= cap; ++next) {
            if (std::gcd(g, next) >= g) continue;
            alphas.push_back(next);
            if (partial_delta() <= max_delta) self(self);
            alphas.pop_back();
        }
    };
    for (long long a0 = 2; a0 <= max_mult; ++a0) {
        if (a0 * (a0 - 1) / 2 > max_delta) break;
        alphas = {a0};
        extend(extend);
    }
    std::ranges::sort(out);
    out.erase(std::ranges::unique(out).begin(), out.end());
    return out;
}

} // namespace detail

/// All bicuspidal numerical data with degree <= max_degree, both cusps
/// realizable, the genus identity exact and (C')^2 = -1. Everything the
/// filter admits is reported; table membership is recorded per hit.
inline std::vector<ScanRecord> scan_candidates(long long max_degree, long long bound = 9) {
    if (max_degree > bound)
        throw InvalidArgument("scan: max degree " + std::to_string(max_degree) +
                              " exceeds the configured bound " + std::to_string(bound));
    std::vector<ScanRecord> out;
    for (long long d = 2; d <= max_degree; ++d) {
        const long long genus_target = (d - 1) * (d - 2) / 2;
        if (genus_target < 2) continue; // each cusp contributes delta >= 1
        const auto cusps = detail::enumerate_cusps(d - 1, genus_target - 1);
        std::vector<LocalInvariants> inv(cusps.size());
        for (std::size_t i = 0; i < cusps.size(); ++i) inv[i] = local_invariants(cusps[i]);
        for (std::size_t i = 0; i < cusps.size(); ++i) {
            for (std::size_t j = i; j < cusps.size(); ++j) {
                if (inv[i].delta + inv[j].delta != genus_target) continue;
                if (d * d - inv[i].sum_sq - inv[j].sum_sq != -1) continue;
                NumericalData nd(d, cusps[i], cusps[j]);
                out.push_back({nd, true, -1, match_family(nd)});
            }
        }
    }
    std::ranges::sort(out, {}, [](const ScanRecord& r) {
        return std::make_tuple(r.data.degree(), r.data.cusps()[0].full(), r.data.cusps()[1].full());
    });
    return out;
}

inline NumericalData NumericalData::parse(std::string_view text) {
    auto fail = [&] {
        throw InvalidArgument("malformed numerical data: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (text.substr(i, 2) != "d=") fail();
    i += 2;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail();
    long long degree = 0;
    try {
        degree = std::stoll(std::string(text.substr(start, i - start)));
    } catch (const std::exception&) {
        fail();
    }
    skip_ws();
    if (i >= text.size() || text[i] != '{') fail();
    ++i;
    std::vector<MultiplicitySequence> cusps;
    while (cusps.size() < 2) {
        skip_ws();
        if (i >= text.size() || text[i] != '(') fail();
        const std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) fail();
        cusps.push_back(MultiplicitySequence::parse(text.substr(i, close - i + 1)));
        i = close + 1;
        skip_ws();
        if (cusps.size() == 1) {
            if (i >= text.size() || text[i] != ',') fail();
            ++i;
        }
    }
    skip_ws();
    if (i >= text.size() || text[i] != '}') fail();
    ++i;
    skip_ws();
    if (i != text.size()) fail();
    return NumericalData(degree, std::move(cusps[0]), std::move(cusps[1]));
}

} // namespace cuspcalc
