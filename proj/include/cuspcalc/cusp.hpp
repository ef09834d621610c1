#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuspcalc/errors.hpp"

namespace cuspcalc {

namespace detail {

inline long long run_gcd(long long a, long long b) { return std::gcd(a, b); }

inline std::vector<long long> parse_int_list(std::string_view text, char open, char close,
                                             const char* what, bool allow_semicolon,
                                             bool allow_repeat) {
    auto fail = [&] {
        throw InvalidArgument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    auto read_int = [&]() -> long long {
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        try {
            return std::stoll(std::string(text.substr(start, i - start)));
        } catch (const std::exception&) {
            fail();
        }
        return 0; // unreachable
    };
    skip_ws();
    if (i >= text.size() || text[i] != open) fail();
    ++i;
    std::vector<long long> values;
    bool first = true;
    while (true) {
        skip_ws();
        if (i < text.size() && text[i] == close && values.empty()) fail();
        long long value = read_int();
        long long repeat = 1;
        if (allow_repeat && i < text.size() && text[i] == '_') {
            ++i;
            repeat = read_int();
            if (repeat < 1) fail();
        }
        if (repeat + static_cast<long long>(values.size()) > 1000000)
            throw InvalidArgument(std::string(what) + " too long");
        for (long long r = 0; r < repeat; ++r) values.push_back(value);
        skip_ws();
        const char separator = (allow_semicolon && first) ? ';' : ',';
        if (i < text.size() && text[i] == separator) {
            first = false;
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == close) {
            ++i;
            break;
        }
        fail();
    }
    skip_ws();
    if (i != text.size()) fail();
    return values;
}

} // namespace detail

/// Characteristic sequence (alpha_0,...,alpha_k) of a cusp: strictly
/// increasing, alpha_0 >= 2, and gcd(alpha_0..alpha_i) strictly decreasing
/// down to 1. Validation names the violated condition.
class CharacteristicSequence {
public:
    explicit CharacteristicSequence(std::vector<long long> alphas) : alphas_(std::move(alphas)) {
        validate();
    }

    /// Parses "(4;6,7)" — semicolon after alpha_0.
    static CharacteristicSequence parse(std::string_view text) {
        return CharacteristicSequence(
            detail::parse_int_list(text, '(', ')', "characteristic sequence", true, false));
    }

    const std::vector<long long>& alphas() const { return alphas_; }
    long long alpha0() const { return alphas_.front(); }
    int k() const { return static_cast<int>(alphas_.size()) - 1; }

    bool operator==(const CharacteristicSequence&) const = default;
    auto operator<=>(const CharacteristicSequence&) const = default;

    std::string str() const {
        std::string out = "(" + std::to_string(alphas_[0]) + ";";
        for (std::size_t i = 1; i < alphas_.size(); ++i) {
            if (i > 1) out += ',';
            out += std::to_string(alphas_[i]);
        }
        return out + ")";
    }

private:
    void validate() const {
        if (alphas_.size() < 2)
            throw InvalidArgument("characteristic sequence: k >= 1 requires at least two terms");
        if (alphas_[0] < 2)
            throw InvalidArgument("characteristic sequence: alpha_0 >= 2 violated");
        long long g = alphas_[0];
        for (std::size_t i = 1; i < alphas_.size(); ++i) {
            if (alphas_[i] <= alphas_[i - 1])
                throw InvalidArgument("characteristic sequence: entries must be strictly increasing");
            if (i == 1 && alphas_[1] % alphas_[0] == 0)
                throw InvalidArgument(
                    "characteristic sequence: alpha_1 must not be divisible by alpha_0");
            long long ng = detail::run_gcd(g, alphas_[i]);
            if (ng >= g)
                throw InvalidArgument("characteristic sequence: alpha_" + std::to_string(i) +
                                      " does not reduce gcd(alpha_0..alpha_" + std::to_string(i - 1) +
                                      ")");
            g = ng;
        }
        if (g != 1)
            throw InvalidArgument("characteristic sequence: gcd(alpha_0..alpha_k) = 1 violated");
    }

    std::vector<long long> alphas_;
};

/// One row of the Euclidean decomposition: quotients a_{i,1..n_i} and
/// remainders m_{i,1..n_i}, with gamma_i = a_{i,1} m_{i,1} + m_{i,2} and
/// m_{i,j-1} = a_{i,j} m_{i,j} + m_{i,j+1} (exact at j = n_i).
struct EuclidRow {
    long long gamma = 0;
    std::vector<long long> quotients;  // a_{i,1} >= 0, a_{i,j} > 0 for j > 1, a_{i,n_i} > 1
    std::vector<long long> remainders; // m_{i,1} > m_{i,2} > ... > m_{i,n_i}

    int n() const { return static_cast<int>(quotients.size()); }
};

struct EuclidTable {
    std::vector<EuclidRow> rows; // one per i = 1..k

    int k() const { return static_cast<int>(rows.size()); }
};

/// The Euclidean algorithm of the characteristic-sequence calculus:
/// gamma_i = alpha_i - alpha_{i-1} divided against m_{i,1} = gcd so far.
inline EuclidTable euclid_decompose(const CharacteristicSequence& ch) {
    EuclidTable table;
    long long m1 = ch.alpha0();
    for (std::size_t i = 1; i < ch.alphas().size(); ++i) {
        EuclidRow row;
        row.gamma = ch.alphas()[i] - ch.alphas()[i - 1];
        long long x = row.gamma;
        long long y = m1;
        // first division: gamma_i = a_{i,1} m_{i,1} + m_{i,2}, a_{i,1} may be 0
        while (true) {
            row.remainders.push_back(y);
            row.quotients.push_back(x / y);
            long long r = x % y;
            if (r == 0) break;
            x = y;
            y = r;
        }
        if (row.n() < 2 || row.quotients.back() < 2)
            throw InternalError("euclid_decompose: degenerate row for a valid sequence");
        m1 = row.remainders.back(); // m_{i+1,1} = m_{i,n_i}
        table.rows.push_back(std::move(row));
    }
    if (m1 != 1) throw InternalError("euclid_decompose: gcd chain did not reach 1");
    return table;
}

namespace detail {

/// Inverse parse: reconstruct the characteristic sequence from a full
/// multiplicity sequence (trailing 1's included). Every quotient run is
/// forced, so the reconstruction is deterministic; any mismatch means the
/// sequence is not realizable.
inline std::vector<long long> char_from_full_mult(const std::vector<long long>& m) {
    auto fail = [](const std::string& why) {
        throw InvalidArgument("multiplicity sequence not realizable: " + why);
    };
    if (m.empty()) fail("empty sequence");
    if (m.front() < 2) fail("first multiplicity must be >= 2");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 1) fail("multiplicities must be positive");
        if (i && m[i] > m[i - 1]) fail("sequence must be non-increasing");
    }

    std::vector<long long> alphas = {m[0]};
    long long alpha_prev = m[0];
    long long g = m[0];
    std::size_t idx = 1;
    auto take_run = [&](long long value, long long count) {
        for (long long c = 0; c < count; ++c) {
            if (idx >= m.size() || m[idx] != value)
                fail("expected a run of " + std::to_string(count) + " entries of value " +
                     std::to_string(value));
            ++idx;
        }
    };
    while (g > 1) {
        long long a1 = 0;
        while (idx < m.size() && m[idx] == g) {
            ++idx;
            ++a1;
        }
        if (idx >= m.size()) fail("sequence ends before the gcd chain reaches 1");
        long long v = m[idx]; // m_{i,2} < g
        long long gamma = a1 * g + v;
        long long x = g;
        long long y = v;
        while (true) {
            long long q = x / y;
            long long r = x % y;
            take_run(y, q);
            if (r == 0) break;
            x = y;
            y = r;
        }
        alphas.push_back(alpha_prev + gamma);
        alpha_prev = alphas.back();
        g = y;
    }
    if (idx != m.size()) fail("extra entries after the gcd chain reached 1");
    return alphas;
}

inline bool full_mult_realizable(const std::vector<long long>& m) {
    try {
        char_from_full_mult(m);
        return true;
    } catch (const InvalidArgument&) {
        return false;
    }
}

} // namespace detail

/// Multiplicity sequence of a cusp. The canonical stored form is the FULL
/// sequence including trailing 1's; the written view strips them (display
/// convention). A written sequence is completed by the unique trailing-1
/// count that makes it realizable.
class MultiplicitySequence {
public:
    static MultiplicitySequence from_full(std::vector<long long> full) {
        detail::char_from_full_mult(full); // validates
        return MultiplicitySequence(std::move(full));
    }

    /// Completes a written (or already-full) sequence with trailing 1's. The
    /// last 1-run has length at most the first entry, bounding the search.
    static MultiplicitySequence from_written(std::vector<long long> written) {
        if (written.empty())
            throw InvalidArgument("multiplicity sequence: empty sequence");
        std::vector<long long> found;
        std::vector<long long> candidate = written;
        for (long long t = 0; t <= written.front(); ++t) {
            if (detail::full_mult_realizable(candidate)) found.push_back(t);
            candidate.push_back(1);
        }
        if (found.empty())
            throw InvalidArgument("multiplicity sequence not realizable: no trailing-1 completion of " +
                                  format(written) + " admits a characteristic sequence");
        if (found.size() > 1)
            throw InvalidArgument("multiplicity sequence ambiguous: several trailing-1 completions of " +
                                  format(written) + " are realizable");
        written.insert(written.end(), static_cast<std::size_t>(found.front()), 1);
        return MultiplicitySequence(std::move(written));
    }

    /// Parses "(4,2,2)" or "(2_3)"; input is treated as the written form.
    static MultiplicitySequence parse(std::string_view text) {
        return from_written(
            detail::parse_int_list(text, '(', ')', "multiplicity sequence", false, true));
    }

    const std::vector<long long>& full() const { return full_; }

    /// Display form with trailing 1's stripped.
    std::vector<long long> written() const {
        auto end = full_.end();
        while (end != full_.begin() && *(end - 1) == 1) --end;
        if (end == full_.begin()) ++end; // never display an empty sequence
        return {full_.begin(), end};
    }

    std::string str() const { return format(written()); }
    std::string str_full() const { return format(full_); }

    bool operator==(const MultiplicitySequence&) const = default;
    auto operator<=>(const MultiplicitySequence&) const = default;

    /// Run-compressed display: "(2,2,2)" prints as "(2_3)".
    static std::string format(const std::vector<long long>& seq) {
        std::string out = "(";
        for (std::size_t i = 0; i < seq.size();) {
            std::size_t j = i;
            while (j < seq.size() && seq[j] == seq[i]) ++j;
            if (i) out += ',';
            out += std::to_string(seq[i]);
            if (j - i > 1) out += "_" + std::to_string(j - i);
            i = j;
        }
        return out + ")";
    }

private:
    explicit MultiplicitySequence(std::vector<long long> full) : full_(std::move(full)) {}

    std::vector<long long> full_;
};

/// Multiplicity sequence determined by the Euclid table: alpha_0 followed by
/// the a_{i,j}-fold repetition of each remainder m_{i,j}.
inline MultiplicitySequence mult_from_char(const CharacteristicSequence& ch) {
    const EuclidTable table = euclid_decompose(ch);
    std::vector<long long> full = {ch.alpha0()};
    for (const auto& row : table.rows)
        for (int j = 0; j < row.n(); ++j)
            full.insert(full.end(), static_cast<std::size_t>(row.quotients[j]), row.remainders[j]);
    return MultiplicitySequence::from_full(std::move(full));
}

inline CharacteristicSequence char_from_mult(const MultiplicitySequence& ms) {
    return CharacteristicSequence(detail::char_from_full_mult(ms.full()));
}

/// Puiseux pairs (q_i, p_i): coprime, q_i >= 2, with alpha_0 = q_1...q_k and
/// alpha_i / alpha_0 = p_i / (q_1...q_i).
class PuiseuxPairs {
public:
    explicit PuiseuxPairs(std::vector<std::pair<long long, long long>> pairs)
        : pairs_(std::move(pairs)) {
        if (pairs_.empty()) throw InvalidArgument("puiseux pairs: at least one pair required");
        for (const auto& [q, p] : pairs_) {
            if (q < 2) throw InvalidArgument("puiseux pairs: q_i >= 2 violated");
            if (p < 1) throw InvalidArgument("puiseux pairs: p_i must be positive");
            if (std::gcd(q, p) != 1)
                throw InvalidArgument("puiseux pairs: gcd(q_i,p_i) = 1 violated");
        }
    }

    /// Parses "[(2,3),(2,7)]".
    static PuiseuxPairs parse(std::string_view text);

    const std::vector<std::pair<long long, long long>>& pairs() const { return pairs_; }
    int k() const { return static_cast<int>(pairs_.size()); }

    bool operator==(const PuiseuxPairs&) const = default;

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (i) out += ',';
            out += "(" + std::to_string(pairs_[i].first) + "," + std::to_string(pairs_[i].second) + ")";
        }
        return out + "]";
    }

private:
    std::vector<std::pair<long long, long long>> pairs_;
};

inline PuiseuxPairs puiseux_from_char(const CharacteristicSequence& ch) {
    std::vector<std::pair<long long, long long>> pairs;
    long long g = ch.alpha0();
    for (std::size_t i = 1; i < ch.alphas().size(); ++i) {
        long long ng = detail::run_gcd(g, ch.alphas()[i]);
        pairs.emplace_back(g / ng, ch.alphas()[i] / ng);
        g = ng;
    }
    return PuiseuxPairs(std::move(pairs));
}

inline CharacteristicSequence char_from_puiseux(const PuiseuxPairs& pp) {
    std::vector<long long> alphas(pp.pairs().size() + 1);
    alphas[0] = 1;
    for (const auto& [q, p] : pp.pairs()) alphas[0] *= q;
    long long tail = alphas[0]; // q_{i+1}...q_k
    for (std::size_t i = 0; i < pp.pairs().size(); ++i) {
        tail /= pp.pairs()[i].first;
        alphas[i + 1] = pp.pairs()[i].second * tail;
    }
    try {
        return CharacteristicSequence(std::move(alphas));
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(std::string("puiseux pairs inconsistent: ") + e.what());
    }
}

inline PuiseuxPairs PuiseuxPairs::parse(std::string_view text) {
    auto fail = [&] {
        throw InvalidArgument("malformed puiseux pairs: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    std::vector<std::pair<long long, long long>> pairs;
    while (true) {
        skip_ws();
        std::size_t close = text.find(')', i);
        if (i >= text.size() || text[i] != '(' || close == std::string_view::npos) fail();
        auto values = detail::parse_int_list(text.substr(i, close - i + 1), '(', ')',
                                             "puiseux pair", false, false);
        if (values.size() != 2) fail();
        pairs.emplace_back(values[0], values[1]);
        i = close + 1;
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        fail();
    }
    skip_ws();
    if (i != text.size()) fail();
    return PuiseuxPairs(std::move(pairs));
}

struct LocalInvariants {
    long long delta = 0;  // sum of m(m-1)/2 over the full sequence
    long long sum_sq = 0; // sum of m^2 over the full sequence
};

inline LocalInvariants local_invariants(const MultiplicitySequence& ms) {
    LocalInvariants inv;
    for (long long m : ms.full()) {
        inv.delta += m * (m - 1) / 2;
        inv.sum_sq += m * m;
    }
    return inv;
}

} // namespace cuspcalc
