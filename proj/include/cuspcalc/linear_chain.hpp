#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cuspcalc/errors.hpp"
#include "cuspcalc/numeric.hpp"

namespace cuspcalc {

/// A weighted linear chain [a_1,...,a_r] of rational curves; entry a_i stands
/// for a component of self-intersection -a_i. Chains are immutable values:
/// every operation returns a new chain.
class LinearChain {
public:
    LinearChain() = default;
    explicit LinearChain(std::vector<int> entries) : entries_(std::move(entries)) {}
    LinearChain(std::initializer_list<int> entries) : entries_(entries) {}

    /// Parses "[2,3,4]" or "[]". Entries below 1 are rejected; weight-1
    /// entries are only meaningful in blow-down contexts and are allowed.
    static LinearChain parse(std::string_view text);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int front() const { return entries_.front(); }
    int back() const { return entries_.back(); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    bool operator==(const LinearChain&) const = default;
    auto operator<=>(const LinearChain&) const = default;

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out + "]";
    }

private:
    std::vector<int> entries_;
};

/// Non-empty and every entry >= 2.
inline bool admissible(const LinearChain& c) {
    return !c.empty() && std::ranges::all_of(c.entries(), [](int a) { return a >= 2; });
}

inline void require_admissible(const LinearChain& c, const char* who) {
    if (!admissible(c))
        throw InvalidArgument(std::string(who) + ": chain " + c.str() + " is not admissible");
}

inline LinearChain reverse(const LinearChain& c) {
    std::vector<int> e(c.entries().rbegin(), c.entries().rend());
    return LinearChain(std::move(e));
}

inline LinearChain drop_first(const LinearChain& c) {
    if (c.empty()) throw InvalidArgument("drop_first: chain is empty");
    return LinearChain(std::vector<int>(c.entries().begin() + 1, c.entries().end()));
}

inline LinearChain drop_last(const LinearChain& c) {
    if (c.empty()) throw InvalidArgument("drop_last: chain is empty");
    return LinearChain(std::vector<int>(c.entries().begin(), c.entries().end() - 1));
}

/// Plain concatenation [A,B] (no star fusion).
inline LinearChain concat(const LinearChain& a, const LinearChain& b) {
    std::vector<int> e = a.entries();
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return LinearChain(std::move(e));
}

inline LinearChain concat(const LinearChain& a, int entry) { return concat(a, LinearChain{entry}); }
inline LinearChain concat(int entry, const LinearChain& a) { return concat(LinearChain{entry}, a); }

/// TW_n = [2,...,2] with n entries; TW_0 is the empty chain.
inline LinearChain tw(int n) {
    if (n < 0) throw InvalidArgument("tw: n must be nonnegative");
    return LinearChain(std::vector<int>(static_cast<std::size_t>(n), 2));
}

/// Discriminant d(A): determinant of the r x r matrix (-D_i D_j), i.e. the
/// continuant with diagonal a_i and off-diagonal -1. d(empty) = 1.
inline Integer discriminant(const LinearChain& c) {
    Integer prev = 0; // d of the (too-short) suffix beyond the end
    Integer cur = 1;  // d of the empty suffix
    for (auto it = c.entries().rbegin(); it != c.entries().rend(); ++it) {
        Integer next = Integer(*it) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Inductance e(A) = d(A-bar)/d(A), a rational in (0,1) for admissible A.
inline Rational inductance(const LinearChain& c) {
    require_admissible(c, "inductance");
    return Rational(discriminant(drop_first(c)), discriminant(c));
}

/// Inverse of the inductance bijection: the unique admissible chain with
/// e(A) = q, computed as the Hirzebruch-Jung expansion of 1/q.
inline LinearChain chain_from_inductance(const Rational& q) {
    if (q <= 0 || q >= 1)
        throw InvalidArgument("chain_from_inductance: " + to_string(q) + " is not in (0,1)");
    Integer num = rat_den(q); // expand den/num = 1/q
    Integer den = rat_num(q);
    std::vector<int> entries;
    while (den > 0) {
        Integer a = (num + den - 1) / den; // ceiling division
        if (a > 1000000)
            throw InvalidArgument("chain_from_inductance: entry " + a.str() +
                                  " exceeds the supported chain weight range");
        entries.push_back(static_cast<int>(a));
        Integer next_den = a * den - num;
        num = std::move(den);
        den = std::move(next_den);
    }
    return LinearChain(std::move(entries));
}

/// A * B = [A-underbar, a_r + b_1 - 1, B-bar]; associative.
inline LinearChain star(const LinearChain& a, const LinearChain& b) {
    if (a.empty() || b.empty())
        throw InvalidArgument("star: operands must be non-empty");
    std::vector<int> e(a.entries().begin(), a.entries().end() - 1);
    e.push_back(a.back() + b.front() - 1);
    e.insert(e.end(), b.entries().begin() + 1, b.entries().end());
    return LinearChain(std::move(e));
}

inline LinearChain star_power(const LinearChain& a, int n) {
    if (n < 1) throw InvalidArgument("star_power: exponent must be positive");
    LinearChain out = a;
    for (int i = 1; i < n; ++i) out = star(out, a);
    return out;
}

/// Adjoint A* = e^{-1}(1 - e(tA)), computed by the integer-only identity
/// A* = TW_{a_r-1} * ... * TW_{a_1-1}; the inductance definition is kept as
/// a test oracle.
inline LinearChain adjoint(const LinearChain& c) {
    require_admissible(c, "adjoint");
    LinearChain out;
    for (auto it = c.entries().rbegin(); it != c.entries().rend(); ++it)
        out = out.empty() ? tw(*it - 1) : star(out, tw(*it - 1));
    return out;
}

inline LinearChain LinearChain::parse(std::string_view text) {
    auto fail = [&] { throw InvalidArgument("malformed chain: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    std::vector<int> entries;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
        skip_ws();
        if (i != text.size()) fail();
        return LinearChain();
    }
    while (true) {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        int value = 0;
        try {
            value = std::stoi(std::string(text.substr(start, i - start)));
        } catch (const std::exception&) {
            fail();
        }
        if (value < 1)
            throw InvalidArgument("chain entry " + std::to_string(value) + " is below 1");
        entries.push_back(value);
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
    return LinearChain(std::move(entries));
}

} // namespace cuspcalc
