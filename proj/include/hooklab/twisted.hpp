#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "report.hpp"
#include "tableau.hpp"

namespace hooklab {

/// A permutation sigma of [n] (one-line notation, 1-based values) with a
/// filling of the left-aligned diagram P(sigma) whose row i has length
/// mu_{sigma(i)} - sigma(i) + i.
struct TwistedArray {
    std::vector<int> sigma;
    std::vector<std::vector<int>> rows;

    int n() const noexcept { return static_cast<int>(sigma.size()); }
    int length(int i) const noexcept { return static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()); }

    /// Entry at (i, j), 1-based.
    int at(int i, int j) const
    {
        return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    bool has(int i, int j) const noexcept
    {
        return i >= 1 && i <= n() && j >= 1 && j <= length(i);
    }

    friend bool operator==(const TwistedArray&, const TwistedArray&) = default;
    friend auto operator<=>(const TwistedArray&, const TwistedArray&) = default;
};

inline int sign_of(const std::vector<int>& sigma)
{
    int inversions = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
            inversions += sigma[a] > sigma[b];
    return inversions % 2 ? -1 : 1;
}

inline int twisted_row_length(const Partition& mu, const std::vector<int>& sigma, int i)
{
    const int s = sigma[static_cast<std::size_t>(i - 1)];
    return mu.part(s) - s + i;
}

inline bool is_legitimate(const Partition& mu, const std::vector<int>& sigma)
{
    for (int i = 1; i <= static_cast<int>(sigma.size()); ++i)
        if (twisted_row_length(mu, sigma, i) < 0)
            return false;
    return true;
}

/// Row shape, sigma and row monotonicity agree with mu.
inline bool is_twisted_array(const Partition& mu, const TwistedArray& a)
{
    if (!is_legitimate(mu, a.sigma) || a.rows.size() != a.sigma.size())
        return false;
    for (int i = 1; i <= a.n(); ++i) {
        if (a.length(i) != twisted_row_length(mu, a.sigma, i))
            return false;
        for (int j = 1; j <= a.length(i); ++j)
            if (a.at(i, j) < 1 || (j > 1 && a.at(i, j - 1) > a.at(i, j)))
                return false;
    }
    return true;
}

inline bool is_b_flagged(const TwistedArray& a, const Flagging& b)
{
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.length(i); ++j)
            if (a.at(i, j) > b(a.sigma[static_cast<std::size_t>(i - 1)]))
                return false;
    return true;
}

/// All b-flagged twisted arrays for mu with permutations of [n], ordered by
/// sigma (lexicographically) and then by rows.
inline std::vector<TwistedArray> enumerate_twisted_arrays(const Partition& mu, const Flagging& b, int n)
{
    if (n < mu.length())
        throw cutoff_too_small("n must be at least len(mu)");
    std::vector<TwistedArray> out;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        if (!is_legitimate(mu, sigma))
            continue;
        TwistedArray a{sigma, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
        for (int i = 1; i <= n; ++i)
            a.rows[static_cast<std::size_t>(i - 1)].assign(
                static_cast<std::size_t>(twisted_row_length(mu, sigma, i)), 0);
        // Fill row-major with weakly increasing rows bounded by the flags.
        auto rec = [&](auto&& self, int i, int j) -> void {
            if (i > n) {
                out.push_back(a);
                return;
            }
            if (j > a.length(i)) {
                self(self, i + 1, 1);
                return;
            }
            const int lo = j > 1 ? a.at(i, j - 1) : 1;
            const int hi = b(sigma[static_cast<std::size_t>(i - 1)]);
            for (int v = lo; v <= hi; ++v) {
                a.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
                self(self, i, j + 1);
            }
        };
        rec(rec, 1, 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

/// The failure with the smallest column and, within it, the largest row.
inline std::optional<Box> bottommost_leftmost_failure(const TwistedArray& a)
{
    int width = 0;
    for (int i = 1; i <= a.n(); ++i)
        width = std::max(width, a.length(i));
    for (int j = 1; j <= width; ++j)
        for (int i = a.n(); i >= 2; --i) {
            if (!a.has(i, j))
                continue;
            if (!a.has(i - 1, j) || a.at(i - 1, j) >= a.at(i, j))
                return Box{i, j};
        }
    return std::nullopt;
}

/// Swaps the top floor T(i-1, j..) with the bottom floor T(i, j+1..) at the
/// bottommost leftmost failure (i, j) and composes sigma with s_{i-1}.
inline TwistedArray flip(const TwistedArray& a)
{
    auto failure = bottommost_leftmost_failure(a);
    if (!failure)
        throw unfailing_array("flip needs a failing twisted array");
    const int i = failure->row;
    const int j = failure->col;
    const auto& top = a.rows[static_cast<std::size_t>(i - 2)];
    const auto& bottom = a.rows[static_cast<std::size_t>(i - 1)];

    TwistedArray r = a;
    std::swap(r.sigma[static_cast<std::size_t>(i - 2)], r.sigma[static_cast<std::size_t>(i - 1)]);

    std::vector<int> new_top(top.begin(), top.begin() + (j - 1));
    new_top.insert(new_top.end(), bottom.begin() + j, bottom.end());
    std::vector<int> new_bottom(bottom.begin(), bottom.begin() + j);
    new_bottom.insert(new_bottom.end(), top.begin() + (j - 1), top.end());

    r.rows[static_cast<std::size_t>(i - 2)] = std::move(new_top);
    r.rows[static_cast<std::size_t>(i - 1)] = std::move(new_bottom);
    return r;
}

/// Weight of a twisted array as a multiset of u-indices (entry, j - i),
/// sorted. Two arrays have equal weight for generic u iff these agree.
inline std::vector<std::pair<int, int>> weight_key(const TwistedArray& a)
{
    std::vector<std::pair<int, int>> k;
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.length(i); ++j)
            k.emplace_back(a.at(i, j), j - i);
    std::sort(k.begin(), k.end());
    return k;
}

inline std::vector<std::pair<int, int>> weight_key(const Tableau& t)
{
    std::vector<std::pair<int, int>> k;
    for (Box c : t.cells())
        k.emplace_back(t.at(c), c.content());
    std::sort(k.begin(), k.end());
    return k;
}

/// Integer combination of u-monomials.
using SymbolicSum = std::map<std::vector<std::pair<int, int>>, long long>;

inline void add_term(SymbolicSum& s, std::vector<std::pair<int, int>> key, long long coeff)
{
    auto [it, fresh] = s.try_emplace(std::move(key), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0)
            s.erase(it);
    }
}

namespace detail {

inline std::string describe(const TwistedArray& a)
{
    std::string s = "sigma=[";
    for (std::size_t k = 0; k < a.sigma.size(); ++k)
        s += (k ? "," : "") + std::to_string(a.sigma[k]);
    s += "] rows=";
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        s += i ? "/" : "";
        for (int v : a.rows[i])
            s += std::to_string(v) + (v > 9 ? " " : "");
    }
    return s;
}

inline bool column_strict(const TwistedArray& a)
{
    for (int i = 2; i <= a.n(); ++i)
        for (int j = 1; j <= a.length(i); ++j)
            if (a.has(i - 1, j) && a.at(i - 1, j) >= a.at(i, j))
                return false;
    return true;
}

} // namespace detail

/// Exhaustive check of the sign-reversing involution on the b-flagged
/// twisted arrays of mu: the flip properties on every failing array, the
/// description of the unfailing arrays, and the signed-sum cancellation
/// against the flagged tableaux (as exact sums of u-monomials).
inline Report check_twisted_arrays(const Partition& mu, const Flagging& b, int n)
{
    Report report("twisted-arrays");
    std::string key = "mu=" + mu.to_string() + " b=";
    for (int i = 1; i <= n; ++i)
        key += (i > 1 ? "," : "") + std::to_string(b(i));

    SymbolicSum all;
    SymbolicSum unfailing;
    std::string problem;
    for (const TwistedArray& a : enumerate_twisted_arrays(mu, b, n)) {
        const int sgn = sign_of(a.sigma);
        add_term(all, weight_key(a), sgn);
        auto fail = bottommost_leftmost_failure(a);
        const bool identity = std::is_sorted(a.sigma.begin(), a.sigma.end());
        if (!fail) {
            add_term(unfailing, weight_key(a), sgn);
            if (!identity || !detail::column_strict(a))
                problem = "unfailing array is not a semistandard tableau: " + detail::describe(a);
            continue;
        }
        if (identity && detail::column_strict(a))
            problem = "semistandard array reported as failing: " + detail::describe(a);
        TwistedArray f = flip(a);
        auto f_fail = bottommost_leftmost_failure(f);
        if (!is_twisted_array(mu, f))
            problem = "flip leaves the twisted arrays: " + detail::describe(a);
        else if (!f_fail)
            problem = "flip result is unfailing: " + detail::describe(a);
        else if (*f_fail != *fail)
            problem = "flip moves the failure: " + detail::describe(a);
        else if (flip(f) != a)
            problem = "flip is not an involution: " + detail::describe(a);
        else if (sign_of(f.sigma) != -sgn)
            problem = "flip keeps the sign: " + detail::describe(a);
        else if (weight_key(f) != weight_key(a))
            problem = "flip changes the weight: " + detail::describe(a);
        else if (!is_b_flagged(f, b))
            problem = "flip breaks the flagging: " + detail::describe(a);
        if (!problem.empty())
            break;
    }
    report.check(problem.empty(), key + " flip", problem);

    SymbolicSum tableaux;
    for (const Tableau& t : enumerate_fssyt(mu, b))
        add_term(tableaux, weight_key(t), 1);
    report.check(all == unfailing, key + " cancellation",
                 "signed sum over all arrays differs from the unfailing part");
    report.check(unfailing == tableaux, key + " unfailing-vs-tableaux",
                 "unfailing arrays do not match the flagged tableaux");
    return report;
}

} // namespace hooklab
