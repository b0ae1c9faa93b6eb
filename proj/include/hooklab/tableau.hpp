#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace hooklab {

/// Filling of Y(outer/inner) by positive integers. Row i is stored with
/// outer_i slots; slots belonging to the inner shape hold 0.
class Tableau {
public:
    Tableau() = default;

    Tableau(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (!contains(outer_, inner_))
            throw not_contained(inner_.to_string() + " is not contained in " + outer_.to_string());
        for (int i = 1; i <= outer_.length(); ++i)
            rows_.emplace_back(static_cast<std::size_t>(outer_.part(i)), 0);
    }

    /// Straight-shape tableau from its rows.
    static Tableau from_rows(const std::vector<std::vector<int>>& rows)
    {
        std::vector<int> shape;
        for (const auto& r : rows)
            shape.push_back(static_cast<int>(r.size()));
        Tableau t(Partition(shape), Partition{});
        for (std::size_t i = 0; i < rows.size(); ++i)
            t.rows_[i] = rows[i];
        return t;
    }

    /// Skew tableau from rows listing only the skew cells of each row.
    static Tableau from_skew_rows(const Partition& outer, const Partition& inner,
                                 const std::vector<std::vector<int>>& rows)
    {
        Tableau t(outer, inner);
        if (static_cast<int>(rows.size()) != outer.length())
            throw dimension_mismatch("row count differs from the outer shape");
        for (int i = 1; i <= outer.length(); ++i) {
            const auto& r = rows[static_cast<std::size_t>(i - 1)];
            if (static_cast<int>(r.size()) != outer.part(i) - inner.part(i))
                throw dimension_mismatch("row " + std::to_string(i) + " has the wrong length");
            for (std::size_t k = 0; k < r.size(); ++k)
                t.set({i, inner.part(i) + 1 + static_cast<int>(k)}, r[k]);
        }
        return t;
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    bool has(Box c) const noexcept
    {
        return in_shape(outer_, c) && c.col > inner_.part(c.row);
    }

    int at(Box c) const
    {
        if (!has(c))
            throw box_outside_shape("box is not a cell of the tableau");
        return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    }

    int operator()(int i, int j) const { return at({i, j}); }

    void set(Box c, int value)
    {
        if (!has(c))
            throw box_outside_shape("box is not a cell of the tableau");
        rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = value;
    }

    int size() const noexcept { return outer_.size() - inner_.size(); }

    /// Cells in row-major order.
    std::vector<Box> cells() const
    {
        std::vector<Box> out;
        for (int i = 1; i <= outer_.length(); ++i)
            for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
                out.push_back({i, j});
        return out;
    }

    /// Entries in row-major order.
    std::vector<int> reading_word() const
    {
        std::vector<int> w;
        for (Box c : cells())
            w.push_back(at(c));
        return w;
    }

    /// Row i restricted to the skew cells.
    std::vector<int> row(int i) const
    {
        std::vector<int> r;
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
            r.push_back(at({i, j}));
        return r;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition outer_;
    Partition inner_;
    std::vector<std::vector<int>> rows_;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline bool is_semistandard(const Tableau& t)
{
    for (Box c : t.cells()) {
        const int v = t.at(c);
        if (v < 1)
            return false;
        if (t.has(c.east()) && t.at(c.east()) < v)
            return false;
        if (t.has(c.south()) && t.at(c.south()) <= v)
            return false;
    }
    return true;
}

inline bool is_standard(const Tableau& t)
{
    std::vector<bool> seen(static_cast<std::size_t>(t.size()) + 1, false);
    for (Box c : t.cells()) {
        const int v = t.at(c);
        if (v < 1 || v > t.size() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
        if (t.has(c.east()) && t.at(c.east()) <= v)
            return false;
        if (t.has(c.south()) && t.at(c.south()) <= v)
            return false;
    }
    return true;
}

/// (c_T(1), ..., c_T(n)) where c_T(k) is the content of the box holding k.
inline std::vector<int> content_word(const Tableau& t)
{
    if (!is_standard(t))
        throw not_standard("content word needs a standard tableau");
    std::vector<int> w(static_cast<std::size_t>(t.size()));
    for (Box c : t.cells())
        w[static_cast<std::size_t>(t.at(c) - 1)] = c.content();
    return w;
}

// ---------------------------------------------------------------------------
// Standard tableaux
// ---------------------------------------------------------------------------

namespace detail {

inline void sort_by_reading_word(std::vector<Tableau>& ts)
{
    std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
    keyed.reserve(ts.size());
    for (std::size_t k = 0; k < ts.size(); ++k)
        keyed.emplace_back(ts[k].reading_word(), k);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Tableau> out;
    out.reserve(ts.size());
    for (auto& [w, k] : keyed)
        out.push_back(std::move(ts[k]));
    ts = std::move(out);
}

// Fills `outer/inner` by placing n into each removable outer corner in turn.
inline void syt_rec(const Partition& outer, const Partition& inner,
                    std::vector<std::vector<Box>>& acc, std::vector<Box>& placed)
{
    if (outer == inner) {
        acc.push_back(placed);
        return;
    }
    for (int i = 1; i <= outer.length(); ++i) {
        const int li = outer.part(i);
        if (li == outer.part(i + 1) || li == inner.part(i))
            continue;
        std::vector<int> parts(outer.parts().begin(), outer.parts().end());
        --parts[static_cast<std::size_t>(i - 1)];
        placed.push_back({i, li});
        syt_rec(Partition(std::move(parts)), inner, acc, placed);
        placed.pop_back();
    }
}

} // namespace detail

/// All standard tableaux of shape lambda/mu, ordered by reading word; empty
/// when mu is not contained in lambda.
inline std::vector<Tableau> enumerate_syt(const Partition& lambda, const Partition& mu)
{
    if (!contains(lambda, mu))
        return {};
    std::vector<std::vector<Box>> fillings;
    std::vector<Box> placed;
    detail::syt_rec(lambda, mu, fillings, placed);
    const int n = lambda.size() - mu.size();
    std::vector<Tableau> out;
    out.reserve(fillings.size());
    for (const auto& f : fillings) {
        Tableau t(lambda, mu);
        // f[k] holds the box of entry n - k.
        for (std::size_t k = 0; k < f.size(); ++k)
            t.set(f[k], n - static_cast<int>(k));
        out.push_back(std::move(t));
    }
    detail::sort_by_reading_word(out);
    return out;
}

/// Removes the entry 1 from a standard tableau of shape lambda/mu and
/// lowers the other entries by one. The result has shape lambda/nu where nu
/// is mu plus the removed box.
inline Tableau remove_entry_one(const Tableau& t)
{
    if (!is_standard(t) || t.size() == 0)
        throw not_standard("needs a nonempty standard tableau");
    Box one{};
    for (Box c : t.cells())
        if (t.at(c) == 1)
            one = c;
    std::vector<int> nu(t.inner().parts().begin(), t.inner().parts().end());
    if (one.row > static_cast<int>(nu.size()))
        nu.resize(static_cast<std::size_t>(one.row), 0);
    ++nu[static_cast<std::size_t>(one.row - 1)];
    Tableau r(t.outer(), Partition(std::move(nu)));
    for (Box c : r.cells())
        r.set(c, t.at(c) - 1);
    return r;
}

// ---------------------------------------------------------------------------
// Flaggings and semistandard tableaux
// ---------------------------------------------------------------------------

/// Row bounds b_1, b_2, ... given by a finite prefix and a tail rule.
class Flagging {
public:
    enum class Tail { identity, constant };

    Flagging() = default;
    Flagging(std::vector<int> prefix, Tail tail) : prefix_(std::move(prefix)), tail_(tail)
    {
        for (int v : prefix_)
            if (v < 0)
                throw parse_error("flag values must be nonnegative");
    }

    /// b_i = cap for every row.
    static Flagging uniform(int cap) { return Flagging({cap}, Tail::constant); }

    int operator()(int i) const
    {
        if (i >= 1 && i <= static_cast<int>(prefix_.size()))
            return prefix_[static_cast<std::size_t>(i - 1)];
        if (tail_ == Tail::identity)
            return i;
        return prefix_.empty() ? 0 : prefix_.back();
    }

    const std::vector<int>& prefix() const noexcept { return prefix_; }
    Tail tail() const noexcept { return tail_; }

    bool weakly_increasing() const
    {
        for (std::size_t k = 1; k < prefix_.size(); ++k)
            if (prefix_[k] < prefix_[k - 1])
                return false;
        if (tail_ == Tail::identity && !prefix_.empty() &&
            prefix_.back() > static_cast<int>(prefix_.size()) + 1)
            return false;
        return true;
    }

private:
    std::vector<int> prefix_;
    Tail tail_ = Tail::identity;
};

inline Flagging induced_flagging(const Partition& lambda, const Partition& mu)
{
    const int n = default_cutoff(lambda, mu);
    std::vector<int> b;
    for (int i = 1; i <= n; ++i)
        b.push_back(induced_flag(lambda, mu, i));
    // Beyond n the induced values follow b_i = i.
    return Flagging(std::move(b), Flagging::Tail::identity);
}

/// All semistandard tableaux of shape mu whose row-i entries are <= b(i).
/// Row-major backtracking; the output is ordered by reading word.
inline std::vector<Tableau> enumerate_fssyt(const Partition& mu, const Flagging& b)
{
    std::vector<Tableau> out;
    Tableau t(mu, Partition{});
    const auto cells = t.cells();
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.push_back(t);
            return;
        }
        const Box c = cells[k];
        int lo = 1;
        if (c.col > 1)
            lo = std::max(lo, t.at({c.row, c.col - 1}));
        if (c.row > 1)
            lo = std::max(lo, t.at({c.row - 1, c.col}) + 1);
        const int hi = b(c.row);
        for (int v = lo; v <= hi; ++v) {
            t.set(c, v);
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& mu, int cap)
{
    return enumerate_fssyt(mu, Flagging::uniform(cap));
}

/// Every entry in row i is <= b(i).
inline bool is_flagged(const Tableau& t, const Flagging& b)
{
    for (Box c : t.cells())
        if (t.at(c) > b(c.row))
            return false;
    return true;
}

} // namespace hooklab
