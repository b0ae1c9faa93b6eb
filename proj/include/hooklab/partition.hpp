#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hooklab {

inline constexpr int default_max_length = 64;

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

/// A weakly decreasing sequence of positive integers. Entries past the end
/// are zero, so (5,2,2,1) and (5,2,2,1,0,0) construct equal values.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw not_a_partition("partition entries must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw not_a_partition("partition entries must weakly decrease");
        }
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts))
    {}

    /// The i-th entry, 1-based; zero for i past the length (and for i <= 0
    /// callers should not ask).
    int part(int i) const noexcept
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    std::span<const int> parts() const noexcept { return parts_; }

    int size() const noexcept
    {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// ---------------------------------------------------------------------------
// Boxes and diagrams
// ---------------------------------------------------------------------------

struct Box {
    int row = 0;
    int col = 0;

    /// Index of the diagonal the box lies on.
    constexpr int content() const noexcept { return col - row; }

    constexpr Box south() const noexcept { return {row + 1, col}; }
    constexpr Box east() const noexcept { return {row, col + 1}; }
    constexpr Box southeast() const noexcept { return {row + 1, col + 1}; }

    friend constexpr bool operator==(const Box&, const Box&) = default;
    friend constexpr auto operator<=>(const Box&, const Box&) = default;
};

/// Finite set of boxes, kept sorted (row-major) and duplicate free.
class Diagram {
public:
    using const_iterator = std::vector<Box>::const_iterator;

    Diagram() = default;

    explicit Diagram(std::vector<Box> boxes) : boxes_(std::move(boxes))
    {
        std::sort(boxes_.begin(), boxes_.end());
        boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    }

    Diagram(std::initializer_list<Box> boxes) : Diagram(std::vector<Box>(boxes)) {}

    bool contains(Box c) const noexcept
    {
        return std::binary_search(boxes_.begin(), boxes_.end(), c);
    }

    /// Returns true if the box was not already present.
    bool insert(Box c)
    {
        auto it = std::lower_bound(boxes_.begin(), boxes_.end(), c);
        if (it != boxes_.end() && *it == c)
            return false;
        boxes_.insert(it, c);
        return true;
    }

    bool erase(Box c)
    {
        auto it = std::lower_bound(boxes_.begin(), boxes_.end(), c);
        if (it == boxes_.end() || *it != c)
            return false;
        boxes_.erase(it);
        return true;
    }

    std::size_t size() const noexcept { return boxes_.size(); }
    bool empty() const noexcept { return boxes_.empty(); }
    const_iterator begin() const noexcept { return boxes_.begin(); }
    const_iterator end() const noexcept { return boxes_.end(); }
    std::span<const Box> boxes() const noexcept { return boxes_; }

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    std::vector<Box> boxes_;
};

inline bool in_shape(const Partition& lambda, Box c) noexcept
{
    return c.row >= 1 && c.col >= 1 && c.col <= lambda.part(c.row);
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) noexcept
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view token)
{
    token = trim(token);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
        throw parse_error("malformed integer token '" + std::string(token) + "'");
    return value;
}

} // namespace detail

/// Parses a comma-separated list of integers, e.g. "5,2,2,1", "(3,1)" or "".
inline std::vector<int> parse_int_list(std::string_view text)
{
    text = detail::trim(text);
    if (text.size() >= 2 && ((text.front() == '(' && text.back() == ')') ||
                             (text.front() == '[' && text.back() == ']'))) {
        text = detail::trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(detail::parse_int(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline Partition parse_partition(std::string_view text, int max_length = default_max_length)
{
    auto parts = parse_int_list(text);
    if (static_cast<int>(parts.size()) > max_length)
        throw parse_error("partition longer than the configured cap of " +
                          std::to_string(max_length));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw not_a_partition("entry " + std::to_string(parts[i]) + " is not positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw not_a_partition("entries must weakly decrease");
    }
    return Partition(std::move(parts));
}

struct SkewShape {
    Partition outer;
    Partition inner;

    std::string to_string() const
    {
        return inner.empty() ? outer.to_string()
                             : outer.to_string() + "/" + inner.to_string();
    }
};

/// Parses "lambda/mu", e.g. "5,4,3,3,1/2,1,1"; a missing "/mu" means mu = {}.
inline SkewShape parse_skew_shape(std::string_view text, int max_length = default_max_length)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_partition(text, max_length), Partition{}};
    if (text.find('/', slash + 1) != std::string_view::npos)
        throw parse_error("skew shape has more than one '/'");
    return {parse_partition(text.substr(0, slash), max_length),
            parse_partition(text.substr(slash + 1), max_length)};
}

// ---------------------------------------------------------------------------
// Basic operations
// ---------------------------------------------------------------------------

inline Partition conjugate(const Partition& p)
{
    std::vector<int> t(static_cast<std::size_t>(p.part(1)), 0);
    for (int k = 1; k <= p.part(1); ++k) {
        int count = 0;
        while (p.part(count + 1) >= k)
            ++count;
        t[static_cast<std::size_t>(k - 1)] = count;
    }
    return Partition(std::move(t));
}

/// mu is contained in lambda.
inline bool contains(const Partition& lambda, const Partition& mu) noexcept
{
    for (int i = 1; i <= mu.length(); ++i)
        if (lambda.part(i) < mu.part(i))
            return false;
    return true;
}

inline Diagram young_diagram(const Partition& lambda)
{
    std::vector<Box> boxes;
    boxes.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            boxes.push_back({i, j});
    return Diagram(std::move(boxes));
}

inline Diagram skew_cells(const Partition& lambda, const Partition& mu)
{
    if (!contains(lambda, mu))
        throw not_contained(mu.to_string() + " is not contained in " + lambda.to_string());
    std::vector<Box> boxes;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j)
            boxes.push_back({i, j});
    return Diagram(std::move(boxes));
}

inline Diagram hook_cells(const Partition& lambda, Box c)
{
    if (!in_shape(lambda, c))
        throw box_outside_shape("box is not in the Young diagram");
    std::vector<Box> boxes;
    for (int k = c.col; k <= lambda.part(c.row); ++k)
        boxes.push_back({c.row, k});
    for (int k = c.row + 1; lambda.part(k) >= c.col; ++k)
        boxes.push_back({k, c.col});
    return Diagram(std::move(boxes));
}

inline int hook_length(const Partition& lambda, Box c)
{
    return static_cast<int>(hook_cells(lambda, c).size());
}

/// d lies in {lambda_i - i : i >= 1}. Since lambda_i - i = -i past the
/// length, only i <= max(length, -d) need to be inspected.
inline bool delta_contains(const Partition& p, int d) noexcept
{
    const int bound = std::max(p.length(), -d);
    for (int i = 1; i <= bound; ++i)
        if (p.part(i) - i == d)
            return true;
    return false;
}

/// Rows whose last box can be extended: k = 1 or mu_k != mu_{k-1}.
inline std::vector<int> er_set(const Partition& mu)
{
    std::vector<int> out;
    for (int k = 1; k <= mu.length() + 1; ++k)
        if (k == 1 || mu.part(k) != mu.part(k - 1))
            out.push_back(k);
    return out;
}

inline bool is_extensible(const Partition& mu, int k) noexcept
{
    return k == 1 || (k > 1 && mu.part(k) != mu.part(k - 1));
}

/// mu with its k-th entry incremented.
inline Partition add_cell(const Partition& mu, int k)
{
    if (!is_extensible(mu, k))
        throw not_extensible("row " + std::to_string(k) + " of (" + mu.to_string() +
                             ") cannot be extended");
    std::vector<int> parts(mu.parts().begin(), mu.parts().end());
    if (k > mu.length())
        parts.push_back(1);
    else
        ++parts[static_cast<std::size_t>(k - 1)];
    return Partition(std::move(parts));
}

/// All nu with mu covered by nu and nu inside lambda, ordered by the row
/// that was extended.
inline std::vector<Partition> cover_extensions(const Partition& mu, const Partition& lambda)
{
    if (!contains(lambda, mu))
        throw not_contained(mu.to_string() + " is not contained in " + lambda.to_string());
    std::vector<Partition> out;
    for (int k : er_set(mu))
        if (mu.part(k) < lambda.part(k))
            out.push_back(add_cell(mu, k));
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration helpers
// ---------------------------------------------------------------------------

/// All partitions with at most `rows` parts, each at most `cols`, in
/// lexicographic order of their part lists.
inline std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows)
            return;
        for (int v = 1; v <= max_part; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions of the integer n.
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(remaining, max_part); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// All mu contained in lambda.
inline std::vector<Partition> subpartitions(const Partition& lambda)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int max_part) -> void {
        out.emplace_back(cur);
        if (row > lambda.length())
            return;
        for (int v = 1; v <= std::min(max_part, lambda.part(row)); ++v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 1, lambda.part(1));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// SkewContext
// ---------------------------------------------------------------------------

/// b_i = max{k >= 0 : lambda_k - k >= mu_i - i} with lambda_0 = +infinity.
/// Because lambda_k - k strictly decreases, the qualifying k >= 1 form an
/// initial segment, so b_i is the length of that segment.
inline int induced_flag(const Partition& lambda, const Partition& mu, int i)
{
    const int target = mu.part(i) - i;
    int k = 0;
    while (lambda.part(k + 1) - (k + 1) >= target)
        ++k;
    return k;
}

/// Profile of a pair (lambda, mu) up to a cutoff n with lambda_n = mu_n = 0.
/// Sequence accessors are 1-based and valid for every positive index.
class SkewContext {
public:
    SkewContext(Partition lambda, Partition mu, int n)
        : lambda_(std::move(lambda)), mu_(std::move(mu)), n_(n),
          lambda_t_(conjugate(lambda_)), mu_t_(conjugate(mu_))
    {
        if (n < 1 || lambda_.part(n) != 0 || mu_.part(n) != 0)
            throw cutoff_too_small("cutoff " + std::to_string(n) +
                                   " needs lambda_n = mu_n = 0");
        b_.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            b_.push_back(induced_flag(lambda_, mu_, i));
    }

    const Partition& lambda() const noexcept { return lambda_; }
    const Partition& mu() const noexcept { return mu_; }
    const Partition& lambda_t() const noexcept { return lambda_t_; }
    const Partition& mu_t() const noexcept { return mu_t_; }
    int n() const noexcept { return n_; }

    int ell(int i) const noexcept { return lambda_.part(i) - i; }
    int m(int i) const noexcept { return mu_.part(i) - i; }
    int ell_t(int i) const noexcept { return lambda_t_.part(i) - i; }
    int m_t(int i) const noexcept { return mu_t_.part(i) - i; }

    int b(int i) const
    {
        return i <= n_ ? b_[static_cast<std::size_t>(i - 1)] : induced_flag(lambda_, mu_, i);
    }

    /// b_1..b_n.
    std::span<const int> flags() const noexcept { return b_; }

private:
    Partition lambda_;
    Partition mu_;
    int n_;
    Partition lambda_t_;
    Partition mu_t_;
    std::vector<int> b_;
};

inline int default_cutoff(const Partition& lambda, const Partition& mu) noexcept
{
    return std::max(lambda.length(), mu.length()) + 1;
}

inline SkewContext skew_context(const Partition& lambda, const Partition& mu, int n)
{
    return SkewContext(lambda, mu, n);
}

/// "lambda" for straight shapes, "lambda/mu" otherwise.
inline std::string shape_key(const Partition& lambda, const Partition& mu)
{
    return mu.empty() ? lambda.to_string() : lambda.to_string() + "/" + mu.to_string();
}

} // namespace hooklab
