#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mpoly.hpp"
#include "rational.hpp"

namespace hooklab {

/// Square matrix over a commutative ring, 1-based accessors.
template <class R>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, const R& fill = R(0))
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill)
    {}

    /// Builds the matrix (f(i,j))_{i,j in [n]}.
    template <class F>
    static SquareMatrix build(int n, F&& f)
    {
        SquareMatrix m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                m(i, j) = f(i, j);
        return m;
    }

    int size() const noexcept { return n_; }

    R& operator()(int i, int j) { return a_[index(i, j)]; }
    const R& operator()(int i, int j) const { return a_[index(i, j)]; }

    SquareMatrix transposed() const
    {
        return build(n_, [&](int i, int j) { return (*this)(j, i); });
    }

    /// Removes row r and column c.
    SquareMatrix minor(int r, int c) const
    {
        SquareMatrix m(n_ - 1);
        for (int i = 1, ii = 1; i <= n_; ++i) {
            if (i == r)
                continue;
            for (int j = 1, jj = 1; j <= n_; ++j) {
                if (j == c)
                    continue;
                m(ii, jj++) = (*this)(i, j);
            }
            ++ii;
        }
        return m;
    }

    /// Leading k x k block.
    SquareMatrix leading(int k) const
    {
        return SquareMatrix::build(k, [&](int i, int j) { return (*this)(i, j); });
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<R> a_;
};

/// Cofactor expansion along rows, memoized over the set of columns still in
/// use. Needs only ring operations; n * 2^n products.
template <class R>
R det_laplace(const SquareMatrix<R>& m)
{
    const int n = m.size();
    if (n == 0)
        return R(1);
    if (n > 20)
        throw dimension_mismatch("cofactor expansion limited to n <= 20");
    const std::uint32_t full = (1u << n) - 1;
    // memo[mask] = det of the last popcount(mask) rows restricted to mask.
    std::vector<R> memo(static_cast<std::size_t>(full) + 1, R(0));
    std::vector<bool> zero(memo.size(), true);
    memo[0] = R(1);
    zero[0] = false;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int k = std::popcount(mask);
        const int row = n - k + 1;
        R acc(0);
        bool any = false;
        int below = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c)))
                continue;
            const std::uint32_t rest = mask & ~(1u << c);
            const R& entry = m(row, c + 1);
            if (!zero[rest] && !(entry == R(0))) {
                R term = entry * memo[rest];
                if (below % 2)
                    acc -= term;
                else
                    acc += term;
                any = true;
            }
            ++below;
        }
        if (any && !(acc == R(0))) {
            memo[mask] = std::move(acc);
            zero[mask] = false;
        }
    }
    return memo[full];
}

/// Fraction-free elimination (Bareiss) with row pivoting.
inline Rational det_bareiss(SquareMatrix<Rational> m)
{
    const int n = m.size();
    if (n == 0)
        return 1;
    Rational prev = 1;
    int sign = 1;
    for (int k = 1; k < n; ++k) {
        if (m(k, k) == 0) {
            int p = k + 1;
            while (p <= n && m(p, k) == 0)
                ++p;
            if (p > n)
                return 0;
            for (int j = 1; j <= n; ++j)
                std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n, n);
}

inline Rational det(const SquareMatrix<Rational>& m) { return det_bareiss(m); }
inline MPoly det(const SquareMatrix<MPoly>& m) { return det_laplace(m); }

/// Replaces the rows (by_row) or columns of P listed in K by those of Q.
template <class R>
SquareMatrix<R> replace_lines(const SquareMatrix<R>& p, const SquareMatrix<R>& q,
                              const std::vector<int>& k, bool by_row)
{
    if (p.size() != q.size())
        throw dimension_mismatch("replace_row/col needs matrices of equal size");
    std::vector<bool> in(static_cast<std::size_t>(p.size()) + 1, false);
    for (int v : k) {
        if (v < 1 || v > p.size())
            throw dimension_mismatch("index " + std::to_string(v) + " outside [n]");
        in[static_cast<std::size_t>(v)] = true;
    }
    return SquareMatrix<R>::build(p.size(), [&](int i, int j) {
        return in[static_cast<std::size_t>(by_row ? i : j)] ? q(i, j) : p(i, j);
    });
}

template <class R>
SquareMatrix<R> replace_row(const SquareMatrix<R>& p, const SquareMatrix<R>& q,
                            const std::vector<int>& k)
{
    return replace_lines(p, q, k, true);
}

template <class R>
SquareMatrix<R> replace_col(const SquareMatrix<R>& p, const SquareMatrix<R>& q,
                            const std::vector<int>& k)
{
    return replace_lines(p, q, k, false);
}

} // namespace hooklab
