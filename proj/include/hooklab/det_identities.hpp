#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace hooklab {

inline std::string to_string(const SquareMatrix<Rational>& m)
{
    std::string s = "[";
    for (int i = 1; i <= m.size(); ++i) {
        s += i > 1 ? "; " : "";
        for (int j = 1; j <= m.size(); ++j)
            s += (j > 1 ? " " : "") + to_string(m(i, j));
    }
    return s + "]";
}

inline SquareMatrix<Rational> random_matrix(int n, Rng& rng)
{
    return SquareMatrix<Rational>::build(n, [&](int, int) { return rng.rational(); });
}

/// All subsets of [n] of size r, each sorted, in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int r)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace detail {

// Rectangular n x (n+1) table u_{i,j}, 1-based.
struct UGrid {
    int n;
    std::vector<Rational> v;
    const Rational& operator()(int i, int j) const
    {
        return v[static_cast<std::size_t>((i - 1) * (n + 1) + (j - 1))];
    }
    std::string to_string() const
    {
        std::string s = "u=[";
        for (int i = 1; i <= n; ++i) {
            s += i > 1 ? "; " : "";
            for (int j = 1; j <= n + 1; ++j)
                s += (j > 1 ? " " : "") + hooklab::to_string((*this)(i, j));
        }
        return s + "]";
    }
};

inline std::string vec_string(const std::vector<Rational>& p)
{
    std::string s = "p=[";
    for (std::size_t k = 0; k < p.size(); ++k)
        s += (k ? " " : "") + to_string(p[k]);
    return s + "]";
}

} // namespace detail

/// Runs the determinant identities on `trials` random rational instances of
/// size n each:
///   row-col      sum_k det(P <-row_k Q) = sum_k det(P <-col_k Q)
///   row-col-r    the same over all K of size r, for r = 0..n
///   shift        sum_k det(u_{i, j+[k=i]}) = det(u_{i, j+[n=j]})
///   shift-p-row  sum_k det(u_{i,j+[k=i]} - p_i u_{i,j} [k=i])
///                  = det(u_{i,j+[n=j]}) - (sum p) det(u_{i,j})
///   shift-p-col  the same with p_j in place of p_i
///   last-row     a_{n,l} = 0 for l < n implies det = a_{n,n} det(leading block)
inline Report check_det_identities(int n, int trials, std::uint64_t seed)
{
    Report report("det-identities");
    if (n < 1)
        throw dimension_mismatch("n must be positive");
    using M = SquareMatrix<Rational>;
    for (int t = 0; t < trials; ++t) {
        const std::string tag = "n=" + std::to_string(n) + ",trial=" + std::to_string(t);
        Rng rng = Rng::for_instance(seed, "det:" + tag);
        const M p = random_matrix(n, rng);
        const M q = random_matrix(n, rng);

        {
            Rational lhs = 0, rhs = 0;
            for (int k = 1; k <= n; ++k) {
                lhs += det(replace_row(p, q, {k}));
                rhs += det(replace_col(p, q, {k}));
            }
            report.check(lhs == rhs, "row-col " + tag,
                         "P=" + to_string(p) + " Q=" + to_string(q));
        }
        for (int r = 0; r <= n; ++r) {
            Rational lhs = 0, rhs = 0;
            for (const auto& k : subsets_of_size(n, r)) {
                lhs += det(replace_row(p, q, k));
                rhs += det(replace_col(p, q, k));
            }
            report.check(lhs == rhs, "row-col-r r=" + std::to_string(r) + " " + tag,
                         "P=" + to_string(p) + " Q=" + to_string(q));
        }

        detail::UGrid u{n, {}};
        for (int k = 0; k < n * (n + 1); ++k)
            u.v.push_back(rng.rational());
        std::vector<Rational> pv;
        Rational psum = 0;
        for (int k = 0; k < n; ++k) {
            pv.push_back(rng.rational());
            psum += pv.back();
        }
        const Rational d_last = det(M::build(n, [&](int i, int j) { return u(i, j + (j == n)); }));
        const Rational d_u = det(M::build(n, [&](int i, int j) { return u(i, j); }));
        Rational shift = 0, by_row = 0, by_col = 0;
        for (int k = 1; k <= n; ++k) {
            shift += det(M::build(n, [&](int i, int j) { return u(i, j + (k == i)); }));
            by_row += det(M::build(n, [&](int i, int j) {
                Rational e = u(i, j + (k == i));
                if (k == i)
                    e -= pv[static_cast<std::size_t>(i - 1)] * u(i, j);
                return e;
            }));
            by_col += det(M::build(n, [&](int i, int j) {
                Rational e = u(i, j + (k == i));
                if (k == i)
                    e -= pv[static_cast<std::size_t>(j - 1)] * u(i, j);
                return e;
            }));
        }
        report.check(shift == d_last, "shift " + tag, u.to_string());
        report.check(by_row == d_last - psum * d_u, "shift-p-row " + tag,
                     u.to_string() + " " + detail::vec_string(pv));
        report.check(by_col == d_last - psum * d_u, "shift-p-col " + tag,
                     u.to_string() + " " + detail::vec_string(pv));

        M a = p;
        for (int l = 1; l < n; ++l)
            a(n, l) = 0;
        const Rational expected = n == 1 ? a(1, 1) : Rational(a(n, n) * det(a.leading(n - 1)));
        report.check(det(a) == expected, "last-row " + tag, "A=" + to_string(a));
    }
    return report;
}

} // namespace hooklab
