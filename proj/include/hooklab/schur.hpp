#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "excitation.hpp"
#include "hpoly.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "partition.hpp"
#include "report.hpp"
#include "tableau.hpp"

namespace hooklab {

// ---------------------------------------------------------------------------
// Three routes to s_lambda[mu]
// ---------------------------------------------------------------------------

/// Sum over E(lambda/mu) of prod (x_i + y_j); zero unless mu is inside lambda.
inline MPoly s_poly_via_excitations(const Partition& lambda, const Partition& mu)
{
    MPoly total;
    for (const Diagram& e : enumerate_excitations(lambda, mu))
        total += excitation_weight(e);
    return total;
}

/// Sum over the flagged tableaux F(lambda/mu) of their weights.
inline MPoly s_poly_via_fssyt(const Partition& lambda, const Partition& mu)
{
    if (!contains(lambda, mu))
        return MPoly{};
    MPoly total;
    for (const Tableau& t : enumerate_fssyt(mu, induced_flagging(lambda, mu)))
        total += tableau_weight(t);
    return total;
}

/// det(h(mu_i - i + j, b_i, 1 - j))_{i,j in [n]} with b induced by lambda/mu.
inline MPoly s_poly_via_det(const Partition& lambda, const Partition& mu, int n)
{
    if (n < mu.length())
        throw cutoff_too_small("determinant size " + std::to_string(n) + " is below len(mu)");
    auto m = SquareMatrix<MPoly>::build(n, [&](int i, int j) {
        return h_poly(mu.part(i) - i + j, induced_flag(lambda, mu, i), 1 - j);
    });
    return det(m);
}

/// Memo of s_lambda[nu] by the excitation route, safe to share between
/// threads.
class SchurCache {
public:
    MPoly get(const Partition& lambda, const Partition& nu)
    {
        auto key = std::make_pair(lambda, nu);
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;
        }
        MPoly s = s_poly_via_excitations(lambda, nu);
        std::lock_guard lock(mutex_);
        return memo_.emplace(std::move(key), std::move(s)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<Partition, Partition>, MPoly> memo_;
};

// ---------------------------------------------------------------------------
// Generalized flagged Jacobi-Trudi
// ---------------------------------------------------------------------------

template <class R>
using UTable = std::function<R(int, int)>;

/// h_{b;q}[d] = sum over weakly increasing (i_1..i_q) in [b]^q of
/// prod_j u(i_j, j - d); 0 for q < 0 and 1 for q = 0.
template <class R>
R h_general(int b, int q, int d, const UTable<R>& u)
{
    if (q < 0)
        return R(0);
    if (q == 0)
        return R(1);
    if (b <= 0)
        return R(0);
    std::vector<R> prev(static_cast<std::size_t>(b) + 1, R(1));
    for (int j = 1; j <= q; ++j) {
        std::vector<R> cur(static_cast<std::size_t>(b) + 1, R(0));
        for (int v = 1; v <= b; ++v)
            cur[static_cast<std::size_t>(v)] =
                cur[static_cast<std::size_t>(v - 1)] + prev[static_cast<std::size_t>(v)] * u(v, j - d);
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(b)];
}

/// Sum over FSSYT(mu, b) of prod u(T(i,j), j - i).
template <class R>
R jt_general_sum(const Partition& mu, const Flagging& b, const UTable<R>& u)
{
    R total(0);
    for (const Tableau& t : enumerate_fssyt(mu, b)) {
        R w(1);
        for (Box c : t.cells())
            w = w * u(t.at(c), c.content());
        total = total + w;
    }
    return total;
}

/// det(h_{b_i; mu_i - i + j}[j])_{i,j in [n]}.
template <class R>
R jt_general_det(const Partition& mu, const Flagging& b, const UTable<R>& u, int n)
{
    if (n < mu.length())
        throw cutoff_too_small("determinant size " + std::to_string(n) + " is below len(mu)");
    auto m = SquareMatrix<R>::build(
        n, [&](int i, int j) { return h_general<R>(b(i), mu.part(i) - i + j, j, u); });
    if constexpr (std::is_same_v<R, MPoly>)
        return det_laplace(m);
    else
        return det(m);
}

/// u(i, j) = x_i + y_{i+j}, which turns jt_general_* into the flagged
/// Jacobi-Trudi identity for the weights of s_lambda[mu].
inline UTable<MPoly> factorial_u()
{
    return [](int i, int j) { return MPoly::x(i) + MPoly::y(i + j); };
}

// ---------------------------------------------------------------------------
// Recursion over the covers of mu inside lambda
// ---------------------------------------------------------------------------

inline int konvalinka_cutoff(const Partition& lambda, const Partition& mu)
{
    return std::max({lambda.length(), mu.length(), lambda.part(1), mu.part(1)}) + 1;
}

/// sum over k >= 1 with lambda_k - k not in Delta(mu) of x_k. Only
/// k <= max(len lambda, len mu) can contribute.
inline MPoly konvalinka_x_sum(const Partition& lambda, const Partition& mu)
{
    MPoly s;
    const int n = std::max(lambda.length(), mu.length());
    for (int k = 1; k <= n; ++k)
        if (!delta_contains(mu, lambda.part(k) - k))
            s += MPoly::x(k);
    return s;
}

/// sum over k >= 1 with lambda^t_k - k not in Delta(mu^t) of y_k.
inline MPoly konvalinka_y_sum(const Partition& lambda, const Partition& mu)
{
    const Partition lt = conjugate(lambda);
    const Partition mt = conjugate(mu);
    MPoly s;
    const int n = std::max(lt.length(), mt.length());
    for (int k = 1; k <= n; ++k)
        if (!delta_contains(mt, lt.part(k) - k))
            s += MPoly::y(k);
    return s;
}

/// sum over i in [n] with m_i not in Delta(lambda) of y_{m_i + 1 + b_i}.
inline MPoly konvalinka_variant_y_sum(const SkewContext& ctx)
{
    MPoly s;
    for (int i = 1; i <= ctx.n(); ++i)
        if (!delta_contains(ctx.lambda(), ctx.m(i)))
            s += MPoly::y(ctx.m(i) + 1 + ctx.b(i));
    return s;
}

inline MPoly cover_sum(const Partition& lambda, const Partition& mu, SchurCache* cache)
{
    MPoly rhs;
    for (const Partition& nu : cover_extensions(mu, lambda))
        rhs += cache ? cache->get(lambda, nu) : s_poly_via_excitations(lambda, nu);
    return rhs;
}

inline Report konvalinka_check(const Partition& lambda, const Partition& mu,
                               SchurCache* cache = nullptr)
{
    Report report("konvalinka");
    const std::string key = shape_key(lambda, mu);
    if (!contains(lambda, mu))
        throw not_contained(mu.to_string() + " is not contained in " + lambda.to_string());
    MPoly s = cache ? cache->get(lambda, mu) : s_poly_via_excitations(lambda, mu);
    MPoly lhs = (konvalinka_x_sum(lambda, mu) + konvalinka_y_sum(lambda, mu)) * s;
    MPoly rhs = cover_sum(lambda, mu, cache);
    report.check(lhs == rhs, key, "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string());
    return report;
}

inline Report konvalinka_variant_check(const Partition& lambda, const Partition& mu, int n,
                                       SchurCache* cache = nullptr)
{
    Report report("konvalinka-variant");
    const std::string key = shape_key(lambda, mu);
    if (!contains(lambda, mu))
        throw not_contained(mu.to_string() + " is not contained in " + lambda.to_string());
    SkewContext ctx(lambda, mu, n);

    MPoly x_sum;
    for (int k = 1; k <= n; ++k)
        if (!delta_contains(mu, ctx.ell(k)))
            x_sum += MPoly::x(k);
    MPoly y_sum = konvalinka_variant_y_sum(ctx);
    MPoly y_classic = konvalinka_y_sum(lambda, mu);
    report.check(y_sum == y_classic, key + " y-sums",
                 y_sum.to_string() + " != " + y_classic.to_string());

    MPoly s = cache ? cache->get(lambda, mu) : s_poly_via_excitations(lambda, mu);
    MPoly lhs = (x_sum + y_sum) * s;
    MPoly rhs = cover_sum(lambda, mu, cache);
    report.check(lhs == rhs, key, "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string());
    return report;
}

} // namespace hooklab
