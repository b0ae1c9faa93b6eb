#pragma once

#include <algorithm>
#include <set>
#include <string>

#include "partition.hpp"
#include "report.hpp"

namespace hooklab {

namespace detail {

inline std::string pair_key(const Partition& lambda, const Partition& mu)
{
    return lambda.to_string() + "/" + mu.to_string();
}

} // namespace detail

/// Delta-set facts that only involve one partition: conjugate duality and the
/// complementarity of Delta(lambda) with -1 - Delta(lambda^t), checked on
/// the window [-w, w] with w large enough to reach the tails.
inline Report check_delta_properties(const Partition& lambda)
{
    Report report("delta-properties");
    const Partition t = conjugate(lambda);
    const int w = lambda.part(1) + lambda.length() + 2;
    const std::string key = lambda.to_string();

    std::string problem;
    for (int i = 1; i <= w && problem.empty(); ++i)
        for (int j = 1; j <= w; ++j)
            if ((t.part(i) >= j) != (lambda.part(j) >= i)) {
                problem = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                break;
            }
    report.check(problem.empty(), key + " conjugate-duality", problem);

    problem.clear();
    for (int p = -w; p <= w; ++p)
        if (delta_contains(lambda, p) == delta_contains(t, -1 - p)) {
            problem = "p=" + std::to_string(p);
            break;
        }
    report.check(problem.empty(), key + " delta-complement", problem);
    return report;
}

/// Profile and flagging properties for a pair (lambda, mu) at cutoff n. The
/// pair need not be nested.
inline Report check_profile_properties(const Partition& lambda, const Partition& mu, int n)
{
    Report report("profile-properties");
    const SkewContext ctx(lambda, mu, n);
    const std::string key = detail::pair_key(lambda, mu);
    auto num = [](int v) { return std::to_string(v); };

    std::string problem;
    for (int i = 1; i <= n + 2 && problem.empty(); ++i)
        if (ctx.ell(i) <= ctx.ell(i + 1) || ctx.m(i) <= ctx.m(i + 1))
            problem = "i=" + num(i);
    report.check(problem.empty(), key + " strictly-decreasing", problem);

    problem.clear();
    for (int i = 1; i <= n + 2 && problem.empty(); ++i) {
        if (ctx.b(i) > ctx.b(i + 1))
            problem = "b not weakly increasing at i=" + num(i);
        else if (mu.part(i) == 0 && lambda.part(i + 1) == 0 && ctx.b(i) != i)
            problem = "b_i != i at i=" + num(i);
        for (int j = 1; j <= n + 2 && problem.empty(); ++j)
            if ((j <= ctx.b(i)) != (ctx.ell(j) >= ctx.m(i)))
                problem = "characterization fails at i=" + num(i) + " j=" + num(j);
    }
    report.check(problem.empty(), key + " flagging", problem);

    problem.clear();
    for (int j = 2; j <= n && problem.empty(); ++j)
        if (mu.part(j - 1) == mu.part(j) &&
            ctx.b(j) != ctx.b(j - 1) + (delta_contains(lambda, ctx.m(j)) ? 1 : 0))
            problem = "j=" + num(j);
    report.check(problem.empty(), key + " flag-step", problem);

    problem.clear();
    for (int k : er_set(mu)) {
        if (k > n - 1)
            continue;
        const SkewContext star(lambda, add_cell(mu, k), n);
        const int drop = delta_contains(lambda, ctx.m(k)) ? 1 : 0;
        for (int i = 1; i <= n && problem.empty(); ++i)
            if (star.b(i) != ctx.b(i) - (i == k ? drop : 0))
                problem = "k=" + num(k) + " i=" + num(i);
    }
    report.check(problem.empty(), key + " flag-shift", problem);

    // Only i <= n can have m_i outside Delta(lambda): beyond the cutoff both
    // sequences agree with -i.
    problem.clear();
    std::set<int> image;
    int domain = 0;
    for (int i = 1; i <= n && problem.empty(); ++i) {
        if (delta_contains(lambda, ctx.m(i)))
            continue;
        ++domain;
        const int p = ctx.m(i) + 1 + ctx.b(i);
        if (p < 1)
            problem = "index below 1 at i=" + num(i);
        else if (ctx.ell_t(p) != -1 - ctx.m(i))
            problem = "conjugate profile mismatch at i=" + num(i);
        else if (delta_contains(ctx.mu_t(), ctx.ell_t(p)))
            problem = "image lands in Delta(mu^t) at i=" + num(i);
        else
            image.insert(p);
    }
    int codomain = 0;
    const int p_max = std::max(lambda.part(1), mu.part(1)) + 1;
    for (int p = 1; p <= p_max; ++p)
        codomain += !delta_contains(ctx.mu_t(), ctx.ell_t(p));
    if (problem.empty() && static_cast<int>(image.size()) != domain)
        problem = "map is not injective";
    if (problem.empty() && domain != codomain)
        problem = "domain has " + num(domain) + " elements, codomain " + num(codomain);
    report.check(problem.empty(), key + " index-bijection", problem);
    return report;
}

} // namespace hooklab
