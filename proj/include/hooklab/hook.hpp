#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "excitation.hpp"
#include "mpoly.hpp"
#include "partition.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "tableau.hpp"

namespace hooklab {

/// h_lambda(c; z): sum of z_{j-i} over the hook of c.
inline MPoly algebraic_hook(const Partition& lambda, Box c)
{
    MPoly h;
    for (Box d : hook_cells(lambda, c))
        h += MPoly::z(d.content());
    return h;
}

// ---------------------------------------------------------------------------
// Evaluation points for the z-variables
// ---------------------------------------------------------------------------

/// Values of z_k for k in [lo, hi].
class ZPoint {
public:
    ZPoint(int lo, int hi) : lo_(lo), values_(static_cast<std::size_t>(hi - lo + 1), Rational(1))
    {
        if (hi < lo)
            throw dimension_mismatch("empty z-window");
    }

    static ZPoint ones(int lo, int hi) { return ZPoint(lo, hi); }

    static ZPoint random(int lo, int hi, Rng& rng)
    {
        ZPoint p(lo, hi);
        for (auto& v : p.values_)
            v = rng.rational();
        return p;
    }

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(values_.size()) - 1; }

    const Rational& z(int k) const
    {
        if (k < lo() || k > hi())
            throw unassigned_variable("z" + std::to_string(k) + " outside the window");
        return values_[static_cast<std::size_t>(k - lo_)];
    }

    void set(int k, Rational v)
    {
        z(k);
        values_[static_cast<std::size_t>(k - lo_)] = std::move(v);
    }

    EvalPoint as_eval_point() const
    {
        EvalPoint pt;
        for (int k = lo(); k <= hi(); ++k)
            pt.set({Family::Z, k}, z(k));
        return pt;
    }

    /// "z<k>=<value>" entries joined by commas.
    std::string to_string() const
    {
        std::string s;
        for (int k = lo(); k <= hi(); ++k) {
            if (k > lo())
                s += ",";
            s += "z" + std::to_string(k) + "=" + hooklab::to_string(z(k));
        }
        return s;
    }

private:
    int lo_;
    std::vector<Rational> values_;
};

/// Window [-n, lambda_1] with n the default cutoff; it covers every content
/// of Y(lambda) and the w-weights used below.
inline std::pair<int, int> z_window(const Partition& lambda, const Partition& mu)
{
    return {-default_cutoff(lambda, mu), std::max(lambda.part(1), 0)};
}

// ---------------------------------------------------------------------------
// Both sides of the main identity
// ---------------------------------------------------------------------------

/// 1 / prod_k (z_{c(k)} + ... + z_{c(n)}).
inline Rational z_T_value(const Tableau& t, const ZPoint& pt)
{
    const auto word = content_word(t);
    Rational partial = 0;
    Rational denom = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        partial += pt.z(*it);
        if (partial == 0)
            throw zero_denominator("a partial content sum vanishes");
        denom *= partial;
    }
    return 1 / denom;
}

inline Rational lhs_main(const Partition& lambda, const Partition& mu, const ZPoint& pt)
{
    Rational s = 0;
    for (const Tableau& t : enumerate_syt(lambda, mu))
        s += z_T_value(t, pt);
    return s;
}

/// Value of h_lambda(c; z) for every box of lambda, row-major.
inline std::vector<Rational> hook_values(const Partition& lambda, const ZPoint& pt)
{
    std::vector<Rational> out;
    for (Box c : young_diagram(lambda)) {
        Rational h = 0;
        for (Box d : hook_cells(lambda, c))
            h += pt.z(d.content());
        if (h == 0)
            throw zero_denominator("an algebraic hook length vanishes");
        out.push_back(h);
    }
    return out;
}

namespace detail {

inline Rational excitation_sum(const Partition& lambda, const std::vector<Diagram>& es,
                               const std::vector<Rational>& hooks)
{
    const Diagram all = young_diagram(lambda);
    Rational total = 0;
    for (const Diagram& e : es) {
        Rational denom = 1;
        std::size_t k = 0;
        for (Box c : all) {
            if (!e.contains(c))
                denom *= hooks[k];
            ++k;
        }
        total += 1 / denom;
    }
    return total;
}

} // namespace detail

inline Rational rhs_main(const Partition& lambda, const Partition& mu, const ZPoint& pt)
{
    return detail::excitation_sum(lambda, enumerate_excitations(lambda, mu), hook_values(lambda, pt));
}

// ---------------------------------------------------------------------------
// Counting formulas
// ---------------------------------------------------------------------------

inline Rational naruse_count(const Partition& lambda, const Partition& mu)
{
    if (!contains(lambda, mu))
        return 0;
    const int n = lambda.size() - mu.size();
    const auto es = enumerate_excitations(lambda, mu);
    std::vector<Rational> hooks;
    for (Box c : young_diagram(lambda))
        hooks.emplace_back(hook_length(lambda, c));
    return Rational(factorial(n)) * detail::excitation_sum(lambda, es, hooks);
}

inline Rational hlf_count(const Partition& lambda)
{
    Integer prod = 1;
    for (Box c : young_diagram(lambda))
        prod *= hook_length(lambda, c);
    Rational r(factorial(lambda.size()), prod);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Identity checks at sampled points
// ---------------------------------------------------------------------------

struct SamplingOptions {
    int trials = 3;
    std::uint64_t seed = 0;
    int max_attempts = 100;
};

/// Runs check(pt) at `trials` random points for one instance. A point whose
/// evaluation hits a vanishing denominator is redrawn, up to max_attempts
/// draws per trial; running out is reported separately from a violation.
template <class Check>
InstanceResult sample_instance(const std::string& identity, const std::string& instance,
                               std::pair<int, int> window, const SamplingOptions& opt,
                               Check&& check)
{
    InstanceResult r{identity, instance, Status::pass, {}, {}, 0};
    Rng rng = Rng::for_instance(opt.seed, identity + ":" + instance);
    const auto [lo, hi] = window;
    for (int trial = 0; trial < opt.trials; ++trial) {
        bool done = false;
        for (int attempt = 0; attempt < opt.max_attempts && !done; ++attempt) {
            ZPoint pt = ZPoint::random(lo, hi, rng);
            try {
                std::string witness = check(pt);
                r.points.push_back(pt.to_string());
                if (!witness.empty()) {
                    r.status = Status::fail;
                    r.witness = witness + " at " + pt.to_string();
                    return r;
                }
                done = true;
            } catch (const zero_denominator&) {
                ++r.resamples;
            }
        }
        if (!done) {
            r.status = Status::sampling_exhausted;
            r.witness = "no admissible point after " + std::to_string(opt.max_attempts) + " draws";
            return r;
        }
    }
    return r;
}

inline InstanceResult verify_main(const Partition& lambda, const Partition& mu,
                                  const SamplingOptions& opt)
{
    if (!contains(lambda, mu))
        throw not_contained(mu.to_string() + " is not contained in " + lambda.to_string());
    return sample_instance("main", shape_key(lambda, mu), z_window(lambda, mu), opt,
                           [&](const ZPoint& pt) -> std::string {
                               Rational l = lhs_main(lambda, mu, pt);
                               Rational r = rhs_main(lambda, mu, pt);
                               if (l == r)
                                   return {};
                               return "lhs=" + to_string(l) + " rhs=" + to_string(r);
                           });
}

inline Rational skew_content_sum(const Partition& lambda, const Partition& mu, const ZPoint& pt)
{
    Rational s = 0;
    for (Box c : skew_cells(lambda, mu))
        s += pt.z(c.content());
    return s;
}

/// Checks both the summed recursion for sum_T z_T and the single-tableau
/// form z_T = z_{T'} / sum z over Y(lambda/mu) for every standard T.
inline std::string z_recursion_witness(const Partition& lambda, const Partition& mu,
                                       const ZPoint& pt)
{
    if (lambda == mu)
        throw not_contained("the recursion needs lambda != mu");
    const Rational total = skew_content_sum(lambda, mu, pt);
    if (total == 0)
        throw zero_denominator("content sum of the skew shape vanishes");
    for (const Tableau& t : enumerate_syt(lambda, mu)) {
        Tableau rest = remove_entry_one(t);
        if (z_T_value(t, pt) != z_T_value(rest, pt) / total)
            return "single-tableau form fails for reading word of size " + std::to_string(t.size());
    }
    Rational rhs = 0;
    for (const Partition& nu : cover_extensions(mu, lambda))
        rhs += lhs_main(lambda, nu, pt);
    rhs /= total;
    Rational lhs = lhs_main(lambda, mu, pt);
    if (lhs != rhs)
        return "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
    return {};
}

inline std::string rhs_recursion_witness(const Partition& lambda, const Partition& mu,
                                         const ZPoint& pt)
{
    if (lambda == mu)
        throw not_contained("the recursion needs lambda != mu");
    const Rational total = skew_content_sum(lambda, mu, pt);
    if (total == 0)
        throw zero_denominator("content sum of the skew shape vanishes");
    const auto hooks = hook_values(lambda, pt);
    Rational rhs = 0;
    for (const Partition& nu : cover_extensions(mu, lambda))
        rhs += detail::excitation_sum(lambda, enumerate_excitations(lambda, nu), hooks);
    rhs /= total;
    Rational lhs = detail::excitation_sum(lambda, enumerate_excitations(lambda, mu), hooks);
    if (lhs != rhs)
        return "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
    return {};
}

// ---------------------------------------------------------------------------
// w-weights
// ---------------------------------------------------------------------------

/// w_i = z_{-n} + ... + z_i, so w_i = 0 for i < -n.
class WWeights {
public:
    WWeights(const ZPoint& pt, int n) : n_(n), pt_(pt)
    {
        if (pt.lo() > -n)
            throw dimension_mismatch("z-window must start at -n or lower");
    }

    Rational w(int i) const
    {
        Rational s = 0;
        for (int k = -n_; k <= i; ++k)
            s += pt_.z(k);
        return s;
    }

private:
    int n_;
    const ZPoint& pt_;
};

inline std::string w_identities_witness(const Partition& lambda, const Partition& mu, int n,
                                        const ZPoint& pt)
{
    SkewContext ctx(lambda, mu, n);
    if (!contains(lambda, mu))
        throw not_contained(mu.to_string() + " is not contained in " + lambda.to_string());
    WWeights w(pt, n);

    for (Box c : young_diagram(lambda)) {
        Rational hook = 0;
        for (Box d : hook_cells(lambda, c))
            hook += pt.z(d.content());
        if (w.w(ctx.ell(c.row)) - w.w(-ctx.ell_t(c.col) - 1) != hook)
            return "w-hook fails at box (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    }
    for (int i = 1; i <= n; ++i) {
        Rational row = 0;
        for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j)
            row += pt.z(j - i);
        if (w.w(ctx.ell(i)) - w.w(ctx.m(i)) != row)
            return "w-row fails at row " + std::to_string(i);
    }
    Rational lhs = 0;
    for (int k = 1; k <= n; ++k)
        if (!delta_contains(mu, ctx.ell(k)))
            lhs += w.w(ctx.ell(k));
    for (int i = 1; i <= n; ++i)
        if (!delta_contains(lambda, ctx.m(i)))
            lhs -= w.w(ctx.m(i));
    Rational total = 0;
    for (Box c : skew_cells(lambda, mu))
        total += pt.z(c.content());
    if (lhs != total)
        return "w-total: " + to_string(lhs) + " != " + to_string(total);
    return {};
}

} // namespace hooklab
