#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hooklab;

namespace {

Rational zsum(const ZPoint& pt, std::initializer_list<int> ks)
{
    Rational s = 0;
    for (int k : ks)
        s += pt.z(k);
    return s;
}

} // namespace

TEST(AlgebraicHook, ThreeTwo)
{
    const Partition lam{3, 2};
    auto z = [](int k) { return MPoly::z(k); };
    EXPECT_EQ(algebraic_hook(lam, {1, 1}), z(0) + z(1) + z(2) + z(-1));
    EXPECT_EQ(algebraic_hook(lam, {2, 1}), z(-1) + z(0));
    EXPECT_EQ(algebraic_hook(lam, {1, 2}), z(1) + z(2) + z(0));
    EXPECT_EQ(algebraic_hook(lam, {2, 2}), z(0));
    EXPECT_EQ(algebraic_hook(lam, {1, 3}), z(2));
}

TEST(ZPoint, Window)
{
    ZPoint p(-2, 3);
    EXPECT_EQ(p.z(-2), 1);
    p.set(0, 5);
    EXPECT_EQ(p.z(0), 5);
    EXPECT_THROW(p.z(4), unassigned_variable);
    EXPECT_THROW(ZPoint(2, 1), dimension_mismatch);
    EXPECT_EQ(z_window({3, 2}, {1}), (std::pair<int, int>{-3, 3}));
}

TEST(ZWeight, ClosedFormForFirstTableau)
{
    auto a = Tableau::from_skew_rows({3, 2}, {1}, {{1, 2}, {3, 4}});
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        ZPoint pt = ZPoint::random(-3, 3, rng);
        Rational d = zsum(pt, {1, 2, -1, 0}) * zsum(pt, {2, -1, 0}) * zsum(pt, {-1, 0}) * pt.z(0);
        if (d == 0)
            continue;
        ASSERT_EQ(z_T_value(a, pt), 1 / d);
    }
}

TEST(ZWeight, AllOnesGivesInverseFactorial)
{
    for (const auto& t : enumerate_syt({3, 2}, {1}))
        EXPECT_EQ(z_T_value(t, ZPoint::ones(-3, 3)), make_rational(1, 24));
    ZPoint zero(-1, 1);
    zero.set(0, 0);
    EXPECT_THROW(z_T_value(Tableau::from_rows({{1}}), zero), zero_denominator);
}

TEST(MainIdentity, WorkedExampleAtOnes)
{
    ZPoint ones = ZPoint::ones(-3, 3);
    EXPECT_EQ(lhs_main({3, 2}, {1}, ones), make_rational(5, 24));
    EXPECT_EQ(rhs_main({3, 2}, {1}, ones), make_rational(5, 24));
    EXPECT_EQ(lhs_main({2, 2}, {2, 2}, ones), 1);
    EXPECT_EQ(rhs_main({2, 2}, {2, 2}, ones), 1);
}

TEST(MainIdentity, RandomPoints)
{
    SamplingOptions opt;
    opt.seed = 42;
    for (const auto& [lam, mu] : std::vector<std::pair<Partition, Partition>>{
             {{3, 2}, {1}}, {{2, 2}, {}}, {{4, 3, 1}, {2, 1}}, {{3, 3}, {3, 3}}}) {
        auto r = verify_main(lam, mu, opt);
        EXPECT_EQ(r.status, Status::pass) << r.witness;
        EXPECT_EQ(r.points.size(), 3u);
        EXPECT_EQ(r.instance, shape_key(lam, mu));
    }
    EXPECT_THROW(verify_main({2}, {3}, opt), not_contained);
}

TEST(MainIdentity, ExhaustiveUpToFiveBoxes)
{
    SamplingOptions opt;
    opt.seed = 7;
    opt.trials = 2;
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : subpartitions(lam)) {
                auto r = verify_main(lam, mu, opt);
                ASSERT_EQ(r.status, Status::pass) << r.instance << " " << r.witness;
            }
}

TEST(MainIdentity, SamplingIsDeterministic)
{
    SamplingOptions opt;
    opt.seed = 5;
    auto a = verify_main({3, 2, 1}, {1}, opt);
    auto b = verify_main({3, 2, 1}, {1}, opt);
    EXPECT_EQ(a.points, b.points);
    opt.seed = 6;
    EXPECT_NE(verify_main({3, 2, 1}, {1}, opt).points, a.points);
}

TEST(MainIdentity, ExhaustedSamplingIsNotAViolation)
{
    SamplingOptions opt;
    opt.max_attempts = 3;
    auto r = sample_instance("test", "always-zero", {0, 0}, opt,
                             [](const ZPoint&) -> std::string { throw zero_denominator("x"); });
    EXPECT_EQ(r.status, Status::sampling_exhausted);
    EXPECT_EQ(r.resamples, 3);
}

TEST(Counting, NaruseAndHookLength)
{
    EXPECT_EQ(naruse_count({3, 2}, {1}), 5);
    EXPECT_EQ(naruse_count({2, 2}, {}), 2);
    EXPECT_EQ(naruse_count({4, 4, 3}, {3, 1}),
              static_cast<long>(enumerate_syt({4, 4, 3}, {3, 1}).size()));
    EXPECT_EQ(hlf_count({2, 2}), 2);
    EXPECT_EQ(hlf_count({1}), 1);
    EXPECT_EQ(hlf_count({3, 2}), 5);
    EXPECT_EQ(hlf_count({}), 1);
    EXPECT_EQ(naruse_count({2}, {3}), 0);
}

TEST(Counting, AgreeWithEnumeration)
{
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : partitions_of(n)) {
            ASSERT_EQ(hlf_count(lam), naruse_count(lam, {}));
            ASSERT_EQ(hlf_count(lam), static_cast<long>(enumerate_syt(lam, {}).size()));
            for (const auto& mu : subpartitions(lam)) {
                const Rational c = naruse_count(lam, mu);
                ASSERT_TRUE(is_integer(c));
                ASSERT_EQ(c, static_cast<long>(enumerate_syt(lam, mu).size()));
                const int k = lam.size() - mu.size();
                ASSERT_EQ(c, Rational(factorial(k)) * rhs_main(lam, mu, ZPoint::ones(-n - 1, n)));
            }
        }
}

TEST(Recursions, WorkedExampleFactor)
{
    ZPoint ones = ZPoint::ones(-4, 3);
    EXPECT_EQ(skew_content_sum({3, 3, 2}, {2, 1}, ones), 5);
    Rng rng(1);
    ZPoint pt = ZPoint::random(-4, 3, rng);
    EXPECT_EQ(skew_content_sum({3, 3, 2}, {2, 1}, pt), zsum(pt, {0, 2, 1, -2, -1}));
}

TEST(Recursions, HoldOnSmallShapes)
{
    SamplingOptions opt;
    opt.seed = 11;
    opt.trials = 2;
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : subpartitions(lam)) {
                if (mu == lam)
                    continue;
                auto z = sample_instance("z", shape_key(lam, mu), z_window(lam, mu), opt,
                                         [&](const ZPoint& p) { return z_recursion_witness(lam, mu, p); });
                ASSERT_EQ(z.status, Status::pass) << z.instance << " " << z.witness;
                auto r = sample_instance("rhs", shape_key(lam, mu), z_window(lam, mu), opt,
                                         [&](const ZPoint& p) { return rhs_recursion_witness(lam, mu, p); });
                ASSERT_EQ(r.status, Status::pass) << r.instance << " " << r.witness;
            }
    EXPECT_THROW(z_recursion_witness({2}, {2}, ZPoint::ones(-2, 2)), not_contained);
}

TEST(WWeights, HookAnchor)
{
    const Partition lam{5, 4, 3, 3, 1};
    const int n = default_cutoff(lam, {});
    SkewContext ctx(lam, {}, n);
    ZPoint ones = ZPoint::ones(-n, 5);
    WWeights w(ones, n);
    EXPECT_EQ(w.w(ctx.ell(3)) - w.w(-ctx.ell_t(2) - 1), 3);
    EXPECT_EQ(w.w(-n - 1), 0);
    EXPECT_THROW(WWeights(ZPoint::ones(0, 1), n), dimension_mismatch);
}

TEST(WWeights, IdentitiesAtRandomPoints)
{
    Rng rng(21);
    for (const auto& lam : partitions_in_box(4, 4))
        for (const auto& mu : subpartitions(lam)) {
            const int n = default_cutoff(lam, mu);
            ZPoint pt = ZPoint::random(-n, std::max(lam.part(1), 0), rng);
            ASSERT_EQ(w_identities_witness(lam, mu, n, pt), "") << lam.to_string() << "/" << mu.to_string();
            ASSERT_EQ(w_identities_witness(lam, mu, n, ZPoint::ones(-n, lam.part(1))), "");
        }
}
