#include <gtest/gtest.h>

#include <hooklab/partition.hpp>

#include <set>

using namespace hooklab;

TEST(Parse, ReadsCommaSeparatedParts)
{
    EXPECT_EQ(parse_partition("5,2,2,1"), (Partition{5, 2, 2, 1}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(parse_partition("(3, 1)"), (Partition{3, 1}));
    EXPECT_EQ(parse_partition("[4]"), Partition{4});
}

TEST(Parse, RejectsBadInput)
{
    EXPECT_THROW(parse_partition("2,3"), not_a_partition);
    EXPECT_THROW(parse_partition("2,0,1"), not_a_partition);
    EXPECT_THROW(parse_partition("3,-1"), not_a_partition);
    EXPECT_THROW(parse_partition("3,x"), parse_error);
    EXPECT_THROW(parse_partition("3,,1"), parse_error);
    EXPECT_THROW(parse_partition("1,1,1", 2), parse_error);
}

TEST(Parse, SkewShape)
{
    auto s = parse_skew_shape("5,4,3,3,1/2,1,1");
    EXPECT_EQ(s.outer, (Partition{5, 4, 3, 3, 1}));
    EXPECT_EQ(s.inner, (Partition{2, 1, 1}));
    EXPECT_EQ(parse_skew_shape("2,2").inner, Partition{});
    EXPECT_THROW(parse_skew_shape("3/2/1"), parse_error);
}

TEST(Partition, TrailingZerosAreIgnored)
{
    EXPECT_EQ(Partition({5, 2, 2, 1, 0, 0}), (Partition{5, 2, 2, 1}));
    Partition p{3, 1};
    EXPECT_EQ(p.part(1), 3);
    EXPECT_EQ(p.part(3), 0);
    EXPECT_EQ(p.size(), 4);
}

TEST(Conjugate, Examples)
{
    EXPECT_EQ(conjugate({5, 2, 2, 1}), (Partition{4, 3, 1, 1, 1}));
    EXPECT_EQ(conjugate({}), Partition{});
    Partition p{7, 6, 6, 5, 5, 3, 1};
    EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Conjugate, DualityInBox)
{
    for (const auto& lam : partitions_in_box(6, 6)) {
        const auto t = conjugate(lam);
        for (int i = 1; i <= 8; ++i)
            for (int j = 1; j <= 8; ++j)
                ASSERT_EQ(t.part(i) >= j, lam.part(j) >= i) << lam.to_string();
        ASSERT_EQ(conjugate(t), lam);
    }
}

TEST(Contains, Basics)
{
    EXPECT_TRUE(contains({3, 2}, {1}));
    EXPECT_FALSE(contains({2, 1}, {3}));
    EXPECT_TRUE(contains({4, 2}, {4, 2}));
    EXPECT_TRUE(contains({1}, {}));
}

TEST(SkewCells, WorkedExample)
{
    auto d = skew_cells({4, 2, 1, 1}, {2, 1, 1});
    EXPECT_EQ(d, (Diagram{{1, 3}, {1, 4}, {2, 2}, {4, 1}}));
    EXPECT_TRUE(skew_cells({3, 2}, {3, 2}).empty());
    EXPECT_EQ(skew_cells({3, 2}, {}), young_diagram({3, 2}));
    EXPECT_THROW(skew_cells({2}, {3}), not_contained);
}

TEST(SkewCells, SizeIsDifferenceOfSizes)
{
    for (const auto& lam : partitions_in_box(4, 4))
        for (const auto& mu : subpartitions(lam)) {
            auto d = skew_cells(lam, mu);
            ASSERT_EQ(static_cast<int>(d.size()), lam.size() - mu.size());
            for (Box c : d)
                ASSERT_TRUE(in_shape(lam, c) && !in_shape(mu, c));
        }
}

TEST(Hooks, Examples)
{
    Partition lam{5, 4, 3, 3, 1};
    EXPECT_EQ(hook_cells(lam, {3, 2}), (Diagram{{3, 2}, {3, 3}, {4, 2}}));
    EXPECT_EQ(hook_length(lam, {3, 2}), 3);
    EXPECT_EQ(hook_length(lam, {2, 2}), 5);
    EXPECT_EQ(hook_length(lam, {1, 3}), 6);
    EXPECT_EQ(hook_length({3, 2}, {1, 1}), 4);
    EXPECT_EQ(hook_cells(lam, {5, 1}), (Diagram{{5, 1}}));
    EXPECT_THROW(hook_cells(lam, {5, 2}), box_outside_shape);
}

TEST(Hooks, LengthFromConjugate)
{
    for (const auto& lam : partitions_in_box(5, 5)) {
        const auto t = conjugate(lam);
        for (Box c : young_diagram(lam))
            ASSERT_EQ(hook_length(lam, c), lam.part(c.row) - c.col + t.part(c.col) - c.row + 1);
    }
}

TEST(Delta, Membership)
{
    Partition p{5, 2, 2, 1};
    EXPECT_TRUE(delta_contains(p, 4));
    EXPECT_FALSE(delta_contains(p, -2));
    EXPECT_TRUE(delta_contains(p, -5));
    EXPECT_TRUE(delta_contains({}, -1));
    EXPECT_FALSE(delta_contains({}, 0));
    for (int d : {4, 0, -1, -3, -5, -6, -7, -20})
        EXPECT_TRUE(delta_contains(p, d)) << d;
    for (int d : {5, 3, 2, 1, -2, -4})
        EXPECT_FALSE(delta_contains(p, d)) << d;
}

TEST(Delta, ComplementUnderConjugation)
{
    for (const auto& lam : partitions_in_box(6, 6)) {
        const auto t = conjugate(lam);
        for (int p = -10; p <= 10; ++p)
            ASSERT_NE(delta_contains(lam, p), delta_contains(t, -1 - p)) << lam.to_string() << " " << p;
    }
}

TEST(ExtensibleRows, Examples)
{
    EXPECT_EQ(er_set({5, 2, 2, 1}), (std::vector<int>{1, 2, 4, 5}));
    EXPECT_EQ(er_set({}), (std::vector<int>{1}));
    EXPECT_EQ(er_set({3, 3, 3}), (std::vector<int>{1, 4}));
}

TEST(AddCell, Examples)
{
    EXPECT_EQ(add_cell({5, 2, 2, 1}, 2), (Partition{5, 3, 2, 1}));
    EXPECT_EQ(add_cell({5, 2, 2, 1}, 5), (Partition{5, 2, 2, 1, 1}));
    EXPECT_THROW(add_cell({5, 2, 2, 1}, 3), not_extensible);
    EXPECT_THROW(add_cell({5, 2, 2, 1}, 6), not_extensible);
}

TEST(AddCell, IncrementsOneEntry)
{
    for (const auto& mu : partitions_in_box(4, 4))
        for (int k : er_set(mu)) {
            auto nu = add_cell(mu, k);
            for (int i = 1; i <= 6; ++i)
                ASSERT_EQ(nu.part(i), mu.part(i) + (i == k));
        }
}

TEST(CoverExtensions, Examples)
{
    EXPECT_EQ(cover_extensions({1}, {3, 2}), (std::vector<Partition>{{2}, {1, 1}}));
    EXPECT_TRUE(cover_extensions({3, 2}, {3, 2}).empty());
    EXPECT_EQ(cover_extensions({}, {1}), (std::vector<Partition>{{1}}));
    EXPECT_THROW(cover_extensions({3}, {2, 2}), not_contained);
}

TEST(CoverExtensions, MatchesBruteForce)
{
    for (const auto& lam : partitions_in_box(4, 4))
        for (const auto& mu : subpartitions(lam)) {
            std::set<Partition> expected;
            for (const auto& nu : subpartitions(lam))
                if (nu.size() == mu.size() + 1 && contains(nu, mu))
                    expected.insert(nu);
            auto got = cover_extensions(mu, lam);
            ASSERT_EQ(std::set<Partition>(got.begin(), got.end()), expected);
        }
}

TEST(Enumeration, Counts)
{
    EXPECT_EQ(partitions_in_box(3, 3).size(), 20u);
    EXPECT_EQ(partitions_in_box(5, 5).size(), 252u);
    EXPECT_EQ(partitions_of(8).size(), 22u);
    EXPECT_EQ(subpartitions({2, 1}).size(), 5u);
}

TEST(SkewContext, FlaggingExamples)
{
    // b_7 = 7 because lambda_7 - 7 = -6 >= -7 > lambda_8 - 8; from there on
    // b_i = i since mu_i = lambda_{i+1} = 0.
    SkewContext a({7, 6, 6, 5, 5, 3, 1}, {3, 2, 1, 1}, 8);
    EXPECT_EQ(std::vector<int>(a.flags().begin(), a.flags().end()),
              (std::vector<int>{3, 5, 5, 6, 6, 7, 7, 8}));
    EXPECT_EQ(a.b(9), 9);
    SkewContext b({4, 4, 3}, {3, 2, 1}, 4);
    EXPECT_EQ(std::vector<int>(b.flags().begin(), b.flags().end()), (std::vector<int>{2, 3, 3, 4}));
    SkewContext c({}, {}, 1);
    EXPECT_EQ(c.b(1), 1);
    EXPECT_THROW(SkewContext({2, 1}, {1}, 2), cutoff_too_small);
}

TEST(SkewContext, ProfileInvariants)
{
    for (const auto& lam : partitions_in_box(5, 5))
        for (const auto& mu : partitions_in_box(5, 5)) {
            const int n = default_cutoff(lam, mu);
            SkewContext ctx(lam, mu, n);
            for (int i = 1; i < n + 3; ++i) {
                ASSERT_GT(ctx.ell(i), ctx.ell(i + 1));
                ASSERT_GT(ctx.m(i), ctx.m(i + 1));
                ASSERT_LE(ctx.b(i), ctx.b(i + 1));
                if (mu.part(i) == 0 && lam.part(i + 1) == 0) {
                    ASSERT_EQ(ctx.b(i), i);
                }
                for (int j = 1; j <= n + 3; ++j)
                    ASSERT_EQ(j <= ctx.b(i), ctx.ell(j) >= ctx.m(i));
            }
        }
}
