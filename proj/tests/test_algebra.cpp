#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hooklab;

namespace {

MPoly random_poly(Rng& rng, int terms)
{
    MPoly p;
    for (int k = 0; k < terms; ++k) {
        MPoly t = rng.rational();
        for (int d = static_cast<int>(rng.uniform(0, 3)); d > 0; --d) {
            switch (rng.uniform(0, 2)) {
            case 0: t *= MPoly::x(static_cast<int>(rng.uniform(1, 3))); break;
            case 1: t *= MPoly::y(static_cast<int>(rng.uniform(1, 3))); break;
            default: t *= MPoly::z(static_cast<int>(rng.uniform(-2, 2))); break;
            }
        }
        p += t;
    }
    return p;
}

EvalPoint random_point(Rng& rng)
{
    EvalPoint pt;
    for (int i = 1; i <= 3; ++i) {
        pt.set({Family::X, i}, rng.rational());
        pt.set({Family::Y, i}, rng.rational());
    }
    for (int k = -2; k <= 2; ++k)
        pt.set({Family::Z, k}, rng.rational());
    return pt;
}

} // namespace

TEST(Rational, Basics)
{
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
    EXPECT_TRUE(is_integer(make_rational(8, 4)));
    EXPECT_EQ(factorial(5), 120);
}

TEST(MPoly, VariablesWithNonpositiveIndexVanish)
{
    EXPECT_TRUE(MPoly::x(0).is_zero());
    EXPECT_TRUE(MPoly::y(-3).is_zero());
    EXPECT_FALSE(MPoly::z(-3).is_zero());
}

TEST(MPoly, ArithmeticAndPrinting)
{
    MPoly a = MPoly::x(1) + MPoly::y(2);
    MPoly sq = a * a;
    EXPECT_EQ(sq, pow(a, 2));
    EXPECT_EQ(sq.term_count(), 3u);
    EXPECT_EQ(sq.degree(), 2u);
    EXPECT_TRUE(sq.is_homogeneous(2));
    EXPECT_EQ((a - a), MPoly{});
    EXPECT_EQ(MPoly(make_rational(1, 2)).to_string(), "1/2");
    EXPECT_EQ((MPoly::x(1) - MPoly(3)).to_string(), "-3 + x1");
    EXPECT_EQ(MPoly{}.to_string(), "0");
    EXPECT_EQ(pow(a, 0), MPoly(1));
}

TEST(MPoly, EvaluationIsARingHomomorphism)
{
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        MPoly p = random_poly(rng, 4);
        MPoly q = random_poly(rng, 4);
        EvalPoint pt = random_point(rng);
        ASSERT_EQ((p + q).eval(pt), p.eval(pt) + q.eval(pt));
        ASSERT_EQ((p * q).eval(pt), p.eval(pt) * q.eval(pt));
        ASSERT_EQ((-p).eval(pt), -p.eval(pt));
        ASSERT_EQ(p * (q + p), p * q + p * p);
    }
}

TEST(MPoly, MissingValueThrows)
{
    EvalPoint pt;
    pt.set({Family::X, 1}, 2);
    EXPECT_EQ(MPoly::x(1).eval(pt), 2);
    EXPECT_THROW(MPoly::y(1).eval(pt), unassigned_variable);
}

TEST(Determinant, MatchesLeibniz)
{
    Rng rng(11);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            auto m = SquareMatrix<Rational>::build(n, [&](int, int) { return rng.rational(); });
            ASSERT_EQ(det(m), oracle::leibniz_det(m));
            ASSERT_EQ(det_laplace(m), det(m));
            ASSERT_EQ(det(m.transposed()), det(m));
        }
}

TEST(Determinant, SingularAndZeroPivot)
{
    auto m = SquareMatrix<Rational>::build(3, [](int i, int j) { return Rational(i * j); });
    EXPECT_EQ(det(m), 0);
    auto p = SquareMatrix<Rational>::build(2, [](int i, int j) { return Rational(i == j ? 0 : 1); });
    EXPECT_EQ(det(p), -1);
}

TEST(Determinant, PolynomialEntries)
{
    Rng rng(3);
    for (int n = 1; n <= 4; ++n) {
        auto m = SquareMatrix<MPoly>::build(n, [&](int, int) { return random_poly(rng, 2); });
        MPoly d = det(m);
        ASSERT_EQ(d, oracle::leibniz_det(m));
        EvalPoint pt = random_point(rng);
        auto mv = SquareMatrix<Rational>::build(n, [&](int i, int j) { return m(i, j).eval(pt); });
        ASSERT_EQ(d.eval(pt), det(mv));
    }
}

TEST(Determinant, MultilinearInRows)
{
    Rng rng(5);
    for (int n = 2; n <= 4; ++n) {
        auto a = SquareMatrix<Rational>::build(n, [&](int, int) { return rng.rational(); });
        auto b = a;
        Rational s = rng.rational();
        for (int j = 1; j <= n; ++j)
            b(1, j) = rng.rational();
        auto c = a;
        for (int j = 1; j <= n; ++j)
            c(1, j) = a(1, j) + s * b(1, j);
        ASSERT_EQ(det(c), det(a) + s * det(b));
    }
}

TEST(Determinant, ReplaceRowsAndColumns)
{
    auto p = SquareMatrix<Rational>::build(3, [](int i, int j) { return Rational(10 * i + j); });
    auto q = SquareMatrix<Rational>::build(3, [](int i, int j) { return Rational(-(10 * i + j)); });
    auto r = replace_row(p, q, {2});
    EXPECT_EQ(r(2, 3), -23);
    EXPECT_EQ(r(1, 3), 13);
    auto c = replace_col(p, q, {1, 3});
    EXPECT_EQ(c(2, 1), -21);
    EXPECT_EQ(c(2, 2), 22);
    EXPECT_THROW(replace_row(p, q, {4}), dimension_mismatch);
    auto small = SquareMatrix<Rational>::build(2, [](int, int) { return Rational(1); });
    EXPECT_THROW(replace_col(p, small, {1}), dimension_mismatch);
}

TEST(Determinant, MinorAndLeadingBlock)
{
    auto p = SquareMatrix<Rational>::build(3, [](int i, int j) { return Rational(10 * i + j); });
    auto m = p.minor(2, 2);
    EXPECT_EQ(m(1, 1), 11);
    EXPECT_EQ(m(2, 2), 33);
    EXPECT_EQ(p.leading(2)(2, 2), 22);
}

TEST(DetIdentities, AllPassForSmallSizes)
{
    for (int n = 1; n <= 4; ++n) {
        auto r = check_det_identities(n, 10, 2024);
        EXPECT_TRUE(r.ok()) << r.first_failure()->instance << ": " << r.first_failure()->witness;
        // row-col, n+1 values of r, shift, shift-p-row, shift-p-col, last-row
        EXPECT_EQ(r.instances().size(), static_cast<std::size_t>(10 * (n + 6)));
    }
}

TEST(DetIdentities, SeedDeterminesTheRun)
{
    auto a = check_det_identities(3, 2, 9);
    auto b = check_det_identities(3, 2, 9);
    ASSERT_EQ(a.instances().size(), b.instances().size());
    for (std::size_t k = 0; k < a.instances().size(); ++k)
        EXPECT_EQ(a.instances()[k].instance, b.instances()[k].instance);
    EXPECT_THROW(check_det_identities(0, 1, 1), dimension_mismatch);
}

TEST(DetIdentities, SubsetsOfSize)
{
    EXPECT_EQ(subsets_of_size(4, 2).size(), 6u);
    EXPECT_EQ(subsets_of_size(3, 0), (std::vector<std::vector<int>>{{}}));
    EXPECT_EQ(subsets_of_size(3, 3), (std::vector<std::vector<int>>{{1, 2, 3}}));
}

TEST(Rng, InstanceStreamsAreReproducible)
{
    Rng a = Rng::for_instance(1, "k");
    Rng b = Rng::for_instance(1, "k");
    Rng c = Rng::for_instance(1, "other");
    EXPECT_EQ(a.next(), b.next());
    EXPECT_NE(a.next(), c.next());
    Rng r(3);
    for (int k = 0; k < 1000; ++k) {
        Rational v = r.rational();
        ASSERT_NE(v, 0);
        ASSERT_LE(abs(v.get_num()), 20);
        ASSERT_LE(v.get_den(), 20);
    }
}
