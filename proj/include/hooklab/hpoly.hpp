#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mpoly.hpp"
#include "report.hpp"

namespace hooklab {

/// h(a,b,c): sum over weakly increasing (i_1..i_a) in [b]^a of
/// prod_j (x_{i_j} + y_{i_j + j - 1 + c}).
///
/// G(j, v) is the sum restricted to the first j factors with i_j <= v;
/// splitting on whether i_j = v gives
/// G(j, v) = G(j, v-1) + G(j-1, v) * (x_v + y_{v+j-1+c}).
inline MPoly h_poly(int a, int b, int c)
{
    if (a < 0)
        return MPoly{};
    if (a == 0)
        return MPoly(1);
    if (b <= 0)
        return MPoly{};
    std::vector<MPoly> prev(static_cast<std::size_t>(b) + 1, MPoly(1));  // j = 0
    for (int j = 1; j <= a; ++j) {
        std::vector<MPoly> cur(static_cast<std::size_t>(b) + 1);
        for (int v = 1; v <= b; ++v)
            cur[static_cast<std::size_t>(v)] =
                cur[static_cast<std::size_t>(v - 1)] +
                prev[static_cast<std::size_t>(v)] * (MPoly::x(v) + MPoly::y(v + j - 1 + c));
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(b)];
}

/// Same polynomial by listing the tuples one by one.
inline MPoly h_poly_by_tuples(int a, int b, int c)
{
    if (a < 0)
        return MPoly{};
    MPoly total;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(idx.size()) == a) {
            MPoly term = 1;
            for (int j = 1; j <= a; ++j) {
                const int i = idx[static_cast<std::size_t>(j - 1)];
                term *= MPoly::x(i) + MPoly::y(i + j - 1 + c);
            }
            total += term;
            return;
        }
        for (int v = lo; v <= b; ++v) {
            idx.push_back(v);
            self(self, v);
            idx.pop_back();
        }
    };
    rec(rec, 1);
    return total;
}

/// Checks the four h-recursions and the closed form of h(1,b,c) as exact
/// polynomial identities for a in [-1, a_max], b in [0, b_max], c in
/// [c_lo, c_hi]. Each h is computed by tuple enumeration, so the recursions
/// are tested rather than used.
inline Report check_h_recursions(int a_max, int b_max, int c_lo, int c_hi)
{
    Report report("h-recursions");
    std::map<std::tuple<int, int, int>, MPoly> cache;
    auto h = [&](int a, int b, int c) -> const MPoly& {
        auto key = std::make_tuple(a, b, c);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, h_poly_by_tuples(a, b, c)).first;
        return it->second;
    };
    auto x = [](int i) { return MPoly::x(i); };
    auto y = [](int i) { return MPoly::y(i); };

    for (int a = -1; a <= a_max; ++a)
        for (int b = 0; b <= b_max; ++b)
            for (int c = c_lo; c <= c_hi; ++c) {
                const std::string at = "a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                                       ",c=" + std::to_string(c);
                if (b >= 1) {
                    MPoly lhs = h(a, b, c);
                    MPoly rhs = (x(b) + y(a + b + c - 1)) * h(a - 1, b, c) + h(a, b - 1, c);
                    report.check(lhs == rhs, "first-step " + at,
                                 lhs.to_string() + " != " + rhs.to_string());

                    lhs = h(a, b - 1, c);
                    rhs = h(a, b, c - 1) - (x(b) + y(c)) * h(a - 1, b, c);
                    report.check(lhs == rhs, "flag-lowering " + at,
                                 lhs.to_string() + " != " + rhs.to_string());
                }
                {
                    MPoly lhs = h(a, b, c) - h(a, b, c - 1);
                    MPoly rhs = (y(a + b + c - 1) - y(c)) * h(a - 1, b, c);
                    report.check(lhs == rhs, "shift-difference " + at,
                                 lhs.to_string() + " != " + rhs.to_string());

                    lhs = h(a + 1, b, c + 1);
                    rhs = h(a + 1, b, c) + (y(a + b + c + 1) - y(c + 1)) * h(a, b, c + 1);
                    report.check(lhs == rhs, "raised-shift " + at,
                                 lhs.to_string() + " != " + rhs.to_string());
                }
                if (a == 1) {
                    MPoly closed;
                    for (int i = 1; i <= b; ++i)
                        closed += x(i);
                    for (int j = c + 1; j <= c + b; ++j)
                        closed += y(j);
                    const MPoly& lhs = h(1, b, c);
                    report.check(lhs == closed, "linear-case " + at,
                                 lhs.to_string() + " != " + closed.to_string());
                }
            }
    return report;
}

} // namespace hooklab
