#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hooklab {

enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2 };

struct Variable {
    Family family = Family::X;
    int index = 0;

    friend constexpr bool operator==(const Variable&, const Variable&) = default;
    friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

inline std::string to_string(Variable v)
{
    static constexpr const char* names[] = {"x", "y", "z"};
    return names[static_cast<int>(v.family)] + std::to_string(v.index);
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// A monomial is a sorted list of packed (variable, exponent) words:
/// bits 30-31 hold the family, bits 16-29 the index biased by 8192 and
/// bits 0-15 the exponent. Sorting the words sorts by variable.
class Monomial {
public:
    static constexpr int index_bias = 8192;
    static constexpr int min_index = -index_bias;
    static constexpr int max_index = index_bias - 1;

    Monomial() = default;

    static Monomial of(Variable v, unsigned exponent = 1)
    {
        if (v.index < min_index || v.index > max_index)
            throw error("variable index " + std::to_string(v.index) + " out of range");
        Monomial m;
        if (exponent > 0)
            m.words_.push_back(pack(v, exponent));
        return m;
    }

    static std::uint32_t var_key(std::uint32_t word) noexcept { return word >> 16; }
    static unsigned exponent(std::uint32_t word) noexcept { return word & 0xFFFFu; }

    static Variable variable(std::uint32_t word) noexcept
    {
        return {static_cast<Family>(word >> 30),
                static_cast<int>((word >> 16) & 0x3FFFu) - index_bias};
    }

    const std::vector<std::uint32_t>& words() const noexcept { return words_; }
    bool is_one() const noexcept { return words_.empty(); }

    unsigned degree() const noexcept
    {
        unsigned d = 0;
        for (auto w : words_)
            d += exponent(w);
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial out;
        out.words_.reserve(a.words_.size() + b.words_.size());
        auto i = a.words_.begin();
        auto j = b.words_.begin();
        while (i != a.words_.end() && j != b.words_.end()) {
            auto ki = var_key(*i);
            auto kj = var_key(*j);
            if (ki < kj) {
                out.words_.push_back(*i++);
            } else if (kj < ki) {
                out.words_.push_back(*j++);
            } else {
                out.words_.push_back(*i + exponent(*j));
                ++i;
                ++j;
            }
        }
        out.words_.insert(out.words_.end(), i, a.words_.end());
        out.words_.insert(out.words_.end(), j, b.words_.end());
        return out;
    }

    std::string to_string() const
    {
        if (words_.empty())
            return "1";
        std::string s;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (k)
                s += '*';
            s += hooklab::to_string(variable(words_[k]));
            if (exponent(words_[k]) > 1)
                s += '^' + std::to_string(exponent(words_[k]));
        }
        return s;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    struct Hash {
        std::size_t operator()(const Monomial& m) const noexcept
        {
            std::uint64_t h = 1469598103934665603ull;
            for (auto w : m.words_) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

private:
    static std::uint32_t pack(Variable v, unsigned exponent) noexcept
    {
        return (static_cast<std::uint32_t>(v.family) << 30) |
               (static_cast<std::uint32_t>(v.index + index_bias) << 16) | (exponent & 0xFFFFu);
    }

    std::vector<std::uint32_t> words_;
};

/// Graded order used for printing: total degree first, then the variable
/// list (x before y before z, ascending index) compared lexicographically
/// so that the term with the smaller leading variable comes first.
inline bool graded_less(const Monomial& a, const Monomial& b)
{
    auto da = a.degree();
    auto db = b.degree();
    if (da != db)
        return da < db;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t k = 0; k < std::min(wa.size(), wb.size()); ++k) {
        auto ka = Monomial::var_key(wa[k]);
        auto kb = Monomial::var_key(wb[k]);
        if (ka != kb)
            return ka < kb;
        auto ea = Monomial::exponent(wa[k]);
        auto eb = Monomial::exponent(wb[k]);
        if (ea != eb)
            return ea > eb;
    }
    return wa.size() < wb.size();
}

// ---------------------------------------------------------------------------
// Evaluation points
// ---------------------------------------------------------------------------

/// Assignment of rational values to variables.
class EvalPoint {
public:
    void set(Variable v, Rational value) { values_[v] = std::move(value); }

    const Rational* find(Variable v) const
    {
        auto it = values_.find(v);
        return it == values_.end() ? nullptr : &it->second;
    }

    const Rational& at(Variable v) const
    {
        if (auto* q = find(v))
            return *q;
        throw unassigned_variable("no value for " + to_string(v));
    }

    const std::map<Variable, Rational>& values() const noexcept { return values_; }

private:
    std::map<Variable, Rational> values_;
};

// ---------------------------------------------------------------------------
// MPoly
// ---------------------------------------------------------------------------

/// Sparse polynomial with rational coefficients in the variables x_i, y_i
/// (zero for i <= 0) and z_k. Terms are kept sorted by monomial with no zero
/// coefficients, so equality is structural.
class MPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MPoly() = default;
    MPoly(const Rational& c)
    {
        if (c != 0)
            terms_.emplace_back(Monomial{}, c);
    }
    MPoly(long c) : MPoly(Rational(c)) {}

    static MPoly monomial(const Monomial& m, const Rational& c = 1)
    {
        MPoly p;
        if (c != 0)
            p.terms_.emplace_back(m, c);
        return p;
    }

    static MPoly var(Variable v)
    {
        if (v.family != Family::Z && v.index <= 0)
            return MPoly{};
        return monomial(Monomial::of(v));
    }

    static MPoly x(int i) { return var({Family::X, i}); }
    static MPoly y(int i) { return var({Family::Y, i}); }
    static MPoly z(int k) { return var({Family::Z, k}); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    unsigned degree() const noexcept
    {
        unsigned d = 0;
        for (const auto& t : terms_)
            d = std::max(d, t.first.degree());
        return d;
    }

    /// Every term has total degree d (vacuously true for zero).
    bool is_homogeneous(unsigned d) const noexcept
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const Term& t) { return t.first.degree() == d; });
    }

    MPoly operator-() const
    {
        MPoly r = *this;
        for (auto& t : r.terms_)
            t.second = -t.second;
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = merge(*this, o, false); }
    MPoly& operator-=(const MPoly& o) { return *this = merge(*this, o, true); }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }

    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return MPoly{};
        if (a.terms_.size() == 1 && a.terms_[0].first.is_one())
            return b.scaled(a.terms_[0].second);
        if (b.terms_.size() == 1 && b.terms_[0].first.is_one())
            return a.scaled(b.terms_[0].second);

        std::unordered_map<Monomial, Rational, Monomial::Hash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto [it, inserted] = acc.try_emplace(ma * mb);
                if (inserted)
                    it->second = ca * cb;
                else
                    it->second += ca * cb;
            }
        MPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0)
                r.terms_.emplace_back(m, std::move(c));
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& s, const Term& t) { return s.first < t.first; });
        return r;
    }

    MPoly scaled(const Rational& c) const
    {
        if (c == 0)
            return MPoly{};
        MPoly r = *this;
        for (auto& t : r.terms_)
            t.second *= c;
        return r;
    }

    Rational eval(const EvalPoint& pt) const
    {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (auto w : m.words()) {
                const Rational& base = pt.at(Monomial::variable(w));
                for (unsigned e = Monomial::exponent(w); e > 0; --e)
                    v *= base;
            }
            total += v;
        }
        return total;
    }

    /// Terms in graded order, coefficients as "p/q".
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::vector<const Term*> order;
        for (const auto& t : terms_)
            order.push_back(&t);
        std::sort(order.begin(), order.end(),
                  [](const Term* s, const Term* t) { return graded_less(s->first, t->first); });
        std::string s;
        bool first = true;
        for (const Term* t : order) {
            Rational c = t->second;
            if (!first)
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            first = false;
            Rational a = abs(c);
            if (t->first.is_one())
                s += hooklab::to_string(a);
            else if (a == 1)
                s += t->first.to_string();
            else
                s += hooklab::to_string(a) + "*" + t->first.to_string();
        }
        return s;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

private:
    static MPoly merge(const MPoly& a, const MPoly& b, bool negate_b)
    {
        MPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        auto push_b = [&](const Term& t) {
            r.terms_.emplace_back(t.first, negate_b ? Rational(-t.second) : t.second);
        };
        while (i != a.terms_.end() && j != b.terms_.end()) {
            if (i->first < j->first) {
                r.terms_.push_back(*i++);
            } else if (j->first < i->first) {
                push_b(*j++);
            } else {
                Rational c = negate_b ? Rational(i->second - j->second)
                                      : Rational(i->second + j->second);
                if (c != 0)
                    r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        for (; i != a.terms_.end(); ++i)
            r.terms_.push_back(*i);
        for (; j != b.terms_.end(); ++j)
            push_b(*j);
        return r;
    }

    std::vector<Term> terms_;
};

inline MPoly pow(const MPoly& p, unsigned e)
{
    MPoly r = 1;
    for (unsigned k = 0; k < e; ++k)
        r *= p;
    return r;
}

} // namespace hooklab
