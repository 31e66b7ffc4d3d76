#ifndef NCSERIES_POLYNOMIAL_HPP
#define NCSERIES_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <ncseries/variable.hpp>

namespace ncs
{

using integer = boost::multiprecision::cpp_int;

// Sparse element of the free associative algebra with coefficients in Cf.
//
// Canonical form: every stored coefficient is nonzero and each word appears
// once. The zero polynomial has degree -1.
template <typename Cf>
class basic_polynomial
{
public:
    using coefficient_type = Cf;
    using container_type = std::map<word, Cf>;
    using const_iterator = typename container_type::const_iterator;

    basic_polynomial() = default;

    // Constant polynomial.
    basic_polynomial(Cf c)
    {
        add_term(word{}, std::move(c));
    }
    basic_polynomial(int c) : basic_polynomial(Cf(c)) {}

    basic_polynomial(const variable &v) : basic_polynomial(word{v}) {}
    basic_polynomial(const word &w, Cf c = Cf(1))
    {
        add_term(w, std::move(c));
    }

    static basic_polynomial from_terms(std::vector<std::pair<word, Cf>> terms)
    {
        basic_polynomial r;
        for (auto &[w, c] : terms) {
            r.add_term(w, std::move(c));
        }
        return r;
    }

    const container_type &terms() const noexcept
    {
        return m_terms;
    }
    const_iterator begin() const noexcept
    {
        return m_terms.begin();
    }
    const_iterator end() const noexcept
    {
        return m_terms.end();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }

    int degree() const noexcept
    {
        int d = -1;
        for (const auto &t : m_terms) {
            d = std::max(d, t.first.degree());
        }
        return d;
    }

    int low_degree() const noexcept
    {
        if (m_terms.empty()) {
            return -1;
        }
        int d = std::numeric_limits<int>::max();
        for (const auto &t : m_terms) {
            d = std::min(d, t.first.degree());
        }
        return d;
    }

    Cf coefficient(const word &w) const
    {
        auto it = m_terms.find(w);
        return it == m_terms.end() ? Cf(0) : it->second;
    }

    Cf constant_term() const
    {
        return coefficient(word{});
    }

    // Accumulates c into the coefficient of w, dropping it if it cancels.
    void add_term(const word &w, Cf c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(w, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    basic_polynomial &operator+=(const basic_polynomial &o)
    {
        for (const auto &[w, c] : o.m_terms) {
            add_term(w, c);
        }
        return *this;
    }
    basic_polynomial &operator-=(const basic_polynomial &o)
    {
        for (const auto &[w, c] : o.m_terms) {
            add_term(w, -c);
        }
        return *this;
    }
    basic_polynomial &operator*=(const basic_polynomial &o)
    {
        *this = *this * o;
        return *this;
    }

    basic_polynomial operator-() const
    {
        basic_polynomial r = *this;
        for (auto &t : r.m_terms) {
            t.second = -t.second;
        }
        return r;
    }

    friend basic_polynomial operator+(basic_polynomial l, const basic_polynomial &r)
    {
        l += r;
        return l;
    }
    friend basic_polynomial operator-(basic_polynomial l, const basic_polynomial &r)
    {
        l -= r;
        return l;
    }
    friend basic_polynomial operator*(const basic_polynomial &l, const basic_polynomial &r)
    {
        return multiply(l, r, std::numeric_limits<int>::max());
    }

    // Product with every word of degree above max_degree discarded.
    static basic_polynomial multiply(const basic_polynomial &l, const basic_polynomial &r, int max_degree)
    {
        std::unordered_map<word, Cf> acc;
        for (const auto &[lw, lc] : l.m_terms) {
            if (lw.degree() > max_degree) {
                continue;
            }
            for (const auto &[rw, rc] : r.m_terms) {
                if (lw.degree() + rw.degree() > max_degree) {
                    continue;
                }
                acc[lw * rw] += lc * rc;
            }
        }
        return from_accumulator(std::move(acc));
    }

    friend bool operator==(const basic_polynomial &, const basic_polynomial &) = default;

private:
    static basic_polynomial from_accumulator(std::unordered_map<word, Cf> acc)
    {
        std::vector<std::pair<word, Cf>> v;
        v.reserve(acc.size());
        for (auto &[w, c] : acc) {
            if (c != 0) {
                v.emplace_back(w, std::move(c));
            }
        }
        std::sort(v.begin(), v.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        basic_polynomial r;
        for (auto &t : v) {
            r.m_terms.emplace_hint(r.m_terms.end(), std::move(t.first), std::move(t.second));
        }
        return r;
    }

    container_type m_terms;
};

using polynomial = basic_polynomial<integer>;

template <typename Cf>
basic_polynomial<Cf> poly_add(const basic_polynomial<Cf> &p, const basic_polynomial<Cf> &q)
{
    return p + q;
}

template <typename Cf>
basic_polynomial<Cf> poly_mul(const basic_polynomial<Cf> &p, const basic_polynomial<Cf> &q)
{
    return p * q;
}

template <typename Cf>
basic_polynomial<Cf> homogeneous_component(const basic_polynomial<Cf> &p, int d)
{
    basic_polynomial<Cf> r;
    for (const auto &[w, c] : p) {
        if (w.degree() == d) {
            r.add_term(w, c);
        }
    }
    return r;
}

// Terms of degree <= max_degree.
template <typename Cf>
basic_polynomial<Cf> truncate(const basic_polynomial<Cf> &p, int max_degree)
{
    basic_polynomial<Cf> r;
    for (const auto &[w, c] : p) {
        if (w.degree() <= max_degree) {
            r.add_term(w, c);
        }
    }
    return r;
}

template <typename Cf>
bool is_homogeneous(const basic_polynomial<Cf> &p, int d)
{
    return std::all_of(p.begin(), p.end(), [d](const auto &t) { return t.first.degree() == d; });
}

template <typename Cf>
std::size_t monomial_count(const basic_polynomial<Cf> &p)
{
    return p.size();
}

template <typename Cf>
using substitution_map = std::unordered_map<variable, basic_polynomial<Cf>>;

// Applies the algebra homomorphism determined by the images; letters without
// an image map to themselves. Terms of the result above max_degree are dropped
// while expanding.
template <typename Cf>
basic_polynomial<Cf> substitute(const basic_polynomial<Cf> &p, const substitution_map<Cf> &images,
                                int max_degree = std::numeric_limits<int>::max())
{
    using poly = basic_polynomial<Cf>;
    std::unordered_map<variable, poly> cache;
    auto image_of = [&](const variable &v) -> const poly & {
        if (auto it = images.find(v); it != images.end()) {
            return it->second;
        }
        auto [it, _] = cache.try_emplace(v, poly(v));
        return it->second;
    };

    poly result;
    for (const auto &[w, c] : p) {
        poly acc(c);
        for (const auto &v : w.letters()) {
            acc = poly::multiply(acc, image_of(v), max_degree);
            if (acc.is_zero()) {
                break;
            }
        }
        result += acc;
    }
    return result;
}

} // namespace ncs

#endif
