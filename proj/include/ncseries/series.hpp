#ifndef NCSERIES_SERIES_HPP
#define NCSERIES_SERIES_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ncseries/alphabet.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/text.hpp>

namespace ncs
{

// Raised when a caller-asserted precondition turns out to be false, e.g. a
// fixpoint map that is not degree-raising.
class contract_violation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// A formal power series over the free algebra known up to total degree
// order(). Every term above the order is discarded on construction and after
// each operation.
template <typename Cf>
class basic_truncated_series
{
public:
    using poly_type = basic_polynomial<Cf>;

    explicit basic_truncated_series(int order) : basic_truncated_series(poly_type{}, order) {}

    basic_truncated_series(const poly_type &body, int order) : m_body(truncate(body, order)), m_order(order)
    {
        if (order < 0) {
            throw std::invalid_argument("truncation order must be nonnegative");
        }
    }

    const poly_type &body() const noexcept
    {
        return m_body;
    }
    int order() const noexcept
    {
        return m_order;
    }
    Cf constant_term() const
    {
        return m_body.constant_term();
    }

    basic_truncated_series truncated_to(int order) const
    {
        if (order > m_order) {
            throw std::invalid_argument("cannot raise the order of a truncated series");
        }
        return basic_truncated_series(m_body, order);
    }

    basic_truncated_series &operator+=(const basic_truncated_series &o)
    {
        check_order(o);
        m_body += o.m_body;
        return *this;
    }
    basic_truncated_series &operator-=(const basic_truncated_series &o)
    {
        check_order(o);
        m_body -= o.m_body;
        return *this;
    }

    friend basic_truncated_series operator+(basic_truncated_series l, const basic_truncated_series &r)
    {
        l += r;
        return l;
    }
    friend basic_truncated_series operator-(basic_truncated_series l, const basic_truncated_series &r)
    {
        l -= r;
        return l;
    }
    basic_truncated_series operator-() const
    {
        return basic_truncated_series(-m_body, m_order);
    }

    friend basic_truncated_series operator*(const basic_truncated_series &l, const basic_truncated_series &r)
    {
        l.check_order(r);
        return basic_truncated_series(poly_type::multiply(l.m_body, r.m_body, l.m_order), l.m_order);
    }

    // Left/right multiplication by a polynomial; the result keeps this order.
    friend basic_truncated_series operator*(const poly_type &l, const basic_truncated_series &r)
    {
        return basic_truncated_series(poly_type::multiply(l, r.m_body, r.m_order), r.m_order);
    }
    friend basic_truncated_series operator*(const basic_truncated_series &l, const poly_type &r)
    {
        return basic_truncated_series(poly_type::multiply(l.m_body, r, l.m_order), l.m_order);
    }

    friend bool operator==(const basic_truncated_series &, const basic_truncated_series &) = default;

private:
    void check_order(const basic_truncated_series &o) const
    {
        if (o.m_order != m_order) {
            throw std::invalid_argument("truncation order mismatch: " + std::to_string(m_order) + " vs "
                                        + std::to_string(o.m_order));
        }
    }

    poly_type m_body;
    int m_order;
};

using truncated_series = basic_truncated_series<integer>;

template <typename Cf>
basic_truncated_series<Cf> ts_mul(const basic_truncated_series<Cf> &p, const basic_truncated_series<Cf> &q)
{
    return p * q;
}

template <typename Cf>
basic_truncated_series<Cf> ts_one(int order)
{
    return basic_truncated_series<Cf>(basic_polynomial<Cf>(Cf(1)), order);
}

// sum_{n >= 0} a^n b^n
inline truncated_series geometric_series(int order)
{
    polynomial body;
    for (int n = 0; 2 * n <= order; ++n) {
        std::vector<variable> w(static_cast<std::size_t>(n), alphabet::a());
        w.insert(w.end(), static_cast<std::size_t>(n), alphabet::b());
        body.add_term(word(std::move(w)), integer(1));
    }
    return truncated_series(body, order);
}

// Z* = (1 - Z)^{-1} = 1 + Z + Z^2 + ..., for Z without constant term.
//
// Evaluated Horner-style as T <- 1 + Z T; each pass fixes at least one more
// degree, so order passes suffice.
template <typename Cf>
basic_truncated_series<Cf> ts_star(const basic_truncated_series<Cf> &z)
{
    if (z.constant_term() != 0) {
        throw std::invalid_argument("star requires a series with zero constant term");
    }
    const auto one = ts_one<Cf>(z.order());
    auto t = one;
    for (int i = 0; i < z.order(); ++i) {
        auto next = one + z * t;
        if (next == t) {
            break;
        }
        t = std::move(next);
    }
    return t;
}

// Two-sided inverse of a series whose constant term is +1 or -1:
// S = e(1 - Z) with e = +-1, so S^{-1} = e Z*.
template <typename Cf>
basic_truncated_series<Cf> ts_inverse(const basic_truncated_series<Cf> &s)
{
    const Cf c0 = s.constant_term();
    if (c0 != 1 && c0 != -1) {
        throw std::invalid_argument("series inverse requires constant term +1 or -1");
    }
    const auto one = ts_one<Cf>(s.order());
    if (c0 == 1) {
        return ts_star(one - s);
    }
    return -ts_star(one + s);
}

// Unique S with S = map(S) at the given order, for a degree-raising map.
// Iterates from S = 1 and throws contract_violation if no two consecutive
// iterates agree within order + 2 applications.
template <typename Cf>
basic_truncated_series<Cf>
fixpoint_solve(const std::function<basic_truncated_series<Cf>(const basic_truncated_series<Cf> &)> &map, int order)
{
    auto s = ts_one<Cf>(order);
    for (int i = 0; i < order + 2; ++i) {
        auto next = map(s);
        if (next.order() != order) {
            throw contract_violation("fixpoint map changed the truncation order");
        }
        if (next == s) {
            return s;
        }
        s = std::move(next);
    }
    throw contract_violation("fixpoint iteration did not stabilize within " + std::to_string(order + 2)
                             + " steps; the map is not degree-raising");
}

inline truncated_series fixpoint_solve(const std::function<truncated_series(const truncated_series &)> &map,
                                       int order)
{
    return fixpoint_solve<integer>(map, order);
}

template <typename Cf>
std::string to_string(const basic_truncated_series<Cf> &s)
{
    return "order: " + std::to_string(s.order()) + "\n" + canonical_string(s.body());
}

} // namespace ncs

#endif
