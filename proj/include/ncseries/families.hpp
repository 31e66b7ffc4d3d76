#ifndef NCSERIES_FAMILIES_HPP
#define NCSERIES_FAMILIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <ncseries/alphabet.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/report.hpp>
#include <ncseries/series.hpp>

namespace ncs
{

// Catalan numbers by the convolution recurrence C_{m+1} = sum_i C_i C_{m-i}.
inline std::vector<integer> catalan_numbers(int n_max)
{
    std::vector<integer> c{1};
    for (int m = 0; m < n_max; ++m) {
        integer next = 0;
        for (int i = 0; i <= m; ++i) {
            next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
        }
        c.push_back(next);
    }
    return c;
}

inline integer catalan(int n)
{
    if (n < 0) {
        throw std::invalid_argument("catalan index must be nonnegative");
    }
    return catalan_numbers(n).back();
}

namespace detail
{

inline void require_positive(int n, const char *what)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + " requires n >= 1");
    }
}

inline polynomial letter(const variable &v)
{
    return polynomial(v);
}

} // namespace detail

// x -> ab - ba
inline substitution_map<integer> commutator_substitution()
{
    return {{alphabet::x(), alphabet::commutator()}};
}

// x -> 1
inline substitution_map<integer> unit_substitution()
{
    return {{alphabet::x(), polynomial(1)}};
}

// d_1, ..., d_n from
//   d_1 = 1,  d_m = d_{m-1} x + sum_{k=2}^{m-1} d_{m-k} a d_k b.
// Element i of the result is d_{i+1}.
inline std::vector<polynomial> d_polys(int n)
{
    detail::require_positive(n, "d_polys");
    const polynomial a = detail::letter(alphabet::a());
    const polynomial b = detail::letter(alphabet::b());
    const polynomial x = detail::letter(alphabet::x());

    std::vector<polynomial> d{polynomial(1)};
    d.reserve(static_cast<std::size_t>(n));
    for (int m = 2; m <= n; ++m) {
        auto at = [&](int k) -> const polynomial & { return d[static_cast<std::size_t>(k - 1)]; };
        polynomial next = at(m - 1) * x;
        for (int k = 2; k <= m - 1; ++k) {
            next += at(m - k) * (a * at(k) * b);
        }
        d.push_back(std::move(next));
    }
    return d;
}

inline polynomial d_poly(int n)
{
    return d_polys(n).back();
}

inline polynomial c_from_d(const polynomial &d)
{
    return detail::letter(alphabet::a()) * d * detail::letter(alphabet::b());
}

inline polynomial c_poly(int n)
{
    return c_from_d(d_poly(n));
}

// D = sum of d_n over 2n - 2 <= order.
inline truncated_series D_series(int order)
{
    polynomial body;
    for (const auto &d : d_polys(order / 2 + 1)) {
        body += d;
    }
    return truncated_series(body, order);
}

// The map D -> 1 + D(x - ab) + DaDb.
inline truncated_series eq2_map(const truncated_series &d)
{
    const polynomial a = detail::letter(alphabet::a());
    const polynomial b = detail::letter(alphabet::b());
    const polynomial x = detail::letter(alphabet::x());
    const auto one = ts_one<integer>(d.order());
    return one + d * (x - a * b) + d * a * d * b;
}

// The map D -> 1 + (x - ab + aDb) D.
inline truncated_series eq3_map(const truncated_series &d)
{
    const polynomial a = detail::letter(alphabet::a());
    const polynomial b = detail::letter(alphabet::b());
    const polynomial x = detail::letter(alphabet::x());
    const auto one = ts_one<integer>(d.order());
    const truncated_series lead = truncated_series(x - a * b, d.order()) + a * d * b;
    return one + lead * d;
}

// The map U -> (1 + aUb)(1 + (x - ab + ba) U).
inline truncated_series theorem4_map(const truncated_series &u)
{
    const polynomial a = detail::letter(alphabet::a());
    const polynomial b = detail::letter(alphabet::b());
    const polynomial x = detail::letter(alphabet::x());
    const auto one = ts_one<integer>(u.order());
    return (one + a * u * b) * (one + (x - a * b + b * a) * u);
}

inline truncated_series U_series(int order)
{
    return fixpoint_solve(theorem4_map, order);
}

// u_1, ..., u_n as homogeneous components of a single U solve.
inline std::vector<polynomial> u_polys(int n)
{
    detail::require_positive(n, "u_polys");
    const truncated_series u = U_series(2 * n - 2);
    std::vector<polynomial> out;
    for (int k = 1; k <= n; ++k) {
        out.push_back(homogeneous_component(u.body(), 2 * k - 2));
    }
    return out;
}

inline polynomial u_poly(int n)
{
    return u_polys(n).back();
}

inline polynomial specialize_u_x1(int n)
{
    return substitute(u_poly(n), unit_substitution());
}

// (a Z b) truncated at the order of Z.
inline truncated_series sandwich(const truncated_series &z)
{
    return detail::letter(alphabet::a()) * z * detail::letter(alphabet::b());
}

// Strips a leading `left` and trailing `right` letter from every nonconstant
// term. Returns nullopt if some term does not have that shape.
inline std::optional<polynomial> strip_sandwich(const polynomial &p, const variable &left, const variable &right)
{
    polynomial inner;
    for (const auto &[w, c] : p) {
        if (w.empty()) {
            continue;
        }
        if (w.size() < 2 || !(w.front() == left) || !(w.back() == right)) {
            return std::nullopt;
        }
        std::vector<variable> mid(w.letters().begin() + 1, w.letters().end() - 1);
        inner.add_term(word(std::move(mid)), c);
    }
    return inner;
}

// ---------------------------------------------------------------------------
// Verifiers

inline check_report verify_theorem1(int order)
{
    const std::string name = "theorem1 (degree " + std::to_string(order) + ")";
    polynomial lhs(1);
    const auto subs = commutator_substitution();
    for (const auto &d : d_polys(order / 2 + 1)) {
        const polynomial c = c_from_d(d);
        if (c.degree() <= order) {
            lhs -= substitute(c, subs);
        }
    }
    const truncated_series l(lhs, order);
    const truncated_series s = geometric_series(order);
    const auto one = ts_one<integer>(order);
    return combine(name, {compare_series("L*S", one, l * s), compare_series("S*L", one, s * l)});
}

inline check_report verify_eq2(int order)
{
    const truncated_series d = D_series(order);
    return combine("eq2 D = 1 + D(x-ab) + DaDb (degree " + std::to_string(order) + ")",
                   {compare_series("residual", d, eq2_map(d)),
                    compare_series("fixpoint vs recurrence", d, fixpoint_solve(eq2_map, order))});
}

inline check_report verify_eq3(int order)
{
    const truncated_series d = D_series(order);
    return combine("eq3 D = 1 + (x-ab+aDb)D (degree " + std::to_string(order) + ")",
                   {compare_series("residual", d, eq3_map(d)),
                    compare_series("fixpoint vs recurrence", d, fixpoint_solve(eq3_map, order))});
}

// U extracted from (1 - aDb)^{-1} = 1 + aUb, independently of the U fixpoint.
// Needs the inverse to order + 2 to recover U to order.
inline std::optional<truncated_series> U_by_extraction(int order)
{
    const int outer = order + 2;
    const truncated_series inv = ts_inverse(ts_one<integer>(outer) - sandwich(D_series(outer)));
    auto inner = strip_sandwich(inv.body(), alphabet::a(), alphabet::b());
    if (!inner) {
        return std::nullopt;
    }
    return truncated_series(*inner, order);
}

inline check_report verify_theorem4(int order)
{
    const std::string name = "theorem4 U = (1+aUb)(1+(x-ab+ba)U) (degree " + std::to_string(order) + ")";
    const truncated_series u = U_series(order);
    auto extracted = U_by_extraction(order);
    if (!extracted) {
        return fail_report(name, witness{0, "", "", "", "(1-aDb)^-1 has a term not of the form a..b"});
    }
    return combine(name, {compare_series("residual", u, theorem4_map(u)),
                          compare_series("residual of extracted U", *extracted, theorem4_map(*extracted)),
                          compare_series("extracted vs fixpoint", u, *extracted)});
}

inline check_report verify_inverse_extraction(int order)
{
    const std::string name = "extraction (1-aDb)^-1 = 1 + aUb (degree " + std::to_string(order) + ")";
    const auto one = ts_one<integer>(order);
    const truncated_series inv = ts_inverse(one - sandwich(D_series(order)));
    if (!strip_sandwich(inv.body(), alphabet::a(), alphabet::b())) {
        for (const auto &[w, c] : presentation_terms(inv.body())) {
            if (!w.empty() && (w.size() < 2 || !(w.front() == alphabet::a()) || !(w.back() == alphabet::b()))) {
                return fail_report(name, witness{w.degree(), word_string(w), "term of the form a..b",
                                                 coefficient_string(c), "inverse term shape"});
            }
        }
    }
    return compare_series(name, one + sandwich(U_series(order)), inv);
}

inline check_report verify_remark5(int order)
{
    const truncated_series u = U_series(order);
    const truncated_series specialized(substitute(u.body(), commutator_substitution(), order), order);
    return compare_series("remark5 U(x=ab-ba) = sum a^n b^n (degree " + std::to_string(order) + ")",
                          geometric_series(order), specialized);
}

// D = U (-baU)*
inline check_report verify_bridge(int order)
{
    const truncated_series u = U_series(order);
    const polynomial ba = detail::letter(alphabet::b()) * detail::letter(alphabet::a());
    return compare_series("bridge D = U(-baU)* (degree " + std::to_string(order) + ")", D_series(order),
                          u * ts_star(-(ba * u)));
}

// monomial_count(u_n) = Catalan(n) for n = 1..n_max.
inline check_report verify_u_counts(int n_max)
{
    const std::string name = "u_n monomial counts vs Catalan(n) (n <= " + std::to_string(n_max) + ")";
    const auto us = u_polys(n_max);
    const auto cat = catalan_numbers(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const auto count = monomial_count(us[static_cast<std::size_t>(n - 1)]);
        if (integer(count) != cat[static_cast<std::size_t>(n)]) {
            return fail_report(name, witness{2 * n - 2, "", coefficient_string(cat[static_cast<std::size_t>(n)]),
                                             std::to_string(count), "u_" + std::to_string(n) + " term count"});
        }
    }
    return pass_report(name);
}

} // namespace ncs

#endif
