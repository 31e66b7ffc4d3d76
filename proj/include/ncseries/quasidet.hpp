#ifndef NCSERIES_QUASIDET_HPP
#define NCSERIES_QUASIDET_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ncseries/alphabet.hpp>
#include <ncseries/families.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/report.hpp>
#include <ncseries/series.hpp>

namespace ncs
{

// Entries of an infinite tridiagonal matrix A, indexed from 1. Entries off
// the band are zero. Diagonal entries must be zero or homogeneous of degree 2,
// band entries zero or homogeneous of degree 1.
struct jacobi_spec {
    std::function<polynomial(int)> diag;  // a_{i,i}
    std::function<polynomial(int)> upper; // a_{i,i+1}
    std::function<polynomial(int)> lower; // a_{i+1,i}

    static jacobi_spec generic()
    {
        return {[](int i) { return polynomial(alphabet::entry(i, i)); },
                [](int i) { return polynomial(alphabet::entry(i, i + 1)); },
                [](int i) { return polynomial(alphabet::entry(i + 1, i)); }};
    }

    // Generic entries with a_{1,1} = 0.
    static jacobi_spec generic_zero_corner()
    {
        auto s = generic();
        s.diag = [](int i) { return i == 1 ? polynomial{} : polynomial(alphabet::entry(i, i)); };
        return s;
    }

    // a_{i,i} = x - ab, a_{i,i+1} = a, a_{i+1,i} = b for every i.
    static jacobi_spec specialized()
    {
        const polynomial a(alphabet::a());
        const polynomial b(alphabet::b());
        const polynomial x(alphabet::x());
        const polynomial d = x - a * b;
        return {[d](int) { return d; }, [a](int) { return a; }, [b](int) { return b; }};
    }
};

namespace detail
{

inline polynomial checked_entry(const std::function<polynomial(int)> &f, int i, int degree, const char *what)
{
    polynomial p = f(i);
    if (!p.is_zero() && !is_homogeneous(p, degree)) {
        throw std::invalid_argument(std::string(what) + " entry at index " + std::to_string(i)
                                    + " is not homogeneous of degree " + std::to_string(degree));
    }
    return p;
}

} // namespace detail

// Index bound for walks from `base` that must return within `order`: going
// up to index m costs at least 2 (m - base) in degree.
inline int walk_index_bound(int base, int order)
{
    return base + order / 2;
}

// Sum over closed walks at `base` on indices in [base, base_bound] of the
// ordered entry products, truncated at `order`. Organised by degree: a
// diagonal step costs 2, a band step 1.
inline truncated_series closed_walk_sum(const jacobi_spec &spec, int base, int order, int bound)
{
    if (bound < base) {
        throw std::invalid_argument("walk index bound below the base index");
    }
    const auto width = static_cast<std::size_t>(bound - base + 1);
    std::vector<polynomial> diag(width), up(width), down(width);
    for (int i = base; i <= bound; ++i) {
        const auto k = static_cast<std::size_t>(i - base);
        diag[k] = detail::checked_entry(spec.diag, i, 2, "diagonal");
        up[k] = detail::checked_entry(spec.upper, i, 1, "upper");
        down[k] = detail::checked_entry(spec.lower, i, 1, "lower");
    }

    // walks[d][k]: walks from base to base + k of total degree d.
    std::vector<std::vector<polynomial>> walks(static_cast<std::size_t>(order) + 1, std::vector<polynomial>(width));
    walks[0][0] = polynomial(1);
    for (int d = 1; d <= order; ++d) {
        auto &row = walks[static_cast<std::size_t>(d)];
        for (std::size_t k = 0; k < width; ++k) {
            polynomial acc;
            if (d >= 2) {
                acc += walks[static_cast<std::size_t>(d - 2)][k] * diag[k];
            }
            const auto &prev = walks[static_cast<std::size_t>(d - 1)];
            if (k > 0) {
                acc += prev[k - 1] * up[k - 1];
            }
            if (k + 1 < width) {
                acc += prev[k + 1] * down[k];
            }
            row[k] = std::move(acc);
        }
    }
    polynomial body;
    for (const auto &row : walks) {
        body += row[0];
    }
    return truncated_series(body, order);
}

// |T|_{11}^{-1} for T = I - A: one plus every closed walk at index 1.
// extra_bound widens the index window beyond what the order requires.
inline truncated_series t_inv_series(const jacobi_spec &spec, int order, int extra_bound = 0)
{
    return closed_walk_sum(spec, 1, order, walk_index_bound(1, order) + extra_bound);
}

// |T|_{11} = 1 - a_{11} - a_{12} W a_{21}, W the closed walks at index 2 that
// stay on indices >= 2.
inline truncated_series t_series(const jacobi_spec &spec, int order, int extra_bound = 0)
{
    const truncated_series inner = closed_walk_sum(spec, 2, order, walk_index_bound(2, order) + extra_bound);
    const polynomial a11 = detail::checked_entry(spec.diag, 1, 2, "diagonal");
    const polynomial a12 = detail::checked_entry(spec.upper, 1, 1, "upper");
    const polynomial a21 = detail::checked_entry(spec.lower, 1, 1, "lower");
    return ts_one<integer>(order) - truncated_series(a11, order) - a12 * inner * a21;
}

inline polynomial t_poly(int n, const jacobi_spec &spec)
{
    detail::require_positive(n, "t_poly");
    return homogeneous_component(t_inv_series(spec, 2 * n).body(), 2 * n);
}

// Monomial counts of t_1 .. t_{n_max}, read off the polynomials.
inline std::vector<std::size_t> schroeder_counts(int n_max, bool zero_corner)
{
    detail::require_positive(n_max, "schroeder_counts");
    const auto spec = zero_corner ? jacobi_spec::generic_zero_corner() : jacobi_spec::generic();
    const truncated_series t = t_inv_series(spec, 2 * n_max);
    std::vector<std::size_t> out;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(monomial_count(homogeneous_component(t.body(), 2 * n)));
    }
    return out;
}

// Number of Schroeder paths of semilength n = 1..n_max: up and down steps of
// length 1, flat steps of length 2, never below height 0. no_ground_flats
// forbids flat steps at height 0 (little Schroeder numbers).
inline std::vector<integer> schroeder_path_counts(int n_max, bool no_ground_flats)
{
    detail::require_positive(n_max, "schroeder_path_counts");
    const auto len = static_cast<std::size_t>(2 * n_max);
    // paths[l][h]: prefixes of length l ending at height h.
    std::vector<std::vector<integer>> paths(len + 1, std::vector<integer>(len + 2));
    paths[0][0] = 1;
    for (std::size_t l = 1; l <= len; ++l) {
        for (std::size_t h = 0; h <= len; ++h) {
            integer c = paths[l - 1][h + 1];
            if (h > 0) {
                c += paths[l - 1][h - 1];
            }
            if (l >= 2 && !(no_ground_flats && h == 0)) {
                c += paths[l - 2][h];
            }
            paths[l][h] = c;
        }
    }
    std::vector<integer> out;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(paths[static_cast<std::size_t>(2 * n)][0]);
    }
    return out;
}

// With a_ii = x - ab, a_{i,i+1} = a, a_{i+1,i} = b: |T|_{11}^{-1} = D and
// |T|_{11} = 1 - x + ab - aDb.
inline check_report specialize_to_D(int order)
{
    const auto spec = jacobi_spec::specialized();
    const truncated_series d_walk = t_inv_series(spec, order);
    const polynomial a(alphabet::a());
    const polynomial b(alphabet::b());
    const polynomial x(alphabet::x());
    const truncated_series expected_t = truncated_series(polynomial(1) - x + a * b, order) - sandwich(d_walk);
    return combine("quasideterminant specialization (degree " + std::to_string(order) + ")",
                   {compare_series("|T|^-1 vs D", D_series(order), d_walk),
                    compare_series("|T| = 1 - x + ab - aDb", expected_t, t_series(spec, order))});
}

inline check_report verify_mutual_inverse(const jacobi_spec &spec, int order)
{
    const auto one = ts_one<integer>(order);
    const auto t = t_series(spec, order);
    const auto ti = t_inv_series(spec, order);
    return combine("|T| * |T|^-1 = 1 (degree " + std::to_string(order) + ")",
                   {compare_series("|T| |T|^-1", one, t * ti), compare_series("|T|^-1 |T|", one, ti * t)});
}

inline check_report verify_index_bound(const jacobi_spec &spec, int order)
{
    return compare_series("index bound soundness (degree " + std::to_string(order) + ")",
                          t_inv_series(spec, order, 2), t_inv_series(spec, order));
}

} // namespace ncs

#endif
