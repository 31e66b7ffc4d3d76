#ifndef NCSERIES_REPORT_HPP
#define NCSERIES_REPORT_HPP

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <ncseries/polynomial.hpp>
#include <ncseries/series.hpp>
#include <ncseries/text.hpp>

namespace ncs
{

// Where two sides of an identity first disagree.
struct witness {
    int degree = 0;
    std::string word;
    std::string expected;
    std::string actual;
    std::string note;
};

struct check_report {
    std::string name;
    bool passed = true;
    std::optional<witness> failure;
    std::chrono::duration<double> elapsed{};

    explicit operator bool() const noexcept
    {
        return passed;
    }
};

inline check_report pass_report(std::string name)
{
    return check_report{std::move(name), true, std::nullopt, {}};
}

inline check_report fail_report(std::string name, witness w)
{
    return check_report{std::move(name), false, std::move(w), {}};
}

// Lowest-degree disagreement between two polynomials; the offending word is the
// first of that degree in presentation order.
inline std::optional<witness> first_difference(const polynomial &expected, const polynomial &actual)
{
    const polynomial diff = actual - expected;
    if (diff.is_zero()) {
        return std::nullopt;
    }
    const int d = diff.low_degree();
    const auto terms = presentation_terms(homogeneous_component(diff, d));
    const word &w = terms.front().first;
    return witness{d, word_string(w), coefficient_string(expected.coefficient(w)),
                   coefficient_string(actual.coefficient(w)), {}};
}

inline check_report compare_polynomials(std::string name, const polynomial &expected, const polynomial &actual)
{
    if (auto w = first_difference(expected, actual)) {
        return fail_report(std::move(name), std::move(*w));
    }
    return pass_report(std::move(name));
}

inline check_report compare_series(std::string name, const truncated_series &expected, const truncated_series &actual)
{
    if (expected.order() != actual.order()) {
        return fail_report(std::move(name),
                           witness{0, "", "order " + std::to_string(expected.order()),
                                   "order " + std::to_string(actual.order()), "truncation order mismatch"});
    }
    return compare_polynomials(std::move(name), expected.body(), actual.body());
}

// Conjunction of several reports under one name; keeps the first failure.
inline check_report combine(std::string name, std::initializer_list<check_report> parts)
{
    for (const auto &p : parts) {
        if (!p.passed) {
            auto w = p.failure.value_or(witness{});
            if (w.note.empty()) {
                w.note = p.name;
            } else {
                w.note = p.name + ": " + w.note;
            }
            return fail_report(std::move(name), std::move(w));
        }
    }
    return pass_report(std::move(name));
}

// Runs fn, stamping the elapsed wall time on its report.
template <typename Fn>
check_report timed(Fn &&fn)
{
    const auto start = std::chrono::steady_clock::now();
    check_report r = std::forward<Fn>(fn)();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

inline std::ostream &operator<<(std::ostream &os, const check_report &r)
{
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (r.failure) {
        const auto &w = *r.failure;
        if (!w.note.empty()) {
            os << " [" << w.note << "]";
        }
        os << " degree=" << w.degree << " word=\"" << w.word << "\" expected=" << w.expected
           << " actual=" << w.actual;
    }
    return os;
}

} // namespace ncs

#endif
