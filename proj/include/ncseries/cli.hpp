#ifndef NCSERIES_CLI_HPP
#define NCSERIES_CLI_HPP

#include <chrono>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <ncseries/families.hpp>
#include <ncseries/json.hpp>
#include <ncseries/quasidet.hpp>
#include <ncseries/report.hpp>
#include <ncseries/text.hpp>
#include <ncseries/walks.hpp>

// Command implementations behind the ncseries tool. Each returns the process
// exit code and writes only to the given streams.
namespace ncs::cli
{

enum exit_code : int { success = 0, verification_failure = 1, usage_error = 2 };

enum class x_mode { keep, comm, one };
enum class output_format { text, json };

struct family_options {
    x_mode x = x_mode::keep;
    bool zero_diag = false;
    output_format format = output_format::text;
};

inline constexpr int slow_degree = 24;

inline void warn_if_slow(int degree, std::ostream &err)
{
    if (degree > slow_degree) {
        err << "warning: degree " << degree << " exceeds " << slow_degree
            << "; runtime grows combinatorially\n";
    }
}

inline int cmd_family(const std::string &family, int n, const family_options &opt, std::ostream &out,
                      std::ostream &err)
{
    if (n < 1) {
        err << "error: n must be >= 1\n";
        return usage_error;
    }
    polynomial p;
    if (family == "d" || family == "c" || family == "u") {
        if (opt.zero_diag) {
            err << "error: --zero-diag only applies to family t\n";
            return usage_error;
        }
        p = family == "d" ? d_poly(n) : family == "c" ? c_poly(n) : u_poly(n);
        if (opt.x == x_mode::comm) {
            p = substitute(p, commutator_substitution());
        } else if (opt.x == x_mode::one) {
            p = substitute(p, unit_substitution());
        }
    } else if (family == "t") {
        if (opt.x != x_mode::keep) {
            err << "error: --x does not apply to family t\n";
            return usage_error;
        }
        p = t_poly(n, opt.zero_diag ? jacobi_spec::generic_zero_corner() : jacobi_spec::generic());
    } else {
        err << "error: unknown family '" << family << "' (expected d, c, u or t)\n";
        return usage_error;
    }
    if (opt.format == output_format::json) {
        out << to_json(p).dump() << '\n';
    } else {
        out << canonical_string(p) << '\n';
    }
    return success;
}

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"theorem1", "eq2",        "eq3-sec2",   "theorem4", "remark5",
                                                "extraction", "involution", "dyck",   "quasidet"};
    return names;
}

inline bool is_suite(const std::string &s)
{
    if (s == "all") {
        return true;
    }
    for (const auto &n : suite_names()) {
        if (n == s) {
            return true;
        }
    }
    return false;
}

// Reports for one named suite at the given truncation degree.
inline std::vector<check_report> run_suite(const std::string &suite, int degree)
{
    std::vector<check_report> r;
    auto add = [&](auto fn) { r.push_back(timed(fn)); };
    if (suite == "theorem1") {
        add([&] { return verify_theorem1(degree); });
    } else if (suite == "eq2") {
        add([&] { return verify_eq2(degree); });
    } else if (suite == "eq3-sec2") {
        add([&] { return verify_eq3(degree); });
    } else if (suite == "theorem4") {
        add([&] { return verify_theorem4(degree); });
        add([&] { return verify_bridge(degree); });
        add([&] { return verify_u_counts(degree / 2 + 1); });
    } else if (suite == "remark5") {
        add([&] { return verify_remark5(degree); });
    } else if (suite == "extraction") {
        add([&] { return verify_inverse_extraction(degree); });
    } else if (suite == "involution") {
        add([&] { return verify_involution(degree / 2); });
    } else if (suite == "dyck") {
        add([&] { return verify_dyck(degree); });
    } else if (suite == "quasidet") {
        add([&] { return specialize_to_D(degree); });
        add([&] { return verify_mutual_inverse(jacobi_spec::generic(), degree); });
        add([&] { return verify_index_bound(jacobi_spec::generic(), degree); });
    } else if (suite == "all") {
        for (const auto &s : suite_names()) {
            auto part = run_suite(s, degree);
            r.insert(r.end(), part.begin(), part.end());
        }
    }
    return r;
}

inline int cmd_verify(const std::string &suite, int degree, bool timings, std::ostream &out, std::ostream &err)
{
    if (!is_suite(suite)) {
        err << "error: unknown suite '" << suite << "'\n";
        return usage_error;
    }
    if (degree < 0) {
        err << "error: degree must be >= 0\n";
        return usage_error;
    }
    warn_if_slow(degree, err);
    bool ok = true;
    for (const auto &r : run_suite(suite, degree)) {
        out << r;
        if (timings) {
            out << " (" << std::fixed << std::setprecision(3) << r.elapsed.count() << "s)";
        }
        out << '\n';
        ok = ok && r.passed;
    }
    return ok ? success : verification_failure;
}

inline int cmd_counts(const std::string &family, int n_max, bool zero_diag, std::ostream &out, std::ostream &err)
{
    if (n_max < 1) {
        err << "error: n_max must be >= 1\n";
        return usage_error;
    }
    if (zero_diag && family != "t") {
        err << "error: --zero-diag only applies to family t\n";
        return usage_error;
    }
    std::vector<std::size_t> counts;
    std::vector<integer> expected;
    std::string label;
    if (family == "d") {
        const auto cat = catalan_numbers(n_max);
        for (const auto &d : d_polys(n_max)) {
            counts.push_back(monomial_count(d));
        }
        expected.assign(cat.begin(), cat.end() - 1);
        label = "catalan(n-1)";
    } else if (family == "u") {
        const auto cat = catalan_numbers(n_max);
        for (const auto &u : u_polys(n_max)) {
            counts.push_back(monomial_count(u));
        }
        expected.assign(cat.begin() + 1, cat.end());
        label = "catalan(n)";
    } else if (family == "t") {
        counts = schroeder_counts(n_max, zero_diag);
        expected = schroeder_path_counts(n_max, zero_diag);
        label = zero_diag ? "little-schroeder(n)" : "large-schroeder(n)";
    } else {
        err << "error: unknown family '" << family << "' (expected d, u or t)\n";
        return usage_error;
    }
    out << "n\tcount\t" << label << "\tmatch\n";
    bool ok = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const bool match = integer(counts[i]) == expected[i];
        ok = ok && match;
        out << i + 1 << '\t' << counts[i] << '\t' << expected[i] << '\t' << (match ? "yes" : "NO") << '\n';
    }
    return ok ? success : verification_failure;
}

} // namespace ncs::cli

#endif
