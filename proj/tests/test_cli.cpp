#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include <ncseries/cli.hpp>
#include <ncseries/json.hpp>

#include "gtest_print.hpp"

using namespace ncs;
using namespace ncs::cli;

namespace
{

struct run_result {
    int code;
    std::string out;
    std::string err;
};

run_result family(const std::string &f, int n, family_options opt = {})
{
    std::ostringstream out, err;
    const int code = cmd_family(f, n, opt, out, err);
    return {code, out.str(), err.str()};
}

run_result verify(const std::string &suite, int degree)
{
    std::ostringstream out, err;
    const int code = cmd_verify(suite, degree, false, out, err);
    return {code, out.str(), err.str()};
}

run_result counts(const std::string &f, int n_max, bool zero_diag = false)
{
    std::ostringstream out, err;
    const int code = cmd_counts(f, n_max, zero_diag, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, FamilyText)
{
    EXPECT_EQ(family("d", 3).out, "x^2 + a x b\n");
    EXPECT_EQ(family("c", 1).out, "a b\n");
    EXPECT_EQ(family("u", 2, {x_mode::one}).out, "b a + 1\n");
    EXPECT_EQ(family("c", 2, {x_mode::comm}).out, "a^2 b^2 - a b a b\n");
    EXPECT_EQ(family("t", 1).out, "a_{1,1} + a_{1,2} a_{2,1}\n");
    EXPECT_EQ(family("t", 1, {x_mode::keep, true}).out, "a_{1,2} a_{2,1}\n");
}

TEST(Cli, FamilyJsonRoundTrip)
{
    for (const char *f : {"d", "u", "t"}) {
        family_options opt;
        opt.format = output_format::json;
        const auto r = family(f, 4, opt);
        ASSERT_EQ(r.code, success);
        const auto p = polynomial_from_json(nlohmann::json::parse(r.out));
        const auto text = family(f, 4);
        EXPECT_EQ(canonical_string(p) + "\n", text.out) << f;
    }
    family_options opt;
    opt.format = output_format::json;
    EXPECT_EQ(family("c", 1, opt).out, R"([{"coefficient":"1","word":["a","b"]}])"
                                       "\n");
}

TEST(Cli, Deterministic)
{
    EXPECT_EQ(family("d", 6).out, family("d", 6).out);
    EXPECT_EQ(verify("all", 6).out, verify("all", 6).out);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(family("q", 2).code, usage_error);
    EXPECT_EQ(family("d", 0).code, usage_error);
    EXPECT_EQ(family("d", 2, {x_mode::keep, true}).code, usage_error);
    EXPECT_EQ(family("t", 2, {x_mode::comm}).code, usage_error);
    EXPECT_EQ(verify("nope", 4).code, usage_error);
    EXPECT_EQ(verify("theorem1", -1).code, usage_error);
    EXPECT_EQ(counts("c", 3).code, usage_error);
    EXPECT_EQ(counts("d", 3, true).code, usage_error);
    EXPECT_EQ(counts("d", 0).code, usage_error);
    EXPECT_FALSE(family("q", 2).err.empty());
}

TEST(Cli, Verify)
{
    auto r = verify("theorem1", 12);
    EXPECT_EQ(r.code, success);
    EXPECT_EQ(r.out.rfind("PASS ", 0), 0U);
    EXPECT_EQ(verify("theorem1", 0).code, success);

    r = verify("all", 8);
    EXPECT_EQ(r.code, success) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 9);

    std::ostringstream err;
    warn_if_slow(slow_degree + 1, err);
    EXPECT_NE(err.str().find("warning"), std::string::npos);
    std::ostringstream quiet;
    warn_if_slow(slow_degree, quiet);
    EXPECT_TRUE(quiet.str().empty());
}

TEST(Cli, Counts)
{
    auto r = counts("d", 4);
    EXPECT_EQ(r.code, success);
    EXPECT_EQ(r.out, "n\tcount\tcatalan(n-1)\tmatch\n1\t1\t1\tyes\n2\t1\t1\tyes\n3\t2\t2\tyes\n4\t5\t5\tyes\n");
    r = counts("t", 3, true);
    EXPECT_EQ(r.code, success);
    EXPECT_EQ(r.out, "n\tcount\tlittle-schroeder(n)\tmatch\n1\t1\t1\tyes\n2\t3\t3\tyes\n3\t11\t11\tyes\n");
    EXPECT_EQ(counts("u", 8).code, success);
    EXPECT_EQ(counts("t", 5).code, success);
}
