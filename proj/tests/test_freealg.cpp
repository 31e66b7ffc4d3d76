#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <ncseries/alphabet.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/text.hpp>

#include "gtest_print.hpp"
#include "oracle.hpp"

using namespace ncs;

namespace
{

polynomial P(const char *s)
{
    return parse_polynomial(s);
}

word W(const char *s)
{
    const auto p = P(s);
    return p.begin()->first;
}

} // namespace

TEST(Variable, Invariants)
{
    EXPECT_THROW(variable("", 1), std::invalid_argument);
    EXPECT_THROW(variable("a", 0), std::invalid_argument);
    EXPECT_THROW(variable("a", 0, 1, 1), std::invalid_argument);

    // Equality ignores the grading weight.
    EXPECT_EQ(variable("a", 1), variable("a", 3));
    EXPECT_NE(alphabet::entry(1, 2), alphabet::entry(2, 1));

    EXPECT_LT(alphabet::a(), alphabet::b());
    EXPECT_LT(alphabet::b(), alphabet::x());
    EXPECT_LT(alphabet::x(), alphabet::entry(1, 1));
    EXPECT_LT(alphabet::entry(1, 2), alphabet::entry(2, 1));
    EXPECT_EQ(alphabet::entry(2, 2).degree(), 2);
    EXPECT_EQ(alphabet::entry(2, 3).degree(), 1);
}

TEST(Word, Concat)
{
    EXPECT_EQ(word_concat(W("a b"), W("b a")), W("a b b a"));
    EXPECT_EQ(word_concat(word{}, W("a x b")), W("a x b"));
    const word xx = word_concat(W("x"), W("x"));
    EXPECT_EQ(xx, W("x^2"));
    EXPECT_EQ(xx.degree(), 4);
    EXPECT_EQ(word{}.degree(), 0);
}

TEST(Polynomial, Add)
{
    EXPECT_TRUE(poly_add(P("a b"), P("-a b")).is_zero());
    EXPECT_EQ(poly_add(P("x^2"), P("a x b")), P("x^2 + a x b"));
    EXPECT_EQ(poly_add(P("b a + x"), P("x")), P("b a + 2 x"));
}

TEST(Polynomial, MulIsNonCommutative)
{
    EXPECT_EQ(poly_mul(P("a"), P("b")), P("a b"));
    EXPECT_EQ(poly_mul(P("b"), P("a")), P("b a"));
    EXPECT_NE(P("a b"), P("b a"));
    EXPECT_EQ(poly_mul(P("a"), poly_mul(P("x"), P("b"))), P("a x b"));
}

TEST(Polynomial, CommutatorSquare)
{
    // Oracle: naive string product; frozen expectation below.
    const auto expected = oracle::mul(oracle::commutator, oracle::commutator);
    const oracle::spoly frozen{{"abab", 1}, {"abba", -1}, {"baab", -1}, {"baba", 1}};
    ASSERT_EQ(expected, frozen);
    const auto c = alphabet::commutator();
    EXPECT_EQ(poly_mul(c, c), oracle::to_poly(frozen));
}

TEST(Polynomial, ZeroDegreeSentinel)
{
    EXPECT_EQ(polynomial{}.degree(), -1);
    EXPECT_EQ(P("1").degree(), 0);
    EXPECT_EQ(P("x^2 + a").degree(), 4);
    polynomial p;
    p.add_term(W("a"), integer(0));
    EXPECT_TRUE(p.is_zero());
}

TEST(Polynomial, HomogeneousComponent)
{
    EXPECT_EQ(homogeneous_component(P("x^2 + a x b"), 4), P("x^2 + a x b"));
    EXPECT_TRUE(homogeneous_component(P("x^2 + a x b"), 2).is_zero());
    EXPECT_EQ(homogeneous_component(P("1 + x + x x"), 2), P("x"));
}

TEST(Polynomial, Substitute)
{
    const substitution_map<integer> comm{{alphabet::x(), alphabet::commutator()}};
    EXPECT_EQ(substitute(P("x"), comm), P("a b - b a"));

    const auto expected = oracle::subst({{"xx", 1}, {"axb", 1}}, {{'x', oracle::commutator}});
    const oracle::spoly frozen{{"aabb", 1}, {"abba", -1}, {"baab", -1}, {"baba", 1}};
    ASSERT_EQ(expected, frozen);
    EXPECT_EQ(substitute(P("x^2 + a x b"), comm), oracle::to_poly(frozen));

    const substitution_map<integer> one{{alphabet::x(), polynomial(1)}};
    EXPECT_EQ(substitute(P("b a b a + x b a + b a x + a x b + x^2"), one), P("b a b a + 2 b a + a b + 1"));

    // Letters without an image are fixed.
    EXPECT_EQ(substitute(P("a b"), comm), P("a b"));
}

TEST(Polynomial, SubstituteTruncates)
{
    const substitution_map<integer> comm{{alphabet::x(), alphabet::commutator()}};
    EXPECT_EQ(substitute(P("x^2 + a"), comm, 3), P("a"));
}

TEST(Polynomial, MonomialCount)
{
    EXPECT_EQ(monomial_count(P("x^3 + a x^2 b + a x b x + x a x b + a^2 x b^2")), 5U);
    EXPECT_EQ(monomial_count(polynomial{}), 0U);
}

TEST(CanonicalString, Examples)
{
    EXPECT_EQ(canonical_string(P("x")), "x");
    EXPECT_EQ(canonical_string(P("a x b + x x")), "x^2 + a x b");
    EXPECT_EQ(canonical_string(polynomial{}), "0");
    EXPECT_EQ(canonical_string(P("1 + b a")), "b a + 1");
    EXPECT_EQ(canonical_string(P("-a b + a a b b")), "a^2 b^2 - a b");
    EXPECT_EQ(canonical_string(P("-3 b a - 2")), "-3 b a - 2");
    EXPECT_EQ(canonical_string(P("a_{1,2} a_{2,1} + a_{1,1}")), "a_{1,1} + a_{1,2} a_{2,1}");
    EXPECT_EQ(canonical_string(P("a_{10,11} a_{11,10}")), "a_{10,11} a_{11,10}");
}

TEST(CanonicalString, ParseErrors)
{
    EXPECT_THROW(P("a +"), std::invalid_argument);
    EXPECT_THROW(P("a ^ 2"), std::invalid_argument);
    EXPECT_THROW(P("a_{1,}"), std::invalid_argument);
    EXPECT_THROW(P("x^1"), std::invalid_argument);
    EXPECT_THROW(P("a * b"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Properties

namespace
{

std::vector<polynomial> short_words()
{
    std::vector<std::string> ws{""};
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::string> next;
        for (const auto &w : ws) {
            if (static_cast<int>(w.size()) == len - 1) {
                for (char c : std::string("abx")) {
                    next.push_back(w + c);
                }
            }
        }
        ws.insert(ws.end(), next.begin(), next.end());
    }
    std::vector<polynomial> out;
    for (const auto &w : ws) {
        out.push_back(oracle::to_poly({{w, 1}}));
    }
    return out;
}

} // namespace

TEST(FreeAlgebraProperties, ExhaustiveShortWords)
{
    const auto words = short_words();
    ASSERT_EQ(words.size(), 40U);
    const polynomial one(1);
    for (const auto &u : words) {
        EXPECT_EQ(one * u, u);
        EXPECT_EQ(u * one, u);
        for (const auto &v : words) {
            for (const auto &w : words) {
                ASSERT_EQ((u * v) * w, u * (v * w));
                ASSERT_EQ(u * (v + w), u * v + u * w);
                ASSERT_EQ((u + v) * w, u * w + v * w);
            }
        }
    }
}

TEST(FreeAlgebraProperties, RandomRingAxiomsAgainstOracle)
{
    std::mt19937 rng(20121026);
    for (int it = 0; it < 200; ++it) {
        const auto p = oracle::random_spoly(rng, 5, 4);
        const auto q = oracle::random_spoly(rng, 5, 4);
        const auto r = oracle::random_spoly(rng, 5, 4);
        const auto P1 = oracle::to_poly(p), Q1 = oracle::to_poly(q), R1 = oracle::to_poly(r);
        ASSERT_EQ(P1 * Q1, oracle::to_poly(oracle::mul(p, q)));
        ASSERT_EQ(P1 + Q1, oracle::to_poly(oracle::add(p, q)));
        ASSERT_EQ((P1 * Q1) * R1, P1 * (Q1 * R1));
        ASSERT_EQ(P1 * (Q1 + R1), P1 * Q1 + P1 * R1);
    }
}

TEST(FreeAlgebraProperties, SubstituteIsHomomorphism)
{
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        const auto p = oracle::to_poly(oracle::random_spoly(rng, 4, 6));
        const auto q = oracle::to_poly(oracle::random_spoly(rng, 4, 6));
        const substitution_map<integer> images{
            {alphabet::x(), oracle::to_poly(oracle::random_spoly(rng, 3, 3))},
            {alphabet::a(), oracle::to_poly(oracle::random_spoly(rng, 2, 2))}};
        ASSERT_EQ(substitute(p * q, images), substitute(p, images) * substitute(q, images));
        ASSERT_EQ(substitute(p + q, images), substitute(p, images) + substitute(q, images));
    }
}

TEST(FreeAlgebraProperties, CanonicalStringRoundTrip)
{
    std::mt19937 rng(99);
    std::vector<std::pair<polynomial, std::string>> seen;
    for (int it = 0; it < 300; ++it) {
        const auto p = oracle::to_poly(oracle::random_spoly(rng, 4, 5));
        const auto s = canonical_string(p);
        ASSERT_EQ(parse_polynomial(s), p) << s;
        for (const auto &[q, t] : seen) {
            ASSERT_EQ(p == q, s == t);
        }
        seen.emplace_back(p, s);
    }
}

TEST(FreeAlgebraProperties, HomogeneousComponentsPartition)
{
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        const auto p = oracle::to_poly(oracle::random_spoly(rng, 6, 6));
        polynomial sum;
        for (int d = 0; d <= p.degree(); ++d) {
            sum += homogeneous_component(p, d);
        }
        ASSERT_EQ(sum, p);
    }
}
