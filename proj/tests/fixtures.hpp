#ifndef NCSERIES_TESTS_FIXTURES_HPP
#define NCSERIES_TESTS_FIXTURES_HPP

// Reference listings of d_n, u_n (symbolic and at x = 1) and t_n, transcribed
// with (ba)^k written out. The *_as_printed strings keep the original
// misprints; the plain ones correct them (see the notes on each).

namespace fixtures
{

inline constexpr const char *d[] = {
    "1",
    "x",
    "x^2 + a x b",
    "x^3 + a x^2 b + a x b x + x a x b + a^2 x b^2",
    // printed with "x a x b^2" (degree 7) in place of x a^2 x b^2
    "x^4 + a x^2 b x + a x b x^2 + x a x b x + a^2 x b^2 x + x^2 a x b + a x b a x b"
    " + x a x^2 b + x a^2 x b^2 + a x^3 b + a^2 x^2 b^2 + a^2 x b x b + a x a x b^2 + a^3 x b^3",
};

inline constexpr const char *d5_as_printed =
    "x^4 + a x^2 b x + a x b x^2 + x a x b x + a^2 x b^2 x + x^2 a x b + a x b a x b"
    " + x a x^2 b + x a x b^2 + a x^3 b + a^2 x^2 b^2 + a^2 x b x b + a x a x b^2 + a^3 x b^3";

inline constexpr const char *u[] = {
    "1",
    "b a + x",
    "b a b a + x b a + b a x + a x b + x^2",
    // printed with "a^2 x b" (degree 5) and "a x^2 b^2" (degree 7) in place of
    // a^2 x b^2 and a x^2 b
    "b a b a b a + x b a b a + b a x b a + b a b a x + a^2 x b^2 + a x b^2 a + b a^2 x b"
    " + x^2 b a + x b a x + b a x^2 + a x^2 b + a x b x + x a x b + x^3",
};

inline constexpr const char *u4_as_printed =
    "b a b a b a + x b a b a + b a x b a + b a b a x + a^2 x b + a x b^2 a + b a^2 x b"
    " + x^2 b a + x b a x + b a x^2 + a x^2 b^2 + a x b x + x a x b + x^3";

inline constexpr const char *u_x1[] = {
    "1",
    "b a + 1",
    "b a b a + 2 b a + a b + 1",
    // printed with "a b^2" (three letters, unbalanced) in place of a b^2 a
    "b a b a b a + 3 b a b a + a b^2 a + b a^2 b + a^2 b^2 + 3 b a + 3 a b + 1",
};

inline constexpr const char *u4_x1_as_printed =
    "b a b a b a + 3 b a b a + a b^2 + b a^2 b + a^2 b^2 + 3 b a + 3 a b + 1";

inline constexpr const char *t[] = {
    "a_{1,1} + a_{1,2} a_{2,1}",
    "a_{1,1}^2 + a_{1,1} a_{1,2} a_{2,1} + a_{1,2} a_{2,1} a_{1,1} + a_{1,2} a_{2,2} a_{2,1}"
    " + a_{1,2} a_{2,1} a_{1,2} a_{2,1} + a_{1,2} a_{2,3} a_{3,2} a_{2,1}",
};

} // namespace fixtures

#endif
