#ifndef NCSERIES_ALPHABET_HPP
#define NCSERIES_ALPHABET_HPP

#include <optional>
#include <string_view>

#include <ncseries/polynomial.hpp>
#include <ncseries/variable.hpp>

namespace ncs
{

// Grading used throughout: deg a = deg b = 1, deg x = 2; a diagonal matrix
// entry a_{i,i} has degree 2 and an off-diagonal one degree 1.
namespace alphabet
{

inline const variable &a()
{
    static const variable v("a", 1);
    return v;
}

inline const variable &b()
{
    static const variable v("b", 1);
    return v;
}

inline const variable &x()
{
    static const variable v("x", 2);
    return v;
}

inline variable entry(int row, int col)
{
    return variable("a", row, col, row == col ? 2 : 1);
}

// Degree of a letter as it appears in text; unknown plain names are degree 1.
inline int default_degree(std::string_view name, const std::optional<entry_index> &idx)
{
    if (idx) {
        return idx->row == idx->col ? 2 : 1;
    }
    return name == "x" ? 2 : 1;
}

// ab - ba
inline polynomial commutator()
{
    polynomial ab(word{a(), b()});
    polynomial ba(word{b(), a()});
    return ab - ba;
}

} // namespace alphabet

} // namespace ncs

#endif
