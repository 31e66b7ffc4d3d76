#ifndef NCSERIES_TESTS_ORACLE_HPP
#define NCSERIES_TESTS_ORACLE_HPP

// Test-only reference implementations. Words are std::strings over single
// character letters 'a', 'b', 'x' (deg x = 2); coefficients are long long.
// Nothing here goes through the library's word/polynomial machinery except
// the final conversion used to compare results.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <ncseries/alphabet.hpp>
#include <ncseries/polynomial.hpp>

namespace oracle
{

using spoly = std::map<std::string, long long>;

inline int degree(const std::string &w)
{
    int d = 0;
    for (char c : w) {
        d += c == 'x' ? 2 : 1;
    }
    return d;
}

inline void normalize(spoly &p)
{
    for (auto it = p.begin(); it != p.end();) {
        it = it->second == 0 ? p.erase(it) : std::next(it);
    }
}

inline spoly add(spoly p, const spoly &q, long long scale = 1)
{
    for (const auto &[w, c] : q) {
        p[w] += scale * c;
    }
    normalize(p);
    return p;
}

inline spoly mul(const spoly &p, const spoly &q, int max_degree = 1 << 20)
{
    spoly r;
    for (const auto &[u, c] : p) {
        for (const auto &[v, e] : q) {
            if (degree(u) + degree(v) <= max_degree) {
                r[u + v] += c * e;
            }
        }
    }
    normalize(r);
    return r;
}

inline spoly trunc(const spoly &p, int max_degree)
{
    spoly r;
    for (const auto &[w, c] : p) {
        if (degree(w) <= max_degree) {
            r[w] = c;
        }
    }
    return r;
}

// Letter-by-letter expansion of a homomorphism given by per-letter images.
inline spoly subst(const spoly &p, const std::map<char, spoly> &images)
{
    spoly r;
    for (const auto &[w, c] : p) {
        spoly acc{{"", c}};
        for (char ch : w) {
            auto it = images.find(ch);
            acc = mul(acc, it == images.end() ? spoly{{std::string(1, ch), 1}} : it->second);
        }
        r = add(r, acc);
    }
    return r;
}

inline ncs::polynomial to_poly(const spoly &p)
{
    ncs::polynomial r;
    for (const auto &[w, c] : p) {
        std::vector<ncs::variable> letters;
        for (char ch : w) {
            letters.push_back(ch == 'a' ? ncs::alphabet::a() : ch == 'b' ? ncs::alphabet::b() : ncs::alphabet::x());
        }
        r.add_term(ncs::word(std::move(letters)), ncs::integer(c));
    }
    return r;
}

inline const spoly commutator{{"ab", 1}, {"ba", -1}};

// Binomial form C_n = (2n choose n) / (n + 1).
inline long long catalan_binomial(int n)
{
    long long c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
}

// Brute force over all step strings {u, d, f} of semilength n staying >= 0;
// f is flat of length 2. Counts Schroeder paths (no flats at height 0 when
// no_ground_flats).
inline long long schroeder_brute(int n, bool no_ground_flats)
{
    long long count = 0;
    std::function<void(int, int)> rec = [&](int len, int h) {
        if (len == 2 * n) {
            count += h == 0 ? 1 : 0;
            return;
        }
        if (h > 2 * n - len) {
            return;
        }
        rec(len + 1, h + 1);
        if (h > 0) {
            rec(len + 1, h - 1);
        }
        if (len + 2 <= 2 * n && !(no_ground_flats && h == 0)) {
            rec(len + 2, h);
        }
    };
    rec(0, 0);
    return count;
}

// Random polynomial over {a, b, x} with words of degree <= max_degree.
inline spoly random_spoly(std::mt19937 &rng, int terms, int max_degree, bool allow_constant = true)
{
    if (!allow_constant && max_degree < 1) {
        return {};
    }
    std::uniform_int_distribution<int> letter(0, 2);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> len(allow_constant ? 0 : 1, max_degree);
    spoly p;
    for (int t = 0; t < terms; ++t) {
        std::string w;
        const int target = len(rng);
        while (true) {
            const char ch = "abx"[letter(rng)];
            if (degree(w) + degree(std::string(1, ch)) > target) {
                break;
            }
            w += ch;
        }
        if (!allow_constant && w.empty()) {
            w = "a";
        }
        p[w] += coef(rng);
    }
    normalize(p);
    return p;
}

} // namespace oracle

#endif
