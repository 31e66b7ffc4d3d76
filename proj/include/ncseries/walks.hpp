#ifndef NCSERIES_WALKS_HPP
#define NCSERIES_WALKS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ncseries/alphabet.hpp>
#include <ncseries/families.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/report.hpp>
#include <ncseries/series.hpp>

namespace ncs
{

// Lattice steps in the (i, j) plane. Enumeration visits them in this order.
enum class step : std::uint8_t {
    horizontal, // (i, j) -> (i + 1, j), weight a
    diagonal,   // (i, j) -> (i + 1, j + 1), weight x
    vertical,   // (i, j) -> (i, j + 1), weight b
};

struct lattice_point {
    int i = 0;
    int j = 0;

    friend constexpr bool operator==(const lattice_point &, const lattice_point &) = default;
};

inline lattice_point advance(lattice_point p, step s) noexcept
{
    switch (s) {
        case step::horizontal:
            return {p.i + 1, p.j};
        case step::diagonal:
            return {p.i + 1, p.j + 1};
        case step::vertical:
            return {p.i, p.j + 1};
    }
    return p;
}

inline const variable &step_weight(step s)
{
    switch (s) {
        case step::horizontal:
            return alphabet::a();
        case step::vertical:
            return alphabet::b();
        case step::diagonal:
            break;
    }
    return alphabet::x();
}

inline char step_char(step s) noexcept
{
    return s == step::horizontal ? 'a' : s == step::vertical ? 'b' : 'x';
}

// A walk from the origin stored as its steps; positions are derived.
class lattice_path
{
public:
    lattice_path() = default;
    explicit lattice_path(std::vector<step> steps) : m_steps(std::move(steps)) {}

    // From a string over {a, b, x}.
    static lattice_path from_string(std::string_view s)
    {
        std::vector<step> steps;
        for (char c : s) {
            switch (c) {
                case 'a':
                    steps.push_back(step::horizontal);
                    break;
                case 'b':
                    steps.push_back(step::vertical);
                    break;
                case 'x':
                    steps.push_back(step::diagonal);
                    break;
                default:
                    throw std::invalid_argument(std::string("invalid step letter '") + c + "'");
            }
        }
        return lattice_path(std::move(steps));
    }

    const std::vector<step> &steps() const noexcept
    {
        return m_steps;
    }
    std::size_t size() const noexcept
    {
        return m_steps.size();
    }
    bool empty() const noexcept
    {
        return m_steps.empty();
    }
    step operator[](std::size_t k) const
    {
        return m_steps[k];
    }

    std::vector<lattice_point> vertices() const
    {
        std::vector<lattice_point> v{{0, 0}};
        for (auto s : m_steps) {
            v.push_back(advance(v.back(), s));
        }
        return v;
    }

    lattice_point end_point() const
    {
        lattice_point p;
        for (auto s : m_steps) {
            p = advance(p, s);
        }
        return p;
    }

    std::size_t diagonal_count() const noexcept
    {
        std::size_t r = 0;
        for (auto s : m_steps) {
            r += s == step::diagonal ? 1 : 0;
        }
        return r;
    }

    // Ordered product of step weights.
    word weight() const
    {
        std::vector<variable> letters;
        letters.reserve(m_steps.size());
        for (auto s : m_steps) {
            letters.push_back(step_weight(s));
        }
        return word(std::move(letters));
    }

    std::string str() const
    {
        std::string out;
        for (auto s : m_steps) {
            out += step_char(s);
        }
        return out;
    }

    friend bool operator==(const lattice_path &, const lattice_path &) = default;

private:
    std::vector<step> m_steps;
};

// ---------------------------------------------------------------------------
// Staircase walks

// Walk from (0,0) to (n-1, n-1) that never leaves i >= j and never takes a
// horizontal step immediately followed by a vertical one.
inline bool is_staircase_walk(const lattice_path &p, int n)
{
    if (n < 1) {
        return false;
    }
    lattice_point pos;
    std::optional<step> prev;
    for (auto s : p.steps()) {
        if (prev == step::horizontal && s == step::vertical) {
            return false;
        }
        pos = advance(pos, s);
        if (pos.i < pos.j) {
            return false;
        }
        prev = s;
    }
    return pos == lattice_point{n - 1, n - 1};
}

namespace detail
{

inline void staircase_dfs(int target, lattice_point pos, std::optional<step> prev, std::vector<step> &cur,
                          std::vector<lattice_path> &out)
{
    if (pos == lattice_point{target, target}) {
        out.emplace_back(cur);
        return;
    }
    for (step s : {step::horizontal, step::diagonal, step::vertical}) {
        if (s == step::vertical && prev == step::horizontal) {
            continue;
        }
        const lattice_point next = advance(pos, s);
        if (next.i > target || next.j > target || next.i < next.j) {
            continue;
        }
        cur.push_back(s);
        staircase_dfs(target, next, s, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// All staircase walks to (n-1, n-1), depth-first in step order H < D < V.
inline std::vector<lattice_path> enumerate_staircase(int n)
{
    detail::require_positive(n, "enumerate_staircase");
    std::vector<lattice_path> out;
    std::vector<step> cur;
    detail::staircase_dfs(n - 1, {}, std::nullopt, cur, out);
    return out;
}

inline polynomial weight_enumerator(const std::vector<lattice_path> &paths)
{
    polynomial r;
    for (const auto &p : paths) {
        r.add_term(p.weight(), integer(1));
    }
    return r;
}

inline polynomial staircase_weight_enumerator(int n)
{
    return weight_enumerator(enumerate_staircase(n));
}

// c_n-walk: a horizontal step, a staircase walk for n shifted to start at
// (1, 0), and a vertical step. It runs from (0,0) to (n,n) strictly below the
// diagonal except at its endpoints.
inline bool is_cn_walk(const lattice_path &p, int n)
{
    if (p.size() < 2 || p[0] != step::horizontal || p[p.size() - 1] != step::vertical) {
        return false;
    }
    lattice_path inner(std::vector<step>(p.steps().begin() + 1, p.steps().end() - 1));
    return is_staircase_walk(inner, n);
}

inline std::vector<lattice_path> enumerate_cn_paths(int n)
{
    std::vector<lattice_path> out;
    for (const auto &p : enumerate_staircase(n)) {
        std::vector<step> s{step::horizontal};
        s.insert(s.end(), p.steps().begin(), p.steps().end());
        s.push_back(step::vertical);
        out.emplace_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Children of c_n-walks and the sign-reversing involution

// A c_n-walk together with one resolution of its diagonal steps: each becomes
// ab (horizontal then vertical, sign +1) or ba (vertical then horizontal,
// sign -1).
class expanded_pair
{
public:
    // choices[r] is true when the r-th diagonal step becomes ba.
    expanded_pair(lattice_path parent, std::vector<bool> choices)
        : m_parent(std::move(parent)), m_choices(std::move(choices))
    {
        if (m_choices.size() != m_parent.diagonal_count()) {
            throw std::invalid_argument("one choice is required per diagonal step");
        }
        std::vector<step> child;
        std::size_t r = 0;
        for (auto s : m_parent.steps()) {
            if (s != step::diagonal) {
                child.push_back(s);
            } else if (m_choices[r++]) {
                m_sign = -m_sign;
                child.push_back(step::vertical);
                child.push_back(step::horizontal);
            } else {
                child.push_back(step::horizontal);
                child.push_back(step::vertical);
            }
        }
        m_child = lattice_path(std::move(child));
    }

    const lattice_path &parent() const noexcept
    {
        return m_parent;
    }
    const std::vector<bool> &choices() const noexcept
    {
        return m_choices;
    }
    const lattice_path &child() const noexcept
    {
        return m_child;
    }
    int sign() const noexcept
    {
        return m_sign;
    }

    friend bool operator==(const expanded_pair &l, const expanded_pair &r)
    {
        return l.m_parent == r.m_parent && l.m_choices == r.m_choices;
    }

private:
    lattice_path m_parent;
    std::vector<bool> m_choices;
    lattice_path m_child;
    int m_sign = 1;
};

inline std::vector<expanded_pair> expand_children(const lattice_path &path)
{
    const std::size_t r = path.diagonal_count();
    if (r >= 31) {
        throw std::invalid_argument("too many diagonal steps to expand");
    }
    std::vector<expanded_pair> out;
    for (std::uint32_t mask = 0; mask < (1U << r); ++mask) {
        std::vector<bool> choices(r);
        for (std::size_t k = 0; k < r; ++k) {
            choices[k] = ((mask >> k) & 1U) != 0;
        }
        out.emplace_back(path, std::move(choices));
    }
    return out;
}

inline std::vector<expanded_pair> all_pairs(int n)
{
    std::vector<expanded_pair> out;
    for (const auto &p : enumerate_cn_paths(n)) {
        auto kids = expand_children(p);
        out.insert(out.end(), kids.begin(), kids.end());
    }
    return out;
}

// Position k of the first letter of the leftmost "ba" in the child whose
// middle vertex (after the b) lies strictly below the diagonal.
inline std::optional<std::size_t> first_subdiagonal_valley(const lattice_path &child)
{
    lattice_point pos;
    const auto &s = child.steps();
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        pos = advance(pos, s[k]);
        if (s[k] == step::vertical && s[k + 1] == step::horizontal && pos.i > pos.j) {
            return k;
        }
    }
    return std::nullopt;
}

enum class pair_class { good, bad };

inline pair_class classify_pair(const expanded_pair &p)
{
    return first_subdiagonal_valley(p.child()) ? pair_class::bad : pair_class::good;
}

// K = w1 (ba)^s w2 with w1 free of sub-diagonal ba and s maximal.
struct bad_factorization {
    std::size_t prefix_length = 0;
    std::size_t s = 0;
};

inline std::optional<bad_factorization> factor_child(const lattice_path &child)
{
    const auto k = first_subdiagonal_valley(child);
    if (!k) {
        return std::nullopt;
    }
    std::size_t s = 0;
    for (std::size_t pos = *k; pos + 1 < child.size() && child[pos] == step::vertical
                               && child[pos + 1] == step::horizontal;
         pos += 2) {
        ++s;
    }
    return bad_factorization{*k, s};
}

namespace detail
{

// How a parent covers the child's letters: one tile per parent step.
enum class tile : std::uint8_t { mono_a, mono_b, dom_ab, dom_ba };

inline std::size_t tile_len(tile t) noexcept
{
    return t == tile::dom_ab || t == tile::dom_ba ? 2 : 1;
}

inline std::vector<tile> tiles_of(const expanded_pair &p)
{
    std::vector<tile> out;
    std::size_t r = 0;
    for (auto s : p.parent().steps()) {
        switch (s) {
            case step::horizontal:
                out.push_back(tile::mono_a);
                break;
            case step::vertical:
                out.push_back(tile::mono_b);
                break;
            case step::diagonal:
                out.push_back(p.choices()[r++] ? tile::dom_ba : tile::dom_ab);
                break;
        }
    }
    return out;
}

inline expanded_pair pair_from_tiles(const std::vector<tile> &tiles)
{
    std::vector<step> parent;
    std::vector<bool> choices;
    for (auto t : tiles) {
        switch (t) {
            case tile::mono_a:
                parent.push_back(step::horizontal);
                break;
            case tile::mono_b:
                parent.push_back(step::vertical);
                break;
            case tile::dom_ab:
            case tile::dom_ba:
                parent.push_back(step::diagonal);
                choices.push_back(t == tile::dom_ba);
                break;
        }
    }
    return expanded_pair(lattice_path(std::move(parent)), std::move(choices));
}

} // namespace detail

// Sign-reversing, weight-preserving involution on bad pairs.
//
// Let K = w1 (ba)^s w2 be the child's factorization and k = |w1|, so letters
// k, k+1 form the first sub-diagonal "ba". The move is local to letters
// k-1 .. k+2. When the parent covers letters k, k+1 with one diagonal step
// resolved as ba, that step is replaced as follows, depending on whether
// letter k-1 is a lone horizontal step (L) and letter k+2 a lone vertical
// step (R):
//
//   neither   x(ba)      <->  b a              (two lone steps)
//   R only    x(ba) b    <->  b x(ab)
//   L only    a x(ba)    <->  x(ab) a
//   both      a x(ba) b  <->  x(ab) x(ab)
//
// Every parent of a bad pair is in exactly one of these shapes, each image is
// again a valid c_n-walk, and exactly one diagonal resolved as ba is traded
// for none (or for ab resolutions), so the sign flips. For s = 1 and the
// "neither" case this is the swap W1 x W2 <-> W1 b a W2; for longer runs
// the swap W1 x^s W2 <-> W1 b x^(s-1) a W2 would pair parents of equal sign
// (s even) or produce a horizontal step followed by a vertical one, which is
// why the move is kept local.
inline expanded_pair involution(const expanded_pair &p)
{
    using detail::tile;
    const auto f = factor_child(p.child());
    if (!f) {
        throw contract_violation("involution applied to a good pair");
    }
    const std::size_t k = f->prefix_length;

    auto tiles = detail::tiles_of(p);
    // Tile index covering each child letter.
    std::vector<std::size_t> owner;
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        owner.insert(owner.end(), detail::tile_len(tiles[t]), t);
    }
    // Letter k is a b at an interior sub-diagonal valley, so k-1 and k+2 exist.
    const std::size_t tk = owner[k];
    const std::size_t t_left = owner[k - 1];
    const std::size_t t_right = owner[k + 2];

    auto replace = [&](std::size_t first, std::size_t last, std::initializer_list<tile> with) {
        std::vector<tile> out(tiles.begin(), tiles.begin() + static_cast<std::ptrdiff_t>(first));
        out.insert(out.end(), with);
        out.insert(out.end(), tiles.begin() + static_cast<std::ptrdiff_t>(last) + 1, tiles.end());
        return detail::pair_from_tiles(out);
    };

    if (tiles[tk] == tile::dom_ba) {
        const bool lone_left = tiles[t_left] == tile::mono_a;
        const bool lone_right = tiles[t_right] == tile::mono_b;
        if (!lone_left && !lone_right) {
            return replace(tk, tk, {tile::mono_b, tile::mono_a});
        }
        if (!lone_left) {
            return replace(tk, t_right, {tile::mono_b, tile::dom_ab});
        }
        if (!lone_right) {
            return replace(t_left, tk, {tile::dom_ab, tile::mono_a});
        }
        return replace(t_left, t_right, {tile::dom_ab, tile::dom_ab});
    }

    const std::size_t tn = owner[k + 1];
    if (tiles[tk] == tile::mono_b && tiles[tn] == tile::mono_a) {
        return replace(tk, tn, {tile::dom_ba});
    }
    if (tiles[tk] == tile::mono_b && tiles[tn] == tile::dom_ab) {
        return replace(tk, tn, {tile::dom_ba, tile::mono_b});
    }
    if (tiles[tk] == tile::dom_ab && tiles[tn] == tile::mono_a) {
        return replace(tk, tn, {tile::mono_a, tile::dom_ba});
    }
    if (tiles[tk] == tile::dom_ab && tiles[tn] == tile::dom_ab) {
        return replace(tk, tn, {tile::mono_a, tile::dom_ba, tile::mono_b});
    }
    throw contract_violation("unexpected parent shape at the first sub-diagonal valley");
}

inline polynomial signed_child_sum(const std::vector<expanded_pair> &pairs)
{
    polynomial r;
    for (const auto &p : pairs) {
        r.add_term(p.child().weight(), integer(p.sign()));
    }
    return r;
}

inline polynomial good_pairs_sum(int n)
{
    std::vector<expanded_pair> good;
    for (auto &p : all_pairs(n)) {
        if (classify_pair(p) == pair_class::good) {
            good.push_back(std::move(p));
        }
    }
    return signed_child_sum(good);
}

// Compositions of n in lexicographic order.
inline std::vector<std::vector<int>> compositions(int n)
{
    detail::require_positive(n, "compositions");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= left; ++part) {
            cur.push_back(part);
            self(self, left - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// a^{i1} b^{i1} ... a^{is} b^{is}
inline lattice_path composition_path(const std::vector<int> &parts)
{
    std::vector<step> s;
    for (int part : parts) {
        s.insert(s.end(), static_cast<std::size_t>(part), step::horizontal);
        s.insert(s.end(), static_cast<std::size_t>(part), step::vertical);
    }
    return lattice_path(std::move(s));
}

// sum over compositions of n of (-1)^(s-1) a^{i1} b^{i1} ... a^{is} b^{is}
inline polynomial composition_sum(int n)
{
    polynomial r;
    for (const auto &parts : compositions(n)) {
        r.add_term(composition_path(parts).weight(), integer(parts.size() % 2 == 1 ? 1 : -1));
    }
    return r;
}

// Exhaustive check of the combinatorial proof for every n in [1, n_max].
inline check_report verify_involution(int n_max)
{
    const std::string name = "involution on bad pairs (n <= " + std::to_string(n_max) + ")";
    const auto subs = commutator_substitution();
    const auto d = n_max >= 1 ? d_polys(n_max) : std::vector<polynomial>{};
    for (int n = 1; n <= n_max; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        const auto pairs = all_pairs(n);
        const polynomial expected = substitute(c_from_d(d[static_cast<std::size_t>(n - 1)]), subs);
        const polynomial all_sum = signed_child_sum(pairs);
        if (auto w = first_difference(expected, all_sum)) {
            w->note = tag + " signed child sum vs c_n(a,b,ab-ba)";
            return fail_report(name, std::move(*w));
        }

        std::vector<expanded_pair> bad;
        std::map<std::string, std::vector<const expanded_pair *>> good_by_child;
        for (const auto &p : pairs) {
            if (classify_pair(p) == pair_class::bad) {
                bad.push_back(p);
            } else {
                good_by_child[p.child().str()].push_back(&p);
            }
        }
        for (const auto &p : bad) {
            auto fail = [&](const std::string &what) {
                return fail_report(name, witness{2 * n, p.child().str(), "", p.parent().str(), tag + " " + what});
            };
            const expanded_pair q = involution(p);
            if (!is_cn_walk(q.parent(), n)) {
                return fail("image parent is not a c_n-walk");
            }
            if (q.child() != p.child()) {
                return fail("not weight-preserving");
            }
            if (q.sign() != -p.sign()) {
                return fail("not sign-reversing");
            }
            if (q == p) {
                return fail("fixed point");
            }
            if (classify_pair(q) != pair_class::bad) {
                return fail("image is not bad");
            }
            if (!(involution(q) == p)) {
                return fail("not an involution");
            }
        }
        if (auto w = first_difference(polynomial{}, signed_child_sum(bad))) {
            w->note = tag + " bad pairs do not cancel";
            return fail_report(name, std::move(*w));
        }

        const auto comps = compositions(n);
        if (good_by_child.size() != comps.size()) {
            return fail_report(name, witness{2 * n, "", std::to_string(comps.size()),
                                             std::to_string(good_by_child.size()), tag + " good child count"});
        }
        for (const auto &parts : comps) {
            const auto key = composition_path(parts).str();
            const auto it = good_by_child.find(key);
            const int want = parts.size() % 2 == 1 ? 1 : -1;
            if (it == good_by_child.end() || it->second.size() != 1 || it->second.front()->sign() != want) {
                return fail_report(name, witness{2 * n, key, "one parent with sign " + std::to_string(want), "",
                                                 tag + " good pair census"});
            }
        }
        if (auto w = first_difference(expected, good_pairs_sum(n))) {
            w->note = tag + " good pair sum vs c_n(a,b,ab-ba)";
            return fail_report(name, std::move(*w));
        }
    }
    return pass_report(name);
}

// ---------------------------------------------------------------------------
// Dyck words

// Word over {a, b} with as many a's as b's and no prefix with more b's than a's.
class dyck_word
{
public:
    explicit dyck_word(std::string letters) : m_letters(std::move(letters))
    {
        int h = 0;
        for (char c : m_letters) {
            if (c == 'a') {
                ++h;
            } else if (c == 'b') {
                if (--h < 0) {
                    throw std::invalid_argument("not a Dyck word: prefix dips below zero");
                }
            } else {
                throw std::invalid_argument("Dyck words use only the letters a and b");
            }
        }
        if (h != 0) {
            throw std::invalid_argument("not a Dyck word: unbalanced");
        }
    }

    const std::string &str() const noexcept
    {
        return m_letters;
    }
    std::size_t semilength() const noexcept
    {
        return m_letters.size() / 2;
    }

private:
    std::string m_letters;
};

inline std::vector<dyck_word> enumerate_dyck_words(int semilength)
{
    std::vector<dyck_word> out;
    std::string cur;
    auto rec = [&](auto &&self, int opened, int closed) -> void {
        if (closed == semilength) {
            out.emplace_back(cur);
            return;
        }
        if (opened < semilength) {
            cur.push_back('a');
            self(self, opened + 1, closed);
            cur.pop_back();
        }
        if (closed < opened) {
            cur.push_back('b');
            self(self, opened, closed + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Replaces every peak "ab" by x; with keep_level0, peaks starting at height 0
// are left alone.
inline word dyck_reduce(const dyck_word &w, bool keep_level0)
{
    const std::string &s = w.str();
    std::vector<variable> out;
    int h = 0;
    for (std::size_t k = 0; k < s.size();) {
        const bool peak = s[k] == 'a' && k + 1 < s.size() && s[k + 1] == 'b';
        if (peak && !(keep_level0 && h == 0)) {
            out.push_back(alphabet::x());
            k += 2;
            continue;
        }
        out.push_back(s[k] == 'a' ? alphabet::a() : alphabet::b());
        h += s[k] == 'a' ? 1 : -1;
        ++k;
    }
    return word(std::move(out));
}

inline truncated_series dyck_reduction_sum(int order, bool keep_level0)
{
    polynomial body;
    for (int m = 0; 2 * m <= order; ++m) {
        for (const auto &w : enumerate_dyck_words(m)) {
            body.add_term(dyck_reduce(w, keep_level0), integer(1));
        }
    }
    return truncated_series(body, order);
}

inline check_report verify_dyck(int order)
{
    return combine("dyck reductions give D and 1 + aUb (degree " + std::to_string(order) + ")",
                   {compare_series("all peaks", D_series(order), dyck_reduction_sum(order, false)),
                    compare_series("level-0 peaks kept", ts_one<integer>(order) + sandwich(U_series(order)),
                                   dyck_reduction_sum(order, true))});
}

} // namespace ncs

#endif
