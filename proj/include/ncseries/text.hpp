#ifndef NCSERIES_TEXT_HPP
#define NCSERIES_TEXT_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ncseries/alphabet.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/variable.hpp>

namespace ncs
{

// Canonical text form
// -------------------
//
// A term is an optional coefficient followed by its letters, separated by
// single spaces. A run of k >= 2 equal letters prints as "v^k". Indexed
// letters print as "a_{i,j}". A unit coefficient is omitted unless the word is
// empty. Terms are joined by " + " / " - " in presentation order (see
// presentation_less); a leading negative term carries a bare "-". The zero
// polynomial prints as "0".
//
//   x^2 + a x b
//   b a b a + a b + 2 b a + 1
//   a^2 b^2 - a b a b

inline std::string letter_string(const variable &v)
{
    if (!v.index()) {
        return v.name();
    }
    return v.name() + "_{" + std::to_string(v.index()->row) + "," + std::to_string(v.index()->col) + "}";
}

inline std::string word_string(const word &w)
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    const auto &ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i + 1;
        while (j < ls.size() && ls[j] == ls[i]) {
            ++j;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += letter_string(ls[i]);
        if (j - i > 1) {
            out += '^' + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

template <typename Cf>
std::string coefficient_string(const Cf &c)
{
    std::ostringstream os;
    os << c;
    return os.str();
}

template <typename Cf>
std::vector<std::pair<word, Cf>> presentation_terms(const basic_polynomial<Cf> &p)
{
    std::vector<std::pair<word, Cf>> v(p.begin(), p.end());
    std::stable_sort(v.begin(), v.end(),
                     [](const auto &l, const auto &r) { return presentation_less{}(l.first, r.first); });
    return v;
}

template <typename Cf>
std::string canonical_string(const basic_polynomial<Cf> &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[w, c] : presentation_terms(p)) {
        const bool negative = c < 0;
        const Cf mag = negative ? Cf(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            out += coefficient_string(mag);
        } else {
            if (mag != 1) {
                out += coefficient_string(mag) + ' ';
            }
            out += word_string(w);
        }
    }
    return out;
}

using degree_resolver = std::function<int(std::string_view, const std::optional<entry_index> &)>;

namespace detail
{

class poly_parser
{
public:
    poly_parser(std::string_view src, degree_resolver deg) : m_src(src), m_deg(std::move(deg)) {}

    polynomial parse()
    {
        polynomial result;
        skip_ws();
        if (m_src.substr(m_pos) == "0") {
            return result;
        }
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++m_pos;
        }
        while (true) {
            auto [w, c] = parse_term();
            result.add_term(w, negative ? integer(-c) : c);
            skip_ws();
            if (at_end()) {
                break;
            }
            const char op = peek();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            negative = op == '-';
            ++m_pos;
        }
        return result;
    }

private:
    std::pair<word, integer> parse_term()
    {
        skip_ws();
        integer c(1);
        bool have_coefficient = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = integer(read_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }));
            have_coefficient = true;
        }
        std::vector<variable> letters;
        while (true) {
            skip_ws();
            if (!std::isalpha(static_cast<unsigned char>(peek()))) {
                break;
            }
            auto [v, reps] = parse_letter();
            letters.insert(letters.end(), reps, v);
        }
        if (!have_coefficient && letters.empty()) {
            fail("expected a term");
        }
        return {word(std::move(letters)), c};
    }

    std::pair<variable, std::size_t> parse_letter()
    {
        std::string name = read_while([](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; });
        std::optional<entry_index> idx;
        if (peek() == '_') {
            ++m_pos;
            expect('{');
            const int row = read_int();
            expect(',');
            const int col = read_int();
            expect('}');
            idx = entry_index{row, col};
        }
        std::size_t reps = 1;
        if (peek() == '^') {
            ++m_pos;
            reps = static_cast<std::size_t>(read_int());
            if (reps < 2) {
                fail("exponent must be at least 2");
            }
        }
        const int d = m_deg(name, idx);
        if (idx) {
            return {variable(std::move(name), idx->row, idx->col, d), reps};
        }
        return {variable(std::move(name), d), reps};
    }

    int read_int()
    {
        auto s = read_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
        if (s.empty() || s.size() > 9) {
            fail("expected a small integer");
        }
        return std::stoi(s);
    }

    template <typename Pred>
    std::string read_while(Pred pred)
    {
        const auto start = m_pos;
        while (!at_end() && pred(m_src[m_pos])) {
            ++m_pos;
        }
        return std::string(m_src.substr(start, m_pos - start));
    }

    void expect(char ch)
    {
        if (peek() != ch) {
            fail(std::string("expected '") + ch + "'");
        }
        ++m_pos;
    }

    void skip_ws()
    {
        while (!at_end() && m_src[m_pos] == ' ') {
            ++m_pos;
        }
    }

    bool at_end() const
    {
        return m_pos >= m_src.size();
    }
    char peek() const
    {
        return at_end() ? '\0' : m_src[m_pos];
    }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw std::invalid_argument("parse error at offset " + std::to_string(m_pos) + ": " + msg);
    }

    std::string_view m_src;
    std::size_t m_pos = 0;
    degree_resolver m_deg;
};

} // namespace detail

// Reads the canonical text form. Also accepts any term order, repeated words
// and adjacent repeated letters, so hand-written fixtures parse as well.
inline polynomial parse_polynomial(std::string_view text, degree_resolver deg = alphabet::default_degree)
{
    return detail::poly_parser(text, std::move(deg)).parse();
}

} // namespace ncs

#endif
