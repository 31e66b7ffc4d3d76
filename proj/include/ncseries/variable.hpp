#ifndef NCSERIES_VARIABLE_HPP
#define NCSERIES_VARIABLE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncs
{

// Row/column position of a matrix-entry variable such as a_{1,2}.
struct entry_index {
    int row = 1;
    int col = 1;

    friend constexpr auto operator<=>(const entry_index &, const entry_index &) = default;
};

// A graded non-commuting indeterminate.
//
// Identity is (name, index); the degree is a grading weight attached at
// construction and is not part of equality or ordering. Plain variables sort
// before indexed ones, then by name, then by (row, col).
class variable
{
public:
    variable(std::string name, int degree) : variable(std::move(name), std::nullopt, degree) {}

    variable(std::string name, int row, int col, int degree)
        : variable(std::move(name), entry_index{row, col}, degree)
    {
    }

    const std::string &name() const noexcept
    {
        return m_name;
    }
    const std::optional<entry_index> &index() const noexcept
    {
        return m_index;
    }
    bool is_indexed() const noexcept
    {
        return m_index.has_value();
    }
    int degree() const noexcept
    {
        return m_degree;
    }

    friend bool operator==(const variable &l, const variable &r) noexcept
    {
        return l.m_name == r.m_name && l.m_index == r.m_index;
    }

    friend std::strong_ordering operator<=>(const variable &l, const variable &r) noexcept
    {
        if (auto c = l.is_indexed() <=> r.is_indexed(); c != 0) {
            return c;
        }
        if (auto c = l.m_name.compare(r.m_name); c != 0) {
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return l.m_index <=> r.m_index;
    }

private:
    variable(std::string name, std::optional<entry_index> idx, int degree)
        : m_name(std::move(name)), m_index(idx), m_degree(degree)
    {
        if (m_name.empty()) {
            throw std::invalid_argument("variable name must be nonempty");
        }
        if (m_degree < 1) {
            throw std::invalid_argument("variable '" + m_name + "' must have degree >= 1");
        }
        if (m_index && (m_index->row < 1 || m_index->col < 1)) {
            throw std::invalid_argument("variable '" + m_name + "' indices must be positive");
        }
    }

    std::string m_name;
    std::optional<entry_index> m_index;
    int m_degree;
};

// The monomial basis of the free associative algebra: an ordered sequence of
// letters. The empty word is the unit.
class word
{
public:
    word() = default;
    explicit word(std::vector<variable> letters) : m_letters(std::move(letters))
    {
        for (const auto &v : m_letters) {
            m_degree += v.degree();
        }
    }
    word(std::initializer_list<variable> letters) : word(std::vector<variable>(letters)) {}

    const std::vector<variable> &letters() const noexcept
    {
        return m_letters;
    }
    std::size_t size() const noexcept
    {
        return m_letters.size();
    }
    bool empty() const noexcept
    {
        return m_letters.empty();
    }
    int degree() const noexcept
    {
        return m_degree;
    }
    const variable &operator[](std::size_t i) const
    {
        return m_letters[i];
    }
    const variable &front() const
    {
        return m_letters.front();
    }
    const variable &back() const
    {
        return m_letters.back();
    }

    word &operator*=(const word &other)
    {
        m_letters.insert(m_letters.end(), other.m_letters.begin(), other.m_letters.end());
        m_degree += other.m_degree;
        return *this;
    }

    friend word operator*(word l, const word &r)
    {
        l *= r;
        return l;
    }

    friend bool operator==(const word &l, const word &r) noexcept
    {
        return l.m_letters == r.m_letters;
    }

    // Plain lexicographic order on letters; used as the storage order.
    friend std::strong_ordering operator<=>(const word &l, const word &r) noexcept
    {
        return std::lexicographical_compare_three_way(l.m_letters.begin(), l.m_letters.end(), r.m_letters.begin(),
                                                      r.m_letters.end());
    }

private:
    std::vector<variable> m_letters;
    int m_degree = 0;
};

inline word word_concat(const word &u, const word &v)
{
    return u * v;
}

// Presentation order: degree descending, then fewer letters first, then
// lexicographic. This lists x^2 ahead of a x b and b a ahead of 1.
struct presentation_less {
    bool operator()(const word &l, const word &r) const noexcept
    {
        if (l.degree() != r.degree()) {
            return l.degree() > r.degree();
        }
        if (l.size() != r.size()) {
            return l.size() < r.size();
        }
        return l < r;
    }
};

} // namespace ncs

template <>
struct std::hash<ncs::variable> {
    std::size_t operator()(const ncs::variable &v) const noexcept
    {
        std::size_t h = std::hash<std::string>{}(v.name());
        if (v.index()) {
            h ^= (static_cast<std::size_t>(v.index()->row) * 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
            h ^= (static_cast<std::size_t>(v.index()->col) * 0xc2b2ae3d27d4eb4fULL) + (h << 6) + (h >> 2);
        }
        return h;
    }
};

template <>
struct std::hash<ncs::word> {
    std::size_t operator()(const ncs::word &w) const noexcept
    {
        std::size_t h = w.size();
        for (const auto &v : w.letters()) {
            h ^= std::hash<ncs::variable>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

#endif
