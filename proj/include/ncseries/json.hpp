#ifndef NCSERIES_JSON_HPP
#define NCSERIES_JSON_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <ncseries/alphabet.hpp>
#include <ncseries/polynomial.hpp>
#include <ncseries/text.hpp>

namespace ncs
{

// Structured form of a polynomial: an array of
//   {"word": [letter, ...], "coefficient": "<decimal integer>"}
// in presentation order. A plain letter is its name as a string; a matrix
// entry is {"name": "a", "row": i, "col": j}. Coefficients are strings so
// arbitrary-size integers survive.

inline nlohmann::json letter_to_json(const variable &v)
{
    if (!v.index()) {
        return v.name();
    }
    return nlohmann::json{{"name", v.name()}, {"row", v.index()->row}, {"col", v.index()->col}};
}

inline nlohmann::json to_json(const polynomial &p)
{
    auto out = nlohmann::json::array();
    for (const auto &[w, c] : presentation_terms(p)) {
        auto letters = nlohmann::json::array();
        for (const auto &v : w.letters()) {
            letters.push_back(letter_to_json(v));
        }
        out.push_back({{"word", std::move(letters)}, {"coefficient", coefficient_string(c)}});
    }
    return out;
}

inline polynomial polynomial_from_json(const nlohmann::json &j, const degree_resolver &deg = alphabet::default_degree)
{
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial JSON must be an array of terms");
    }
    polynomial p;
    for (const auto &term : j) {
        std::vector<variable> letters;
        for (const auto &l : term.at("word")) {
            if (l.is_string()) {
                const auto name = l.get<std::string>();
                letters.emplace_back(name, deg(name, std::nullopt));
            } else {
                const auto name = l.at("name").get<std::string>();
                const entry_index idx{l.at("row").get<int>(), l.at("col").get<int>()};
                letters.emplace_back(name, idx.row, idx.col, deg(name, idx));
            }
        }
        p.add_term(word(std::move(letters)), integer(term.at("coefficient").get<std::string>()));
    }
    return p;
}

} // namespace ncs

#endif
