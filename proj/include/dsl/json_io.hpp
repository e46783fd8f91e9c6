// Copyright 2026 The dsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of series, tensors and subspaces. Rationals are always "p/q"
// strings; words are strings of letter indices.

#ifndef DSL_JSON_IO_HPP
#define DSL_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "series.hpp"
#include "tensor.hpp"

namespace dsl {

using json = nlohmann::ordered_json;

/// Malformed JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
    return j.at(name);
}

inline Rational parse_rational(const json& j) {
    if (!j.is_string()) throw FormatError("coefficient must be a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Alphabet parse_alphabet(const json& j) {
    if (!j.is_array() || j.empty()) throw FormatError("alphabet must be a non-empty array of names");
    std::vector<std::string> names;
    for (const auto& l : j) {
        if (!l.is_string()) throw FormatError("alphabet letters must be strings");
        names.push_back(l.get<std::string>());
    }
    if (names.size() > 10) throw FormatError("alphabets of more than 10 letters are not supported");
    for (const Alphabet* known : {&Alphabet::e(), &Alphabet::einf(), &Alphabet::xy()})
        if (known->letters() == names) return *known;
    try {
        return Alphabet(names);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Word parse_word(const std::string& s, std::size_t alphabet_size) {
    try {
        return Word::from_digits(s, alphabet_size);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline int parse_degree(const json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1000)
        throw FormatError("max_degree must be a non-negative integer");
    return j.get<int>();
}

inline json alphabet_json(const Alphabet& a) {
    json out = json::array();
    for (const auto& l : a.letters()) out.push_back(l);
    return out;
}

}  // namespace detail

inline json to_json(const Series& a) {
    json terms = json::object();
    for (const auto& [w, c] : a.sorted_terms()) terms[w.digits()] = c.str();
    return json{{"alphabet", detail::alphabet_json(a.alphabet())}, {"max_degree", a.max_degree()}, {"terms", terms}};
}

inline Series series_from_json(const json& j) {
    Alphabet a = detail::parse_alphabet(detail::field(j, "alphabet"));
    int n = detail::parse_degree(detail::field(j, "max_degree"));
    const json& terms = detail::field(j, "terms");
    if (!terms.is_object()) throw FormatError("terms must be an object");
    Series s(a, n);
    for (const auto& [k, v] : terms.items()) {
        Word w = detail::parse_word(k, a.size());
        if (static_cast<int>(w.size()) > n) throw FormatError("term '" + k + "' beyond max_degree");
        s.add_term(w, detail::parse_rational(v));
    }
    return s;
}

/// Tensor terms are keyed "left|right".
inline json to_json(const TensorSeries& t, const Alphabet& a) {
    json terms = json::object();
    for (const auto& [p, c] : t.sorted_terms()) terms[p.left.digits() + "|" + p.right.digits()] = c.str();
    return json{{"alphabet", detail::alphabet_json(a)}, {"max_degree", t.max_degree()}, {"terms", terms}};
}

inline TensorSeries tensor_from_json(const json& j) {
    Alphabet a = detail::parse_alphabet(detail::field(j, "alphabet"));
    int n = detail::parse_degree(detail::field(j, "max_degree"));
    const json& terms = detail::field(j, "terms");
    if (!terms.is_object()) throw FormatError("terms must be an object");
    TensorSeries t(n);
    for (const auto& [k, v] : terms.items()) {
        auto bar = k.find('|');
        if (bar == std::string::npos) throw FormatError("tensor term '" + k + "' lacks '|'");
        WordPair p{detail::parse_word(k.substr(0, bar), a.size()), detail::parse_word(k.substr(bar + 1), a.size())};
        if (static_cast<int>(p.degree()) > n) throw FormatError("term '" + k + "' beyond max_degree");
        t.add_term(p, detail::parse_rational(v));
    }
    return t;
}

inline json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

inline Vector vector_from_json(const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw FormatError("vector of the wrong length");
    Vector v;
    for (const auto& c : j) v.push_back(detail::parse_rational(c));
    return v;
}

/// A subspace of degree-n Lyndon coordinates, with the coordinate labels.
inline json to_json(const Subspace& s, const std::string& object, int degree, const LyndonBasis& basis) {
    if (s.ambient_dim() != basis.size()) throw std::invalid_argument("to_json: basis size mismatch");
    json words = json::array(), brackets = json::array(), rows = json::array();
    for (const auto& e : basis.entries()) {
        words.push_back(e.word.digits());
        brackets.push_back(e.bracketing);
    }
    for (const auto& v : s.basis()) rows.push_back(to_json(v));
    return json{{"object", object},
                {"degree", degree},
                {"dim", s.dim()},
                {"ambient_dim", s.ambient_dim()},
                {"alphabet", detail::alphabet_json(basis.alphabet())},
                {"coordinates", words},
                {"brackets", brackets},
                {"basis", rows}};
}

inline Subspace subspace_from_json(const json& j) {
    const json& amb = detail::field(j, "ambient_dim");
    if (!amb.is_number_unsigned()) throw FormatError("ambient_dim must be a non-negative integer");
    auto n = amb.get<std::size_t>();
    const json& rows = detail::field(j, "basis");
    if (!rows.is_array()) throw FormatError("basis must be an array");
    std::vector<Vector> vs;
    for (const auto& r : rows) vs.push_back(vector_from_json(r, n));
    Subspace s = Subspace::span(n, vs);
    if (s.dim() != vs.size()) throw FormatError("basis rows are linearly dependent");
    return s;
}

/// Newline-terminated, two-space indented.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dsl

#endif  // DSL_JSON_IO_HPP
