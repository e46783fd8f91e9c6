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

#ifndef DSL_WORD_HPP
#define DSL_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsl {

/// Ordered set of letter names. Letter order fixes word order.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters)
        : letters_(std::make_shared<const std::vector<std::string>>(std::move(letters))) {
        if (letters_->empty()) throw std::invalid_argument("Alphabet: no letters");
        if (letters_->size() > 10) throw std::invalid_argument("Alphabet: at most 10 letters");
        for (std::size_t i = 0; i < letters_->size(); ++i)
            for (std::size_t j = i + 1; j < letters_->size(); ++j)
                if ((*letters_)[i] == (*letters_)[j]) throw std::invalid_argument("Alphabet: repeated letter");
    }

    [[nodiscard]] std::size_t size() const { return letters_->size(); }
    [[nodiscard]] const std::string& name(std::size_t i) const { return letters_->at(i); }
    [[nodiscard]] const std::vector<std::string>& letters() const { return *letters_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.letters_ == b.letters_ || *a.letters_ == *b.letters_;
    }

    /// {e0, e1}: the generators of the free algebra V.
    static const Alphabet& e() {
        static const Alphabet a({"e0", "e1"});
        return a;
    }
    /// {e0, einf}: the same algebra presented with einf = -e0 - e1.
    static const Alphabet& einf() {
        static const Alphabet a({"e0", "einf"});
        return a;
    }
    static const Alphabet& xy() {
        static const Alphabet a({"x", "y"});
        return a;
    }

private:
    std::shared_ptr<const std::vector<std::string>> letters_;
};

/// A word as a compact sequence of letter indices. Ordered length first, then
/// lexicographically by letter index.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<int> letters) {
        for (int l : letters) letters_.push_back(static_cast<char>(l));
    }

    static Word repeat(int letter, std::size_t n) { return Word(std::string(n, static_cast<char>(letter))); }

    /// Parses a string of decimal letter indices, e.g. "0101".
    static Word from_digits(std::string_view digits, std::size_t alphabet_size) {
        std::string s;
        for (char c : digits) {
            if (c < '0' || c > '9' || static_cast<std::size_t>(c - '0') >= alphabet_size)
                throw std::invalid_argument("Word: bad letter '" + std::string(1, c) + "'");
            s.push_back(static_cast<char>(c - '0'));
        }
        return Word(std::move(s));
    }

    [[nodiscard]] std::string digits() const {
        std::string s;
        s.reserve(letters_.size());
        for (char c : letters_) s.push_back(static_cast<char>('0' + c));
        return s;
    }

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return letters_[i]; }
    [[nodiscard]] int front() const { return letters_.front(); }
    [[nodiscard]] int back() const { return letters_.back(); }
    [[nodiscard]] const std::string& raw() const { return letters_; }

    [[nodiscard]] Word substr(std::size_t pos, std::size_t n = std::string::npos) const {
        return Word(letters_.substr(pos, n));
    }
    void push_back(int letter) { letters_.push_back(static_cast<char>(letter)); }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters_ <=> b.letters_;
    }

private:
    std::string letters_;
};

/// Plain lexicographic comparison (no length priority); used for Lyndon words.
inline bool lex_less(const Word& a, const Word& b) { return a.raw() < b.raw(); }

/// All words of length n over k letters in canonical order.
inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * k);
        for (const auto& w : out)
            for (std::size_t l = 0; l < k; ++l) {
                Word v = w;
                v.push_back(static_cast<int>(l));
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace dsl

template <>
struct std::hash<dsl::Word> {
    std::size_t operator()(const dsl::Word& w) const noexcept { return std::hash<std::string>{}(w.raw()); }
};

#endif  // DSL_WORD_HPP
