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

#ifndef DSL_RATIONAL_HPP
#define DSL_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dsl {

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator. Thin value wrapper around GMP's mpq_class so that the
/// rest of the library never sees expression templates.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("Rational: empty string");
        std::string s(text);
        auto slash = s.find('/');
        auto check_int = [](const std::string& part) {
            std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
            if (i >= part.size()) return false;
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') return false;
            return true;
        };
        if (slash == std::string::npos) {
            if (!check_int(s)) throw std::invalid_argument("Rational: malformed '" + s + "'");
            return Rational(mpq_class(mpz_class(s, 10)));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+')
            throw std::invalid_argument("Rational: malformed '" + s + "'");
        mpz_class d(den, 10);
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        mpq_class q(mpz_class(num, 10), d);
        q.canonicalize();
        return Rational(q);
    }

    /// Always "p/q", including q = 1.
    [[nodiscard]] std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    /// Combined bit length of numerator and denominator; the pivot cost used
    /// by elimination.
    [[nodiscard]] std::size_t bit_length() const {
        return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

/// 1/k! as an exact rational.
inline Rational inverse_factorial(unsigned k) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return Rational(mpq_class(mpz_class(1), f));
}

}  // namespace dsl

#endif  // DSL_RATIONAL_HPP
