/*
   Copyright 2026 The cymcm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "cymcm/error.hpp"

namespace cymcm {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational with canonical form gcd(|num|, den) = 1 and
 * den > 0. Backed by Boost.Multiprecision; this wrapper fixes the canonical
 * invariants, the "p/q" text format and the error idiom used project-wide.
 */
class Rational {
   public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(n) {}  // NOLINT: implicit integer embedding is intended
    explicit Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        q_ = backend(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(q_); }
    BigInt denominator() const { return boost::multiprecision::denominator(q_); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return q_ < 0; }

    Rational operator-() const { return Rational(backend(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        return Rational(1) / *this;
    }

    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc = 1;
        for (; e > 0; e >>= 1, base *= base)
            if (e & 1) acc *= base;
        return acc;
    }

    // Same-domain constants; kept as members so generic code can build them
    // from any value of a runtime-parameterized scalar domain.
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational embed_int(long long n) const { return Rational(n); }

    /// Largest k with all k-th roots of unity in Q: just {1, -1}.
    long long unity_capacity() const { return 2; }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Parses "p" or "p/q" (optional leading sign on p).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
            BigInt num{std::string(text.substr(0, slash))};
            BigInt den{std::string(text.substr(slash + 1))};
            if (den == 0) throw division_by_zero("rational with zero denominator");
            return Rational(num, den);
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const error*>(&e)) throw;
            throw parse_error("invalid rational literal '" + std::string(text) + "'");
        }
    }

   private:
    using backend = boost::multiprecision::cpp_rational;
    explicit Rational(backend q) : q_(std::move(q)) {}
    backend q_;
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace cymcm
