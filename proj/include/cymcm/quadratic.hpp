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

#include <string>
#include <utility>

#include "cymcm/error.hpp"
#include "cymcm/rational.hpp"

namespace cymcm {

namespace detail {

/// d = s^2 * k with k squarefree; returns (k, s), preserving the sign on k.
inline std::pair<BigInt, BigInt> squarefree_decompose(BigInt d) {
    BigInt s = 1;
    const bool neg = d < 0;
    if (neg) d = -d;
    for (BigInt p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            s *= p;
        }
    }
    return {neg ? -d : d, s};
}

}  // namespace detail

/**
 * Element a + b*sqrt(d) of a real or imaginary quadratic field. d is kept
 * squarefree and != 0, 1; arithmetic between elements of different fields is
 * rejected rather than coerced.
 */
class Quadratic {
   public:
    Quadratic(Rational a, Rational b, BigInt d) {
        auto [k, s] = detail::squarefree_decompose(d);
        if (d == 0 || k == 1)
            throw malformed_field("quadratic field discriminant must be a non-square, got " + d.str());
        a_ = std::move(a);
        b_ = b * Rational(s);
        d_ = k;
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const BigInt& d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// The rational part, failing loudly if the sqrt(d) part did not cancel.
    Rational rational_part_strict() const {
        if (!b_.is_zero())
            throw malformed_field("expected the sqrt(" + d_.str() + ") part to cancel, got coefficient " +
                                  b_.to_string());
        return a_;
    }

    Quadratic operator-() const { return Quadratic(-a_, -b_, d_, unchecked{}); }

    friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
        x.check_domain(y);
        return Quadratic(x.a_ + y.a_, x.b_ + y.b_, x.d_, unchecked{});
    }
    friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
        x.check_domain(y);
        return Quadratic(x.a_ - y.a_, x.b_ - y.b_, x.d_, unchecked{});
    }
    friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
        x.check_domain(y);
        return Quadratic(x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_),
                         x.a_ * y.b_ + x.b_ * y.a_, x.d_, unchecked{});
    }
    friend Quadratic operator/(const Quadratic& x, const Quadratic& y) { return x * y.inverse(); }

    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }

    /// (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d); the norm vanishes only at 0.
    Quadratic inverse() const {
        Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
        if (norm.is_zero()) throw division_by_zero("inverse of zero quadratic element");
        return Quadratic(a_ / norm, -b_ / norm, d_, unchecked{});
    }

    Quadratic pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Quadratic base = *this, acc = one();
        for (; e > 0; e >>= 1, base = base * base)
            if (e & 1) acc = acc * base;
        return acc;
    }

    Quadratic zero() const { return Quadratic(Rational(0), Rational(0), d_, unchecked{}); }
    Quadratic one() const { return Quadratic(Rational(1), Rational(0), d_, unchecked{}); }
    Quadratic embed_int(long long n) const { return Quadratic(Rational(n), Rational(0), d_, unchecked{}); }
    Quadratic embed(const Rational& r) const { return Quadratic(r, Rational(0), d_, unchecked{}); }

    /// Largest k with all k-th roots of unity inside Q(sqrt d).
    long long unity_capacity() const {
        if (d_ == -1) return 4;
        if (d_ == -3) return 6;
        return 2;
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string s;
        if (!a_.is_zero()) s = a_.to_string();
        if (b_ == Rational(1))
            s += (s.empty() ? "" : "+");
        else if (b_ == Rational(-1))
            s += "-";
        else
            s += (s.empty() || b_.is_negative() ? "" : "+") + b_.to_string() + "*";
        return s + "sqrt(" + d_.str() + ")";
    }

   private:
    struct unchecked {};
    Quadratic(Rational a, Rational b, BigInt d, unchecked)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    void check_domain(const Quadratic& other) const {
        if (d_ != other.d_)
            throw domain_mismatch("quadratic elements over sqrt(" + d_.str() + ") and sqrt(" +
                                  other.d_.str() + ") cannot be combined");
    }

    Rational a_, b_;
    BigInt d_;
};

/// Canonical form of a + b*sqrt(d): square factors of d move into b.
inline Quadratic qf_reduce(const Rational& a, const Rational& b, const BigInt& d) {
    if (d == 0) throw malformed_field("quadratic field discriminant must be nonzero");
    return Quadratic(a, b, d);
}

inline std::string to_string(const Quadratic& q) { return q.to_string(); }

}  // namespace cymcm
