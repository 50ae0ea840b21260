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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cymcm/error.hpp"
#include "cymcm/rational.hpp"

namespace cymcm {

namespace detail {

// Dense univariate polynomials over Q, index = degree, no trailing zeros.
using RatPoly = std::vector<Rational>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    rp_trim(r);
    return r;
}

inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    rp_trim(r);
    return r;
}

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    rp_trim(r);
    return r;
}

/// Euclidean division a = q*b + r, deg r < deg b.
inline std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw division_by_zero("polynomial division by zero");
    RatPoly q;
    const Rational lead = b.back();
    while (rp_degree(a) >= rp_degree(b)) {
        const int shift = rp_degree(a) - rp_degree(b);
        const Rational c = a.back() / lead;
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1);
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        rp_trim(a);
    }
    rp_trim(q);
    return {q, a};
}

inline long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// n-th cyclotomic polynomial, by exact division of x^n - 1 by all proper Phi_d.
inline const RatPoly& cyclotomic_polynomial(int n) {
    static std::map<int, RatPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    RatPoly result;
    if (n == 1) {
        result = {Rational(-1), Rational(1)};
    } else {
        RatPoly num(n + 1);
        num[0] = Rational(-1);
        num[n] = Rational(1);
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            auto [q, r] = rp_divmod(num, cyclotomic_polynomial(d));
            if (!r.empty()) throw error("cyclotomic polynomial division left a remainder");
            num = std::move(q);
        }
        result = std::move(num);
    }
    return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace detail

/**
 * Element of Q[x] / Phi_n(x), i.e. of the n-th cyclotomic field. Coefficients
 * are stored on the power basis 1, x, ..., x^(phi(n)-1); reduction modulo the
 * cyclotomic polynomial (not x^n - 1) keeps the ring a field, so identity
 * checks can rely on zero-divisor-free arithmetic.
 */
class Cyclotomic {
   public:
    /// The zero element of Q(zeta_n).
    explicit Cyclotomic(int order) : order_(check_order(order)), c_(detail::euler_phi(order)) {}

    Cyclotomic(int order, Rational constant) : Cyclotomic(order) { c_[0] = std::move(constant); }

    /// zeta_n^k.
    static Cyclotomic zeta(int order, long long k = 1) {
        Cyclotomic z(order);
        long long e = ((k % order) + order) % order;
        detail::RatPoly mono(e + 1);
        mono[e] = Rational(1);
        z.assign_reduced(std::move(mono));
        return z;
    }

    int order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    Rational rational_part_strict() const {
        if (!is_rational())
            throw malformed_field("expected the cyclotomic part to cancel in " + to_string());
        return c_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
        x.check_domain(y);
        Cyclotomic r(x);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) {
        x.check_domain(y);
        Cyclotomic r(x);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
        x.check_domain(y);
        Cyclotomic r(x.order_);
        r.assign_reduced(detail::rp_mul(x.dense(), y.dense()));
        return r;
    }
    friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
        return x.order_ == y.order_ && x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

    /// Inverse via the extended Euclidean algorithm against Phi_n.
    Cyclotomic inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero cyclotomic element");
        // Bezout: u*f + v*Phi_n = gcd, with gcd a nonzero constant since Phi_n
        // is irreducible over Q.
        detail::RatPoly r0 = detail::cyclotomic_polynomial(order_), r1 = dense();
        detail::RatPoly u0 = {}, u1 = {Rational(1)};
        while (detail::rp_degree(r1) > 0) {
            auto [q, rem] = detail::rp_divmod(r0, r1);
            detail::RatPoly u2 = detail::rp_sub(u0, detail::rp_mul(q, u1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (r1.empty()) throw error("unexpected zero gcd in cyclotomic inverse");
        const Rational g = r1[0];
        for (auto& c : u1) c /= g;
        Cyclotomic result(order_);
        result.assign_reduced(std::move(u1));
        return result;
    }

    Cyclotomic pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic base = *this, acc = one();
        for (; e > 0; e >>= 1, base = base * base)
            if (e & 1) acc = acc * base;
        return acc;
    }

    Cyclotomic zero() const { return Cyclotomic(order_); }
    Cyclotomic one() const { return Cyclotomic(order_, Rational(1)); }
    Cyclotomic embed_int(long long n) const { return Cyclotomic(order_, Rational(n)); }
    Cyclotomic embed(const Rational& r) const { return Cyclotomic(order_, r); }

    /// Largest k with all k-th roots of unity inside Q(zeta_n).
    long long unity_capacity() const { return order_ % 2 == 0 ? order_ : 2LL * order_; }

    /// Re-expresses the element in Q(zeta_N) for any multiple N of the order.
    Cyclotomic embed_into(int new_order) const {
        if (new_order == order_) return *this;
        if (new_order % order_ != 0)
            throw domain_mismatch("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                  std::to_string(new_order) + ")");
        const long long step = new_order / order_;
        detail::RatPoly expanded;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const size_t e = i * step;
            if (expanded.size() < e + 1) expanded.resize(e + 1);
            expanded[e] = c_[i];
        }
        Cyclotomic result(new_order);
        result.assign_reduced(std::move(expanded));
        return result;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        const std::string z = "zeta" + std::to_string(order_);
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string coeff = c_[i].to_string();
            std::string term;
            if (i == 0) {
                term = coeff;
            } else {
                if (coeff == "1")
                    term = z;
                else if (coeff == "-1")
                    term = "-" + z;
                else
                    term = coeff + "*" + z;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s;
    }

   private:
    static int check_order(int order) {
        if (order < 1) throw malformed_field("cyclotomic order must be positive");
        return order;
    }

    void check_domain(const Cyclotomic& other) const {
        if (order_ != other.order_)
            throw domain_mismatch("cyclotomic elements of order " + std::to_string(order_) + " and " +
                                  std::to_string(other.order_) + " cannot be combined");
    }

    detail::RatPoly dense() const {
        detail::RatPoly p = c_;
        detail::rp_trim(p);
        return p;
    }

    void assign_reduced(detail::RatPoly p) {
        const auto& phi = detail::cyclotomic_polynomial(order_);
        detail::rp_trim(p);
        if (detail::rp_degree(p) >= detail::rp_degree(phi)) p = detail::rp_divmod(p, phi).second;
        p.resize(c_.size());
        c_ = std::move(p);
    }

    int order_;
    std::vector<Rational> c_;
};

/// Product in Q[x]/Phi_n; both factors must share the order n.
inline Cyclotomic cyclo_mul(const Cyclotomic& p, const Cyclotomic& q) { return p * q; }

inline std::string to_string(const Cyclotomic& z) { return z.to_string(); }

}  // namespace cymcm
