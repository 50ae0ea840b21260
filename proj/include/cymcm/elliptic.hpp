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
#include <variant>

#include "cymcm/error.hpp"
#include "cymcm/polynomial.hpp"
#include "cymcm/rational.hpp"
#include "cymcm/scalar.hpp"

namespace cymcm::elliptic {

/// j of y^2 = x^3 + ax + b: 1728 * 4a^3 / (4a^3 + 27b^2).
template <ExactScalar K>
K j_short_weierstrass(const K& a, const K& b) {
    const K four_a3 = a.embed_int(4) * a * a * a;
    const K discriminant = four_a3 + a.embed_int(27) * b * b;
    if (discriminant.is_zero())
        throw singular_curve("4a^3 + 27b^2 = 0: the cubic has a repeated root");
    return a.embed_int(1728) * four_a3 / discriminant;
}

/// j of y^2 = x(x-1)(x-lambda): 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda-1)^2).
template <ExactScalar K>
K j_legendre(const K& lambda) {
    const K one = lambda.one();
    if (lambda.is_zero() || lambda == one)
        throw degenerate_curve("Legendre parameter must avoid 0 and 1");
    const K q = lambda * lambda - lambda + one;
    const K lm1 = lambda - one;
    return lambda.embed_int(256) * q * q * q / (lambda * lambda * lm1 * lm1);
}

/// j of y^2 = (x-r1)(x-r2)(x-r3), via lambda = (r3-r1)/(r2-r1). The value is
/// independent of the ordering of the roots.
template <ExactScalar K>
K j_three_roots(const K& r1, const K& r2, const K& r3) {
    if (r1 == r2 || r1 == r3 || r2 == r3)
        throw singular_curve("repeated root in three-root form");
    return j_legendre((r3 - r1) / (r2 - r1));
}

/**
 * j of the curve y^4 = x(x-1)^2, computed rather than hardcoded: w = y^2/(x-1)
 * satisfies y^2 = w^3 - w, and the identity (w^3 - w - y^2)(x-1)^3 = 0 modulo
 * y^4 = x(x-1)^2 is verified exactly before evaluating j of y^2 = x^3 - x.
 */
inline Rational j_quartic_e() {
    using P = Poly<Rational>;
    const std::vector<std::string> vars{"x", "y"};
    const P x = P::variable(vars, "x", Rational(1));
    const P y = P::variable(vars, "y", Rational(1));
    const P xm1 = x - P::constant(vars, Rational(1));
    const P y2 = y * y;

    const P cleared = y2 * y2 * y2 - y2 * xm1 * xm1 - y2 * xm1 * xm1 * xm1;
    const P reduced = cleared.reduce_power("y", 4, x * xm1 * xm1);
    const std::map<std::string, P> identity{{"x", x}, {"y", y}};
    if (!poly_identity_check(reduced, identity))
        throw error("substitution w = y^2/(x-1) does not satisfy y^2 = w^3 - w on the quartic");
    return j_short_weierstrass(Rational(-1), Rational(0));
}

template <ExactScalar K>
struct ShortWeierstrass {
    K a, b;
};
template <ExactScalar K>
struct LegendreForm {
    K lambda;
};
template <ExactScalar K>
struct ThreeRoots {
    K r1, r2, r3;
};
struct QuarticE {};

/// One of the curve presentations appearing in the constructions.
template <ExactScalar K>
struct EllipticModel {
    std::variant<ShortWeierstrass<K>, LegendreForm<K>, ThreeRoots<K>, QuarticE> form;
};

template <ExactScalar K>
K j_invariant(const EllipticModel<K>& model) {
    return std::visit(
        [](const auto& f) -> K {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, ShortWeierstrass<K>>) {
                return j_short_weierstrass(f.a, f.b);
            } else if constexpr (std::is_same_v<F, LegendreForm<K>>) {
                return j_legendre(f.lambda);
            } else if constexpr (std::is_same_v<F, ThreeRoots<K>>) {
                return j_three_roots(f.r1, f.r2, f.r3);
            } else {
                static_assert(std::is_same_v<F, QuarticE>);
                if constexpr (std::is_same_v<K, Rational>)
                    return j_quartic_e();
                else
                    throw domain_mismatch("the fixed quartic curve is a rational-domain model");
            }
        },
        model.form);
}

}  // namespace cymcm::elliptic
