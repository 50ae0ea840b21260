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

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cymcm/curve.hpp"
#include "cymcm/cyclotomic.hpp"
#include "cymcm/error.hpp"
#include "cymcm/polynomial.hpp"
#include "cymcm/surface.hpp"

namespace cymcm::threefold {

/// Fixed locus of an involution or automorphism: N curve components with
/// their genera, plus isolated fixed points.
struct FixedLocusData {
    long long curve_count = 0;
    std::vector<long long> genera;
    long long isolated_points = 0;

    void validate() const {
        if (curve_count < 0 || isolated_points < 0)
            throw invalid_fixed_locus("fixed locus counts must be nonnegative");
        if (static_cast<long long>(genera.size()) != curve_count)
            throw invalid_fixed_locus("genera list length disagrees with the curve count");
        for (long long g : genera)
            if (g < 0) throw invalid_fixed_locus("negative genus in fixed locus");
    }

    long long genus_sum() const {
        long long s = 0;
        for (long long g : genera) s += g;
        return s;
    }
};

struct ProvenanceEntry {
    std::string quantity;
    std::string formula;
    std::string inputs;
};

struct HodgeReport {
    long long h11 = 0;
    long long h21 = 0;
    long long euler = 0;
    std::vector<ProvenanceEntry> provenance;
};

/**
 * Hodge numbers of the crepant resolution of (K3 x elliptic curve) / (iota x -1)
 * for a non-symplectic K3 involution iota whose fixed locus has N curves of
 * total genus N': h11 = 11 + 5N - N', h21 = 11 + 5N' - N.
 */
inline HodgeReport borcea_voisin(long long n_curves, long long n_prime) {
    if (n_curves < 0 || n_prime < 0)
        throw invalid_fixed_locus("fixed-locus invariants must be nonnegative");
    HodgeReport r;
    r.h11 = 11 + 5 * n_curves - n_prime;
    r.h21 = 11 + 5 * n_prime - n_curves;
    if (r.h11 < 1 || r.h21 < 0)
        throw invalid_fixed_locus("fixed locus (N = " + std::to_string(n_curves) +
                                  ", N' = " + std::to_string(n_prime) +
                                  ") yields an invalid Hodge number");
    r.euler = 2 * (r.h11 - r.h21);
    r.provenance = {{"h11", "11 + 5N - N'",
                     "N=" + std::to_string(n_curves) + " N'=" + std::to_string(n_prime)},
                    {"h21", "11 + 5N' - N",
                     "N=" + std::to_string(n_curves) + " N'=" + std::to_string(n_prime)},
                    {"euler", "2 (h11 - h21)", ""}};
    return r;
}

/**
 * One Calabi-Yau threefold per (K3, elliptic curve) pair. The Hodge numbers
 * depend only on the K3 side; the elliptic entries multiply the count.
 */
template <class EllipticEntry>
std::vector<HodgeReport> cy3_catalog(const std::vector<std::pair<std::string, FixedLocusData>>& k3s,
                                     const std::vector<EllipticEntry>& curves) {
    std::vector<HodgeReport> catalog;
    catalog.reserve(k3s.size() * curves.size());
    for (const auto& [id, fixed] : k3s) {
        fixed.validate();
        if (fixed.isolated_points != 0)
            throw invalid_fixed_locus("a -1-acting involution has no isolated fixed points (" + id + ")");
        for (size_t i = 0; i < curves.size(); ++i) {
            HodgeReport r = borcea_voisin(fixed.curve_count, fixed.genus_sum());
            r.provenance.push_back({"pair", "K3 x elliptic", id + " x curve#" + std::to_string(i)});
            catalog.push_back(std::move(r));
        }
    }
    return catalog;
}

/// Order-n automorphism of projective space acting by zeta^w_i on coordinate i.
struct DiagonalAutomorphism {
    int order = 1;
    std::vector<int> weights;
};

/// A connected piece of the fixed locus of a diagonal automorphism on a
/// hypersurface: an exact isolated point, a coordinate stratum contained in
/// the hypersurface, or the positive-dimensional slice the hypersurface cuts
/// out of a fixed stratum.
struct FixedComponent {
    enum class Kind { isolated_point, linear_stratum, hypersurface_slice };
    Kind kind = Kind::isolated_point;
    std::vector<Cyclotomic> point;    // homogeneous coordinates (isolated points)
    std::vector<size_t> free_coords;  // coordinate indices spanning the stratum
    int dimension = 0;
};

namespace detail {

inline std::vector<Cyclotomic> unit_point(size_t size, size_t index, const Cyclotomic& sample) {
    std::vector<Cyclotomic> coords(size, sample.zero());
    coords[index] = sample.one();
    return coords;
}

/// All roots of unity of the coefficient field, as candidate stratum solutions.
inline std::vector<Cyclotomic> unity_candidates(const Cyclotomic& sample) {
    const int n = sample.order();
    std::vector<Cyclotomic> out;
    for (int j = 0; j < n; ++j) {
        out.push_back(Cyclotomic::zeta(n, j));
        if (n % 2 != 0) out.push_back(-Cyclotomic::zeta(n, j));
    }
    return out;
}

}  // namespace detail

/**
 * Fixed locus of a diagonal automorphism on a projective hypersurface. The
 * fixed locus of the ambient action is the disjoint union of the coordinate
 * strata on which the weight is constant; each stratum is intersected with
 * the hypersurface symbolically. On one-dimensional strata the intersection
 * is solved exactly over the cyclotomic coefficient field; solutions outside
 * that field raise domain_too_small rather than being dropped.
 */
inline std::vector<FixedComponent> fixed_locus_diagonal(const DiagonalAutomorphism& aut,
                                                        const Poly<Cyclotomic>& hypersurface) {
    const auto& vars = hypersurface.variables();
    const size_t nv = vars.size();
    if (aut.order < 1) throw error("automorphism order must be positive");
    if (aut.weights.size() != nv)
        throw error("weight vector length disagrees with the coordinate count");
    if (hypersurface.is_zero()) throw error("hypersurface polynomial is zero");

    std::vector<int> w(nv);
    for (size_t i = 0; i < nv; ++i) w[i] = ((aut.weights[i] % aut.order) + aut.order) % aut.order;

    // Invariance up to scalar: every monomial must carry the same character.
    int character = -1;
    for (const auto& [e, c] : hypersurface.terms()) {
        long long t = 0;
        for (size_t i = 0; i < nv; ++i) t += static_cast<long long>(w[i]) * e[i];
        const int res = static_cast<int>(t % aut.order);
        if (character == -1)
            character = res;
        else if (res != character)
            throw not_equivariant("hypersurface is not invariant under the diagonal action");
    }

    const Cyclotomic sample = hypersurface.terms().begin()->second;

    std::map<int, std::vector<size_t>> classes;
    for (size_t i = 0; i < nv; ++i) classes[w[i]].push_back(i);

    std::vector<FixedComponent> components;
    for (const auto& [weight, idxs] : classes) {
        // Restrict to the stratum: kill every monomial using an outside coordinate.
        Poly<Cyclotomic> restricted(vars);
        for (const auto& [e, c] : hypersurface.terms()) {
            bool inside = true;
            for (size_t i = 0; i < nv && inside; ++i)
                if (e[i] > 0 && std::find(idxs.begin(), idxs.end(), i) == idxs.end()) inside = false;
            if (inside) restricted = restricted + Poly<Cyclotomic>::monomial(vars, e, c);
        }

        if (restricted.is_zero()) {
            if (idxs.size() == 1) {
                FixedComponent fc;
                fc.kind = FixedComponent::Kind::isolated_point;
                fc.point = detail::unit_point(nv, idxs[0], sample);
                components.push_back(std::move(fc));
            } else {
                FixedComponent fc;
                fc.kind = FixedComponent::Kind::linear_stratum;
                fc.free_coords = idxs;
                fc.dimension = static_cast<int>(idxs.size()) - 1;
                components.push_back(std::move(fc));
            }
            continue;
        }

        if (idxs.size() == 1) continue;  // coordinate point not on the hypersurface

        if (idxs.size() == 2) {
            // Binary form p(u, v) on the stratum line; roots are points.
            const size_t ui = idxs[0], vi = idxs[1];
            int degree = 0;
            for (const auto& [e, c] : restricted.terms()) degree = std::max(degree, e[ui] + e[vi]);

            std::vector<Cyclotomic> univariate(degree + 1, sample.zero());  // p(t, 1)
            bool homogeneous = true;
            for (const auto& [e, c] : restricted.terms()) {
                if (e[ui] + e[vi] != degree) homogeneous = false;
                univariate[e[ui]] = univariate[e[ui]] + c;
            }
            if (!homogeneous) throw error("hypersurface polynomial is not homogeneous");

            if (univariate[degree].is_zero()) {  // root at (1 : 0)
                FixedComponent fc;
                fc.kind = FixedComponent::Kind::isolated_point;
                fc.point = detail::unit_point(nv, ui, sample);
                components.push_back(std::move(fc));
            }
            if (univariate[0].is_zero()) {  // root at (0 : 1), i.e. t = 0
                FixedComponent fc;
                fc.kind = FixedComponent::Kind::isolated_point;
                fc.point = detail::unit_point(nv, vi, sample);
                components.push_back(std::move(fc));
            }

            // Strip t = 0 roots, then peel off every root of unity.
            std::vector<Cyclotomic> q;
            size_t low = 0;
            while (low < univariate.size() && univariate[low].is_zero()) ++low;
            for (size_t i = low; i < univariate.size(); ++i) q.push_back(univariate[i]);

            for (const auto& z : detail::unity_candidates(sample)) {
                int multiplicity = 0;
                for (;;) {
                    Cyclotomic value = sample.zero();  // Horner
                    for (size_t i = q.size(); i-- > 0;) value = value * z + q[i];
                    if (!value.is_zero() || q.size() <= 1) break;
                    ++multiplicity;
                    std::vector<Cyclotomic> next(q.size() - 1, sample.zero());  // divide by (t - z)
                    Cyclotomic carry = q.back();
                    for (size_t i = q.size() - 1; i-- > 0;) {
                        next[i] = carry;
                        carry = q[i] + carry * z;
                    }
                    q = std::move(next);
                }
                if (multiplicity > 0) {  // repeated roots collapse to one reported point
                    FixedComponent fc;
                    fc.kind = FixedComponent::Kind::isolated_point;
                    fc.point = std::vector<Cyclotomic>(nv, sample.zero());
                    fc.point[ui] = z;
                    fc.point[vi] = sample.one();
                    components.push_back(std::move(fc));
                }
                if (q.size() <= 1) break;
            }
            if (q.size() > 1)
                throw domain_too_small("stratum equation has roots outside the cyclotomic domain");
            continue;
        }

        FixedComponent fc;
        fc.kind = FixedComponent::Kind::hypersurface_slice;
        fc.free_coords = idxs;
        fc.dimension = static_cast<int>(idxs.size()) - 2;
        components.push_back(std::move(fc));
    }
    return components;
}

/// The quartic K3 (y2^3 - y1^3) y1 + (x1^3 - x0^3) x0 = 0 in P^3, over the
/// cyclotomic field of the given order. Coordinate order: y2, y1, x1, x0.
inline Poly<Cyclotomic> quartic_k3_equation(int order) {
    using P = Poly<Cyclotomic>;
    const std::vector<std::string> vars{"y2", "y1", "x1", "x0"};
    const Cyclotomic one(order, Rational(1));
    const P y2 = P::variable(vars, "y2", one);
    const P y1 = P::variable(vars, "y1", one);
    const P x1 = P::variable(vars, "x1", one);
    const P x0 = P::variable(vars, "x0", one);
    return (y2.pow(3) - y1.pow(3)) * y1 + (x1.pow(3) - x0.pow(3)) * x0;
}

/// The order-3 automorphism (y2 : y1 : x1 : x0) -> (zeta3 y2 : y1 : zeta3 x1 : x0).
inline DiagonalAutomorphism quartic_k3_automorphism() { return DiagonalAutomorphism{3, {1, 0, 1, 0}}; }

enum class QuotientMap {
    factor_swap,  // the product-quotient identification with the correct root-of-unity factor
    inverted,     // same map with the curve roles inverted: must fail
    composed,     // post-composed with the order-3 automorphism: must still land on the surface
};

/**
 * Verifies that the product of the two plane quartic covers maps onto the
 * quartic K3: the pullback of the surface equation under the denominator-
 * cleared map (y2 : y1 : x1 : x0) = (a z2 y2 : a z2 y1 : z1 x1 : z1 x0), with
 * a^4 = -1, reduces to zero modulo the curve relations z1^4 = (y2^3 - y1^3) y1
 * and z2^4 = (x1^3 - x0^3) x0, used as rewrite rules. The eighth root of
 * unity is forced: with a = 1 the pullback reduces to twice the product of
 * the two relation right-hand sides, which is nonzero.
 */
inline bool rational_map_check(QuotientMap variant = QuotientMap::factor_swap) {
    using P = Poly<Cyclotomic>;
    constexpr int order = 24;  // hosts both the eighth and the cube roots of unity
    const std::vector<std::string> vars{"z1", "y2", "y1", "z2", "x1", "x0"};
    const Cyclotomic one(order, Rational(1));
    auto var = [&](const char* name) { return P::variable(vars, name, one); };
    const P z1 = var("z1"), y2 = var("y2"), y1 = var("y1");
    const P z2 = var("z2"), x1 = var("x1"), x0 = var("x0");

    const P rel1 = (y2.pow(3) - y1.pow(3)) * y1;  // z1^4 on the first curve
    const P rel2 = (x1.pow(3) - x0.pow(3)) * x0;  // z2^4 on the second curve

    const Cyclotomic alpha = Cyclotomic::zeta(order, 3);  // alpha^4 = -1
    const Cyclotomic xi = Cyclotomic::zeta(order, 8);     // cube root of unity

    P img_y2(vars), img_y1(vars), img_x1(vars), img_x0(vars);
    switch (variant) {
        case QuotientMap::factor_swap:
            img_y2 = (z2 * y2).scaled(alpha);
            img_y1 = (z2 * y1).scaled(alpha);
            img_x1 = z1 * x1;
            img_x0 = z1 * x0;
            break;
        case QuotientMap::inverted:
            img_y2 = (z1 * y2).scaled(alpha);
            img_y1 = (z1 * y1).scaled(alpha);
            img_x1 = z2 * x1;
            img_x0 = z2 * x0;
            break;
        case QuotientMap::composed:
            img_y2 = (z2 * y2).scaled(alpha * xi);
            img_y1 = (z2 * y1).scaled(alpha);
            img_x1 = (z1 * x1).scaled(xi);
            img_x0 = z1 * x0;
            break;
    }

    const P pullback = (img_y2.pow(3) - img_y1.pow(3)) * img_y1 + (img_x1.pow(3) - img_x0.pow(3)) * img_x0;
    const P reduced = pullback.reduce_power("z1", 4, rel1).reduce_power("z2", 4, rel2);
    const std::map<std::string, P> identity{{"z1", z1}, {"y2", y2}, {"y1", y1},
                                            {"z2", z2}, {"x1", x1}, {"x0", x0}};
    return poly_identity_check(reduced, identity);
}

/**
 * Intersection bookkeeping for the order-3 quotient of the blown-up quartic
 * K3: the quotient's K^2 from the ramification relation, then b2 by Noether,
 * then the character split of h^{1,1} of the K3.
 */
struct Z3Ledger {
    long long d_self_int = -2;
    long long exceptional_count = 0;
    long long pullback_k_squared = 0;  // (-2D - sum E_i)^2 on the blow-up
    long long k_squared_m = 0;
    long long euler_m = 0;
    long long b2_m = 0;
    long long h11_stilde = 0;
    std::array<long long, 3> h11_split{};  // character pieces of h^{1,1} of the K3
    long long resolution_h11 = 18;
    std::pair<long long, long long> curve_eigen{};  // nontrivial character h^{1,0} of the cubic
};

inline Z3Ledger z3_surface_ledger(long long d_self_int, long long exceptional_count) {
    if (exceptional_count < 0) throw inconsistent_ledger("negative exceptional count");
    if (d_self_int != -2)
        throw inconsistent_ledger("a rational curve on a K3 has self-intersection -2 by adjunction, got " +
                                  std::to_string(d_self_int));

    Z3Ledger ledger;
    ledger.d_self_int = d_self_int;
    ledger.exceptional_count = exceptional_count;

    // (phi^* K_M)^2 = (-2D - sum E_i)^2 on the K3 blown up in the fixed points.
    const surface::SurfaceModel blown = surface::blow_up(surface::k3_lattice_stub(), exceptional_count);
    std::vector<long long> coeffs(blown.rank(), 0);
    coeffs[1] = -2;  // D
    for (long long i = 0; i < exceptional_count; ++i) coeffs[2 + i] = -1;
    const surface::DivisorClass pullback = blown.class_from(std::move(coeffs));
    ledger.pullback_k_squared = blown.self_intersection(pullback);

    if (ledger.pullback_k_squared % 3 != 0)
        throw inconsistent_ledger("(phi^* K)^2 = " + std::to_string(ledger.pullback_k_squared) +
                                  " is not divisible by the quotient degree 3");
    ledger.k_squared_m = ledger.pullback_k_squared / 3;

    std::tie(ledger.euler_m, ledger.b2_m) = surface::noether_b2(ledger.k_squared_m, 1);

    ledger.h11_stilde = 20 + exceptional_count;
    const long long invariant_part = ledger.b2_m - exceptional_count;
    const long long moving = ledger.h11_stilde - ledger.b2_m;
    if (moving % 2 != 0)
        throw inconsistent_ledger("h^{1,1} of the blow-up minus b2 of the quotient is odd");
    if (invariant_part < 0 || moving < 0)
        throw inconsistent_ledger("negative character piece in the h^{1,1} split");
    ledger.h11_split = {invariant_part, moving / 2, moving / 2};

    // Nontrivial-character h^{1,0} of the auxiliary plane cubic, as a degree-3
    // cover of the line branched in three points.
    using curve::Label;
    const auto cubic = curve::normalize_branch_data<Label>(
        3, {{Label{"r0"}, 1}, {Label{"r1"}, 1}, {Label{"r2"}, 1}});
    const auto dims = curve::eigenspace_dims(cubic);
    ledger.curve_eigen = {dims[0], dims[1]};
    return ledger;
}

/// h11 = h11_0(S) + h11_0(E) + resolution classes; h21 = h10_1(E) * h11_2(S).
inline HodgeReport z3_cy3_hodge(const Z3Ledger& ledger, long long h11_0_curve,
                                long long resolution_h11, long long h10_1_curve) {
    if (h11_0_curve < 0 || resolution_h11 < 0 || h10_1_curve < 0)
        throw error("Hodge contributions must be nonnegative");
    HodgeReport r;
    r.h11 = ledger.h11_split[0] + h11_0_curve + resolution_h11;
    r.h21 = h10_1_curve * ledger.h11_split[2];
    r.euler = 2 * (r.h11 - r.h21);
    r.provenance = {
        {"h11", "h11_0(S) + h11_0(E) + resolution",
         std::to_string(ledger.h11_split[0]) + " + " + std::to_string(h11_0_curve) + " + " +
             std::to_string(resolution_h11)},
        {"h21", "h10_1(E) * h11_2(S)",
         std::to_string(h10_1_curve) + " * " + std::to_string(ledger.h11_split[2])},
    };
    return r;
}

}  // namespace cymcm::threefold
