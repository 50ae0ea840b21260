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

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cymcm/error.hpp"
#include "cymcm/scalar.hpp"

namespace cymcm::curve {

/// The point at infinity of the projective line.
struct infinity_t {
    friend bool operator==(const infinity_t&, const infinity_t&) { return true; }
};
inline constexpr infinity_t infinity{};

/// Branch point that carries only a name and distinctness, for families where
/// actual coordinates never matter (genus and eigenspace bookkeeping).
struct Label {
    std::string name;
    friend bool operator==(const Label& a, const Label& b) { return a.name == b.name; }
    std::string to_string() const { return name; }
};

template <class P>
using PointOrInf = std::variant<P, infinity_t>;

template <class P>
struct BranchPoint {
    PointOrInf<P> at;
    int exponent;  // in 1..m-1
    bool at_infinity() const { return std::holds_alternative<infinity_t>(at); }
};

/// The part of a branch datum the Hurwitz-style formulas consume.
struct ExponentView {
    int m;
    std::vector<int> exponents;  // all branch points, infinity included
};

/**
 * Branch datum of a cyclic cover y^m = prod (x - a_i)^(d_i) of the projective
 * line: the degree m plus the branch points with exponents, the point at
 * infinity included once the exponent sum has been completed to 0 mod m.
 * Construct through normalize_branch_data.
 */
template <class P>
class BranchData {
   public:
    int m() const { return m_; }
    const std::vector<BranchPoint<P>>& points() const { return points_; }

    bool includes_infinity() const {
        for (const auto& p : points_)
            if (p.at_infinity()) return true;
        return false;
    }

    ExponentView exponents() const {
        ExponentView v{m_, {}};
        v.exponents.reserve(points_.size());
        for (const auto& p : points_) v.exponents.push_back(p.exponent);
        return v;
    }

    static BranchData unchecked(int m, std::vector<BranchPoint<P>> points) {
        BranchData b;
        b.m_ = m;
        b.points_ = std::move(points);
        return b;
    }

   private:
    BranchData() = default;
    int m_ = 0;
    std::vector<BranchPoint<P>> points_;
};

/**
 * Validates raw branch data and completes it at infinity: exponents are
 * reduced mod m (zero rejected), the infinity point is appended with the
 * residual exponent when the finite exponents do not sum to 0 mod m, and the
 * connectivity condition gcd(m, exponents) = 1 is enforced.
 */
template <class P>
BranchData<P> normalize_branch_data(int m, std::vector<std::pair<PointOrInf<P>, int>> raw) {
    if (m < 2) throw error("cover degree must be at least 2, got " + std::to_string(m));

    std::vector<BranchPoint<P>> points;
    points.reserve(raw.size() + 1);
    long long sum = 0;
    for (auto& [at, exp] : raw) {
        const int e = ((exp % m) + m) % m;
        if (e == 0) throw error("branch exponent reduces to 0 mod " + std::to_string(m));
        sum += e;
        points.push_back(BranchPoint<P>{std::move(at), e});
    }
    if (sum % m != 0) {
        const int residual = static_cast<int>((m - sum % m) % m);
        points.push_back(BranchPoint<P>{infinity, residual});
    }

    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].at == points[j].at) throw error("duplicate branch point");

    long long g = m;
    for (const auto& p : points) g = std::gcd(g, static_cast<long long>(p.exponent));
    if (g != 1)
        throw disconnected_cover("gcd(m, exponents) = " + std::to_string(g) +
                                 ": the cover is disconnected");

    return BranchData<P>::unchecked(m, std::move(points));
}

/// Riemann-Hurwitz: 2g - 2 = -2m + sum_i (m - gcd(m, d_i)).
inline long long genus(const ExponentView& v) {
    long long rhs = -2LL * v.m;
    for (int d : v.exponents) rhs += v.m - std::gcd(v.m, d);
    if (rhs % 2 != 0) throw error("Hurwitz sum is odd; branch datum is invalid");
    return (rhs + 2) / 2;
}

template <class P>
long long genus(const BranchData<P>& b) {
    return genus(b.exponents());
}

/// Dimensions g_1..g_{m-1} of the character eigenspaces of holomorphic
/// differentials: g_n = -1 + sum_i frac(n d_i / m).
inline std::vector<long long> eigenspace_dims(const ExponentView& v) {
    std::vector<long long> dims;
    dims.reserve(v.m - 1);
    for (int n = 1; n < v.m; ++n) {
        long long residue_sum = 0;
        for (int d : v.exponents) residue_sum += (static_cast<long long>(n) * d) % v.m;
        if (residue_sum % v.m != 0) throw error("eigenspace dimension is fractional; datum invalid");
        dims.push_back(residue_sum / v.m - 1);
    }
    return dims;
}

template <class P>
std::vector<long long> eigenspace_dims(const BranchData<P>& b) {
    return eigenspace_dims(b.exponents());
}

/// Witness that the curve is dominated by a Fermat curve: the Fermat degree
/// k*m together with the scaling x -> c*x that moves the branch points onto
/// the k-th roots of unity.
template <class K>
struct CMWitness {
    long long fermat_degree;
    K scaling;
};

/**
 * Sufficient complex-multiplication criterion: after one multiplicative
 * scaling the finite branch points must be exactly {0 (optional)} together
 * with all k-th roots of unity carrying one common exponent. If some scaling
 * works, so does 1/p for every nonzero finite branch point p (the scaled set
 * is the full group of k-th roots of unity, which absorbs the unit factor),
 * so a single inverse decides the criterion.
 */
template <UnityScalar K>
std::optional<CMWitness<K>> fermat_cover_cm(const BranchData<K>& b) {
    std::vector<K> ring;
    int common_exponent = -1;
    for (const auto& p : b.points()) {
        if (p.at_infinity()) continue;
        const K& value = std::get<K>(p.at);
        if (value.is_zero()) continue;  // the optional branch point at 0
        if (common_exponent == -1)
            common_exponent = p.exponent;
        else if (p.exponent != common_exponent)
            return std::nullopt;
        ring.push_back(value);
    }
    if (ring.empty()) return std::nullopt;

    const long long k = static_cast<long long>(ring.size());
    if (ring.front().unity_capacity() % k != 0)
        throw domain_too_small("the scalar domain has no primitive " + std::to_string(k) +
                               "-th root of unity");

    const K c = ring.front().inverse();
    const K one = ring.front().one();
    for (const auto& p : ring)
        if (!((c * p).pow(k) == one)) return std::nullopt;
    return CMWitness<K>{k * b.m(), c};
}

}  // namespace cymcm::curve
