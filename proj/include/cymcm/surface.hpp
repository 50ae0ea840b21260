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
#include <vector>

#include "cymcm/error.hpp"

namespace cymcm::surface {

/// Divisor class as an integer vector over a surface's Picard basis.
struct DivisorClass {
    std::vector<long long> coefficients;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        check_sizes(a, b);
        DivisorClass r = a;
        for (size_t i = 0; i < r.coefficients.size(); ++i) r.coefficients[i] += b.coefficients[i];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        check_sizes(a, b);
        DivisorClass r = a;
        for (size_t i = 0; i < r.coefficients.size(); ++i) r.coefficients[i] -= b.coefficients[i];
        return r;
    }
    friend DivisorClass operator*(long long c, const DivisorClass& d) {
        DivisorClass r = d;
        for (auto& x : r.coefficients) x *= c;
        return r;
    }

    static void check_sizes(const DivisorClass& a, const DivisorClass& b) {
        if (a.coefficients.size() != b.coefficients.size())
            throw error("divisor classes over different Picard bases");
    }
};

/**
 * Lattice model of a surface: a named Picard basis with its Gram matrix, the
 * canonical class, the topological Euler number and chi of the structure
 * sheaf. Every surface fact the constructions need is a computation on this
 * data; no scheme-level geometry is carried.
 */
class SurfaceModel {
   public:
    SurfaceModel(std::string name, std::vector<std::string> basis,
                 std::vector<std::vector<long long>> gram, DivisorClass canonical, long long euler,
                 long long chi_structure)
        : name_(std::move(name)),
          basis_(std::move(basis)),
          gram_(std::move(gram)),
          canonical_(std::move(canonical)),
          euler_(euler),
          chi_(chi_structure) {
        const size_t r = basis_.size();
        if (gram_.size() != r || canonical_.coefficients.size() != r)
            throw error("Picard basis, Gram matrix and canonical class sizes disagree");
        for (size_t i = 0; i < r; ++i) {
            if (gram_[i].size() != r) throw error("Gram matrix is not square");
            for (size_t j = 0; j < i; ++j)
                if (gram_[i][j] != gram_[j][i]) throw error("Gram matrix is not symmetric");
        }
        if (12 * chi_ != self_intersection(canonical_) + euler_)
            throw error("surface data violates the Noether relation 12 chi = K^2 + e");
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<std::vector<long long>>& gram() const { return gram_; }
    const DivisorClass& canonical() const { return canonical_; }
    long long euler() const { return euler_; }
    long long chi_structure() const { return chi_; }
    size_t rank() const { return basis_.size(); }

    /// The basis class with the given label, as a divisor class.
    DivisorClass basis_class(const std::string& label) const {
        for (size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == label) {
                DivisorClass d{std::vector<long long>(basis_.size(), 0)};
                d.coefficients[i] = 1;
                return d;
            }
        throw error("no basis class named '" + label + "' on " + name_);
    }

    DivisorClass class_from(std::vector<long long> coefficients) const {
        if (coefficients.size() != basis_.size())
            throw error("coefficient vector length does not match the Picard basis of " + name_);
        return DivisorClass{std::move(coefficients)};
    }

    long long self_intersection(const DivisorClass& d) const { return pairing(d, d); }

    long long pairing(const DivisorClass& a, const DivisorClass& b) const {
        if (a.coefficients.size() != rank() || b.coefficients.size() != rank())
            throw error("divisor class does not belong to " + name_);
        long long total = 0;
        for (size_t i = 0; i < rank(); ++i) {
            if (a.coefficients[i] == 0) continue;
            for (size_t j = 0; j < rank(); ++j)
                total += a.coefficients[i] * gram_[i][j] * b.coefficients[j];
        }
        return total;
    }

   private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<std::vector<long long>> gram_;
    DivisorClass canonical_;
    long long euler_;
    long long chi_;
};

inline long long intersect(const DivisorClass& a, const DivisorClass& b, const SurfaceModel& s) {
    return s.pairing(a, b);
}

/**
 * The rational ruled surface P(O + O(n)) over the projective line, with basis
 * (C0, F): C0 the section of self-intersection -n, F the fiber. The section
 * disjoint from C0 is C0 + nF, with self-intersection +n.
 */
inline SurfaceModel ruled_surface(long long n) {
    if (n < 0) throw error("ruled surface parameter must be nonnegative");
    return SurfaceModel("P(O+O(" + std::to_string(n) + "))", {"C0", "F"},
                        {{-n, 1}, {1, 0}}, DivisorClass{{-2, -(n + 2)}}, 4, 1);
}

inline SurfaceModel projective_plane() {
    return SurfaceModel("P^2", {"H"}, {{1}}, DivisorClass{{-3}}, 3, 1);
}

/**
 * K3 invariants (K = 0, e = 24, chi = 2) over the rank-2 sublattice spanned by
 * a hyperplane section H (H^2 = 4, for a quartic) and a line D on it
 * (D^2 = -2, H.D = 1). The full rank-22 lattice is not modeled.
 */
inline SurfaceModel k3_lattice_stub() {
    return SurfaceModel("K3", {"H", "D"}, {{4, 1}, {1, -2}}, DivisorClass{{0, 0}}, 24, 2);
}

/**
 * Blows up k distinct points: the basis gains exceptional classes of square
 * -1 orthogonal to everything else, K gains their sum, e grows by k, chi is
 * unchanged. Point positions are not modeled.
 */
inline SurfaceModel blow_up(const SurfaceModel& s, long long k) {
    if (k < 0) throw error("cannot blow up a negative number of points");
    if (k == 0) return s;

    // Continue any existing E<i> numbering so iterated blow-ups stay distinct.
    long long next = 1;
    for (const auto& label : s.basis()) {
        if (label.size() > 1 && label[0] == 'E') {
            try {
                next = std::max(next, std::stoll(label.substr(1)) + 1);
            } catch (...) {
            }
        }
    }

    const size_t r = s.rank();
    std::vector<std::string> basis = s.basis();
    std::vector<std::vector<long long>> gram = s.gram();
    DivisorClass canonical = s.canonical();
    for (auto& row : gram) row.resize(r + k, 0);
    for (long long i = 0; i < k; ++i) {
        basis.push_back("E" + std::to_string(next + i));
        std::vector<long long> row(r + k, 0);
        row[r + i] = -1;
        gram.push_back(std::move(row));
        canonical.coefficients.push_back(1);
    }
    return SurfaceModel(s.name() + "^(" + std::to_string(k) + ")", std::move(basis), std::move(gram),
                        std::move(canonical), s.euler() + k, s.chi_structure());
}

/// Adjunction: 2g - 2 = D.(D + K). The pairing must be even.
inline long long adjunction_genus(const DivisorClass& d, const SurfaceModel& s) {
    const long long v = s.pairing(d, d + s.canonical());
    if (v % 2 != 0)
        throw invalid_class("D.(D+K) = " + std::to_string(v) + " is odd; class is not reduced");
    return v / 2 + 1;
}

/// Noether: e = 12 chi - K^2, and b2 = e - 2 for a connected surface with
/// b1 = 0 (the caller asserts the latter).
inline std::pair<long long, long long> noether_b2(long long k_squared, long long chi_structure) {
    const long long euler = 12 * chi_structure - k_squared;
    return {euler, euler - 2};
}

}  // namespace cymcm::surface
