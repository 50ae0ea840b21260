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

#include <optional>
#include <string>
#include <vector>

#include "cymcm/surface.hpp"

namespace cymcm::cover {

/// Euler number of a double cover branched over a curve: e = 2 e_base - e_branch.
inline long long double_cover_euler(long long e_base, long long e_branch) {
    return 2 * e_base - e_branch;
}

/// A double cover of `base` branched over a member of `branch_class`. The
/// genus override serves reducible branch divisors where adjunction of the
/// total class is not the branch genus.
struct DoubleCoverSpec {
    surface::SurfaceModel base;
    surface::DivisorClass branch_class;
    std::optional<long long> branch_genus_override;
};

struct K3Report {
    bool is_anticanonical_double = false;  // branch class equals -2K in the lattice
    long long branch_genus = 0;
    long long euler_cover = 0;
    bool verdict = false;
    std::vector<std::string> assumptions;
};

/**
 * Lattice-level K3 test for a double cover: the branch class must be -2K and
 * the cover's Euler number must come out as 24. Smoothness of the branch
 * divisor and simple connectedness of the cover are assumptions recorded in
 * the report, not verified here.
 */
inline K3Report k3_check(const DoubleCoverSpec& spec) {
    K3Report report;
    report.is_anticanonical_double = (spec.branch_class == -2 * spec.base.canonical());
    report.branch_genus = spec.branch_genus_override
                              ? *spec.branch_genus_override
                              : surface::adjunction_genus(spec.branch_class, spec.base);
    report.euler_cover =
        double_cover_euler(spec.base.euler(), 2 - 2 * report.branch_genus);
    report.verdict = report.is_anticanonical_double && report.euler_cover == 24;
    report.assumptions = {"branch divisor assumed smooth",
                          "simple connectedness of the cover assumed"};
    return report;
}

}  // namespace cymcm::cover
