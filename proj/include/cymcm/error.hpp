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

#include <stdexcept>
#include <string>

namespace cymcm {

/// Base class of every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A scalar datum does not describe a valid field element (d = 0, perfect-square d, ...).
struct malformed_field : error {
    using error::error;
};

/// Two operands live in different scalar domains (different d, different cyclotomic order, ...).
struct domain_mismatch : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

/// A substitution map does not cover every variable of the target polynomial.
struct incomplete_substitution : error {
    using error::error;
};

/// gcd(m, exponents) > 1: the cyclic cover splits into several components.
struct disconnected_cover : error {
    using error::error;
};

/// The scalar domain cannot host the roots of unity a computation needs.
struct domain_too_small : error {
    using error::error;
};

struct singular_curve : error {
    using error::error;
};

struct degenerate_curve : error {
    using error::error;
};

/// Adjunction parity failure: d.(d+K) is odd for the given class.
struct invalid_class : error {
    using error::error;
};

struct invalid_fixed_locus : error {
    using error::error;
};

/// A hypersurface is not invariant (up to scalar) under the given automorphism.
struct not_equivariant : error {
    using error::error;
};

struct inconsistent_ledger : error {
    using error::error;
};

/// Manifest / expression syntax error, annotated with a source position.
struct parse_error : error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int l, int c)
        : error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l),
          column(c) {}
    explicit parse_error(const std::string& msg) : error(msg) {}
};

}  // namespace cymcm
