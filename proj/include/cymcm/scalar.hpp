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

#include <concepts>
#include <string>

namespace cymcm {

/**
 * Exact field scalar. Domains may carry runtime parameters (the d of a
 * quadratic field, the order of a cyclotomic field), so constants are built
 * from an existing value rather than from a bare type.
 */
template <typename T>
concept ExactScalar = requires(const T a, const T b, long long n) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero() } -> std::convertible_to<T>;
    { a.one() } -> std::convertible_to<T>;
    { a.embed_int(n) } -> std::convertible_to<T>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

/// Scalar domain that knows which roots of unity it can host.
template <typename T>
concept UnityScalar = ExactScalar<T> && requires(const T a, long long e) {
    { a.inverse() } -> std::convertible_to<T>;
    { a.pow(e) } -> std::convertible_to<T>;
    { a.unity_capacity() } -> std::convertible_to<long long>;
};

}  // namespace cymcm
