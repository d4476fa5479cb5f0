/*
 * Copyright 2026 The Wiretap LP Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WIRETAP_COMBINATORICS_H_
#define WIRETAP_COMBINATORICS_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wiretap {

using BigInt = boost::multiprecision::cpp_int;

// C(n, r); zero when r < 0 or r > n.
BigInt Binomial(std::int64_t n, std::int64_t r);

// C(n, r) in 64 bits. Throws ResourceCapError on overflow.
std::uint64_t Binomial64(std::int64_t n, std::int64_t r);

// Three significant digits in scientific notation, e.g. "1.92e+17".
std::string ToScientific(const BigInt& value, int significant_digits = 3);

}  // namespace wiretap

#endif  // WIRETAP_COMBINATORICS_H_
