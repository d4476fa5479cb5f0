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


#include "wiretap/combinatorics.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "wiretap/errors.h"

namespace wiretap {

BigInt Binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

std::uint64_t Binomial64(std::int64_t n, std::int64_t r) {
  BigInt value = Binomial(n, r);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceCapError("binomial C(" + std::to_string(n) + ", " +
                           std::to_string(r) + ") overflows 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

std::string ToScientific(const BigInt& value, int significant_digits) {
  std::string digits = value.str();
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  if (significant_digits < 1) significant_digits = 1;
  int exponent = static_cast<int>(digits.size()) - 1;
  // Round half up on the decimal digit string.
  std::string kept = digits.substr(
      0, std::min<std::size_t>(digits.size(), significant_digits));
  if (digits.size() > kept.size() && digits[kept.size()] >= '5') {
    int i = static_cast<int>(kept.size()) - 1;
    while (i >= 0 && kept[i] == '9') kept[i--] = '0';
    if (i >= 0) {
      ++kept[i];
    } else {
      kept.insert(kept.begin(), '1');
      kept.pop_back();
      ++exponent;
    }
  }
  while (static_cast<int>(kept.size()) < significant_digits) kept += '0';
  std::ostringstream out;
  if (negative) out << '-';
  out << kept[0];
  if (kept.size() > 1) out << '.' << kept.substr(1);
  out << "e+" << (exponent < 10 ? "0" : "") << exponent;
  return out.str();
}

}  // namespace wiretap
