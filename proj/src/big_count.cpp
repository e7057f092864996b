// Copyright 2026 The sigtime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sigtime/big_count.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "sigtime/error.hpp"

namespace sigtime {

double log2_big(const BigCount& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  const auto top = static_cast<long>(boost::multiprecision::msb(x));
  if (top < 64) return std::log2(static_cast<double>(static_cast<std::uint64_t>(x)));
  const auto shift = static_cast<unsigned>(top - 63);
  const auto mantissa = static_cast<std::uint64_t>(x >> shift);
  return static_cast<double>(shift) + std::log2(static_cast<double>(mantissa));
}

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_decimal(const BigCount& x) { return x.str(); }

BigCount parse_decimal(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError("count", "not a non-negative decimal integer: '" + text + "'");
  }
  return BigCount(text);
}

}  // namespace sigtime
