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

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigtime {

// Exact, unbounded sequence count. S_150 alone needs ~290 bits.
using BigCount = boost::multiprecision::cpp_int;

// log2(x) for x >= 1 from the bit length and the top 64 bits of the
// magnitude; relative error is below 1e-15. Returns -inf for x == 0.
double log2_big(const BigCount& x);

// Exact binomial coefficient C(n, k); zero when k > n.
BigCount binomial(unsigned n, unsigned k);

std::string to_decimal(const BigCount& x);

// Parses a non-negative decimal integer. Throws DomainError on anything else.
BigCount parse_decimal(const std::string& text);

}  // namespace sigtime
