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

#include "sigtime/ballot_count.hpp"

#include <cstdint>
#include <string>

#include "sigtime/error.hpp"

namespace sigtime {

const BigCount BallotTable::kZero{0};

void BallotTable::extend(unsigned max_n) {
  while (pascal_.size() <= max_n) {
    const auto& prev = pascal_.back();
    std::vector<BigCount> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
    pascal_.push_back(std::move(next));
  }

  for (unsigned n = static_cast<unsigned>(rows_.size()); n <= max_n; ++n) {
    std::vector<BigCount> row(n + 1);
    row[n] = 1;
    for (unsigned k = n - 1; k >= 1; --k) {
      BigCount sum = 0;
      for (unsigned i = 0; i <= k; ++i) {
        const unsigned sub_n = n - k + i;
        const unsigned sub_k = 2 * i;
        if (sub_k > sub_n) continue;
        const BigCount& sub = (sub_n == n) ? row[sub_k] : rows_[sub_n][sub_k];
        if (!sub.is_zero()) sum += pascal_[k][i] * sub;
      }
      row[k] = std::move(sum);
    }
    row[0] = row[1];
    rows_.push_back(std::move(row));
  }
}

const BigCount& BallotTable::f(unsigned n, unsigned k) const {
  if (n >= rows_.size()) {
    throw DomainError("ballot-count", "table holds n <= " + std::to_string(max_n()) +
                                          ", requested n = " + std::to_string(n));
  }
  if (k > n) return kZero;
  return rows_[n][k];
}

BigCount f_count(unsigned n, unsigned k, BallotTable& table) {
  table.extend(n);
  return table.f(n, k);
}

BigCount s_count(unsigned n, BallotTable& table) {
  table.extend(n);
  return table.s(n);
}

BigCount catalan_closed_form(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigCount brute_force_count(unsigned n) {
  if (n > kBruteForceMaxN) {
    throw SizeGuardError("ballot-count", "brute-force enumeration is limited to n <= " +
                                             std::to_string(kBruteForceMaxN) + ", got " +
                                             std::to_string(n));
  }
  const unsigned len = 2 * n;
  const std::uint64_t words = std::uint64_t{1} << len;
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w < words; ++w) {
    // symbol j is bit (len - 1 - j); 1 = S-R slot
    int surplus = 0;
    bool ok = true;
    for (unsigned j = 0; j < len; ++j) {
      surplus += ((w >> (len - 1 - j)) & 1U) ? 1 : -1;
      if (surplus < 0) {
        ok = false;
        break;
      }
    }
    if (ok && surplus == 0) ++count;
  }
  return BigCount(count);
}

RateFigure rate_figures(unsigned n, BallotTable& table) {
  if (n == 0) throw DomainError("ballot-count", "rate figures need n >= 1");
  RateFigure fig;
  fig.n = n;
  fig.bits_total = log2_big(s_count(n, table));
  fig.bits_per_pulse = fig.bits_total / (2.0 * n);
  fig.weight_a = fig.bits_total / n;
  return fig;
}

}  // namespace sigtime
