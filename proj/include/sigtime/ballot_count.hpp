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

#include <vector>

#include "sigtime/big_count.hpp"

namespace sigtime {

// Memoized counts of available signal sequences.
//
// F(n, k) is the number of length-2n sequences with equal numbers of 1s and
// 0s, every prefix holding at least as many 1s as 0s, and the first k symbols
// all 1. S(n) = F(n, 1) = F(n, 0) is the total for length 2n.
//
// Rows are filled bottom-up over n with
//   F(n, k) = sum_{i=0..k} C(k, i) F(n - k + i, 2i),   0 < k < n,
// walking k downwards inside a row so that F(n, 2k) is ready before F(n, k).
// Growing the table is single-writer; the const accessors are safe to share.
class BallotTable {
 public:
  BallotTable() = default;
  explicit BallotTable(unsigned max_n) { extend(max_n); }

  // Computes every row up to max_n (no-op when already present).
  void extend(unsigned max_n);

  unsigned max_n() const noexcept { return static_cast<unsigned>(rows_.size()) - 1; }

  // Requires n <= max_n(); k may be anything.
  const BigCount& f(unsigned n, unsigned k) const;
  const BigCount& s(unsigned n) const { return f(n, 0); }

 private:
  // rows_[n][k] for k in 0..n; row 0 is {F(0,0) = 1}.
  std::vector<std::vector<BigCount>> rows_{{BigCount{1}}};
  // pascal_[k][i] = C(k, i), grown with the rows.
  std::vector<std::vector<BigCount>> pascal_{{BigCount{1}}};
  static const BigCount kZero;
};

// Exact F(n, k); extends the table as needed.
BigCount f_count(unsigned n, unsigned k, BallotTable& table);

// Exact S(n), the number of available signal sequences of length 2n.
BigCount s_count(unsigned n, BallotTable& table);

// binomial(2n, n) / (n + 1).
BigCount catalan_closed_form(unsigned n);

inline constexpr unsigned kBruteForceMaxN = 13;

// Counts valid sequences by walking all 4^n binary words. n <= 13.
BigCount brute_force_count(unsigned n);

struct RateFigure {
  unsigned n = 0;
  double bits_total = 0.0;      // log2 S_n
  double bits_per_pulse = 0.0;  // log2(S_n) / 2n
  double weight_a = 0.0;        // log2(S_n) / n
};

RateFigure rate_figures(unsigned n, BallotTable& table);

}  // namespace sigtime
