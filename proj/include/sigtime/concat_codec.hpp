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

#include <cstddef>
#include <optional>

#include "sigtime/big_count.hpp"
#include "sigtime/codebook.hpp"

namespace sigtime {

// A long code built from m copies of a length-L component followed by one
// tail component of length r, with target_len = m * L + r and 0 <= r < L.
// Lengths are in slots (symbols); a component of length L holds L/2 pairs.
//
// Indices are mixed-radix: the first block is the most significant digit
// (radix S_{L/2}) and the tail the least significant (radix S_{r/2}), so
// index order matches canonical order of the concatenated words.
class ConcatScheme {
 public:
  unsigned target_len() const noexcept { return target_len_; }
  unsigned component_len() const noexcept { return component_len_; }
  unsigned blocks() const noexcept { return m_; }
  unsigned tail_len() const noexcept { return r_; }

  // S_{L/2}^m * S_{r/2}.
  const BigCount& capacity() const noexcept { return capacity_; }
  const PathCountTable& component() const noexcept { return component_; }
  const std::optional<PathCountTable>& tail() const noexcept { return tail_; }

 private:
  friend ConcatScheme plan(unsigned target_len, unsigned component_len);
  ConcatScheme(unsigned target_len, unsigned component_len);

  unsigned target_len_;
  unsigned component_len_;
  unsigned m_;
  unsigned r_;
  PathCountTable component_;
  std::optional<PathCountTable> tail_;
  BigCount capacity_;
};

// Throws DomainError when either length is odd or zero.
ConcatScheme plan(unsigned target_len, unsigned component_len);

// Throws IndexOutOfRangeError unless index < capacity().
Codeword concat_encode(const ConcatScheme& scheme, const BigCount& index);

// Throws InvalidWordError on a length mismatch and InvalidBlockError (1-based
// block number) when a block is not a valid component word.
BigCount concat_decode(const ConcatScheme& scheme, const Codeword& word);

struct ConcatMetrics {
  double rate_per_pulse = 0.0;
  double optimal_rate_per_pulse = 0.0;
  double rho_r = 0.0;  // 1 - rate / optimal rate
  double rho_m = 0.0;  // stored words / optimal words
  BigCount stored_words;
  BigCount stored_bits;  // stored words times their lengths
  BigCount optimal_words;
};

// Uses exact Catalan counts, so it works at any length. When the optimal
// rate is zero (target_len == 2) rho_r is reported as 0.
ConcatMetrics metrics(const ConcatScheme& scheme);

}  // namespace sigtime
