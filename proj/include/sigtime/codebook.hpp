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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigtime/big_count.hpp"

namespace sigtime {

// A time-slot schedule. Symbol 1 marks a slot used by the source-relay link,
// symbol 0 a slot used by the relay-destination link.
class Codeword {
 public:
  Codeword() = default;
  // Every entry must be 0 or 1.
  explicit Codeword(std::vector<std::uint8_t> symbols);

  // Accepts only the characters '0' and '1'.
  static Codeword parse(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }
  std::string str() const;

  void append(const Codeword& other);

  friend bool operator==(const Codeword&, const Codeword&) = default;
  // Canonical order: lexicographic with 1 ranked before 0.
  friend bool canonical_less(const Codeword& a, const Codeword& b);

 private:
  std::vector<std::uint8_t> symbols_;
};

bool canonical_less(const Codeword& a, const Codeword& b);

// True iff the sequence has even length, equal numbers of 1s and 0s and no
// prefix with more 0s than 1s.
bool validate(std::span<const std::uint8_t> symbols);
bool validate(const Codeword& word);
// Any character other than '0'/'1' makes the text invalid.
bool validate(std::string_view text);

inline constexpr unsigned kDefaultMaterializeMaxN = 16;
// Words are packed into 64-bit patterns while materialized.
inline constexpr unsigned kPackedMaxN = 32;

// Every available signal sequence of length 2n, in canonical order.
class Codebook {
 public:
  unsigned n() const noexcept { return n_; }
  std::size_t size() const noexcept { return packed_.size(); }
  Codeword word(std::size_t i) const;
  std::vector<Codeword> words() const;

  // Symbol j of word i is bit (2n - 1 - j) of packed()[i].
  std::span<const std::uint64_t> packed() const noexcept { return packed_; }

 private:
  friend Codebook build_codebook(unsigned n, unsigned max_n);
  Codebook(unsigned n, std::vector<std::uint64_t> packed) : n_(n), packed_(std::move(packed)) {}

  unsigned n_ = 0;
  std::vector<std::uint64_t> packed_;
};

// Builds the codebook from shorter sub-books: a word with its first k symbols
// equal to 1 is those k ones, a free block of k symbols holding i ones, and
// the tail of a length 2(n-k+i) word that starts with 2i ones. Throws
// SizeGuardError when n > max_n (max_n itself is capped at kPackedMaxN).
Codebook build_codebook(unsigned n, unsigned max_n = kDefaultMaterializeMaxN);

// Counts of valid completions: completions(p, h) is the number of ways to
// finish a word of length 2n from position p with running surplus h = #1 - #0.
class PathCountTable {
 public:
  explicit PathCountTable(unsigned n);

  unsigned n() const noexcept { return n_; }
  std::size_t length() const noexcept { return 2 * static_cast<std::size_t>(n_); }
  // Zero for unreachable or out-of-table states.
  const BigCount& completions(std::size_t position, std::size_t surplus) const;
  const BigCount& total() const { return completions(0, 0); }

 private:
  unsigned n_;
  std::size_t width_;
  std::vector<BigCount> cells_;
  static const BigCount kZero;
};

// Position of word in canonical order. Throws InvalidWordError when the word
// is not valid or its length differs from the table's.
BigCount rank(const Codeword& word, const PathCountTable& table);

// Inverse of rank. Throws IndexOutOfRangeError unless index < S_n.
Codeword unrank(const BigCount& index, const PathCountTable& table);

enum class Link { source_relay, relay_destination };

struct FlowSlot {
  std::size_t index = 0;
  Link link = Link::source_relay;
  double duration = 0.0;      // s
  double bits = 0.0;          // moved during the slot
  double relay_buffer = 0.0;  // bits held at the relay after the slot
};

struct FlowTrace {
  std::vector<FlowSlot> slots;
  double period = 0.0;          // T
  unsigned pairs = 0;           // N
  double source_slot = 0.0;     // dt1
  double relay_slot = 0.0;      // dt2
  double delivered_bits = 0.0;
};

// Replays a schedule over one period with link capacities c1 (S-R) and c2
// (R-D). Slots are sized so each carries the same number of bits. Throws
// FlowViolationError when the relay would forward data it does not hold or
// ends the period with undelivered data; DomainError for non-positive inputs.
FlowTrace simulate_flow(const Codeword& word, double c1, double c2, double period);

// Fixed-length and pairwise distinct.
bool check_unique_decodability(std::span<const Codeword> words);
bool check_unique_decodability(const Codebook& book);

}  // namespace sigtime
