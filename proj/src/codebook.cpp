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

#include "sigtime/codebook.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "sigtime/error.hpp"

namespace sigtime {

namespace {

constexpr std::string_view kModule = "codebook";

std::uint64_t ones(unsigned count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

// Sub-books CBF(n, k) as packed words of length 2n, memoized per (n, k).
class SubBookBuilder {
 public:
  const std::vector<std::uint64_t>& get(unsigned n, unsigned k) {
    if (k == 0 && n > 0) k = 1;
    const auto key = std::make_pair(n, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto book = make(n, k);
    return memo_.emplace(key, std::move(book)).first->second;
  }

 private:
  std::vector<std::uint64_t> make(unsigned n, unsigned k) {
    if (n == 0) return {0};
    if (k > n) return {};
    if (k == n) return {ones(n) << n};

    const unsigned len = 2 * n;
    const unsigned tail_len = len - 2 * k;
    const std::uint64_t head = ones(k) << (len - k);
    std::vector<std::uint64_t> out;
    for (unsigned i = 0; i <= k; ++i) {
      // std::map keeps references stable across the recursive inserts
      const auto& sub = get(n - k + i, 2 * i);
      if (sub.empty()) continue;
      const std::uint64_t tail_mask = ones(tail_len);
      for_each_block(k, i, [&](std::uint64_t block) {
        const std::uint64_t prefix = head | (block << tail_len);
        for (std::uint64_t s : sub) out.push_back(prefix | (s & tail_mask));
      });
    }
    return out;
  }

  // Every k-bit pattern with exactly i bits set (Gosper's hack).
  template <typename Fn>
  static void for_each_block(unsigned k, unsigned i, Fn&& fn) {
    if (i == 0) {
      fn(0);
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t v = ones(i); v < limit;) {
      fn(v);
      const std::uint64_t c = v & (~v + 1);
      const std::uint64_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }

  std::map<std::pair<unsigned, unsigned>, std::vector<std::uint64_t>> memo_;
};

}  // namespace

Codeword::Codeword(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  for (auto s : symbols_) {
    if (s > 1) throw DomainError(kModule, "codeword symbols must be 0 or 1");
  }
}

Codeword Codeword::parse(std::string_view text) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw DomainError(kModule, "codeword may contain only '0' and '1': '" +
                                     std::string(text) + "'");
    }
    symbols.push_back(c == '1' ? 1 : 0);
  }
  return Codeword(std::move(symbols));
}

std::string Codeword::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (auto s : symbols_) out.push_back(s ? '1' : '0');
  return out;
}

void Codeword::append(const Codeword& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

bool canonical_less(const Codeword& a, const Codeword& b) {
  return std::lexicographical_compare(a.symbols_.begin(), a.symbols_.end(), b.symbols_.begin(),
                                      b.symbols_.end(), std::greater<>{});
}

bool validate(std::span<const std::uint8_t> symbols) {
  if (symbols.size() % 2 != 0) return false;
  long surplus = 0;
  for (auto s : symbols) {
    if (s > 1) return false;
    surplus += s ? 1 : -1;
    if (surplus < 0) return false;
  }
  return surplus == 0;
}

bool validate(const Codeword& word) { return validate(word.symbols()); }

bool validate(std::string_view text) {
  if (text.find_first_not_of("01") != std::string_view::npos) return false;
  return validate(Codeword::parse(text));
}

Codeword Codebook::word(std::size_t i) const {
  const unsigned len = 2 * n_;
  std::vector<std::uint8_t> symbols(len);
  for (unsigned j = 0; j < len; ++j) symbols[j] = (packed_.at(i) >> (len - 1 - j)) & 1U;
  return Codeword(std::move(symbols));
}

std::vector<Codeword> Codebook::words() const {
  std::vector<Codeword> out;
  out.reserve(packed_.size());
  for (std::size_t i = 0; i < packed_.size(); ++i) out.push_back(word(i));
  return out;
}

Codebook build_codebook(unsigned n, unsigned max_n) {
  max_n = std::min(max_n, kPackedMaxN);
  if (n > max_n) {
    throw SizeGuardError(kModule, "materializing n = " + std::to_string(n) +
                                      " exceeds the cap n <= " + std::to_string(max_n));
  }
  std::vector<std::uint64_t> words;
  {
    SubBookBuilder builder;
    words = builder.get(n, 1);
  }
  // 1 before 0 in the leading symbols == larger packed value first.
  std::sort(words.begin(), words.end(), std::greater<>{});
  return Codebook(n, std::move(words));
}

const BigCount PathCountTable::kZero{0};

PathCountTable::PathCountTable(unsigned n)
    : n_(n), width_(static_cast<std::size_t>(n) + 1), cells_((2 * width_ - 1) * width_) {
  const std::size_t len = length();
  cells_[len * width_ + 0] = 1;
  for (std::size_t p = len; p-- > 0;) {
    for (std::size_t h = 0; h < width_; ++h) {
      BigCount c = 0;
      if (h + 1 < width_) c += cells_[(p + 1) * width_ + h + 1];
      if (h > 0) c += cells_[(p + 1) * width_ + h - 1];
      cells_[p * width_ + h] = std::move(c);
    }
  }
}

const BigCount& PathCountTable::completions(std::size_t position, std::size_t surplus) const {
  if (position > length() || surplus >= width_) return kZero;
  return cells_[position * width_ + surplus];
}

BigCount rank(const Codeword& word, const PathCountTable& table) {
  if (word.size() != table.length()) {
    throw InvalidWordError(kModule, "word length " + std::to_string(word.size()) +
                                        " does not match table length " +
                                        std::to_string(table.length()));
  }
  if (!validate(word)) throw InvalidWordError(kModule, "not a valid word: " + word.str());
  BigCount index = 0;
  std::size_t surplus = 0;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p]) {
      ++surplus;
    } else {
      // every word taking a 1 here precedes this one
      index += table.completions(p + 1, surplus + 1);
      --surplus;
    }
  }
  return index;
}

Codeword unrank(const BigCount& index, const PathCountTable& table) {
  if (index < 0 || index >= table.total()) {
    throw IndexOutOfRangeError(kModule, "index " + to_decimal(index) + " outside [0, " +
                                            to_decimal(table.total()) + ")");
  }
  BigCount rest = index;
  std::vector<std::uint8_t> symbols(table.length());
  std::size_t surplus = 0;
  for (std::size_t p = 0; p < symbols.size(); ++p) {
    const BigCount& with_one = table.completions(p + 1, surplus + 1);
    if (rest < with_one) {
      symbols[p] = 1;
      ++surplus;
    } else {
      rest -= with_one;
      symbols[p] = 0;
      --surplus;
    }
  }
  return Codeword(std::move(symbols));
}

FlowTrace simulate_flow(const Codeword& word, double c1, double c2, double period) {
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(period > 0.0)) {
    throw DomainError(kModule, "capacities and period must be positive");
  }
  if (word.empty()) throw DomainError(kModule, "cannot simulate an empty schedule");
  if (word.size() % 2 != 0) {
    throw FlowViolationError(kModule, "odd-length schedule " + word.str());
  }

  FlowTrace trace;
  trace.period = period;
  trace.pairs = static_cast<unsigned>(word.size() / 2);
  trace.source_slot = c2 * period / ((c1 + c2) * trace.pairs);
  trace.relay_slot = c1 * period / ((c1 + c2) * trace.pairs);
  const double bits_per_slot = c1 * c2 * period / ((c1 + c2) * trace.pairs);

  // Buffer is tracked in whole slot-loads so the underflow test is exact.
  long held = 0;
  long forwarded = 0;
  trace.slots.reserve(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    FlowSlot slot;
    slot.index = j;
    slot.bits = bits_per_slot;
    if (word[j]) {
      slot.link = Link::source_relay;
      slot.duration = trace.source_slot;
      ++held;
    } else {
      slot.link = Link::relay_destination;
      slot.duration = trace.relay_slot;
      if (held == 0) {
        throw FlowViolationError(kModule, "slot " + std::to_string(j) + " of " + word.str() +
                                              ": relay has nothing left to forward");
      }
      --held;
      ++forwarded;
    }
    slot.relay_buffer = static_cast<double>(held) * bits_per_slot;
    trace.slots.push_back(slot);
  }
  if (held != 0) {
    throw FlowViolationError(kModule, "schedule " + word.str() + " leaves " +
                                          std::to_string(held) + " slot loads at the relay");
  }
  trace.delivered_bits = static_cast<double>(forwarded) * c2 * trace.relay_slot;
  return trace;
}

bool check_unique_decodability(std::span<const Codeword> words) {
  if (words.empty()) return true;
  const std::size_t len = words.front().size();
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& w : words) {
    if (w.size() != len) return false;
    if (!seen.emplace(w.symbols().begin(), w.symbols().end()).second) return false;
  }
  return true;
}

bool check_unique_decodability(const Codebook& book) {
  const auto packed = book.packed();
  std::vector<std::uint64_t> sorted(packed.begin(), packed.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace sigtime
