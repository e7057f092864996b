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

#include "sigtime/concat_codec.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "sigtime/ballot_count.hpp"
#include "sigtime/error.hpp"

namespace sigtime {

namespace {

constexpr std::string_view kModule = "concat";

Codeword slice(const Codeword& word, std::size_t begin, std::size_t len) {
  const auto s = word.symbols().subspan(begin, len);
  return Codeword(std::vector<std::uint8_t>(s.begin(), s.end()));
}

}  // namespace

ConcatScheme::ConcatScheme(unsigned target_len, unsigned component_len)
    : target_len_(target_len),
      component_len_(component_len),
      m_(target_len / component_len),
      r_(target_len % component_len),
      component_(component_len / 2) {
  if (r_ > 0) tail_.emplace(r_ / 2);
  capacity_ = boost::multiprecision::pow(component_.total(), m_);
  if (tail_) capacity_ *= tail_->total();
}

ConcatScheme plan(unsigned target_len, unsigned component_len) {
  if (target_len < 2 || target_len % 2 != 0) {
    throw DomainError(kModule, "target length must be even and >= 2, got " +
                                   std::to_string(target_len));
  }
  if (component_len < 2 || component_len % 2 != 0) {
    throw DomainError(kModule, "component length must be even and >= 2, got " +
                                   std::to_string(component_len));
  }
  return ConcatScheme(target_len, component_len);
}

Codeword concat_encode(const ConcatScheme& scheme, const BigCount& index) {
  if (index < 0 || index >= scheme.capacity()) {
    throw IndexOutOfRangeError(kModule, "index " + to_decimal(index) + " outside [0, " +
                                            to_decimal(scheme.capacity()) + ")");
  }
  BigCount rest = index;
  Codeword tail_word;
  if (scheme.tail()) {
    const BigCount& radix = scheme.tail()->total();
    tail_word = unrank(rest % radix, *scheme.tail());
    rest /= radix;
  }
  const BigCount& radix = scheme.component().total();
  std::vector<Codeword> blocks(scheme.blocks());
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    *it = unrank(rest % radix, scheme.component());
    rest /= radix;
  }
  Codeword out;
  for (const auto& b : blocks) out.append(b);
  out.append(tail_word);
  return out;
}

BigCount concat_decode(const ConcatScheme& scheme, const Codeword& word) {
  if (word.size() != scheme.target_len()) {
    throw InvalidWordError(kModule, "word length " + std::to_string(word.size()) +
                                        " does not match scheme length " +
                                        std::to_string(scheme.target_len()));
  }
  const std::size_t len = scheme.component_len();
  BigCount index = 0;
  std::size_t block = 1;
  auto rank_block = [&](const Codeword& part, const PathCountTable& table) {
    if (!validate(part)) {
      throw InvalidBlockError(kModule,
                              "block " + std::to_string(block) + " is not valid: " + part.str(),
                              block);
    }
    return rank(part, table);
  };
  for (unsigned b = 0; b < scheme.blocks(); ++b, ++block) {
    index = index * scheme.component().total() +
            rank_block(slice(word, b * len, len), scheme.component());
  }
  if (scheme.tail()) {
    const Codeword part = slice(word, scheme.blocks() * len, scheme.tail_len());
    index = index * scheme.tail()->total() + rank_block(part, *scheme.tail());
  }
  return index;
}

ConcatMetrics metrics(const ConcatScheme& scheme) {
  const unsigned n = scheme.target_len() / 2;
  ConcatMetrics out;
  out.optimal_words = catalan_closed_form(n);

  const BigCount& comp_words = scheme.component().total();
  const double comp_bits = log2_big(comp_words);
  double bits = scheme.blocks() * comp_bits;
  if (scheme.blocks() > 0) {
    out.stored_words += comp_words;
    out.stored_bits += comp_words * scheme.component_len();
  }
  if (scheme.tail()) {
    const BigCount& tail_words = scheme.tail()->total();
    bits += log2_big(tail_words);
    out.stored_words += tail_words;
    out.stored_bits += tail_words * scheme.tail_len();
  }

  out.rate_per_pulse = bits / scheme.target_len();
  out.optimal_rate_per_pulse = log2_big(out.optimal_words) / scheme.target_len();
  out.rho_r =
      out.optimal_rate_per_pulse > 0.0 ? 1.0 - out.rate_per_pulse / out.optimal_rate_per_pulse : 0.0;
  out.rho_m = std::exp2(log2_big(out.stored_words) - log2_big(out.optimal_words));
  return out;
}

}  // namespace sigtime
