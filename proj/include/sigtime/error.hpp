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
#include <stdexcept>
#include <string>
#include <string_view>

namespace sigtime {

// Base for every error raised by the library. The module name is kept apart
// from the message so the CLI can prefix it ("codebook: ...").
class Error : public std::runtime_error {
 public:
  Error(std::string_view module, const std::string& message)
      : std::runtime_error(message), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

// A requested object would be too large to materialize or enumerate.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's precondition (odd length, negative SNR, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A sequence that is not an available signal sequence.
class InvalidWordError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// The relay would have to forward bits it has not received.
class FlowViolationError : public Error {
 public:
  using Error::Error;
};

// One block of a concatenated word failed validation. Blocks are numbered
// from 1 in transmission order.
class InvalidBlockError : public InvalidWordError {
 public:
  InvalidBlockError(std::string_view module, const std::string& message,
                    std::size_t block)
      : InvalidWordError(module, message), block_(block) {}

  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t block_;
};

}  // namespace sigtime
