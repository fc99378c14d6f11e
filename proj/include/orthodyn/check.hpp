// Copyright 2026 The Orthodyn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Verdicts and error types shared by every checker in the library.

#ifndef ORTHODYN_CHECK_HPP_
#define ORTHODYN_CHECK_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orthodyn {

/// One violated clause. Lattice checkers fill `indices` with element
/// indices; algebra checkers fill `elements` with canonical element text
/// that the owning algebra can parse back.
struct Violation {
  std::string clause;
  std::vector<std::int64_t> indices;
  std::vector<std::string> elements;
  std::string detail;
};

class CheckResult {
 public:
  /// Caps the number of violations kept per clause so reports stay small.
  static constexpr std::size_t kMaxPerClause = 4;

  [[nodiscard]] bool passed() const noexcept { return violations_.empty(); }
  explicit operator bool() const noexcept { return passed(); }

  void fail(Violation v);
  void merge(const CheckResult& other);

  [[nodiscard]] bool has(std::string_view clause) const noexcept;
  [[nodiscard]] const Violation* first(std::string_view clause) const noexcept;
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed files, bad catalog strings, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A structure that is required to satisfy a law does not.
class VerificationError : public Error {
 public:
  VerificationError(std::string stage, std::string what, Violation witness)
      : Error(stage + ": " + what),
        stage_(std::move(stage)),
        witness_(std::move(witness)) {}

  [[nodiscard]] const std::string& stage() const noexcept { return stage_; }
  [[nodiscard]] const Violation& witness() const noexcept { return witness_; }

 private:
  std::string stage_;
  Violation witness_;
};

}  // namespace orthodyn

#endif  // ORTHODYN_CHECK_HPP_
