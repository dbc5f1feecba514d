// Copyright 2026 The Renyi-Inf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

enum class ErrorKind {
  kInvalidArgument,
  kBudgetExceeded,
  kAlphaNearOne,
  kImpossibleNormalization,
  kInvalidWeights,
  kInvalidDonor,
  kBelowN0,
  kRegionError,
  kParseError,
};

const char* to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported as an Error. The kind
// identifies the violated contract so callers (and the CLI) can map it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace renyi
