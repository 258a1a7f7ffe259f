// Copyright 2026 The zipcover Authors
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

#ifndef ZIPCOVER_ERRORS_HPP_
#define ZIPCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zipcover {

// Malformed input: bad JSON, unknown references, syntax problems.
// The CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a domain precondition (determinism,
// reachability, solver bounds, missing CPZN, ...).  CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zipcover

#endif  // ZIPCOVER_ERRORS_HPP_
