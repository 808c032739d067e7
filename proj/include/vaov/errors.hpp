// Copyright 2026 The vaov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vaov {

// Malformed input: bad preference orders, bad files, bad arguments.
// `field()` names the offending field so front ends can report it.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// An action that the negotiation rules do not allow in the given state.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A function was called outside the domain it is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The exhaustive solvers refuse instances beyond their configured size.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace vaov
