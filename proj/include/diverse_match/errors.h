// Copyright 2026 The diverse-match Authors.
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

#ifndef DIVERSE_MATCH_ERRORS_H_
#define DIVERSE_MATCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace diverse_match {

// An assignment maps an item to a platform it is not adjacent to, or refers to
// ids outside the instance.
class InvalidAssignmentError : public std::invalid_argument {
 public:
  InvalidAssignmentError(int item, int platform, const std::string& what)
      : std::invalid_argument(what), item_(item), platform_(platform) {}
  int item() const { return item_; }
  int platform() const { return platform_; }

 private:
  int item_;
  int platform_;
};

// An exact solver or a DP table would exceed its configured size limits.
class LimitExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A JSON document does not follow the instance or solution schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is not syntactically valid JSON (or the file could not be read).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance fails validation; the message lists the violations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A broken internal invariant. Seeing one is a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_ERRORS_H_
