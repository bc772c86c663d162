// Copyright 2026 The fracdim Authors.
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

#ifndef FRACDIM_ERROR_H_
#define FRACDIM_ERROR_H_

#include <stdexcept>
#include <string>

namespace fracdim {

// Malformed textual input (graph files, family files, spec strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The closed-form oracle has no formula for the requested instance.
class NoClosedForm : public std::runtime_error {
 public:
  explicit NoClosedForm(const std::string& what)
      : std::runtime_error("no closed form known: " + what) {}
};

}  // namespace fracdim

#endif  // FRACDIM_ERROR_H_
