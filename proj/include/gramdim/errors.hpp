// Copyright 2026 The gramdim Authors.
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

#ifndef GRAMDIM_ERRORS_HPP
#define GRAMDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gramdim {

// Input that cannot describe a valid polynomial or request (parse errors,
// zero polynomial, odd degree where an even one is required, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by every spectrahedron-facing operation when f(x) < 0 somewhere.
class NotNonnegative : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical routine failed to meet its own acceptance threshold.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gramdim

#endif  // GRAMDIM_ERRORS_HPP
