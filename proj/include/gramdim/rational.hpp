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

#ifndef GRAMDIM_RATIONAL_HPP
#define GRAMDIM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gramdim {

using Rational = mpq_class;

// Parses "7", "-3/4", "2.125", "1e-3", "-.5" exactly. Throws InvalidInput.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" form, parseable by parse_rational.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace gramdim

#endif  // GRAMDIM_RATIONAL_HPP
