// Copyright 2026 The epicoord Authors.
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

#ifndef EPICOORD_RATIONAL_H_
#define EPICOORD_RATIONAL_H_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace epicoord {

// All probabilities, beliefs and payoffs are exact rationals. mpq_class keeps
// its value canonical after every arithmetic operation we use.
using Rational = mpq_class;

// Thrown when user-supplied text cannot be read as a rational.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "p/q", "-p/q", integers and finite decimals ("0.25", "1.1",
// "-.5", "2e-3"). Decimals convert exactly: "0.1" is 1/10, never the
// nearest double.
Rational ParseRational(std::string_view text);

// Always "p/q", including integers ("1/1", "0/1").
std::string FormatRational(const Rational& value);

// Shortest round-trip decimal of the nearest double, with a trailing ".0"
// for integral values ("1.0", "0.25", "0.9090909090909091").
std::string FormatDecimal(const Rational& value);

// "p/q (decimal)", used in human-readable output.
std::string FormatRationalWithDecimal(const Rational& value);

}  // namespace epicoord

#endif  // EPICOORD_RATIONAL_H_
