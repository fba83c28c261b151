// Copyright 2026 The npgal Authors
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

#ifndef NPGAL_EXACT_HPP
#define NPGAL_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace npgal {

using Integer = mpz_class;
/// Signed rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Raised when an input violates a mathematical precondition (zero
/// polynomial, non-prime modulus, negative-integer alpha, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "17", "-3", "5/3", "-7/3" into a canonical rational. No
/// whitespace, no decimal points, no exponent notation.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace npgal

#endif  // NPGAL_EXACT_HPP
