// Copyright 2026 The Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace obext {

using Rational = boost::rational<std::int64_t>;

bool is_prime(std::int64_t p);

/// Representative of `a` in [0, p).
std::int64_t mod_normalize(std::int64_t a, std::int64_t p);

/// Inverse of a nonzero residue modulo the prime p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string format_rational(const Rational& q);

/// Accepts "a" or "a/b" with an optional leading sign. Throws Error(kParse).
Rational parse_rational(std::string_view text);

/// Exact arithmetic in GF(p) (modulus > 0) or Q (modulus == 0). Elements are
/// Rationals; in GF(p) they are integers in [0, p).
class ExactField {
 public:
  explicit ExactField(std::int64_t modulus = 0);

  std::int64_t modulus() const { return modulus_; }
  bool is_rational() const { return modulus_ == 0; }

  Rational normalize(const Rational& a) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws Error(kInvalidArgument) on zero.
  Rational inv(const Rational& a) const;

  bool operator==(const ExactField&) const = default;

 private:
  std::int64_t modulus_;
};

}  // namespace obext
