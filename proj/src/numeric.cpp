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

#include "obext/numeric.hpp"

#include <charconv>

#include "obext/error.hpp"

namespace obext {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInstanceMismatch: return "instance_mismatch";
    case ErrorCode::kUnsupportedRelation: return "unsupported_relation";
    case ErrorCode::kInvalidPreset: return "invalid_preset";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kMalformedKey: return "malformed_key";
    case ErrorCode::kNotInH: return "not_in_H";
    case ErrorCode::kNotPureGrade: return "not_pure_grade";
    case ErrorCode::kNoUnit: return "no_unit";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kRankDeficient: return "rank_deficient";
    case ErrorCode::kSizeViolation: return "size_violation";
    case ErrorCode::kWrongPresetKind: return "wrong_preset_kind";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::int64_t mod_normalize(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // Extended Euclid on (a, p).
  std::int64_t old_r = mod_normalize(a, p), r = p;
  std::int64_t old_s = 1, s = 0;
  if (old_r == 0) throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_normalize(old_s, p);
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  std::int64_t num = parse_integer(text.substr(0, slash), text);
  std::int64_t den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

ExactField::ExactField(std::int64_t modulus) : modulus_(modulus) {
  if (modulus_ != 0 && !is_prime(modulus_)) {
    throw Error(ErrorCode::kInvalidPreset, "field modulus must be prime: " + std::to_string(modulus_));
  }
}

Rational ExactField::normalize(const Rational& a) const {
  if (is_rational()) return a;
  std::int64_t num = mod_normalize(a.numerator(), modulus_);
  std::int64_t den = mod_normalize(a.denominator(), modulus_);
  return Rational(mod_normalize(num * mod_inverse(den, modulus_), modulus_));
}

Rational ExactField::add(const Rational& a, const Rational& b) const { return normalize(a + b); }
Rational ExactField::sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
Rational ExactField::mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
Rational ExactField::neg(const Rational& a) const { return normalize(-a); }

Rational ExactField::inv(const Rational& a) const {
  if (a == Rational(0)) throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  if (is_rational()) return Rational(1) / a;
  return Rational(mod_inverse(a.numerator(), modulus_));
}

}  // namespace obext
