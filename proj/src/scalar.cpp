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

#include "obext/scalar.hpp"

#include <algorithm>
#include <functional>

#include "obext/error.hpp"

namespace obext {

std::string_view preset_kind_name(PresetKind kind) {
  switch (kind) {
    case PresetKind::kF1pm: return "f1pm";
    case PresetKind::kPrimeField: return "gf";
    case PresetKind::kRationalField: return "rational";
    case PresetKind::kBoolean: return "boolean";
    case PresetKind::kMaxPlus: return "maxplus";
  }
  return "?";
}

std::string Domain::name() const {
  std::string out(preset_kind_name(kind));
  if (kind == PresetKind::kPrimeField) out += "(" + std::to_string(modulus) + ")";
  return out;
}

Scalar Scalar::zero(Domain d) {
  if (d.kind == PresetKind::kMaxPlus) return bottom(d);
  return Scalar(d, false, Rational(0));
}

Scalar Scalar::one(Domain d) {
  if (d.kind == PresetKind::kMaxPlus) return Scalar(d, false, Rational(0));
  return Scalar(d, false, Rational(1));
}

Scalar Scalar::eps(Domain d) {
  switch (d.kind) {
    case PresetKind::kF1pm:
    case PresetKind::kRationalField: return Scalar(d, false, Rational(-1));
    case PresetKind::kPrimeField: return Scalar(d, false, Rational(d.modulus - 1));
    case PresetKind::kBoolean:
    case PresetKind::kMaxPlus: return one(d);
  }
  return one(d);
}

Scalar Scalar::bottom(Domain d) { return Scalar(d, true, Rational(0)); }

Scalar Scalar::from_value(Domain d, const Rational& value) {
  auto reject = [&] {
    throw Error(ErrorCode::kParse, "value " + format_rational(value) + " is not in the carrier of " + d.name());
  };
  switch (d.kind) {
    case PresetKind::kF1pm:
      if (value != Rational(0) && value != Rational(1) && value != Rational(-1)) reject();
      break;
    case PresetKind::kPrimeField:
      if (value.denominator() != 1 || value.numerator() < 0 || value.numerator() >= d.modulus) reject();
      break;
    case PresetKind::kBoolean:
      if (value != Rational(0) && value != Rational(1)) reject();
      break;
    case PresetKind::kRationalField:
    case PresetKind::kMaxPlus: break;
  }
  return Scalar(d, false, value);
}

bool Scalar::is_zero() const {
  if (domain_.kind == PresetKind::kMaxPlus) return bottom_;
  return value_ == Rational(0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero is not a unit");
  switch (domain_.kind) {
    case PresetKind::kF1pm:
    case PresetKind::kBoolean: return *this;
    case PresetKind::kPrimeField:
      return Scalar(domain_, false, Rational(mod_inverse(value_.numerator(), domain_.modulus)));
    case PresetKind::kRationalField: return Scalar(domain_, false, Rational(1) / value_);
    case PresetKind::kMaxPlus: return Scalar(domain_, false, -value_);
  }
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
  if (a.bottom_ != b.bottom_) return a.bottom_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.value_ == b.value_) return std::strong_ordering::equal;
  return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Domain d = a.domain();
  if (d != b.domain()) {
    throw Error(ErrorCode::kInstanceMismatch, "cannot multiply scalars of " + d.name() + " and " + b.domain().name());
  }
  switch (d.kind) {
    case PresetKind::kMaxPlus:
      if (a.is_bottom() || b.is_bottom()) return Scalar::bottom(d);
      return Scalar::from_value(d, a.value() + b.value());
    case PresetKind::kPrimeField:
      return Scalar::from_value(d, Rational(mod_normalize(a.value().numerator() * b.value().numerator(), d.modulus)));
    default: return Scalar::from_value(d, a.value() * b.value());
  }
}

Scalar eps_power(Domain d, int k) { return (k % 2 == 0) ? Scalar::one(d) : Scalar::eps(d); }

FormalSum::FormalSum(std::initializer_list<Scalar> terms) : terms_(terms.begin(), terms.end()) { normalize(); }

FormalSum::FormalSum(std::span<const Scalar> terms) : terms_(terms.begin(), terms.end()) { normalize(); }

FormalSum FormalSum::of(const Scalar& s) {
  FormalSum out;
  if (!s.is_zero()) out.terms_.push_back(s);
  return out;
}

void FormalSum::normalize() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Scalar& s) { return s.is_zero(); }), terms_.end());
  std::sort(terms_.begin(), terms_.end());
  if (!terms_.empty() && terms_.front().domain() != terms_.back().domain()) {
    throw Error(ErrorCode::kInstanceMismatch, "formal sum mixes scalars of different presets");
  }
}

std::size_t FormalSum::count(const Scalar& s) const {
  auto [lo, hi] = std::equal_range(terms_.begin(), terms_.end(), s);
  return static_cast<std::size_t>(hi - lo);
}

bool FormalSum::mixes_with(Domain d) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Scalar& s) { return s.domain() != d; });
}

bool FormalSum::remove_submultiset(const FormalSum& part) {
  Terms rest;
  rest.reserve(terms_.size());
  auto it = part.terms_.begin();
  for (const Scalar& s : terms_) {
    if (it != part.terms_.end() && *it == s) {
      ++it;
    } else {
      if (it != part.terms_.end() && *it < s) return false;
      rest.push_back(s);
    }
  }
  if (it != part.terms_.end()) return false;
  terms_ = std::move(rest);
  return true;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  if (other.empty()) return *this;
  if (!empty() && terms_.front().domain() != other.terms_.front().domain()) {
    throw Error(ErrorCode::kInstanceMismatch, "cannot add formal sums of different presets");
  }
  Terms merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::merge(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

FormalSum operator+(const FormalSum& x, const FormalSum& y) {
  FormalSum out = x;
  out += y;
  return out;
}

FormalSum operator*(const FormalSum& x, const FormalSum& y) {
  std::vector<Scalar> products;
  products.reserve(x.size() * y.size());
  for (const Scalar& a : x.terms()) {
    for (const Scalar& b : y.terms()) products.push_back(a * b);
  }
  return FormalSum(std::span<const Scalar>(products));
}

FormalSum operator*(const Scalar& a, const FormalSum& x) {
  if (!x.empty() && a.domain() != x.terms().front().domain()) {
    throw Error(ErrorCode::kInstanceMismatch, "cannot scale a formal sum by a scalar of another preset");
  }
  if (a.is_zero()) return {};
  boost::container::small_vector<Scalar, 8> products;
  for (const Scalar& b : x.terms()) products.push_back(a * b);
  return FormalSum(std::span<const Scalar>(products.data(), products.size()));
}

FormalSum repeat(const FormalSum& x, std::size_t k) {
  FormalSum out;
  for (std::size_t i = 0; i < k; ++i) out += x;
  return out;
}

std::size_t hash_value(const FormalSum& x) {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Scalar& s : x.terms()) {
    std::size_t v = std::hash<std::int64_t>{}(s.value().numerator()) * 31 +
                    std::hash<std::int64_t>{}(s.value().denominator()) + (s.is_bottom() ? 17 : 0) +
                    static_cast<std::size_t>(s.domain().kind) * 131 + s.domain().modulus;
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace obext
