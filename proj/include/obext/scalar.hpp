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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

#include "obext/numeric.hpp"

namespace obext {

enum class PresetKind : std::uint8_t {
  kF1pm,           // {0, 1, eps}
  kPrimeField,     // GF(p)^mon
  kRationalField,  // Q^mon
  kBoolean,        // B^mon for the two-element idempotent semifield
  kMaxPlus,        // (Q u {-inf}, max, +)^mon
};

std::string_view preset_kind_name(PresetKind kind);

/// Identifies the monoid a scalar lives in. Scalars of different domains never
/// combine.
struct Domain {
  PresetKind kind = PresetKind::kF1pm;
  std::uint8_t modulus = 0;  // p for kPrimeField, 0 otherwise

  bool is_field() const { return kind == PresetKind::kPrimeField || kind == PresetKind::kRationalField; }
  bool is_idempotent() const { return kind == PresetKind::kBoolean || kind == PresetKind::kMaxPlus; }
  /// Finite carrier (everything except Q and max-plus).
  bool is_finite() const { return kind != PresetKind::kRationalField && kind != PresetKind::kMaxPlus; }
  std::string name() const;

  friend auto operator<=>(const Domain&, const Domain&) = default;
};

/// An element of the underlying monoid B^• of a preset.
///
/// Field-like presets store the field element itself (eps = -1). Max-plus
/// stores the tropical value, with multiplication being addition and the
/// absorbing element the bottom -inf. Boolean stores 0/1.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(Domain d);
  static Scalar one(Domain d);
  static Scalar eps(Domain d);
  /// Value in the preset's own coordinates (field residue, tropical value).
  /// Throws Error(kParse) if the value is not in the carrier.
  static Scalar from_value(Domain d, const Rational& value);
  static Scalar bottom(Domain d);

  Domain domain() const { return domain_; }
  bool is_bottom() const { return bottom_; }
  const Rational& value() const { return value_; }

  bool is_zero() const;
  bool is_one() const { return *this == one(domain_); }
  /// Every nonzero element of a shipped preset is invertible.
  bool is_unit() const { return !is_zero(); }
  /// Throws Error(kInvalidArgument) on non-units.
  Scalar inverse() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;
  /// Domain first; within a domain bottom is least and values compare
  /// numerically.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Scalar(Domain d, bool bottom, Rational v) : domain_(d), bottom_(bottom), value_(v) {}

  Domain domain_{};
  bool bottom_ = false;
  Rational value_{0};
};

/// Monoid product. Throws Error(kInstanceMismatch) across domains.
Scalar operator*(const Scalar& a, const Scalar& b);
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }

/// ε^k.
Scalar eps_power(Domain d, int k);

/// An element of the ambient semiring B⁺: a finite multiset of nonzero monoid
/// elements, kept sorted. The empty multiset is 0.
class FormalSum {
 public:
  using Terms = boost::container::small_vector<Scalar, 6>;

  FormalSum() = default;
  FormalSum(std::initializer_list<Scalar> terms);
  explicit FormalSum(std::span<const Scalar> terms);
  /// Single-term sum (empty if `s` is zero).
  static FormalSum of(const Scalar& s);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Multiplicity of `s` in the multiset.
  std::size_t count(const Scalar& s) const;
  /// True if some term has a domain other than `d`.
  bool mixes_with(Domain d) const;

  /// Multiset difference when `part` is a sub-multiset, otherwise false.
  bool remove_submultiset(const FormalSum& part);

  FormalSum& operator+=(const FormalSum& other);

  friend bool operator==(const FormalSum&, const FormalSum&) = default;
  friend auto operator<=>(const FormalSum& a, const FormalSum& b) {
    return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                                  b.terms_.end());
  }

 private:
  void normalize();

  Terms terms_;
};

/// Multiset union.
FormalSum operator+(const FormalSum& x, const FormalSum& y);
/// Double distribution of the monoid product; zero products are dropped.
FormalSum operator*(const FormalSum& x, const FormalSum& y);
FormalSum operator*(const Scalar& a, const FormalSum& x);

inline FormalSum sum_add(const FormalSum& x, const FormalSum& y) { return x + y; }
inline FormalSum sum_mul(const FormalSum& x, const FormalSum& y) { return x * y; }

/// k copies of `x`.
FormalSum repeat(const FormalSum& x, std::size_t k);

std::size_t hash_value(const FormalSum& x);

}  // namespace obext
