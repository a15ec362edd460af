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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "obext/scalar.hpp"

namespace obext {

enum class Decision { kHolds, kFails, kUnknown };

std::string_view decision_name(Decision d);

/// Conjunction over a family of decisions: any Fails wins, then any Unknown.
Decision decision_and(Decision a, Decision b);

/// A generator `lhs <= rhs` of an order relation on formal sums.
struct Relation {
  FormalSum lhs;
  FormalSum rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

/// Generators kept sorted (with multiplicity), so equal multisets of
/// generators compare equal.
class RelationSet {
 public:
  RelationSet() = default;
  explicit RelationSet(std::vector<Relation> generators);

  void add(Relation r);
  const std::vector<Relation>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  /// No generator has fewer terms on the right than on the left.
  bool non_shrinking() const;

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

 private:
  std::vector<Relation> generators_;
};

struct PresetDescriptor {
  PresetKind kind = PresetKind::kF1pm;
  int p = 0;  // only for kPrimeField

  static PresetDescriptor f1pm() { return {PresetKind::kF1pm, 0}; }
  /// Throws Error(kInvalidPreset) unless p is a prime <= 13.
  static PresetDescriptor gf(int p);
  static PresetDescriptor rational() { return {PresetKind::kRationalField, 0}; }
  static PresetDescriptor boolean() { return {PresetKind::kBoolean, 0}; }
  static PresetDescriptor maxplus() { return {PresetKind::kMaxPlus, 0}; }

  friend bool operator==(const PresetDescriptor&, const PresetDescriptor&) = default;
};

/// Preset names used on the command line: f1pm, gf3, gf:3, gf(3), boolean,
/// maxplus, rational.
PresetDescriptor parse_preset_name(std::string_view name);

/// A concrete F1±-algebra: the monoid of one preset together with the order
/// its generators induce on formal sums.
class Blueprint {
 public:
  virtual ~Blueprint() = default;

  const PresetDescriptor& descriptor() const { return descriptor_; }
  Domain domain() const { return domain_; }
  std::string name() const { return domain_.name(); }

  Scalar zero() const { return Scalar::zero(domain_); }
  Scalar one() const { return Scalar::one(domain_); }
  Scalar eps() const { return Scalar::eps(domain_); }

  /// Throws Error(kInstanceMismatch) unless `a` belongs to this preset.
  void require(const Scalar& a) const;
  void require(const FormalSum& x) const;

  Scalar mul(const Scalar& a, const Scalar& b) const;
  bool is_unit(const Scalar& a) const;

  /// All of B^• (including 0) for finite presets, in increasing order.
  virtual std::optional<std::vector<Scalar>> carrier() const = 0;
  /// The carrier by value. Throws Error(kWrongPresetKind) on infinite presets.
  std::vector<Scalar> elements() const;

  /// Exact decision of lhs <= rhs in the order generated by the preset's
  /// relations. Throws Error(kUnsupportedRelation) when lhs is nonzero and
  /// rhs exceeds the exact search size.
  virtual Decision leq(const FormalSum& lhs, const FormalSum& rhs) const = 0;

  /// Whether `lhs <= rhs` is one of the preset's generating relations (before
  /// additive / multiplicative / transitive closure). `lhs` has at most one
  /// term.
  virtual bool is_generator(const FormalSum& lhs, const FormalSum& rhs) const = 0;

  /// A finite generating set for the closure engine. Infinite presets draw the
  /// parameters of their generator families from `hints`.
  virtual RelationSet generators(std::span<const Scalar> hints) const = 0;

  /// Scalar text form: "0", "1", "eps" for f1pm; residues for GF(p); "a/b" for
  /// Q; "q:a/b" and "q:-inf" for max-plus.
  std::string format(const Scalar& a) const;
  Scalar parse(std::string_view text) const;

  bool is_field() const { return domain_.is_field(); }
  bool is_idempotent() const { return domain_.is_idempotent(); }

 protected:
  explicit Blueprint(PresetDescriptor d);

 private:
  PresetDescriptor descriptor_;
  Domain domain_;
};

using BlueprintPtr = std::shared_ptr<const Blueprint>;

/// Throws Error(kInvalidPreset) for non-prime or out-of-range p.
BlueprintPtr make_preset(const PresetDescriptor& descriptor);

inline Decision instance_leq(const Blueprint& bp, const FormalSum& lhs, const FormalSum& rhs) {
  return bp.leq(lhs, rhs);
}

inline bool is_unit(const Blueprint& bp, const Scalar& a) { return bp.is_unit(a); }

/// Value of a formal sum in the field a field preset comes from. Throws
/// Error(kWrongPresetKind) otherwise.
Rational hull_scalar(const Blueprint& bp, const FormalSum& x);

/// Value of a formal sum in the idempotent semifield (max of the terms);
/// std::nullopt is the bottom element. Throws Error(kWrongPresetKind) on
/// non-idempotent presets.
std::optional<Rational> idem_collapse(const Blueprint& bp, const FormalSum& x);

}  // namespace obext
