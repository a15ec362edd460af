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

#include "obext/blueprint.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "obext/error.hpp"

namespace obext {

std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::kHolds: return "Holds";
    case Decision::kFails: return "Fails";
    case Decision::kUnknown: return "Unknown";
  }
  return "?";
}

Decision decision_and(Decision a, Decision b) {
  if (a == Decision::kFails || b == Decision::kFails) return Decision::kFails;
  if (a == Decision::kUnknown || b == Decision::kUnknown) return Decision::kUnknown;
  return Decision::kHolds;
}

RelationSet::RelationSet(std::vector<Relation> generators) : generators_(std::move(generators)) {
  std::sort(generators_.begin(), generators_.end());
}

void RelationSet::add(Relation r) {
  generators_.insert(std::upper_bound(generators_.begin(), generators_.end(), r), std::move(r));
}

bool RelationSet::non_shrinking() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Relation& r) { return r.rhs.size() >= r.lhs.size(); });
}

PresetDescriptor PresetDescriptor::gf(int p) {
  if (!is_prime(p) || p > 13) {
    throw Error(ErrorCode::kInvalidPreset, "gf preset needs a prime p <= 13, got " + std::to_string(p));
  }
  return {PresetKind::kPrimeField, p};
}

PresetDescriptor parse_preset_name(std::string_view name) {
  if (name == "f1pm") return PresetDescriptor::f1pm();
  if (name == "boolean") return PresetDescriptor::boolean();
  if (name == "maxplus") return PresetDescriptor::maxplus();
  if (name == "rational") return PresetDescriptor::rational();
  if (name.starts_with("gf")) {
    std::string_view rest = name.substr(2);
    if (rest.starts_with(":")) rest.remove_prefix(1);
    if (rest.starts_with("(") && rest.ends_with(")")) rest = rest.substr(1, rest.size() - 2);
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        rest.size() <= 6) {
      return PresetDescriptor::gf(std::stoi(std::string(rest)));
    }
  }
  throw Error(ErrorCode::kInvalidPreset, "unknown preset '" + std::string(name) + "'");
}

Blueprint::Blueprint(PresetDescriptor d) : descriptor_(d) {
  domain_.kind = d.kind;
  domain_.modulus = d.kind == PresetKind::kPrimeField ? static_cast<std::uint8_t>(d.p) : 0;
}

std::vector<Scalar> Blueprint::elements() const {
  if (auto c = carrier()) return std::move(*c);
  throw Error(ErrorCode::kWrongPresetKind, name() + " has an infinite carrier");
}

void Blueprint::require(const Scalar& a) const {
  if (a.domain() != domain_) {
    throw Error(ErrorCode::kInstanceMismatch, "scalar of " + a.domain().name() + " used with " + name());
  }
}

void Blueprint::require(const FormalSum& x) const {
  if (x.mixes_with(domain_)) throw Error(ErrorCode::kInstanceMismatch, "formal sum does not belong to " + name());
}

Scalar Blueprint::mul(const Scalar& a, const Scalar& b) const {
  require(a);
  require(b);
  return a * b;
}

bool Blueprint::is_unit(const Scalar& a) const {
  require(a);
  return a.is_unit();
}

std::string Blueprint::format(const Scalar& a) const {
  require(a);
  switch (domain_.kind) {
    case PresetKind::kF1pm:
      if (a.is_zero()) return "0";
      return a.is_one() ? "1" : "eps";
    case PresetKind::kMaxPlus:
      return a.is_bottom() ? "q:-inf" : "q:" + format_rational(a.value());
    default: return format_rational(a.value());
  }
}

Scalar Blueprint::parse(std::string_view text) const {
  if (text == "eps") return eps();
  switch (domain_.kind) {
    case PresetKind::kF1pm:
      if (text == "0") return zero();
      if (text == "1") return one();
      break;
    case PresetKind::kBoolean:
      if (text == "0") return zero();
      if (text == "1") return one();
      break;
    case PresetKind::kPrimeField: {
      Rational q = parse_rational(text);
      if (q.denominator() != 1) break;
      return Scalar::from_value(domain_, Rational(mod_normalize(q.numerator(), domain_.modulus)));
    }
    case PresetKind::kRationalField: return Scalar::from_value(domain_, parse_rational(text));
    case PresetKind::kMaxPlus:
      if (text == "q:-inf") return zero();
      if (text.starts_with("q:")) return Scalar::from_value(domain_, parse_rational(text.substr(2)));
      break;
  }
  throw Error(ErrorCode::kParse, "'" + std::string(text) + "' is not a scalar of " + name());
}

namespace {

constexpr std::size_t kMaxExactTerms = 14;

/// Decides lhs <= rhs for presets whose generated order is "split the terms of
/// rhs into one nonempty group per lhs term plus a zero group", each group
/// admissible in the sense of `GroupOk`. `GroupOk(b, mask)` judges the rhs
/// terms selected by `mask` against the single term b (zero for the zero
/// group).
template <class GroupOk>
Decision partition_leq(const FormalSum& lhs, const FormalSum& rhs, const Scalar& zero, GroupOk&& ok) {
  const std::size_t r = lhs.size();
  const std::size_t s = rhs.size();
  const std::uint32_t full = s == 0 ? 0u : (1u << s) - 1u;
  if (r == 0) return ok(zero, full) ? Decision::kHolds : Decision::kFails;
  if (s < r) return Decision::kFails;
  if (s > kMaxExactTerms) {
    throw Error(ErrorCode::kUnsupportedRelation,
                "relation with " + std::to_string(s) + " right-hand terms exceeds the exact decision size");
  }
  std::vector<char> current(std::size_t{1} << s, 0);
  current[0] = 1;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<char> next(current.size(), 0);
    bool any = false;
    for (std::uint32_t used = 0; used <= full; ++used) {
      if (!current[used]) continue;
      const std::uint32_t free = full & ~used;
      for (std::uint32_t sub = free; sub != 0; sub = (sub - 1) & free) {
        if (!next[used | sub] && ok(lhs.terms()[j], sub)) {
          next[used | sub] = 1;
          any = true;
        }
      }
    }
    if (!any) return Decision::kFails;
    current.swap(next);
  }
  for (std::uint32_t used = 0; used <= full; ++used) {
    if (current[used] && ok(zero, full & ~used)) return Decision::kHolds;
  }
  return Decision::kFails;
}

class F1pmBlueprint final : public Blueprint {
 public:
  F1pmBlueprint() : Blueprint(PresetDescriptor::f1pm()) {}

  std::optional<std::vector<Scalar>> carrier() const override {
    return std::vector<Scalar>{eps(), zero(), one()};
  }

  // The order generated by 0 <= 1 + eps on N + N.eps relates x to exactly
  // the sums x + k(1 + eps), k >= 0.
  Decision leq(const FormalSum& lhs, const FormalSum& rhs) const override {
    require(lhs);
    require(rhs);
    auto ones = [&](const FormalSum& x) { return static_cast<std::int64_t>(x.count(one())); };
    auto epss = [&](const FormalSum& x) { return static_cast<std::int64_t>(x.count(eps())); };
    std::int64_t da = ones(rhs) - ones(lhs);
    std::int64_t db = epss(rhs) - epss(lhs);
    return (da == db && da >= 0) ? Decision::kHolds : Decision::kFails;
  }

  bool is_generator(const FormalSum& lhs, const FormalSum& rhs) const override {
    return lhs.empty() && rhs == FormalSum{one(), eps()};
  }

  RelationSet generators(std::span<const Scalar>) const override {
    return RelationSet({Relation{{}, FormalSum{one(), eps()}}});
  }
};

class FieldBlueprint final : public Blueprint {
 public:
  explicit FieldBlueprint(PresetDescriptor d)
      : Blueprint(d), field_(d.kind == PresetKind::kPrimeField ? d.p : 0) {}

  const ExactField& field() const { return field_; }

  std::optional<std::vector<Scalar>> carrier() const override {
    if (field_.is_rational()) return std::nullopt;
    std::vector<Scalar> out;
    for (std::int64_t v = 0; v < field_.modulus(); ++v) out.push_back(Scalar::from_value(domain(), Rational(v)));
    return out;
  }

  Rational evaluate(const FormalSum& x) const {
    Rational total(0);
    for (const Scalar& s : x.terms()) total = field_.add(total, s.value());
    return total;
  }

  Decision leq(const FormalSum& lhs, const FormalSum& rhs) const override {
    require(lhs);
    require(rhs);
    if (evaluate(lhs) != evaluate(rhs)) return Decision::kFails;
    if (lhs.empty()) return Decision::kHolds;
    const auto& terms = rhs.terms();
    if (terms.size() < lhs.size()) return Decision::kFails;
    if (terms.size() > kMaxExactTerms) {
      throw Error(ErrorCode::kUnsupportedRelation,
                  "relation with " + std::to_string(terms.size()) + " right-hand terms exceeds the exact decision size");
    }
    std::vector<Rational> group_sum(std::size_t{1} << terms.size(), Rational(0));
    for (std::uint32_t mask = 1; mask < group_sum.size(); ++mask) {
      int low = std::countr_zero(mask);
      group_sum[mask] = field_.add(group_sum[mask & (mask - 1)], terms[low].value());
    }
    return partition_leq(lhs, rhs, zero(), [&](const Scalar& b, std::uint32_t mask) {
      return group_sum[mask] == b.value();
    });
  }

  bool is_generator(const FormalSum& lhs, const FormalSum& rhs) const override {
    if (lhs.size() > 1) return false;
    return evaluate(lhs) == evaluate(rhs);
  }

  RelationSet generators(std::span<const Scalar> hints) const override {
    RelationSet out({Relation{{}, FormalSum{one(), eps()}}});
    std::set<Rational> splits;
    if (auto elems = carrier()) {
      for (const Scalar& a : *elems) splits.insert(a.value());
    } else {
      for (const Scalar& h : hints) {
        for (const Scalar& g : hints) {
          if (!h.is_zero() && !g.is_zero()) splits.insert(field_.mul(h.value(), field_.inv(g.value())));
        }
      }
    }
    for (const Rational& a : splits) {
      Rational rest = field_.sub(Rational(1), a);
      if (a == Rational(0) || rest == Rational(0)) continue;
      Scalar sa = Scalar::from_value(domain(), a);
      Scalar sr = Scalar::from_value(domain(), rest);
      if (sa > sr) continue;  // {a, 1-a} and {1-a, a} are the same generator
      out.add(Relation{FormalSum{one()}, FormalSum{sa, sr}});
    }
    return out;
  }

 private:
  ExactField field_;
};

/// Monomial blueprints of the totally ordered idempotent semifields (boolean,
/// max-plus). Scalar values are compared in the semifield order, bottom least.
class IdempotentBlueprint final : public Blueprint {
 public:
  explicit IdempotentBlueprint(PresetDescriptor d) : Blueprint(d) {}

  std::optional<std::vector<Scalar>> carrier() const override {
    if (domain().kind == PresetKind::kBoolean) return std::vector<Scalar>{zero(), one()};
    return std::nullopt;
  }

  /// Semifield addition (max); the bottom is zero().
  Scalar plus(const Scalar& a, const Scalar& b) const { return std::max(a, b); }

  Scalar total(std::span<const Scalar> terms, std::size_t skip) const {
    Scalar acc = zero();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i != skip) acc = plus(acc, terms[i]);
    }
    return acc;
  }

  // Omega_S membership of b <= a_1 + ... + a_m, read off the definition:
  // sum(a) = b + sum_{i != k} a_i for every k.
  bool omega(const Scalar& b, std::span<const Scalar> a) const {
    const Scalar whole = total(a, a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (whole != plus(b, total(a, k))) return false;
    }
    return a.empty() ? b.is_zero() : true;
  }

  Decision leq(const FormalSum& lhs, const FormalSum& rhs) const override {
    require(lhs);
    require(rhs);
    const auto& terms = rhs.terms();
    if (lhs.empty()) {
      return omega(zero(), std::span<const Scalar>(terms.data(), terms.size())) ? Decision::kHolds
                                                                                : Decision::kFails;
    }
    if (terms.size() > kMaxExactTerms) {
      throw Error(ErrorCode::kUnsupportedRelation,
                  "relation with " + std::to_string(terms.size()) + " right-hand terms exceeds the exact decision size");
    }
    // Per group: maximum and its multiplicity. With a total order, Omega_S
    // for (b, G) says max(G) >= b, and max(G) > b forces a repeated maximum.
    const std::size_t size = std::size_t{1} << terms.size();
    std::vector<Scalar> group_max(size, zero());
    std::vector<int> max_count(size, 0);
    for (std::uint32_t mask = 1; mask < size; ++mask) {
      std::uint32_t rest = mask & (mask - 1);
      const Scalar& t = terms[std::countr_zero(mask)];
      if (rest == 0 || t > group_max[rest]) {
        group_max[mask] = t;
        max_count[mask] = 1;
      } else {
        group_max[mask] = group_max[rest];
        max_count[mask] = max_count[rest] + (t == group_max[rest] ? 1 : 0);
      }
    }
    return partition_leq(lhs, rhs, zero(), [&](const Scalar& b, std::uint32_t mask) {
      if (mask == 0) return b.is_zero();
      if (group_max[mask] < b) return false;
      if (group_max[mask] == b) return true;
      return max_count[mask] >= 2;
    });
  }

  bool is_generator(const FormalSum& lhs, const FormalSum& rhs) const override {
    if (lhs.size() > 1) return false;
    const Scalar b = lhs.empty() ? zero() : lhs.terms().front();
    return omega(b, std::span<const Scalar>(rhs.terms().data(), rhs.size()));
  }

  RelationSet generators(std::span<const Scalar> hints) const override {
    RelationSet out({Relation{{}, FormalSum{one(), one()}}});
    std::set<Scalar> params;
    if (auto elems = carrier()) {
      for (const Scalar& a : *elems) params.insert(a);
    } else {
      for (const Scalar& h : hints) {
        for (const Scalar& g : hints) {
          if (!h.is_zero() && !g.is_zero()) params.insert(h * g.inverse());
        }
      }
      params.insert(one());
    }
    for (const Scalar& a : params) {
      if (a.is_zero()) continue;
      if (a < one()) out.add(Relation{FormalSum{one()}, FormalSum{one(), a}});
      if (a >= one()) out.add(Relation{FormalSum{one()}, FormalSum{a, a}});
    }
    return out;
  }
};

}  // namespace

BlueprintPtr make_preset(const PresetDescriptor& descriptor) {
  switch (descriptor.kind) {
    case PresetKind::kF1pm: return std::make_shared<F1pmBlueprint>();
    case PresetKind::kPrimeField: return std::make_shared<FieldBlueprint>(PresetDescriptor::gf(descriptor.p));
    case PresetKind::kRationalField: return std::make_shared<FieldBlueprint>(descriptor);
    case PresetKind::kBoolean:
    case PresetKind::kMaxPlus: return std::make_shared<IdempotentBlueprint>(descriptor);
  }
  throw Error(ErrorCode::kInvalidPreset, "unknown preset kind");
}

Rational hull_scalar(const Blueprint& bp, const FormalSum& x) {
  if (!bp.is_field()) {
    throw Error(ErrorCode::kWrongPresetKind, "hull evaluation needs a field preset, not " + bp.name());
  }
  bp.require(x);
  ExactField field(bp.descriptor().kind == PresetKind::kPrimeField ? bp.descriptor().p : 0);
  Rational total(0);
  for (const Scalar& s : x.terms()) total = field.add(total, s.value());
  return total;
}

std::optional<Rational> idem_collapse(const Blueprint& bp, const FormalSum& x) {
  if (!bp.is_idempotent()) {
    throw Error(ErrorCode::kWrongPresetKind, "idempotent collapse needs an idempotent preset, not " + bp.name());
  }
  bp.require(x);
  if (x.empty()) return std::nullopt;
  // Terms are sorted, so the last one is the maximum.
  return x.terms().back().value();
}

}  // namespace obext
