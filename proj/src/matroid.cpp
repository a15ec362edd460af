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

#include "obext/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "obext/error.hpp"

namespace obext {

GPFunction::GPFunction(Domain domain, int n, int d, std::vector<Scalar> values)
    : domain_(domain), n_(n), d_(d), values_(std::move(values)) {
  if (n < 0 || n > kMaxDimension || d < 0 || d > n) {
    throw Error(ErrorCode::kDimensionMismatch, "rank " + std::to_string(d) + " on [" + std::to_string(n) + "]");
  }
  if (values_.size() != binomial(n, d)) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(binomial(n, d)) + " values, got " +
                                                   std::to_string(values_.size()));
  }
  for (const Scalar& v : values_) {
    if (v.domain() != domain) throw Error(ErrorCode::kInstanceMismatch, "value from another preset");
  }
}

GPFunction GPFunction::constant(Domain domain, int n, int d, const Scalar& value) {
  return GPFunction(domain, n, d, std::vector<Scalar>(binomial(n, d), value));
}

const Scalar& GPFunction::at(IndexSet I) const {
  if (I.size() != d_ || !I.subset_of(IndexSet::range(n_))) {
    throw Error(ErrorCode::kSizeViolation, "{" + I.to_key() + "} is not a " + std::to_string(d_) + "-subset");
  }
  return values_[lex_rank(I, n_)];
}

void GPFunction::set(IndexSet I, const Scalar& value) {
  at(I);
  if (value.domain() != domain_) throw Error(ErrorCode::kInstanceMismatch, "value from another preset");
  values_[lex_rank(I, n_)] = value;
}

std::vector<IndexSet> GPFunction::support() const {
  std::vector<IndexSet> out;
  const std::vector<IndexSet> subsets = subsets_of_size(n_, d_);
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    if (!values_[r].is_zero()) out.push_back(subsets[r]);
  }
  return out;
}

GPFunction operator*(const Scalar& a, const GPFunction& f) {
  std::vector<Scalar> values;
  values.reserve(f.values().size());
  for (const Scalar& v : f.values()) values.push_back(a * v);
  return GPFunction(f.domain(), f.n(), f.d(), std::move(values));
}

namespace {

// Exponent of ε for the term i_k: its position k in Y plus the transpositions
// that move i_k past the larger elements of X, so that X ∪ {i_k} carries the
// sign of e_X ∧ e_{i_k}.
int term_exponent(IndexSet X, int k, int i) {
  int above = 0;
  for (int x : X.indices()) above += x > i ? 1 : 0;
  return k + above;
}

}  // namespace

Scalar phi_xy(const Blueprint& bp, IndexSet X, IndexSet Y, IndexSet I, IndexSet J) {
  const int d = I.size();
  if (X.size() != d - 1 || J.size() != d || Y.size() != d + 1) {
    throw Error(ErrorCode::kSizeViolation, "phi needs |X| + 1 = |I| = |J| = |Y| - 1");
  }
  int k = 0;
  for (int i : Y.indices()) {
    ++k;
    if (X.contains(i)) continue;
    if (I == X.with(i) && J == Y.without(i)) return eps_power(bp.domain(), term_exponent(X, k, i));
  }
  return bp.zero();
}

FormalSum plucker_sum(const Blueprint& bp, const GPFunction& delta, IndexSet X, IndexSet Y) {
  if (X.size() != delta.d() - 1 || Y.size() != delta.d() + 1) {
    throw Error(ErrorCode::kSizeViolation, "relation pair has the wrong sizes");
  }
  FormalSum out;
  int k = 0;
  for (int i : Y.indices()) {
    ++k;
    if (X.contains(i)) continue;
    out += FormalSum::of(eps_power(bp.domain(), term_exponent(X, k, i)) * delta.at(X.with(i)) *
                         delta.at(Y.without(i)));
  }
  return out;
}

std::vector<std::pair<IndexSet, IndexSet>> plucker_pairs(int n, int d) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  if (d < 1 || d >= n) return out;
  const std::vector<IndexSet> ys = subsets_of_size(n, d + 1);
  for (IndexSet x : subsets_of_size(n, d - 1)) {
    for (IndexSet y : ys) out.emplace_back(x, y);
  }
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kValid:
      return "valid";
    case Verdict::kInvalid:
      return "invalid";
    case Verdict::kIndeterminate:
      return "indeterminate";
  }
  return "invalid";
}

namespace {

// Relation terms by value position, precomputed once per (n, d).
struct RelationTerm {
  bool odd;  // parity of the ε exponent
  std::uint32_t left;
  std::uint32_t right;
};

struct RelationPlan {
  std::vector<std::pair<IndexSet, IndexSet>> pairs;
  std::vector<std::vector<RelationTerm>> terms;
};

std::shared_ptr<const RelationPlan> relation_plan(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const RelationPlan>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, d}];
  if (slot) return slot;
  auto plan = std::make_shared<RelationPlan>();
  plan->pairs = plucker_pairs(n, d);
  for (const auto& [x, y] : plan->pairs) {
    std::vector<RelationTerm> row;
    int k = 0;
    for (int i : y.indices()) {
      ++k;
      if (x.contains(i)) continue;
      row.push_back({term_exponent(x, k, i) % 2 == 1, static_cast<std::uint32_t>(lex_rank(x.with(i), n)),
                     static_cast<std::uint32_t>(lex_rank(y.without(i), n))});
    }
    plan->terms.push_back(std::move(row));
  }
  slot = std::move(plan);
  return slot;
}

Verdict settle(const PluckerReport& r) {
  if (!r.unit_found || !r.single_terms || !r.witnesses.empty()) return Verdict::kInvalid;
  return r.undecided.empty() ? Verdict::kValid : Verdict::kIndeterminate;
}

// Records the decision of 0 <= sum; returns true when the search may stop.
bool record(const Blueprint& bp, PluckerReport& report, IndexSet x, IndexSet y, FormalSum sum, ReportMode mode) {
  Decision d = bp.leq(FormalSum{}, sum);
  if (d == Decision::kFails) {
    report.witnesses.push_back({x, y, std::move(sum)});
    return mode == ReportMode::kFirstFailure;
  }
  if (d == Decision::kUnknown) report.undecided.push_back({x, y, std::move(sum)});
  return false;
}

}  // namespace

PluckerReport is_gp_function(const Blueprint& bp, const GPFunction& delta, ReportMode mode) {
  if (delta.domain() != bp.domain()) throw Error(ErrorCode::kInstanceMismatch, "GP function from another preset");
  PluckerReport report;
  const auto& values = delta.values();
  report.unit_found = std::any_of(values.begin(), values.end(), [&](const Scalar& v) { return bp.is_unit(v); });
  if (!report.unit_found && mode == ReportMode::kFirstFailure) {
    report.verdict = Verdict::kInvalid;
    return report;
  }
  const auto plan = relation_plan(delta.n(), delta.d());
  const Scalar eps = bp.eps();
  for (std::size_t p = 0; p < plan->pairs.size(); ++p) {
    FormalSum sum;
    for (const RelationTerm& t : plan->terms[p]) {
      Scalar product = values[t.left] * values[t.right];
      if (t.odd) product = eps * product;
      sum += FormalSum::of(product);
    }
    if (record(bp, report, plan->pairs[p].first, plan->pairs[p].second, std::move(sum), mode)) break;
  }
  report.verdict = settle(report);
  return report;
}

PluckerReport is_plucker_vector(const Blueprint& bp, const ExteriorElement& v, int d, ReportMode mode) {
  for (const auto& kv : v.terms()) {
    if (kv.first.size() != d) throw Error(ErrorCode::kNotPureGrade, "element is not of pure grade " + std::to_string(d));
    bp.require(kv.second);
  }
  PluckerReport report;
  report.single_terms = in_H(v, d);
  for (const auto& kv : v.terms()) {
    if (kv.second.size() == 1 && bp.is_unit(kv.second.terms().front())) report.unit_found = true;
  }
  if ((!report.single_terms || !report.unit_found) && mode == ReportMode::kFirstFailure) {
    report.verdict = Verdict::kInvalid;
    return report;
  }
  // φ_{X,Y}(v ⊗ v), expanded over every pair of terms of v.
  for (const auto& [x, y] : plucker_pairs(v.dimension(), d)) {
    FormalSum sum;
    for (const auto& [i, a] : v.terms()) {
      if (!x.subset_of(i)) continue;
      for (const auto& [j, b] : v.terms()) {
        Scalar phi = phi_xy(bp, x, y, i, j);
        if (!phi.is_zero()) sum += phi * (a * b);
      }
    }
    if (record(bp, report, x, y, std::move(sum), mode)) break;
  }
  report.verdict = settle(report);
  return report;
}

PluckerReport is_plucker_vector(const Blueprint& bp, const ExteriorElement& v, ReportMode mode) {
  auto d = v.pure_grade();
  if (!d) throw Error(ErrorCode::kNotPureGrade, "element has no single grade");
  return is_plucker_vector(bp, v, *d, mode);
}

GPFunction gp_from_vector(const Blueprint& bp, const ExteriorElement& v, int d) {
  if (d < 0 || d > v.dimension()) throw Error(ErrorCode::kNotInH, "grade out of range");
  if (!in_H(v, d)) throw Error(ErrorCode::kNotInH, "element is not in H_{d,n}");
  GPFunction out = GPFunction::constant(bp.domain(), v.dimension(), d, bp.zero());
  for (const auto& [key, c] : v.terms()) {
    bp.require(c);
    out.set(key, c.terms().front());
  }
  return out;
}

ExteriorElement vector_from_gp(const GPFunction& delta) {
  std::map<IndexSet, FormalSum> terms;
  const std::vector<IndexSet> subsets = subsets_of_size(delta.n(), delta.d());
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    FormalSum c = FormalSum::of(delta.values()[r]);
    if (!c.empty()) terms.emplace(subsets[r], std::move(c));
  }
  return ExteriorElement(delta.n(), std::move(terms));
}

GPFunction canonical_class(const Blueprint& bp, const GPFunction& delta) {
  for (const Scalar& v : delta.values()) {
    if (bp.is_unit(v)) return v.inverse() * delta;
  }
  throw Error(ErrorCode::kNoUnit, "no value is a unit");
}

std::vector<GPFunction> enumerate_gp(const Blueprint& bp, int n, int d, const EnumerateOptions& options) {
  auto carrier = bp.carrier();
  if (!carrier) throw Error(ErrorCode::kWrongPresetKind, "enumeration needs a finite preset");
  if (d < 0 || d > n || n > kMaxDimension) throw Error(ErrorCode::kDimensionMismatch, "rank out of range");
  const std::size_t slots = binomial(n, d);
  const std::uint64_t base = carrier->size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    if (total > options.cap / base) {
      throw Error(ErrorCode::kCapExceeded, std::to_string(base) + "^" + std::to_string(slots) +
                                               " candidates exceed the cap of " + std::to_string(options.cap));
    }
    total *= base;
  }

  // Canonical candidates: zeros before the first nonzero slot f, one at f,
  // anything after. Work is cut into chunks of (f, range of tail codes).
  struct Chunk {
    std::size_t first;
    std::uint64_t begin;
    std::uint64_t end;
  };
  constexpr std::uint64_t kChunk = 4096;
  std::vector<Chunk> chunks;
  for (std::size_t f = 0; f < slots; ++f) {
    std::uint64_t tails = 1;
    for (std::size_t i = f + 1; i < slots; ++i) tails *= base;
    for (std::uint64_t b = 0; b < tails; b += kChunk) chunks.push_back({f, b, std::min(tails, b + kChunk)});
  }

  const Scalar zero = bp.zero();
  const Scalar one = bp.one();
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<GPFunction>> found(std::max(1u, options.jobs));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](std::size_t slot) {
    try {
      std::vector<Scalar> values(slots, zero);
      for (std::size_t c = next++; c < chunks.size(); c = next++) {
        const Chunk& chunk = chunks[c];
        std::fill(values.begin(), values.end(), zero);
        values[chunk.first] = one;
        for (std::uint64_t code = chunk.begin; code < chunk.end; ++code) {
          std::uint64_t rest = code;
          for (std::size_t i = slots; i-- > chunk.first + 1;) {
            values[i] = (*carrier)[rest % base];
            rest /= base;
          }
          GPFunction candidate(bp.domain(), n, d, values);
          if (is_gp_function(bp, candidate, ReportMode::kFirstFailure).valid()) {
            found[slot].push_back(std::move(candidate));
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (found.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < found.size(); ++t) threads.emplace_back(worker, t);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<GPFunction> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Determinant by elimination over the field.
Rational determinant(const ExactField& field, std::vector<std::vector<Rational>> m) {
  const std::size_t size = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == Rational(0)) ++pivot;
    if (pivot == size) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = field.neg(det);
    }
    det = field.mul(det, m[col][col]);
    const Rational inv = field.inv(m[col][col]);
    for (std::size_t r = col + 1; r < size; ++r) {
      if (m[r][col] == Rational(0)) continue;
      const Rational factor = field.mul(m[r][col], inv);
      for (std::size_t c = col; c < size; ++c) m[r][c] = field.sub(m[r][c], field.mul(factor, m[col][c]));
    }
  }
  return det;
}

}  // namespace

GPFunction realize_from_matrix(const Blueprint& bp, const std::vector<std::vector<Rational>>& matrix) {
  if (!bp.is_field()) throw Error(ErrorCode::kWrongPresetKind, "realization needs a field preset");
  if (matrix.empty() || matrix.front().empty()) throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  const int d = static_cast<int>(matrix.size());
  const int n = static_cast<int>(matrix.front().size());
  if (d > n || n > kMaxDimension) throw Error(ErrorCode::kRankDeficient, "more rows than columns");
  const ExactField field(bp.descriptor().kind == PresetKind::kPrimeField ? bp.descriptor().p : 0);
  std::vector<std::vector<Rational>> rows = matrix;
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix");
    for (auto& entry : row) entry = field.normalize(entry);
  }
  std::vector<Scalar> values;
  bool nonzero = false;
  for (IndexSet cols : subsets_of_size(n, d)) {
    std::vector<std::vector<Rational>> sub(d);
    for (int r = 0; r < d; ++r) {
      for (int c : cols.indices()) sub[r].push_back(rows[r][c - 1]);
    }
    Rational det = determinant(field, std::move(sub));
    nonzero = nonzero || det != Rational(0);
    values.push_back(Scalar::from_value(bp.domain(), det));
  }
  if (!nonzero) throw Error(ErrorCode::kRankDeficient, "matrix rank is below its row count");
  return GPFunction(bp.domain(), n, d, std::move(values));
}

}  // namespace obext
