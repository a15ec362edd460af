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

#include "obext/differential.hpp"

#include <atomic>
#include <set>
#include <thread>

#include "obext/exterior.hpp"
#include "obext/matroid.hpp"
#include "obext/oracles.hpp"

namespace obext {

namespace {

void note(SuiteResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  ++r.mismatches;
  if (r.first_mismatch.empty()) r.first_mismatch = what;
}

std::vector<ExteriorElement> basis_monomials(const Blueprint& bp, int n) {
  std::vector<ExteriorElement> out;
  for (int d = 0; d <= n; ++d) {
    for (IndexSet s : subsets_of_size(n, d)) out.push_back(ExteriorElement::monomial(n, s, bp.one()));
  }
  return out;
}

template <class Realize, class OracleWedge>
SuiteResult homomorphism_suite(const std::string& name, const Blueprint& bp, int n, int samples, Rng& rng,
                               Realize realize, OracleWedge oracle_wedge) {
  SuiteResult r;
  r.name = name + " " + bp.name();
  auto check = [&](const ExteriorElement& x, const ExteriorElement& y) {
    note(r, realize(bp, wedge(x, y)) == oracle_wedge(realize(bp, x), realize(bp, y)),
         "wedge of {" + (x.terms().empty() ? std::string() : x.terms().begin()->first.to_key()) + "...}");
  };
  const auto basis = basis_monomials(bp, n);
  for (const auto& x : basis) {
    for (const auto& y : basis) check(x, y);
  }
  for (int s = 0; s < samples; ++s) {
    ExteriorElement x = random_exterior(bp, n, rng);
    ExteriorElement y = random_exterior(bp, n, rng);
    check(x, y);
  }
  return r;
}

}  // namespace

SuiteResult hull_suite(const Blueprint& bp, int n, int samples, Rng& rng) {
  return homomorphism_suite("hull", bp, n, samples, rng, hull_realize, oracles::classical_wedge);
}

SuiteResult idem_suite(const Blueprint& bp, int n, int samples, Rng& rng) {
  return homomorphism_suite("idem", bp, n, samples, rng, idem_realize, oracles::tropical_wedge);
}

SuiteResult cryptomorphism_suite(const Blueprint& bp, int max_n, int max_d, int samples, Rng& rng) {
  SuiteResult r;
  r.name = "cryptomorphism " + bp.name();
  std::vector<std::pair<int, int>> shapes;
  for (int n = 2; n <= max_n; ++n) {
    for (int d = 1; d <= std::min(n, max_d); ++d) shapes.emplace_back(n, d);
  }
  for (int s = 0; s < samples; ++s) {
    auto [n, d] = shapes[s % shapes.size()];
    ExteriorElement v = random_h_element(bp, n, d, rng);
    GPFunction delta = gp_from_vector(bp, v, d);
    const Verdict direct = is_plucker_vector(bp, v, d).verdict;
    const Verdict via_gp = is_gp_function(bp, delta).verdict;
    const std::string where = "n=" + std::to_string(n) + " d=" + std::to_string(d);
    note(r, direct == via_gp, "verdicts differ at " + where);
    note(r, vector_from_gp(delta) == v, "round trip differs at " + where);
  }
  return r;
}

SuiteResult boolean_matroid_suite(int n, int d, unsigned jobs) {
  SuiteResult r;
  r.name = "boolean matroids n=" + std::to_string(n) + " d=" + std::to_string(d);
  const BlueprintPtr bp = make_preset(PresetDescriptor::boolean());
  const std::vector<IndexSet> all = subsets_of_size(n, d);
  const std::uint64_t families = std::uint64_t{1} << all.size();
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> mismatches{0};
  std::atomic<std::uint64_t> first_bad{families};
  constexpr std::uint64_t kChunk = 1024;

  auto worker = [&] {
    std::vector<Scalar> values(all.size());
    std::vector<IndexSet> family;
    for (std::uint64_t start = next.fetch_add(kChunk); start < families; start = next.fetch_add(kChunk)) {
      for (std::uint64_t mask = start; mask < std::min(families, start + kChunk); ++mask) {
        family.clear();
        for (std::size_t i = 0; i < all.size(); ++i) {
          const bool in = (mask >> i) & 1u;
          values[i] = in ? bp->one() : bp->zero();
          if (in) family.push_back(all[i]);
        }
        const bool gp = is_gp_function(*bp, GPFunction(bp->domain(), n, d, values), ReportMode::kFirstFailure).valid();
        const bool matroid = !family.empty() && oracles::basis_exchange_check(family);
        if (gp != matroid) {
          ++mismatches;
          std::uint64_t seen = first_bad.load();
          while (mask < seen && !first_bad.compare_exchange_weak(seen, mask)) {
          }
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  r.cases = families;
  r.mismatches = mismatches;
  if (r.mismatches > 0) r.first_mismatch = "support mask " + std::to_string(first_bad.load());
  return r;
}

SuiteResult maxplus_suite(int max_n, int d, int samples, Rng& rng) {
  SuiteResult r;
  r.name = "maxplus plucker d=" + std::to_string(d);
  const BlueprintPtr bp = make_preset(PresetDescriptor::maxplus());
  for (int s = 0; s < samples; ++s) {
    const int n = d + 1 + s % std::max(1, max_n - d);
    GPFunction delta = random_maxplus_candidate(*bp, n, d, rng);
    oracles::TropicalExteriorElement v{oracles::TropicalKind::kMaxPlus, n, {}};
    const std::vector<IndexSet> subsets = subsets_of_size(n, d);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (!delta.values()[i].is_bottom()) v.terms.emplace(subsets[i], delta.values()[i].value());
    }
    const bool oracle = !v.terms.empty() && oracles::tropical_plucker_check(v, n, d);
    note(r, is_gp_function(*bp, delta).valid() == oracle, "sample " + std::to_string(s));
  }
  return r;
}

SuiteResult field_count_suite(int p, int n, int d, unsigned jobs) {
  SuiteResult r;
  r.name = "gf(" + std::to_string(p) + ") classes n=" + std::to_string(n) + " d=" + std::to_string(d);
  const BlueprintPtr bp = make_preset(PresetDescriptor::gf(p));
  std::set<std::vector<std::int64_t>> enumerated;
  for (const GPFunction& f : enumerate_gp(*bp, n, d, {.jobs = jobs})) {
    std::vector<std::int64_t> row;
    for (const Scalar& v : f.values()) row.push_back(v.value().numerator());
    enumerated.insert(row);
  }
  const auto subspaces = oracles::subspace_plucker_enumerate(p, n, d);
  for (const auto& row : subspaces) {
    if (!enumerated.count(row)) note(r, false, "subspace class missing from the enumeration");
  }
  for (const auto& row : enumerated) {
    if (!subspaces.count(row)) note(r, false, "enumerated class without a subspace");
  }
  r.cases = std::max(enumerated.size(), subspaces.size());
  return r;
}

}  // namespace obext
