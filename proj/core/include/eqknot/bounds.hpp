// Copyright 2026 The eqknot Authors
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

// Lower and upper bounds on the equivariant 4-genus g̃₄ and the butterfly
// 4-genus bg̃₄. Every bound is an exact rational; ceilings are taken only when
// the report is assembled.

#ifndef EQKNOT_BOUNDS_HPP_
#define EQKNOT_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqknot/base.hpp"
#include "eqknot/checkerboard.hpp"
#include "eqknot/embedsearch.hpp"

namespace eqknot {

// n * g + (n - 1)(|lambda| - 1) / 2, from the Riemann-Hurwitz formula for
// the quotient surface. Throws kInvalidArgument for n < 2 or g < 0.
Rational RiemannHurwitzBound(int n, int g4top_quotient, int lambda);

// |n * sigma(quotient) - sigma(K)| / (2 (n - 1)).
Rational GSigPeriodicBound(int n, int sigma_k, int sigma_quotient);

// |gsig| / 2.
Rational GSigGenusBound(const Rational& gsig);

// Triangle inequality across equivariant crossing changes.
std::int64_t CrossingChangeUpper(std::int64_t base_genus,
                                 std::int64_t n_changes);

enum class GenusKind {
  kEquivariant,  // g̃₄
  kButterfly,    // bg̃₄
};

std::string_view GenusKindName(GenusKind kind);

struct BoundsInput {
  std::optional<int> period_n;
  std::optional<int> sigma_k;
  std::optional<int> sigma_quotient;
  std::optional<int> g4top_quotient;
  std::optional<int> linking_lambda;
  std::optional<Rational> gsig;
  // Whether `gsig` comes from a periodic symmetry (bounds g̃₄) or a
  // strong inversion (bounds bg̃₄).
  SymmetryKind gsig_kind = SymmetryKind::kPeriodic;
  std::optional<int> equivariant_unknotting_moves;
  std::optional<int> g4_k;
  // Genus of a known equivariant surface, e.g. from Seifert's algorithm on a
  // symmetric diagram.
  std::optional<int> equivariant_surface_genus;

  friend bool operator==(const BoundsInput&, const BoundsInput&) = default;
};

struct LowerBound {
  std::string name;
  Rational value;
  BigInt ceiling;
  GenusKind target = GenusKind::kEquivariant;
};

struct UpperBound {
  std::string name;
  std::int64_t value = 0;
};

struct BoundsReport {
  std::vector<LowerBound> lower_bounds;
  std::vector<UpperBound> upper_bounds;
  // Over the g̃₄ bounds only; genus is never negative so this is at least 0.
  BigInt best_lower = 0;
  std::optional<std::int64_t> best_upper;
  // Over the bg̃₄ bounds, when any.
  std::optional<BigInt> best_butterfly_lower;
  bool consistent = true;
};

// Evaluates each bound whose inputs are present. The Donaldson bound
// -sigma/2 + 1 is added when `obstruction` is obstructed and g4_k equals
// -sigma/2.
BoundsReport Aggregate(const BoundsInput& input,
                       const ObstructionReport* obstruction = nullptr);

}  // namespace eqknot

#endif  // EQKNOT_BOUNDS_HPP_
