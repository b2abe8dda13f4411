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

#include "eqknot/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "eqknot/gsignature.hpp"

namespace eqknot {

namespace {

Rational Abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

void RequirePeriod(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "period must be >= 2");
}

}  // namespace

Rational RiemannHurwitzBound(int n, int g4top_quotient, int lambda) {
  RequirePeriod(n);
  if (g4top_quotient < 0) {
    throw Error(ErrorCode::kInvalidArgument, "quotient genus must be >= 0");
  }
  const BigInt abs_lambda = std::abs(static_cast<std::int64_t>(lambda));
  return Rational(BigInt(n) * g4top_quotient) +
         Rational(BigInt(n - 1) * (abs_lambda - 1), BigInt(2));
}

Rational GSigPeriodicBound(int n, int sigma_k, int sigma_quotient) {
  RequirePeriod(n);
  return Abs(Rational(BigInt(n) * sigma_quotient - sigma_k,
                      BigInt(2 * (n - 1))));
}

Rational GSigGenusBound(const Rational& gsig) { return Abs(gsig) / 2; }

std::int64_t CrossingChangeUpper(std::int64_t base_genus,
                                 std::int64_t n_changes) {
  if (base_genus < 0 || n_changes < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "genus and crossing change count must be >= 0");
  }
  return base_genus + n_changes;
}

std::string_view GenusKindName(GenusKind kind) {
  return kind == GenusKind::kEquivariant ? "equivariant" : "butterfly";
}

BoundsReport Aggregate(const BoundsInput& input,
                       const ObstructionReport* obstruction) {
  BoundsReport report;
  auto add_lower = [&](std::string name, Rational value, GenusKind target) {
    BigInt ceiling = Ceil(value);
    report.lower_bounds.push_back(
        LowerBound{std::move(name), std::move(value), std::move(ceiling),
                   target});
  };

  if (input.period_n && input.g4top_quotient && input.linking_lambda) {
    add_lower("riemann_hurwitz",
              RiemannHurwitzBound(*input.period_n, *input.g4top_quotient,
                                  *input.linking_lambda),
              GenusKind::kEquivariant);
  }
  if (input.period_n && input.sigma_k && input.sigma_quotient) {
    add_lower("gsig_periodic",
              GSigPeriodicBound(*input.period_n, *input.sigma_k,
                                *input.sigma_quotient),
              GenusKind::kEquivariant);
  }
  if (input.gsig) {
    const bool butterfly = input.gsig_kind == SymmetryKind::kStrongInversion;
    add_lower(butterfly ? "gsig_butterfly" : "gsig",
              GSigGenusBound(*input.gsig),
              butterfly ? GenusKind::kButterfly : GenusKind::kEquivariant);
  }
  if (input.g4_k) {
    add_lower("g4", Rational(*input.g4_k), GenusKind::kEquivariant);
  }
  if (obstruction != nullptr && obstruction->obstructed) {
    const int sigma = input.sigma_k.value_or(obstruction->sigma_k);
    if (input.g4_k && *input.g4_k == -sigma / 2) {
      add_lower("donaldson", Rational(-sigma / 2 + 1),
                GenusKind::kEquivariant);
    }
  }

  if (input.equivariant_unknotting_moves) {
    report.upper_bounds.push_back(
        {"crossing_changes",
         CrossingChangeUpper(0, *input.equivariant_unknotting_moves)});
  }
  if (input.equivariant_surface_genus) {
    if (*input.equivariant_surface_genus < 0) {
      throw Error(ErrorCode::kInvalidArgument, "surface genus must be >= 0");
    }
    report.upper_bounds.push_back(
        {"equivariant_surface", *input.equivariant_surface_genus});
  }

  for (const LowerBound& b : report.lower_bounds) {
    if (b.target == GenusKind::kEquivariant) {
      report.best_lower = std::max(report.best_lower, b.ceiling);
    } else {
      report.best_butterfly_lower =
          report.best_butterfly_lower
              ? std::max(*report.best_butterfly_lower, b.ceiling)
              : b.ceiling;
    }
  }
  for (const UpperBound& b : report.upper_bounds) {
    report.best_upper =
        report.best_upper ? std::min(*report.best_upper, b.value) : b.value;
  }
  report.consistent =
      !report.best_upper || report.best_lower <= BigInt(*report.best_upper);
  return report;
}

}  // namespace eqknot
