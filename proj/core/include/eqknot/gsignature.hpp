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

// g-signatures of order-2 symmetries from the +1/-1 eigenspace split of a
// form, and the closed form for n-periodic knots in terms of the knot and
// quotient-knot signatures.
//
// For a strong inversion the form must come from a butterfly surface; that
// cannot be checked here and is the caller's responsibility.

#ifndef EQKNOT_GSIGNATURE_HPP_
#define EQKNOT_GSIGNATURE_HPP_

#include "eqknot/base.hpp"
#include "eqknot/lattice.hpp"

namespace eqknot {

struct GSignatureReport {
  int sigma_plus = 0;   // signature on ker(R - Id)
  int sigma_minus = 0;  // signature on ker(R + Id)
  Rational gsig = 0;
  int dim_plus = 0;
  int dim_minus = 0;
  RationalMatrix form_plus;
  RationalMatrix form_minus;
};

// sigma(G|H(+1)) - sigma(G|H(-1)). Throws kNotInvolution, kNotIsometry or
// kDimensionMismatch.
GSignatureReport GSigInvolution(const GramLattice& lattice, const BigMatrix& r);

// (n * sigma_quotient - sigma_k) / (n - 1), exact. Throws kInvalidArgument for
// n < 2.
Rational GSigPeriodic(int n, int sigma_k, int sigma_quotient);

// Report for (G1 + G2, R1 + R2); gsig is the sum of the parts.
GSignatureReport GSigDirectSum(const GramLattice& g1, const BigMatrix& r1,
                               const GramLattice& g2, const BigMatrix& r2);

}  // namespace eqknot

#endif  // EQKNOT_GSIGNATURE_HPP_
