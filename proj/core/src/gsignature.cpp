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

#include "eqknot/gsignature.hpp"

#include <vector>

namespace eqknot {

GSignatureReport GSigInvolution(const GramLattice& lattice, const BigMatrix& r) {
  if (r.rows() != lattice.rank() || r.cols() != lattice.rank()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "involution size differs from lattice rank");
  }
  const std::vector<RationalVector> plus = EigenspaceBasis(r, 1);
  const std::vector<RationalVector> minus = EigenspaceBasis(r, -1);
  if (!PreservesForm(lattice, r)) {
    throw Error(ErrorCode::kNotIsometry, "R^T G R != G");
  }
  GSignatureReport report;
  report.form_plus = RestrictForm(lattice, plus);
  report.form_minus = RestrictForm(lattice, minus);
  report.dim_plus = static_cast<int>(plus.size());
  report.dim_minus = static_cast<int>(minus.size());
  report.sigma_plus = Signature(report.form_plus).value();
  report.sigma_minus = Signature(report.form_minus).value();
  report.gsig = report.sigma_plus - report.sigma_minus;
  return report;
}

Rational GSigPeriodic(int n, int sigma_k, int sigma_quotient) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "period must be >= 2");
  }
  return Rational(BigInt(n) * sigma_quotient - sigma_k, BigInt(n - 1));
}

GSignatureReport GSigDirectSum(const GramLattice& g1, const BigMatrix& r1,
                               const GramLattice& g2, const BigMatrix& r2) {
  return GSigInvolution(GramLattice(DirectSum(g1.gram(), g2.gram())),
                        DirectSum(r1, r2));
}

}  // namespace eqknot
