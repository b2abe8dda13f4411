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

// Symmetric integer bilinear forms and their isometries, in exact arithmetic.
//
// Signatures are computed by symmetric Gaussian elimination over the
// rationals (congruence diagonalization). When every remaining diagonal entry
// is zero but some off-diagonal entry a_ij is not, the pair (i, j) spans a
// hyperbolic plane which contributes one positive and one negative square and
// is split off by its Schur complement.

#ifndef EQKNOT_LATTICE_HPP_
#define EQKNOT_LATTICE_HPP_

#include <span>
#include <vector>

#include "eqknot/base.hpp"

namespace eqknot {

// A free Z-module of finite rank with a symmetric bilinear form, given by its
// Gram matrix in a fixed basis.
class GramLattice {
 public:
  GramLattice() = default;
  // Throws kNotSymmetric unless `gram` is square and symmetric.
  explicit GramLattice(BigMatrix gram);

  int rank() const { return gram_.rows(); }
  const BigMatrix& gram() const { return gram_; }
  const BigInt& operator()(int i, int j) const { return gram_(i, j); }

  friend bool operator==(const GramLattice&, const GramLattice&) = default;

 private:
  BigMatrix gram_;
};

struct SignatureTriple {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int value() const { return positive - negative; }
  int rank() const { return positive + negative + zero; }

  friend bool operator==(const SignatureTriple&,
                         const SignatureTriple&) = default;
};

SignatureTriple Signature(const GramLattice& lattice);
// Throws kNotSymmetric for non-symmetric input.
SignatureTriple Signature(const RationalMatrix& form);

bool IsPositiveDefinite(const GramLattice& lattice);

// An integer matrix R acting on the basis of a lattice (column j is the image
// of basis vector j) with R^T G R = G. `order` is the exact multiplicative
// order of R.
struct LatticeIsometry {
  BigMatrix matrix;
  int order = 1;

  int rank() const { return matrix.rows(); }

  friend bool operator==(const LatticeIsometry&,
                         const LatticeIsometry&) = default;
};

// Smallest j >= 1 with m^j = Id. Throws kInvalidArgument when no such
// j <= max_order exists.
int MultiplicativeOrder(const BigMatrix& m, int max_order = 1024);

bool PreservesForm(const GramLattice& lattice, const BigMatrix& m);

// Validates R^T G R = G (kNotIsometry) and computes the order.
LatticeIsometry MakeIsometry(const GramLattice& lattice, BigMatrix matrix);

// Basis of ker(R - eigenvalue * Id) over Q, eigenvalue in {+1, -1}. Vectors
// come from the reduced row echelon form, one per free column, in increasing
// free-column order. Throws kNotInvolution unless R^2 = Id.
std::vector<RationalVector> EigenspaceBasis(const BigMatrix& involution,
                                            int eigenvalue);

// B^T G B for the matrix B whose columns are `basis`.
RationalMatrix RestrictForm(const GramLattice& lattice,
                            std::span<const RationalVector> basis);

}  // namespace eqknot

#endif  // EQKNOT_LATTICE_HPP_
