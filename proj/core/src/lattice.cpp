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

#include "eqknot/lattice.hpp"

#include <string>
#include <utility>

namespace eqknot {

GramLattice::GramLattice(BigMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.IsSquare()) {
    throw Error(ErrorCode::kNotSymmetric,
                "Gram matrix is " + std::to_string(gram_.rows()) + "x" +
                    std::to_string(gram_.cols()) + ", expected square");
  }
  if (!gram_.IsSymmetric()) {
    throw Error(ErrorCode::kNotSymmetric, "Gram matrix is not symmetric");
  }
}

namespace {

void SwapIndex(RationalMatrix& a, int i, int j) {
  if (i == j) return;
  const int n = a.rows();
  for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  for (int r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
}

void Tally(SignatureTriple& triple, const Rational& pivot) {
  if (pivot > 0) {
    ++triple.positive;
  } else {
    ++triple.negative;
  }
}

}  // namespace

SignatureTriple Signature(const RationalMatrix& form) {
  if (!form.IsSymmetric()) {
    throw Error(ErrorCode::kNotSymmetric, "form is not symmetric");
  }
  RationalMatrix a = form;
  const int n = a.rows();
  SignatureTriple triple;
  int k = 0;
  while (k < n) {
    int pivot = -1;
    for (int i = k; i < n && pivot < 0; ++i) {
      if (a(i, i) != 0) pivot = i;
    }
    if (pivot >= 0) {
      SwapIndex(a, k, pivot);
      const Rational d = a(k, k);
      Tally(triple, d);
      for (int r = k + 1; r < n; ++r) {
        if (a(r, k) == 0) continue;
        const Rational f = a(r, k) / d;
        for (int c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      }
      for (int r = k + 1; r < n; ++r) {
        a(r, k) = 0;
        a(k, r) = 0;
      }
      ++k;
      continue;
    }

    // Zero diagonal: look for a hyperbolic pair.
    int pi = -1;
    int pj = -1;
    for (int i = k; i < n && pi < 0; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) {
      triple.zero += n - k;
      break;
    }
    SwapIndex(a, k, pi);
    SwapIndex(a, k + 1, pj);
    const Rational b = a(k, k + 1);
    ++triple.positive;
    ++triple.negative;
    // Schur complement of [[0, b], [b, 0]].
    std::vector<Rational> x0(n), x1(n);
    for (int r = k + 2; r < n; ++r) {
      x0[r] = a(r, k);
      x1[r] = a(r, k + 1);
    }
    for (int r = k + 2; r < n; ++r) {
      for (int c = k + 2; c < n; ++c) {
        a(r, c) -= (x0[r] * x1[c] + x1[r] * x0[c]) / b;
      }
    }
    for (int r = k + 2; r < n; ++r) {
      a(r, k) = a(k, r) = a(r, k + 1) = a(k + 1, r) = 0;
    }
    k += 2;
  }
  return triple;
}

SignatureTriple Signature(const GramLattice& lattice) {
  return Signature(MatrixCast<Rational>(lattice.gram()));
}

bool IsPositiveDefinite(const GramLattice& lattice) {
  const SignatureTriple s = Signature(lattice);
  return s.negative == 0 && s.zero == 0;
}

int MultiplicativeOrder(const BigMatrix& m, int max_order) {
  if (!m.IsSquare()) {
    throw Error(ErrorCode::kDimensionMismatch, "order of a non-square matrix");
  }
  const BigMatrix identity = BigMatrix::Identity(m.rows());
  BigMatrix power = m;
  for (int j = 1; j <= max_order; ++j) {
    if (power == identity) return j;
    power = power * m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "matrix has no finite order <= " + std::to_string(max_order));
}

bool PreservesForm(const GramLattice& lattice, const BigMatrix& m) {
  if (m.rows() != lattice.rank() || m.cols() != lattice.rank()) return false;
  return m.Transpose() * lattice.gram() * m == lattice.gram();
}

LatticeIsometry MakeIsometry(const GramLattice& lattice, BigMatrix matrix) {
  if (matrix.rows() != lattice.rank() || matrix.cols() != lattice.rank()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "isometry is " + std::to_string(matrix.rows()) + "x" +
                    std::to_string(matrix.cols()) + " on a rank " +
                    std::to_string(lattice.rank()) + " lattice");
  }
  if (!PreservesForm(lattice, matrix)) {
    throw Error(ErrorCode::kNotIsometry, "R^T G R != G");
  }
  const int order = MultiplicativeOrder(matrix);
  return LatticeIsometry{std::move(matrix), order};
}

namespace {

// Null space of `a` over Q via reduced row echelon form.
std::vector<RationalVector> NullSpace(RationalMatrix a) {
  const int rows = a.rows();
  const int cols = a.cols();
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (int j = 0; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = -a(static_cast<int>(i), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<RationalVector> EigenspaceBasis(const BigMatrix& involution,
                                            int eigenvalue) {
  if (eigenvalue != 1 && eigenvalue != -1) {
    throw Error(ErrorCode::kInvalidArgument, "eigenvalue must be +1 or -1");
  }
  if (!involution.IsSquare()) {
    throw Error(ErrorCode::kDimensionMismatch, "involution must be square");
  }
  const int n = involution.rows();
  if (involution * involution != BigMatrix::Identity(n)) {
    throw Error(ErrorCode::kNotInvolution, "R^2 != Id");
  }
  RationalMatrix shifted = MatrixCast<Rational>(involution);
  for (int i = 0; i < n; ++i) shifted(i, i) -= eigenvalue;
  return NullSpace(std::move(shifted));
}

RationalMatrix RestrictForm(const GramLattice& lattice,
                            std::span<const RationalVector> basis) {
  const int m = lattice.rank();
  const int d = static_cast<int>(basis.size());
  RationalMatrix b(m, d);
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(basis[j].size()) != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "basis vector length differs from lattice rank");
    }
    for (int i = 0; i < m; ++i) b(i, j) = basis[j][i];
  }
  return b.Transpose() * MatrixCast<Rational>(lattice.gram()) * b;
}

}  // namespace eqknot
