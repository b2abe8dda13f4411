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

// Isometric embeddings of positive definite lattices into the standard
// diagonal lattice (Z^k, Id), their classification up to Aut(Z^k, Id), and
// the search for an automorphism delta of Z^k with delta * E = E * R.
//
// An embedding is a k x m integer matrix E whose columns are the images of
// the lattice basis, so E^T E = G. Aut(Z^k, Id) is the group of signed
// permutations, acting on E from the left by permuting and negating rows.

#ifndef EQKNOT_EMBEDSEARCH_HPP_
#define EQKNOT_EMBEDSEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqknot/base.hpp"
#include "eqknot/lattice.hpp"

namespace eqknot {

using IntVector = std::vector<std::int64_t>;

struct Embedding {
  SmallMatrix matrix;  // k x m

  int k() const { return matrix.rows(); }
  int m() const { return matrix.cols(); }

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend bool operator<(const Embedding& a, const Embedding& b) {
    return a.matrix < b.matrix;
  }
};

// E^T E.
BigMatrix GramOf(const Embedding& e);

// A signed permutation P of Z^k: P e_{perm[i]} = signs[i] e_i, so the matrix
// has entry signs[i] at (i, perm[i]) and (P E) row i = signs[i] * E row
// perm[i].
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation Identity(int k);

  int size() const { return static_cast<int>(perm.size()); }
  // Throws kInvalidArgument on a malformed permutation or sign.
  void Validate() const;
  SmallMatrix ToMatrix() const;
  SmallMatrix Apply(const SmallMatrix& e) const;
  // Exact multiplicative order.
  int Order() const;
  std::string ToString() const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
};

struct SearchOptions {
  int threads = 1;
};

// All v in Z^k with v.v = norm, in increasing lexicographic order.
std::vector<IntVector> EnumerateVectors(int k, std::int64_t norm);

// Every embedding of `lattice` into Z^k, in increasing lexicographic order of
// the column sequence. Columns are placed depth-first; column j is drawn from
// the vectors of norm G[j][j] whose inner products with the placed columns
// match G. Throws kNotDefinite.
std::vector<Embedding> EnumerateEmbeddings(const GramLattice& lattice, int k,
                                           const SearchOptions& options = {});

// The lexicographically least matrix (row-major) in the Aut(Z^k) orbit of e.
// Negating a row never interacts with other rows, so each row is replaced by
// the lesser of r and -r and the rows are then sorted ascending.
Embedding CanonicalForm(const Embedding& e);

// Size of the Aut(Z^k) orbit of e: 2^k k! divided by the stabilizer order.
BigInt OrbitSize(const Embedding& e);

struct OrbitClass {
  Embedding representative;  // canonical form
  BigInt orbit_size;         // members of the input list in this class
};

// Buckets by canonical form; classes sorted by representative.
std::vector<OrbitClass> OrbitClasses(const std::vector<Embedding>& embeddings);

// One canonical representative per Aut(Z^k) orbit of embeddings of `lattice`
// into Z^k, sorted. Equivalent to the representatives of
// OrbitClasses(EnumerateEmbeddings(lattice, k)) but prunes the search to
// canonical matrices only, so it stays fast when the full orbits are huge.
std::vector<Embedding> EnumerateEmbeddingClasses(
    const GramLattice& lattice, int k, const SearchOptions& options = {});

// A signed permutation P with P E = E R and exact order `required_order`,
// or nullopt. Zero rows of E are unconstrained by the commuting square and
// are filled with a signed permutation chosen only for its order.
// Throws kDimensionMismatch.
std::optional<SignedPermutation> EquivariantDelta(const Embedding& e,
                                                  const BigMatrix& r,
                                                  int required_order);

enum class SignMode { kStrict, kBoth };

std::string_view SignModeName(SignMode mode);
SignMode ParseSignMode(std::string_view text);

struct ClassResult {
  Embedding representative;
  BigInt orbit_size;
  std::optional<SignedPermutation> delta;
  // +1 when delta commutes with R, -1 when it commutes with -R.
  int isometry_sign = 1;
};

struct ObstructionReport {
  int k = 0;
  int sigma_k = 0;
  int rank = 0;
  int required_order = 1;
  SignMode sign_mode = SignMode::kStrict;
  int class_count = 0;
  std::vector<ClassResult> per_class;
  bool obstructed = false;
  std::string conclusion;
};

// Decides the equivariant lattice-embedding obstruction: with
// k = -sigma_k + rank(G), enumerates the embedding classes into Z^k and
// looks for delta of exact order `order` for each class, trying R and,
// in SignMode::kBoth, also -R. Obstructed iff no class admits delta.
// Throws kNotDefinite, kNotIsometry, kDimensionMismatch, or
// kInvalidArgument for sigma_k > 0 or odd.
ObstructionReport DonaldsonObstruction(const GramLattice& lattice,
                                       const LatticeIsometry& isometry,
                                       int sigma_k, int order,
                                       SignMode sign_mode = SignMode::kStrict,
                                       const SearchOptions& options = {});

}  // namespace eqknot

#endif  // EQKNOT_EMBEDSEARCH_HPP_
