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

// Checkerboard graphs of alternating diagrams and the Gordon-Litherland
// lattice they determine.
//
// Vertices are the white regions v_0..v_{n-1}; each edge is a crossing
// between two distinct white regions, weighted +1 (right half-twist) or -1
// (left half-twist). The vertex weight w(v) is minus the sum of the incident
// edge weights. The pairing on Z<v_0..v_{n-1}> is
//
//   <v_i, v_i> = w(v_i),   <v_i, v_j> = sum of w(e) over edges e joining them,
//
// so v_0 + ... + v_{n-1} lies in the radical and H_1(F) is the quotient,
// with basis {v_i : i != dropped}.

#ifndef EQKNOT_CHECKERBOARD_HPP_
#define EQKNOT_CHECKERBOARD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "eqknot/base.hpp"
#include "eqknot/lattice.hpp"

namespace eqknot {

struct Edge {
  int u = 0;
  int v = 0;
  int weight = -1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class CheckerboardGraph {
 public:
  // Throws kInvalidArgument (bad count, index or weight), kLoopEdge or
  // kDisconnected.
  CheckerboardGraph(int vertex_count, std::vector<Edge> edges,
                    std::string name = {});

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& name() const { return name_; }

  // Minus the sum of incident edge weights.
  int VertexWeight(int v) const;

  friend bool operator==(const CheckerboardGraph&,
                         const CheckerboardGraph&) = default;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::string name_;
};

enum class SymmetryKind { kPeriodic, kStrongInversion };

std::string_view SymmetryKindName(SymmetryKind kind);  // "periodic", ...
SymmetryKind ParseSymmetryKind(std::string_view text);

struct SymmetrySpec {
  std::vector<int> vertex_perm;
  int order = 2;
  SymmetryKind kind = SymmetryKind::kPeriodic;
  // Sign relating the induced lattice map to the action of the symmetry on
  // the surface: +1 for periodic symmetries; for strong inversions +1 when
  // the surface contains the distinguished half-axis and -1 otherwise.
  int lift_sign = 1;

  friend bool operator==(const SymmetrySpec&, const SymmetrySpec&) = default;
};

// Checks every SymmetrySpec invariant against `graph`. Order 1 is accepted
// only for the identity permutation of a periodic symmetry.
void ValidateSymmetry(const CheckerboardGraph& graph, const SymmetrySpec& spec);

// True iff `perm` maps every weighted edge multiset between u and v onto the
// one between perm[u] and perm[v].
bool IsWeightedAutomorphism(const CheckerboardGraph& graph,
                            const std::vector<int>& perm);

// Full n x n pairing; every row sums to zero.
GramLattice GlFullForm(const CheckerboardGraph& graph);

// The pairing on H_1(F) in the basis {v_i : i != dropped_vertex}. Defaults to
// dropping the last vertex. Throws kOutOfRange.
GramLattice GlLattice(const CheckerboardGraph& graph,
                      std::optional<int> dropped_vertex = std::nullopt);

// The map induced on H_1(F) by the symmetry, in the basis of GlLattice:
// v_i -> lift_sign * v_{perm(i)}, with the dropped vertex read as minus the
// sum of the remaining basis vectors. Throws kNotAutomorphism.
LatticeIsometry InducedIsometry(const CheckerboardGraph& graph,
                                const SymmetrySpec& spec,
                                std::optional<int> dropped_vertex = std::nullopt);

// sigma(K) = sigma(G_F) - (number of positive crossings).
int KnotSignature(const CheckerboardGraph& graph, int positive_crossings);

}  // namespace eqknot

#endif  // EQKNOT_CHECKERBOARD_HPP_
