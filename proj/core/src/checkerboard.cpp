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

#include "eqknot/checkerboard.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace eqknot {

namespace {

std::string VertexLabel(int v) { return "vertex " + std::to_string(v); }

}  // namespace

CheckerboardGraph::CheckerboardGraph(int vertex_count, std::vector<Edge> edges,
                                     std::string name)
    : vertex_count_(vertex_count), edges_(std::move(edges)),
      name_(std::move(name)) {
  if (vertex_count_ < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "checkerboard graph needs at least one vertex");
  }
  std::vector<std::vector<int>> adjacency(vertex_count_);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") has an endpoint outside 0.." +
                      std::to_string(vertex_count_ - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kLoopEdge, "loop edge at " + VertexLabel(e.u));
    }
    if (e.weight != 1 && e.weight != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge weight must be +1 or -1, got " +
                      std::to_string(e.weight));
    }
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  std::vector<bool> seen(vertex_count_, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count_) {
    throw Error(ErrorCode::kDisconnected,
                "checkerboard graph is disconnected (" +
                    std::to_string(reached) + " of " +
                    std::to_string(vertex_count_) +
                    " vertices reachable from vertex 0)");
  }
}

int CheckerboardGraph::VertexWeight(int v) const {
  int sum = 0;
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v) sum += e.weight;
  }
  return -sum;
}

std::string_view SymmetryKindName(SymmetryKind kind) {
  return kind == SymmetryKind::kPeriodic ? "periodic" : "strong_inversion";
}

SymmetryKind ParseSymmetryKind(std::string_view text) {
  if (text == "periodic") return SymmetryKind::kPeriodic;
  if (text == "strong_inversion") return SymmetryKind::kStrongInversion;
  throw Error(ErrorCode::kSchema, "unknown symmetry kind '" +
                                      std::string(text) +
                                      "' (periodic | strong_inversion)");
}

namespace {

using PairKey = std::pair<int, int>;

std::map<PairKey, std::vector<int>> WeightMultisets(
    const std::vector<Edge>& edges, const std::vector<int>& perm) {
  std::map<PairKey, std::vector<int>> out;
  for (const Edge& e : edges) {
    int u = perm.empty() ? e.u : perm[e.u];
    int v = perm.empty() ? e.v : perm[e.v];
    if (u > v) std::swap(u, v);
    out[{u, v}].push_back(e.weight);
  }
  for (auto& [key, weights] : out) std::sort(weights.begin(), weights.end());
  return out;
}

bool IsPermutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

void CheckDropped(const CheckerboardGraph& graph, int dropped) {
  if (dropped < 0 || dropped >= graph.vertex_count()) {
    throw Error(ErrorCode::kOutOfRange,
                "dropped vertex " + std::to_string(dropped) +
                    " outside 0.." + std::to_string(graph.vertex_count() - 1));
  }
}

}  // namespace

bool IsWeightedAutomorphism(const CheckerboardGraph& graph,
                            const std::vector<int>& perm) {
  if (!IsPermutation(perm, graph.vertex_count())) return false;
  return WeightMultisets(graph.edges(), {}) ==
         WeightMultisets(graph.edges(), perm);
}

void ValidateSymmetry(const CheckerboardGraph& graph, const SymmetrySpec& spec) {
  const int n = graph.vertex_count();
  if (!IsPermutation(spec.vertex_perm, n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex_perm is not a permutation of 0.." +
                    std::to_string(n - 1));
  }
  if (spec.order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "symmetry order must be >= 1");
  }
  if (spec.lift_sign != 1 && spec.lift_sign != -1) {
    throw Error(ErrorCode::kInvalidArgument, "lift_sign must be +1 or -1");
  }
  if (spec.kind == SymmetryKind::kStrongInversion && spec.order != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a strong inversion has order 2, got " +
                    std::to_string(spec.order));
  }
  if (spec.kind == SymmetryKind::kPeriodic && spec.lift_sign != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "periodic symmetries induce the lattice map with sign +1");
  }
  if (!IsWeightedAutomorphism(graph, spec.vertex_perm)) {
    throw Error(ErrorCode::kNotAutomorphism,
                "vertex_perm does not preserve the weighted edge multiset");
  }
  std::vector<int> power(n);
  for (int i = 0; i < n; ++i) power[i] = i;
  for (int step = 0; step < spec.order; ++step) {
    for (int i = 0; i < n; ++i) power[i] = spec.vertex_perm[power[i]];
  }
  for (int i = 0; i < n; ++i) {
    if (power[i] != i) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex_perm^" + std::to_string(spec.order) +
                      " is not the identity");
    }
  }
  if (spec.order == 1 && spec.kind != SymmetryKind::kPeriodic) {
    throw Error(ErrorCode::kInvalidArgument,
                "order 1 is only meaningful for the trivial periodic symmetry");
  }
}

GramLattice GlFullForm(const CheckerboardGraph& graph) {
  const int n = graph.vertex_count();
  BigMatrix m(n, n);
  for (const Edge& e : graph.edges()) {
    m(e.u, e.v) += e.weight;
    m(e.v, e.u) += e.weight;
    m(e.u, e.u) -= e.weight;
    m(e.v, e.v) -= e.weight;
  }
  return GramLattice(std::move(m));
}

GramLattice GlLattice(const CheckerboardGraph& graph,
                      std::optional<int> dropped_vertex) {
  const int n = graph.vertex_count();
  const int dropped = dropped_vertex.value_or(n - 1);
  CheckDropped(graph, dropped);
  const GramLattice full = GlFullForm(graph);
  BigMatrix m(n - 1, n - 1);
  for (int i = 0, r = 0; i < n; ++i) {
    if (i == dropped) continue;
    for (int j = 0, c = 0; j < n; ++j) {
      if (j == dropped) continue;
      m(r, c) = full(i, j);
      ++c;
    }
    ++r;
  }
  return GramLattice(std::move(m));
}

LatticeIsometry InducedIsometry(const CheckerboardGraph& graph,
                                const SymmetrySpec& spec,
                                std::optional<int> dropped_vertex) {
  const int n = graph.vertex_count();
  const int dropped = dropped_vertex.value_or(n - 1);
  CheckDropped(graph, dropped);
  if (!IsWeightedAutomorphism(graph, spec.vertex_perm)) {
    throw Error(ErrorCode::kNotAutomorphism,
                "vertex_perm does not preserve the weighted edge multiset");
  }
  if (spec.lift_sign != 1 && spec.lift_sign != -1) {
    throw Error(ErrorCode::kInvalidArgument, "lift_sign must be +1 or -1");
  }
  // Position of vertex i in the reduced basis.
  std::vector<int> slot(n, -1);
  for (int i = 0, s = 0; i < n; ++i) {
    if (i != dropped) slot[i] = s++;
  }
  BigMatrix r(n - 1, n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == dropped) continue;
    const int image = spec.vertex_perm[i];
    if (image != dropped) {
      r(slot[image], slot[i]) = spec.lift_sign;
    } else {
      for (int s = 0; s < n - 1; ++s) r(s, slot[i]) = -spec.lift_sign;
    }
  }
  return MakeIsometry(GlLattice(graph, dropped), std::move(r));
}

int KnotSignature(const CheckerboardGraph& graph, int positive_crossings) {
  if (positive_crossings < 0 || positive_crossings > graph.edge_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "positive crossing count " +
                    std::to_string(positive_crossings) + " outside 0.." +
                    std::to_string(graph.edge_count()));
  }
  return Signature(GlLattice(graph)).value() - positive_crossings;
}

}  // namespace eqknot
