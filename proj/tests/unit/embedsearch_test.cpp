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

#include "eqknot/embedsearch.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "eqknot/checkerboard.hpp"
#include "eqknot/lattice.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace eqknot {
namespace {

using ::eqknot::testing::Big;
using ::eqknot::testing::BruteDeltas;
using ::eqknot::testing::BruteEmbeddings;
using ::eqknot::testing::BruteVectors;
using ::eqknot::testing::Graph940;
using ::eqknot::testing::Random;
using ::eqknot::testing::Small;
using ::eqknot::testing::Symmetry940;

GramLattice Quotient940() { return GlLattice(Graph940()); }

// A known embedding of the 9_40 lattice, on the basis a, b, c, d.
Embedding Iota1() {
  return Embedding{SmallMatrix{{1, 1, -1, 0},
                               {-1, 1, 1, 0},
                               {-1, 1, -1, 0},
                               {1, 0, 0, -1},
                               {0, 0, -1, 1},
                               {0, 0, 0, 1}}};
}

TEST(EnumerateVectorsTest, Small) {
  EXPECT_EQ(EnumerateVectors(2, 1),
            (std::vector<IntVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
  EXPECT_EQ(EnumerateVectors(2, 2),
            (std::vector<IntVector>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
  EXPECT_EQ(EnumerateVectors(3, 0), (std::vector<IntVector>{{0, 0, 0}}));
  EXPECT_TRUE(EnumerateVectors(1, 2).empty());
}

TEST(EnumerateVectorsTest, Norm4InZ6) {
  // 16 * C(6,4) of shape (+-1)^4 0^2 plus 12 of shape +-2 e_i.
  EXPECT_EQ(BruteVectors(6, 4).size(), 252u);
  EXPECT_EQ(EnumerateVectors(6, 4).size(), 252u);
}

TEST(EnumerateVectorsTest, AgreesWithBoxScan) {
  for (int k = 1; k <= 5; ++k) {
    for (int norm = 0; norm <= 6; ++norm) {
      EXPECT_EQ(EnumerateVectors(k, norm), BruteVectors(k, norm))
          << k << " " << norm;
    }
  }
}

TEST(EnumerateEmbeddingsTest, Small) {
  const std::vector<Embedding> one =
      EnumerateEmbeddings(GramLattice(BigMatrix{{1}}), 1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(BruteEmbeddings(BigMatrix{{1}}, 1), one);

  const BigMatrix two_i{{2, 0}, {0, 2}};
  std::vector<Embedding> found = EnumerateEmbeddings(GramLattice(two_i), 2);
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found.size(), 8u);
  EXPECT_EQ(found, BruteEmbeddings(two_i, 2));
}

TEST(EnumerateEmbeddingsTest, RejectsIndefinite) {
  try {
    EnumerateEmbeddings(GramLattice(BigMatrix{{0, 1}, {1, 0}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDefinite);
  }
}

TEST(EnumerateEmbeddingsTest, Knot940) {
  const std::vector<Embedding> all = EnumerateEmbeddings(Quotient940(), 6);
  EXPECT_EQ(all.size(), 92160u);
  for (const Embedding& e : all) {
    ASSERT_EQ(GramOf(e), Quotient940().gram());
  }
  const std::vector<OrbitClass> classes = OrbitClasses(all);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].orbit_size, 46080);
  EXPECT_EQ(classes[1].orbit_size, 46080);
}

TEST(EnumerateEmbeddingsTest, ThreadCountDoesNotChangeResult) {
  const std::vector<Embedding> serial = EnumerateEmbeddings(Quotient940(), 6);
  const std::vector<Embedding> parallel =
      EnumerateEmbeddings(Quotient940(), 6, SearchOptions{3});
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(EnumerateEmbeddingClasses(Quotient940(), 6),
            EnumerateEmbeddingClasses(Quotient940(), 6, SearchOptions{3}));
}

TEST(CanonicalFormTest, KnownEmbeddingsAreTheTwoClasses) {
  const Embedding iota1 = Iota1();
  ASSERT_EQ(GramOf(iota1), Quotient940().gram());
  const BigMatrix r = InducedIsometry(Graph940(), Symmetry940()).matrix;
  const Embedding iota2{iota1.matrix * Small(r)};
  ASSERT_EQ(GramOf(iota2), Quotient940().gram());

  const Embedding c1 = CanonicalForm(iota1);
  const Embedding c2 = CanonicalForm(iota2);
  EXPECT_NE(c1, c2);
  const std::vector<Embedding> classes =
      EnumerateEmbeddingClasses(Quotient940(), 6);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(std::set<Embedding>({c1, c2}),
            std::set<Embedding>(classes.begin(), classes.end()));
}

TEST(CanonicalFormTest, FrozenRepresentatives) {
  const std::vector<Embedding> classes =
      EnumerateEmbeddingClasses(Quotient940(), 6);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].matrix, (SmallMatrix{{-1, -1, 1, 0},
                                            {-1, 0, 0, 1},
                                            {-1, 1, -1, 0},
                                            {-1, 1, 1, 0},
                                            {0, 0, -1, 1},
                                            {0, 0, 0, -1}}));
  EXPECT_EQ(classes[1].matrix, (SmallMatrix{{-1, 0, -1, 1},
                                            {-1, 0, 1, -1},
                                            {-1, 0, 1, 1},
                                            {-1, 1, 0, 0},
                                            {0, -1, 0, 0},
                                            {0, -1, 1, 0}}));
}

TEST(CanonicalFormTest, FixedPoint) {
  const Embedding c = CanonicalForm(Iota1());
  EXPECT_EQ(CanonicalForm(c), c);
  const Embedding id{SmallMatrix{{-1, 0}, {0, -1}}};
  EXPECT_EQ(CanonicalForm(id), id);
}

TEST(OrbitSizeTest, Formula) {
  EXPECT_EQ(OrbitSize(Embedding{SmallMatrix{{1}}}), 2);
  EXPECT_EQ(OrbitSize(Embedding{SmallMatrix{{1, 1}, {1, -1}}}), 8);
  // A zero row: the two rows can be permuted and the nonzero one signed.
  EXPECT_EQ(OrbitSize(Embedding{SmallMatrix{{1}, {0}}}), 4);
  EXPECT_EQ(OrbitSize(Embedding{SmallMatrix{{1}, {1}}}), 4);
}

TEST(SignedPermutationTest, Basics) {
  const SignedPermutation p{{1, 0, 2}, {1, 1, -1}};
  EXPECT_NO_THROW(p.Validate());
  EXPECT_EQ(p.ToMatrix(), (SmallMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}));
  EXPECT_EQ(p.Order(), 2);
  EXPECT_EQ(SignedPermutation({{1, 0}, {1, -1}}).Order(), 4);
  EXPECT_EQ(SignedPermutation::Identity(3).Order(), 1);
  const SmallMatrix e{{1, 2}, {3, 4}, {5, 6}};
  EXPECT_EQ(p.Apply(e), p.ToMatrix() * e);
  EXPECT_THROW(SignedPermutation({{0, 0}, {1, 1}}).Validate(), Error);
  EXPECT_THROW(SignedPermutation({{0, 1}, {1, 2}}).Validate(), Error);
}

TEST(EquivariantDeltaTest, Trivial) {
  const Embedding e = Iota1();
  const std::optional<SignedPermutation> p =
      EquivariantDelta(e, BigMatrix::Identity(4), 1);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, SignedPermutation::Identity(6));
}

TEST(EquivariantDeltaTest, IdentityEmbedding) {
  // With E = Id the only candidate is R itself.
  const SignedPermutation r{{1, 0, 2}, {-1, -1, 1}};
  const Embedding e{SmallMatrix::Identity(3)};
  const std::optional<SignedPermutation> p =
      EquivariantDelta(e, Big(r.ToMatrix()), 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->ToMatrix(), r.ToMatrix());
  EXPECT_FALSE(EquivariantDelta(e, Big(r.ToMatrix()), 4).has_value());
}

TEST(EquivariantDeltaTest, ZeroRowsSupplyTheOrder) {
  // E R = E, so the nonzero row is fixed and the zero rows must carry order 4.
  const Embedding e{SmallMatrix{{1}, {0}, {0}}};
  const BigMatrix id = BigMatrix::Identity(1);
  const std::optional<SignedPermutation> p = EquivariantDelta(e, id, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->Order(), 4);
  EXPECT_EQ(p->ToMatrix() * e.matrix, e.matrix);
  EXPECT_FALSE(EquivariantDelta(e, id, 3).has_value());
  EXPECT_TRUE(EquivariantDelta(e, id, 2).has_value());
}

TEST(EquivariantDeltaTest, Knot940HasNone) {
  const BigMatrix r = InducedIsometry(Graph940(), Symmetry940()).matrix;
  for (const Embedding& e : EnumerateEmbeddingClasses(Quotient940(), 6)) {
    EXPECT_FALSE(EquivariantDelta(e, r, 2).has_value());
    EXPECT_FALSE(EquivariantDelta(e, -r, 2).has_value());
    EXPECT_TRUE(BruteDeltas(e, Small(r), 2).empty());
  }
}

TEST(EquivariantDeltaTest, RejectsShapeMismatch) {
  EXPECT_THROW(EquivariantDelta(Iota1(), BigMatrix::Identity(3), 1), Error);
}

TEST(DonaldsonObstructionTest, Knot940) {
  const LatticeIsometry r = InducedIsometry(Graph940(), Symmetry940());
  const ObstructionReport report =
      DonaldsonObstruction(Quotient940(), r, -2, 2);
  EXPECT_EQ(report.k, 6);
  EXPECT_EQ(report.rank, 4);
  EXPECT_EQ(report.class_count, 2);
  EXPECT_TRUE(report.obstructed);
  for (const ClassResult& c : report.per_class) EXPECT_FALSE(c.delta);
  EXPECT_NE(report.conclusion.find("> 1"), std::string::npos);

  EXPECT_TRUE(
      DonaldsonObstruction(Quotient940(), r, -2, 2, SignMode::kBoth)
          .obstructed);
}

TEST(DonaldsonObstructionTest, UnknotLike) {
  const GramLattice g(BigMatrix{{1}});
  const ObstructionReport report =
      DonaldsonObstruction(g, MakeIsometry(g, BigMatrix{{1}}), 0, 1);
  EXPECT_EQ(report.k, 1);
  EXPECT_EQ(report.class_count, 1);
  EXPECT_FALSE(report.obstructed);
}

TEST(DonaldsonObstructionTest, SwapFindsDelta) {
  const GramLattice g(BigMatrix{{2, 0}, {0, 2}});
  const LatticeIsometry swap = MakeIsometry(g, BigMatrix{{0, 1}, {1, 0}});
  const ObstructionReport report = DonaldsonObstruction(g, swap, 0, 2);
  EXPECT_EQ(report.k, 2);
  EXPECT_EQ(report.class_count, 1);
  EXPECT_FALSE(report.obstructed);
  ASSERT_TRUE(report.per_class[0].delta);
  const Embedding& e = report.per_class[0].representative;
  EXPECT_EQ(report.per_class[0].delta->ToMatrix() * e.matrix,
            e.matrix * Small(swap.matrix));
  EXPECT_FALSE(BruteDeltas(e, Small(swap.matrix), 2).empty());
}

TEST(DonaldsonObstructionTest, Errors) {
  const GramLattice g(BigMatrix{{1}});
  const LatticeIsometry id = MakeIsometry(g, BigMatrix{{1}});
  EXPECT_THROW(DonaldsonObstruction(g, id, 2, 1), Error);
  EXPECT_THROW(DonaldsonObstruction(g, id, -1, 1), Error);
  EXPECT_THROW(DonaldsonObstruction(g, id, 0, 0), Error);
  const GramLattice indefinite(BigMatrix{{0, 1}, {1, 0}});
  try {
    DonaldsonObstruction(indefinite,
                         LatticeIsometry{BigMatrix::Identity(2), 1}, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDefinite);
  }
  EXPECT_THROW(DonaldsonObstruction(g, LatticeIsometry{BigMatrix{{2}}, 1}, 0,
                                    1),
               Error);
}

TEST(SignModeTest, Names) {
  EXPECT_EQ(ParseSignMode("strict"), SignMode::kStrict);
  EXPECT_EQ(ParseSignMode(SignModeName(SignMode::kBoth)), SignMode::kBoth);
  EXPECT_THROW(ParseSignMode("loose"), Error);
}

}  // namespace
}  // namespace eqknot
