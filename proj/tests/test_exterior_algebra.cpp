#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lawson/error.hpp"
#include "lawson/exterior_algebra.hpp"
#include "lawson/spherical_lattice.hpp"
#include "oracles.hpp"

using namespace lawson;

namespace {

const Vector4 e1 = Vector4::basis(0);
const Vector4 e2 = Vector4::basis(1);
const Vector4 e3 = Vector4::basis(2);
const Vector4 e4 = Vector4::basis(3);

Vector4 random_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return Vector4{{n(rng), n(rng), n(rng), n(rng)}};
}

Bivector6 b6(std::array<double, 6> c) { return Bivector6{c}; }

}  // namespace

TEST(Wedge, BasisPair) { EXPECT_TRUE(approx_equal(wedge(e1, e2), b6({1, 0, 0, 0, 0, 0}))); }

TEST(Wedge, AlternatingOnEqualInputs) {
  const Vector4 v{{0.3, -1.2, 2.0, 0.7}};
  EXPECT_TRUE(approx_equal(wedge(v, v), Bivector6{}));
}

TEST(Wedge, LatticePointsAtTwoTwo) {
  const auto cfg = LatticeConfig::make(2, 2);
  const Bivector6 w = wedge(lattice_p(cfg, 1), lattice_q(cfg, 1));
  EXPECT_TRUE(approx_equal(w, b6({0, 0, 0, 0, 1, 0})));
}

TEST(Wedge, MatchesAntisymmetricMatrixOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Vector4 v = random_vector(rng);
    const Vector4 w = random_vector(rng);
    const auto expected = oracle::flatten(oracle::antisym(oracle::vec(v), oracle::vec(w)));
    EXPECT_LT((oracle::six(wedge(v, w)) - expected).norm(), 1e-12);
    EXPECT_NEAR(wedge(v, w).plucker(), 0.0, 1e-9);
  }
}

TEST(Hodge3, BasisTriples) {
  EXPECT_TRUE(approx_equal(hodge(e1, e2, e3), e4));
  EXPECT_TRUE(approx_equal(hodge(e2, e3, e4), -e1));
  EXPECT_TRUE(approx_equal(hodge(e1, e2, e1), Vector4{}));
}

TEST(Hodge3, OrthogonalToInputsWithUnitDeterminantFrame) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Vector4 a = random_vector(rng), b = random_vector(rng), c = random_vector(rng);
    const Vector4 h = hodge(a, b, c);
    EXPECT_NEAR(dot(h, a), 0.0, 1e-9);
    EXPECT_NEAR(dot(h, b), 0.0, 1e-9);
    EXPECT_NEAR(dot(h, c), 0.0, 1e-9);
    // det(a, b, c, h) = |h|^2 by cofactor expansion along the last column.
    EXPECT_NEAR(oracle::leibniz_det({a.c, b.c, c.c, h.c}), dot(h, h), 1e-8);
  }
}

TEST(Hodge4, BasisAndTransposition) {
  EXPECT_DOUBLE_EQ(hodge(e1, e2, e3, e4), 1.0);
  EXPECT_DOUBLE_EQ(hodge(e2, e1, e3, e4), -1.0);
  const auto cfg = LatticeConfig::make(3, 5);
  EXPECT_NEAR(hodge(lattice_p(cfg, 0), lattice_p_hat(cfg, 0), lattice_q(cfg, 0), lattice_q_hat(cfg, 0)), 1.0,
              1e-15);
}

TEST(Hodge4, MatchesLeibniz) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Vector4 a = random_vector(rng), b = random_vector(rng), c = random_vector(rng), d = random_vector(rng);
    EXPECT_NEAR(hodge(a, b, c, d), oracle::leibniz_det({a.c, b.c, c.c, d.c}), 1e-9);
  }
}

TEST(BivectorInner, BasisValues) {
  EXPECT_DOUBLE_EQ(inner(wedge(e1, e2), wedge(e1, e2)), 1.0);
  EXPECT_DOUBLE_EQ(inner(wedge(e1, e2), wedge(e3, e4)), 0.0);
  EXPECT_DOUBLE_EQ(inner(wedge(e1, e2), wedge(e1, e3)), 0.0);
}

TEST(BivectorInner, GramDeterminantIdentity) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Vector4 v = random_vector(rng), w = random_vector(rng), x = random_vector(rng), y = random_vector(rng);
    const double gram = dot(v, x) * dot(w, y) - dot(v, y) * dot(w, x);
    EXPECT_NEAR(inner(wedge(v, w), wedge(x, y)), gram, 1e-9);
  }
}

TEST(Compound, ApplyToCommutesWithWedge) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    Matrix4 m;
    for (auto& x : m.a) x = std::normal_distribution<double>()(rng);
    const Vector4 v = random_vector(rng), w = random_vector(rng);
    EXPECT_TRUE(approx_equal(m.apply_to(wedge(v, w)), wedge(m * v, m * w), 1e-9));
  }
}

TEST(Rank, AgreesWithSvdOracle) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    std::vector<Bivector6> cols;
    const int independent = 1 + t % 4;
    for (int i = 0; i < independent; ++i) cols.push_back(wedge(random_vector(rng), random_vector(rng)));
    // Dependent extra column.
    cols.push_back(0.5 * cols[0] + (-2.0) * cols.back());
    EXPECT_EQ(rank(cols), static_cast<std::size_t>(oracle::svd_rank(cols)));
    EXPECT_EQ(rank(cols), static_cast<std::size_t>(independent));
  }
}

TEST(PlaneRelation, Equal) {
  const auto p = Plane2in6::span(wedge(e2, e3), wedge(e2, e4));
  EXPECT_EQ(plane_relation(p, p), PlaneRelation::Equal);
  const auto q = Plane2in6::span(wedge(e2, e3) + wedge(e2, e4), wedge(e2, e3) - wedge(e2, e4));
  EXPECT_EQ(plane_relation(p, q), PlaneRelation::Equal);
}

TEST(PlaneRelation, TransversalOnDisjointSupports) {
  const auto p = Plane2in6::span(wedge(e1, e2), wedge(e1, e3));
  const auto q = Plane2in6::span(wedge(e3, e4), wedge(e2, e4));
  EXPECT_EQ(plane_relation(p, q), PlaneRelation::Transversal);
}

TEST(PlaneRelation, PartialWhenSharingALine) {
  const auto p = Plane2in6::span(wedge(e1, e2), wedge(e1, e3));
  const auto q = Plane2in6::span(wedge(e1, e2), wedge(e3, e4));
  EXPECT_EQ(plane_relation(p, q), PlaneRelation::Partial);
}

TEST(PlaneRelation, RotatedBasePlaneAtKThree) {
  // Base plane span(e2^e3, e2^e4) and its image under R12(2 pi / 3),
  // written out by hand.
  const double c = std::cos(2 * std::numbers::pi / 3), s = std::sin(2 * std::numbers::pi / 3);
  const Vector4 e2r{{-s, c, 0, 0}};
  const auto p0 = Plane2in6::span(wedge(e2, e3), wedge(e2, e4));
  const auto p1 = Plane2in6::span(wedge(e2r, e3), wedge(e2r, e4));
  EXPECT_EQ(plane_relation(p0, p1), PlaneRelation::Transversal);
  EXPECT_EQ(oracle::svd_rank({wedge(e2, e3), wedge(e2, e4), wedge(e2r, e3), wedge(e2r, e4)}), 4);
}

TEST(PlaneRelation, DegenerateSpannersThrow) {
  try {
    (void)Plane2in6::span(wedge(e1, e2), 2.0 * wedge(e1, e2));
    FAIL() << "expected DegenerateInput";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DegenerateInput);
  }
}

TEST(PlaneRelation, StableAcrossTolerances) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const auto p = Plane2in6::span(wedge(random_vector(rng), random_vector(rng)),
                                   wedge(random_vector(rng), random_vector(rng)));
    const auto q = Plane2in6::span(wedge(random_vector(rng), random_vector(rng)), p.spanners()[0]);
    const auto r = plane_relation(p, q);
    EXPECT_EQ(r, PlaneRelation::Partial);
    EXPECT_EQ(plane_relation(p, q, 1e-6), r);
    EXPECT_EQ(plane_relation(p, q, 1e-12), r);
  }
}
