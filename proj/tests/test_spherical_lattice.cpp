#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lawson/error.hpp"
#include "lawson/spherical_lattice.hpp"
#include "oracles.hpp"

using namespace lawson;

namespace {

const Vector4 e1 = Vector4::basis(0);
const Vector4 e2 = Vector4::basis(1);
const Vector4 e3 = Vector4::basis(2);
const Vector4 e4 = Vector4::basis(3);

void expect_matrix(const Matrix4& m, const Matrix4& expected) {
  EXPECT_LT(max_abs_diff(m, expected), 1e-12) << "got matrix with deviation " << max_abs_diff(m, expected);
}

/// Reflection across span(u, v) as I - 2 * (projection onto the complement),
/// with the complement found by Eigen's full-pivot QR.
Eigen::Matrix4d reflection_oracle(const Vector4& a, const Vector4& b) {
  Eigen::Matrix<double, 4, 2> span;
  span.col(0) = oracle::vec(a);
  span.col(1) = oracle::vec(b);
  Eigen::HouseholderQR<Eigen::Matrix<double, 4, 2>> qr(span);
  const Eigen::Matrix4d q = qr.householderQ();
  const Eigen::Matrix<double, 4, 2> complement = q.rightCols<2>();
  return Eigen::Matrix4d::Identity() - 2.0 * complement * complement.transpose();
}

}  // namespace

TEST(LatticeConfig, RejectsSmallIndices) {
  EXPECT_THROW(LatticeConfig::make(1, 3), Error);
  EXPECT_THROW(LatticeConfig::make(3, 0), Error);
  EXPECT_TRUE(LatticeConfig::make(2, 2).excluded());
  EXPECT_FALSE(LatticeConfig::make(2, 3).excluded());
}

TEST(LatticePoints, TwoTwoValues) {
  const auto cfg = LatticeConfig::make(2, 2);
  EXPECT_TRUE(approx_equal(lattice_p(cfg, 0), e1));
  EXPECT_TRUE(approx_equal(lattice_p(cfg, 1), e2));
  EXPECT_TRUE(approx_equal(lattice_q(cfg, 1), e4));
}

TEST(LatticePoints, QOneAtMThree) {
  const auto cfg = LatticeConfig::make(3, 2);
  EXPECT_TRUE(approx_equal(lattice_q(cfg, 1), Vector4{{0, 0, 0.5, std::sqrt(3.0) / 2}}));
}

TEST(LatticePoints, HatsAreUnitTangents) {
  for (int m = 2; m <= 8; ++m)
    for (int k = 2; k <= 8; ++k) {
      const auto cfg = LatticeConfig::make(m, k);
      for (int i = -3; i < 2 * k + 3; ++i) {
        EXPECT_NEAR(lattice_p_hat(cfg, i).norm(), 1.0, 1e-15);
        EXPECT_NEAR(dot(lattice_p_hat(cfg, i), lattice_p(cfg, i)), 0.0, 1e-15);
      }
      // Index i + 2k is the same point.
      EXPECT_TRUE(approx_equal(lattice_q(cfg, 1), lattice_q(cfg, 1 + 2 * m)));
      EXPECT_TRUE(approx_equal(lattice_p(cfg, k), -lattice_p(cfg, 0)));
    }
}

TEST(GeodesicReflection, BaseCircle) {
  expect_matrix(geodesic_reflection(GreatCircle::through(e1, e3)), Matrix4::diagonal(1, -1, 1, -1));
}

TEST(GeodesicReflection, QCircle) {
  expect_matrix(geodesic_reflection(GreatCircle::through(e3, e4)), Matrix4::diagonal(-1, -1, 1, 1));
}

TEST(GeodesicReflection, PCircle) {
  expect_matrix(geodesic_reflection(GreatCircle::through(e1, e2)), Matrix4::diagonal(1, 1, -1, -1));
}

TEST(GeodesicReflection, MatchesComplementProjectionOracle) {
  for (int m = 2; m <= 6; ++m)
    for (int k = 2; k <= 6; ++k) {
      const auto cfg = LatticeConfig::make(m, k);
      for (int i = 0; i < 2 * k; ++i)
        for (int j = 0; j < 2 * m; ++j) {
          const Vector4 p = lattice_p(cfg, i), q = lattice_q(cfg, j);
          const Matrix4 r = geodesic_reflection(GreatCircle::through(p, q));
          EXPECT_LT((oracle::mat(r) - reflection_oracle(p, q)).cwiseAbs().maxCoeff(), 1e-12);
          EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
          EXPECT_TRUE(is_orthogonal(r));
        }
    }
}

TEST(GeodesicReflection, DegenerateCircle) {
  try {
    (void)GreatCircle::through(e1, -e1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DegenerateCircle);
  }
}

TEST(LatticeReflection, BaseAtTwoTwo) {
  const auto cfg = LatticeConfig::make(2, 2);
  expect_matrix(lattice_reflection(cfg, 0, 0), Matrix4::diagonal(1, -1, 1, -1));
  expect_matrix(lattice_reflection(cfg, 1, 0), Matrix4::diagonal(-1, 1, 1, -1));
}

TEST(LatticeReflection, InvolutionAndAgreesWithCircleReflection) {
  for (int m = 2; m <= 8; ++m)
    for (int k = 2; k <= 8; ++k) {
      const auto cfg = LatticeConfig::make(m, k);
      const Matrix4 r00 = lattice_reflection(cfg, 0, 0);
      expect_matrix(r00 * r00, Matrix4::identity());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
          const Matrix4 r = lattice_reflection(cfg, i, j);
          expect_matrix(r, geodesic_reflection(GreatCircle::through(lattice_p(cfg, i), lattice_q(cfg, j))));
        }
    }
}

TEST(XiPolygon, TwoTwoVertices) {
  const auto p = xi_polygon(LatticeConfig::make(2, 2));
  ASSERT_EQ(p.size(), 4u);
  EXPECT_TRUE(approx_equal(p.vertex(0), e1));
  EXPECT_TRUE(approx_equal(p.vertex(1), e3));
  EXPECT_TRUE(approx_equal(p.vertex(2), e2));
  EXPECT_TRUE(approx_equal(p.vertex(3), e4));
}

TEST(XiPolygon, AngleDenominatorsMeasured) {
  const auto p = xi_polygon(LatticeConfig::make(3, 2));
  EXPECT_EQ(p.angle_denominators, (std::vector<int>{3, 2, 3, 2}));
  EXPECT_EQ(measured_angle_denominators(p), (std::vector<int>{3, 2, 3, 2}));
}

TEST(EtaPolygon, ViaPointOnThirdEdgeOnly) {
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= 5; ++k) {
      const auto cfg = LatticeConfig::make(m, k);
      const auto p = eta_polygon(cfg);
      ASSERT_EQ(p.via_points.size(), 4u);
      EXPECT_FALSE(p.via_points[0]);
      EXPECT_FALSE(p.via_points[1]);
      ASSERT_TRUE(p.via_points[2]);
      EXPECT_TRUE(approx_equal(*p.via_points[2], lattice_p(cfg, 0)));
      EXPECT_FALSE(p.via_points[3]);
      EXPECT_NO_THROW(p.validate());
    }
}

TEST(Polygons, MeasuredAnglesMatchStoredOverGrid) {
  for (Family f : {Family::Xi, Family::Eta})
    for (int m = 2; m <= 8; ++m)
      for (int k = 2; k <= 8; ++k) {
        const auto p = family_polygon(f, LatticeConfig::make(m, k));
        EXPECT_EQ(measured_angle_denominators(p), p.angle_denominators) << to_string(f) << m << k;
      }
}

TEST(Polygons, EdgeArcMembership) {
  const auto cfg = LatticeConfig::make(3, 3);
  const auto eta = eta_polygon(cfg);
  // Q1 and -Q1 share the Q-circle but the arc Q1 -> P0 -> -Q1 holds neither
  // Q0 nor -P0.
  EXPECT_TRUE(eta.edge_contains(2, lattice_p(cfg, 0)));
  EXPECT_TRUE(eta.edge_contains(2, -lattice_q(cfg, 1)));
  EXPECT_FALSE(eta.edge_contains(2, -lattice_p(cfg, 0)));
  EXPECT_TRUE(eta.edge_contains(1, lattice_q(cfg, 1)));
  EXPECT_FALSE(eta.edge_contains(1, -lattice_q(cfg, 1)));
}

TEST(Polygons, ValidateRejectsAntipodalEdgeWithoutVia) {
  auto p = eta_polygon(LatticeConfig::make(3, 3));
  p.via_points[2].reset();
  EXPECT_THROW(p.validate(), Error);
}

TEST(PolarData, XiNormals) {
  for (int m = 2; m <= 6; ++m)
    for (int k = 2; k <= 6; ++k) {
      const auto cfg = LatticeConfig::make(m, k);
      const auto d = polar_vertex_data(Family::Xi, cfg);
      EXPECT_TRUE(approx_equal(d.normals[0], lattice_p_hat(cfg, 0)));
      EXPECT_TRUE(approx_equal(d.normals[1], -lattice_q_hat(cfg, 0)));
      EXPECT_NO_THROW(d.validate(xi_polygon(cfg)));
    }
}

TEST(PolarData, EtaNormalAtQOne) {
  for (int m = 2; m <= 6; ++m)
    for (int k = 2; k <= 6; ++k) {
      const auto cfg = LatticeConfig::make(m, k);
      const auto d = polar_vertex_data(Family::Eta, cfg);
      EXPECT_TRUE(approx_equal(d.normals[2], lattice_q_hat(cfg, 1)));
      EXPECT_NO_THROW(d.validate(eta_polygon(cfg)));
    }
}

TEST(PolarData, NormalsOrthogonalToIncidentEdges) {
  // The Gauss map at a corner is normal to both edge tangents.
  for (Family f : {Family::Xi, Family::Eta})
    for (int m = 2; m <= 6; ++m)
      for (int k = 2; k <= 6; ++k) {
        const auto cfg = LatticeConfig::make(m, k);
        const auto p = family_polygon(f, cfg);
        const auto d = polar_vertex_data(f, cfg);
        for (std::size_t i = 0; i < p.size(); ++i) {
          EXPECT_NEAR(dot(d.normals[i], p.forward_tangent(i)), 0.0, 1e-12);
          EXPECT_NEAR(dot(d.normals[i], p.backward_tangent(i)), 0.0, 1e-12);
        }
      }
}
