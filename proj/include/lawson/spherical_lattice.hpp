#pragma once

// Lattice points, great circles, geodesic reflections and the two geodesic
// quadrilaterals (xi and eta families) on the tessellation of S^3 spanned by
// the equidistant points P_i on the (x1,x2) circle and Q_j on the (x3,x4)
// circle.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawson/exterior_algebra.hpp"

namespace lawson {

enum class Family { Xi, Eta };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

/// P_i are spaced pi/k apart, Q_j are spaced pi/m apart.
struct LatticeConfig {
  int m = 2;
  int k = 2;

  /// Throws Validation unless m, k >= 2.
  static LatticeConfig make(int m, int k);

  /// (2,2) is the Clifford torus / Klein bottle case outside the theorems.
  bool excluded() const { return m == 2 && k == 2; }
};

Vector4 lattice_p(const LatticeConfig& cfg, int i);
Vector4 lattice_q(const LatticeConfig& cfg, int j);
/// Unit tangent of the P-circle at P_i, i.e. (-sin, cos, 0, 0).
Vector4 lattice_p_hat(const LatticeConfig& cfg, int i);
Vector4 lattice_q_hat(const LatticeConfig& cfg, int j);

/// Rotation by phi in the (x1,x2) plane, identity on (x3,x4).
Matrix4 rotation12(double phi);
/// Rotation by phi in the (x3,x4) plane, identity on (x1,x2).
Matrix4 rotation34(double phi);
/// diag(1,-1,1,-1): the reflection across the circle through P_0 and Q_0.
Matrix4 base_reflection();
/// diag(-1,-1,1,1): the reflection across the Q-circle {x1 = x2 = 0}.
Matrix4 q_circle_reflection();

/// Great circle S^3 cap P where P is the plane spanned by an orthonormal pair.
class GreatCircle {
 public:
  /// Circle through two non-antipodal points. Throws DegenerateCircle.
  static GreatCircle through(const Vector4& a, const Vector4& b);

  const Vector4& u() const { return u_; }
  const Vector4& v() const { return v_; }

  bool contains(const Vector4& x, double eps = kEpsilon) const;

 private:
  Vector4 u_;
  Vector4 v_;
};

/// Fixes the circle's plane pointwise and negates its orthogonal complement;
/// an involution in SO(4).
Matrix4 geodesic_reflection(const GreatCircle& c);

/// Reflection across the circle through P_i and Q_j, computed as
/// R12(2 pi i / k) * R34(2 pi j / m) * r00.
Matrix4 lattice_reflection(const LatticeConfig& cfg, int i, int j);

struct GeodesicPolygon {
  std::vector<Vector4> vertices;
  std::vector<std::string> labels;
  /// Interior angle at vertex i is pi / angle_denominators[i].
  std::vector<int> angle_denominators;
  /// via_points[i] disambiguates the edge from vertex i to vertex i+1.
  std::vector<std::optional<Vector4>> via_points;

  std::size_t size() const { return vertices.size(); }
  const Vector4& vertex(std::size_t i) const { return vertices[i % size()]; }

  /// Circle carrying edge i (vertex i to vertex i+1).
  GreatCircle edge_circle(std::size_t i) const;

  /// True iff x lies on the closed arc of edge i.
  bool edge_contains(std::size_t i, const Vector4& x, double eps = kEpsilon) const;

  /// Points pinning edge i as an arc: endpoints, via point and midpoints.
  std::vector<Vector4> edge_samples(std::size_t i) const;

  /// Unit tangent at vertex i pointing along edge i (forward) or along
  /// edge i-1 (backward).
  Vector4 forward_tangent(std::size_t i) const;
  Vector4 backward_tangent(std::size_t i) const;

  /// Throws Validation on non-unit vertices, antipodal neighbours without a
  /// via point, or denominators below 2.
  void validate() const;
};

/// Angle denominators recovered from the edge tangents at every vertex.
/// Throws Validation when an angle is not pi/n for an integer n >= 2.
std::vector<int> measured_angle_denominators(const GeodesicPolygon& polygon);

/// P0 Q0 P1 Q1 with angles pi/(m, k, m, k).
GeodesicPolygon xi_polygon(const LatticeConfig& cfg);

/// Q0 P1 Q1 [P0] (-Q1) with angles pi/(2, m, k, 2); the edge Q1 -> -Q1 is
/// the half circle through P0.
GeodesicPolygon eta_polygon(const LatticeConfig& cfg);

GeodesicPolygon family_polygon(Family f, const LatticeConfig& cfg);

/// Gauss map values of the initial disk at the polygon vertices, in vertex
/// order.
struct PolarVertexData {
  std::vector<Vector4> normals;

  /// Throws Validation unless every normal is a unit vector orthogonal to
  /// its vertex.
  void validate(const GeodesicPolygon& polygon) const;
};

PolarVertexData polar_vertex_data(Family f, const LatticeConfig& cfg);

}  // namespace lawson
