#pragma once

// Linear and exterior algebra on R^4 and Lambda^2 R^4 = R^6.
//
// Bivector components use the fixed lexicographic basis
//   (e12, e13, e14, e23, e24, e34),
// which is also the serialization order everywhere in the project.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>

namespace lawson {

/// Absolute tolerance for every rank and equality decision.
inline constexpr double kEpsilon = 1e-9;

struct Vector4 {
  std::array<double, 4> c{};

  constexpr double operator[](std::size_t i) const { return c[i]; }
  constexpr double& operator[](std::size_t i) { return c[i]; }

  static constexpr Vector4 basis(std::size_t i) {
    Vector4 v;
    v.c[i] = 1.0;
    return v;
  }

  Vector4& operator+=(const Vector4& o);
  Vector4& operator-=(const Vector4& o);
  Vector4& operator*=(double s);
  double norm() const;
  Vector4 normalized() const;
};

Vector4 operator+(Vector4 a, const Vector4& b);
Vector4 operator-(Vector4 a, const Vector4& b);
Vector4 operator-(Vector4 a);
Vector4 operator*(double s, Vector4 v);
double dot(const Vector4& a, const Vector4& b);
bool approx_equal(const Vector4& a, const Vector4& b, double eps = kEpsilon);
std::ostream& operator<<(std::ostream& os, const Vector4& v);

struct Bivector6 {
  std::array<double, 6> c{};

  constexpr double operator[](std::size_t i) const { return c[i]; }
  constexpr double& operator[](std::size_t i) { return c[i]; }

  /// Position of e_i ^ e_j (0-based, i < j) in the basis order.
  static constexpr std::size_t index(std::size_t i, std::size_t j) {
    constexpr std::size_t table[4][4] = {
        {6, 0, 1, 2}, {0, 6, 3, 4}, {1, 3, 6, 5}, {2, 4, 5, 6}};
    return table[i][j];
  }

  Bivector6& operator+=(const Bivector6& o);
  Bivector6& operator*=(double s);
  double norm() const;

  /// p12 p34 - p13 p24 + p14 p23; vanishes exactly on simple bivectors.
  double plucker() const;
};

Bivector6 operator+(Bivector6 a, const Bivector6& b);
Bivector6 operator-(Bivector6 a, const Bivector6& b);
Bivector6 operator-(Bivector6 a);
Bivector6 operator*(double s, Bivector6 b);
bool approx_equal(const Bivector6& a, const Bivector6& b, double eps = kEpsilon);
std::ostream& operator<<(std::ostream& os, const Bivector6& b);

/// Row-major 4x4 real matrix.
struct Matrix4 {
  std::array<double, 16> a{};

  constexpr double operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }
  constexpr double& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }

  static Matrix4 identity();
  static Matrix4 diagonal(double d0, double d1, double d2, double d3);

  Matrix4 transposed() const;
  double determinant() const;
  Vector4 column(std::size_t c) const;

  /// Action on a bivector through the second compound matrix, so that
  /// apply_to(v ^ w) == (M v) ^ (M w).
  Bivector6 apply_to(const Bivector6& b) const;
};

Matrix4 operator*(const Matrix4& x, const Matrix4& y);
Vector4 operator*(const Matrix4& m, const Vector4& v);
Matrix4 operator-(const Matrix4& m);
double max_abs_diff(const Matrix4& x, const Matrix4& y);
bool is_orthogonal(const Matrix4& m, double eps = kEpsilon);

/// 2-minors v_i w_j - v_j w_i in the fixed basis order.
Bivector6 wedge(const Vector4& v, const Vector4& w);

/// Hodge dual of v1 ^ v2 ^ v3: the vector sum_i det(v1, v2, v3, E_i) E_i.
Vector4 hodge(const Vector4& v1, const Vector4& v2, const Vector4& v3);

/// Hodge dual of a 4-vector, i.e. det of the columns (v1, v2, v3, v4).
double hodge(const Vector4& v1, const Vector4& v2, const Vector4& v3, const Vector4& v4);

/// Euclidean inner product on Lambda^2 R^4; on simple bivectors it is the
/// Gram determinant <v^w, x^y> = <v,x><w,y> - <v,y><w,x>.
double inner(const Bivector6& a, const Bivector6& b);

/// Rank of a set of bivectors by column-pivoted modified Gram-Schmidt;
/// a column counts while its residual norm exceeds eps.
std::size_t rank(std::span<const Bivector6> columns, double eps = kEpsilon);

/// Two-dimensional subspace of R^6 held as an orthonormal pair.
class Plane2in6 {
 public:
  /// Throws DegenerateInput when a and b are dependent within eps.
  static Plane2in6 span(const Bivector6& a, const Bivector6& b, double eps = kEpsilon);

  const std::array<Bivector6, 2>& spanners() const { return spanners_; }
  const std::array<Bivector6, 2>& basis() const { return basis_; }

 private:
  std::array<Bivector6, 2> spanners_{};
  std::array<Bivector6, 2> basis_{};
};

enum class PlaneRelation { Equal, Partial, Transversal };

std::string_view to_string(PlaneRelation r);

/// Equal iff the joint spanner rank is 2, Partial iff 3, Transversal iff 4.
PlaneRelation plane_relation(const Plane2in6& p, const Plane2in6& q, double eps = kEpsilon);

}  // namespace lawson
