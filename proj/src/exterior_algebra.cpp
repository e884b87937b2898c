#include "lawson/exterior_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "lawson/error.hpp"

namespace lawson {

Vector4& Vector4::operator+=(const Vector4& o) {
  for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
  return *this;
}

Vector4& Vector4::operator-=(const Vector4& o) {
  for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
  return *this;
}

Vector4& Vector4::operator*=(double s) {
  for (auto& x : c) x *= s;
  return *this;
}

double Vector4::norm() const { return std::sqrt(dot(*this, *this)); }

Vector4 Vector4::normalized() const {
  Vector4 v = *this;
  v *= 1.0 / norm();
  return v;
}

Vector4 operator+(Vector4 a, const Vector4& b) { return a += b; }
Vector4 operator-(Vector4 a, const Vector4& b) { return a -= b; }
Vector4 operator-(Vector4 a) { return a *= -1.0; }
Vector4 operator*(double s, Vector4 v) { return v *= s; }

double dot(const Vector4& a, const Vector4& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

bool approx_equal(const Vector4& a, const Vector4& b, double eps) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(a[i] - b[i]) > eps) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Vector4& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ')';
}

Bivector6& Bivector6::operator+=(const Bivector6& o) {
  for (std::size_t i = 0; i < 6; ++i) c[i] += o.c[i];
  return *this;
}

Bivector6& Bivector6::operator*=(double s) {
  for (auto& x : c) x *= s;
  return *this;
}

double Bivector6::norm() const { return std::sqrt(inner(*this, *this)); }

double Bivector6::plucker() const { return c[0] * c[5] - c[1] * c[4] + c[2] * c[3]; }

Bivector6 operator+(Bivector6 a, const Bivector6& b) { return a += b; }
Bivector6 operator-(Bivector6 a, const Bivector6& b) { return a += -b; }
Bivector6 operator-(Bivector6 a) { return a *= -1.0; }
Bivector6 operator*(double s, Bivector6 b) { return b *= s; }

bool approx_equal(const Bivector6& a, const Bivector6& b, double eps) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (std::abs(a[i] - b[i]) > eps) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Bivector6& b) {
  os << '(';
  for (std::size_t i = 0; i < 6; ++i) os << (i ? ", " : "") << b[i];
  return os << ')';
}

Matrix4 Matrix4::identity() { return diagonal(1, 1, 1, 1); }

Matrix4 Matrix4::diagonal(double d0, double d1, double d2, double d3) {
  Matrix4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

Matrix4 Matrix4::transposed() const {
  Matrix4 t;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix4::determinant() const {
  return hodge(column(0), column(1), column(2), column(3));
}

Vector4 Matrix4::column(std::size_t c) const {
  return Vector4{{(*this)(0, c), (*this)(1, c), (*this)(2, c), (*this)(3, c)}};
}

Bivector6 Matrix4::apply_to(const Bivector6& b) const {
  static constexpr std::array<std::array<std::size_t, 2>, 6> pairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  const Matrix4& m = *this;
  Bivector6 out;
  for (std::size_t row = 0; row < 6; ++row) {
    const auto [i, j] = pairs[row];
    double s = 0.0;
    for (std::size_t col = 0; col < 6; ++col) {
      const auto [k, l] = pairs[col];
      s += (m(i, k) * m(j, l) - m(i, l) * m(j, k)) * b[col];
    }
    out[row] = s;
  }
  return out;
}

Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
  Matrix4 p;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      double s = 0.0;
      for (std::size_t i = 0; i < 4; ++i) s += x(r, i) * y(i, c);
      p(r, c) = s;
    }
  return p;
}

Vector4 operator*(const Matrix4& m, const Vector4& v) {
  Vector4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += m(r, i) * v[i];
    out[r] = s;
  }
  return out;
}

Matrix4 operator-(const Matrix4& m) {
  Matrix4 n = m;
  for (auto& x : n.a) x = -x;
  return n;
}

double max_abs_diff(const Matrix4& x, const Matrix4& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

bool is_orthogonal(const Matrix4& m, double eps) {
  return max_abs_diff(m.transposed() * m, Matrix4::identity()) <= eps;
}

Bivector6 wedge(const Vector4& v, const Vector4& w) {
  Bivector6 b;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) b[Bivector6::index(i, j)] = v[i] * w[j] - v[j] * w[i];
  return b;
}

Vector4 hodge(const Vector4& v1, const Vector4& v2, const Vector4& v3) {
  Vector4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = hodge(v1, v2, v3, Vector4::basis(i));
  return out;
}

double hodge(const Vector4& v1, const Vector4& v2, const Vector4& v3, const Vector4& v4) {
  // Laplace expansion along the last column: sum_i (-1)^(i+3) v4_i M_i3,
  // where the minor's 3x3 determinant is the triple product of the first
  // three columns with row i removed.
  const std::array<const Vector4*, 3> cols{&v1, &v2, &v3};
  double det = 0.0;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<std::array<double, 3>, 3> m{};
    std::size_t r = 0;
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == skip) continue;
      for (std::size_t c = 0; c < 3; ++c) m[r][c] = (*cols[c])[row];
      ++r;
    }
    const double minor = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const double sign = ((skip + 3) % 2 == 0) ? 1.0 : -1.0;
    det += sign * v4[skip] * minor;
  }
  return det;
}

double inner(const Bivector6& a, const Bivector6& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 6; ++i) s += a[i] * b[i];
  return s;
}

std::size_t rank(std::span<const Bivector6> columns, double eps) {
  std::vector<Bivector6> work(columns.begin(), columns.end());
  std::vector<bool> used(work.size(), false);
  std::size_t r = 0;
  for (std::size_t step = 0; step < work.size(); ++step) {
    std::size_t pivot = work.size();
    double best = eps;
    for (std::size_t j = 0; j < work.size(); ++j) {
      if (used[j]) continue;
      const double n = work[j].norm();
      if (n > best) {
        best = n;
        pivot = j;
      }
    }
    if (pivot == work.size()) break;
    used[pivot] = true;
    ++r;
    const Bivector6 q = (1.0 / best) * work[pivot];
    for (std::size_t j = 0; j < work.size(); ++j) {
      if (!used[j]) work[j] = work[j] - inner(q, work[j]) * q;
    }
  }
  return r;
}

Plane2in6 Plane2in6::span(const Bivector6& a, const Bivector6& b, double eps) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na <= eps || nb <= eps) {
    throw Error(ErrorCode::DegenerateInput, "plane spanner has zero length");
  }
  const Bivector6 u = (1.0 / na) * a;
  const Bivector6 w = b - inner(u, b) * u;
  const double nw = w.norm();
  if (nw / nb <= eps) {
    throw Error(ErrorCode::DegenerateInput, "plane spanners are linearly dependent");
  }
  Plane2in6 p;
  p.spanners_ = {a, b};
  p.basis_ = {u, (1.0 / nw) * w};
  return p;
}

std::string_view to_string(PlaneRelation r) {
  switch (r) {
    case PlaneRelation::Equal: return "equal";
    case PlaneRelation::Partial: return "partial";
    case PlaneRelation::Transversal: return "transversal";
  }
  return "unknown";
}

PlaneRelation plane_relation(const Plane2in6& p, const Plane2in6& q, double eps) {
  const std::array<Bivector6, 4> cols{p.basis()[0], p.basis()[1], q.basis()[0], q.basis()[1]};
  switch (rank(cols, eps)) {
    case 2: return PlaneRelation::Equal;
    case 3: return PlaneRelation::Partial;
    default: return PlaneRelation::Transversal;
  }
}

}  // namespace lawson
