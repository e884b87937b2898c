#include "lawson/spherical_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lawson/error.hpp"

namespace lawson {

namespace {

constexpr double kPi = std::numbers::pi;

int wrap(int i, int n) { return ((i % n) + n) % n; }

Vector4 tangent_towards(const Vector4& from, const Vector4& to) {
  return (to - dot(to, from) * from).normalized();
}

Vector4 midpoint(const Vector4& a, const Vector4& b) { return (a + b).normalized(); }

}  // namespace

std::string_view to_string(Family f) { return f == Family::Xi ? "xi" : "eta"; }

Family parse_family(std::string_view s) {
  if (s == "xi") return Family::Xi;
  if (s == "eta") return Family::Eta;
  throw Error(ErrorCode::Validation, "unknown family '" + std::string(s) + "'");
}

LatticeConfig LatticeConfig::make(int m, int k) {
  if (m < 2 || k < 2) {
    throw Error(ErrorCode::Validation,
                "m and k must be >= 2 (got m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
  return LatticeConfig{m, k};
}

Vector4 lattice_p(const LatticeConfig& cfg, int i) {
  const double t = wrap(i, 2 * cfg.k) * kPi / cfg.k;
  return Vector4{{std::cos(t), std::sin(t), 0.0, 0.0}};
}

Vector4 lattice_q(const LatticeConfig& cfg, int j) {
  const double t = wrap(j, 2 * cfg.m) * kPi / cfg.m;
  return Vector4{{0.0, 0.0, std::cos(t), std::sin(t)}};
}

Vector4 lattice_p_hat(const LatticeConfig& cfg, int i) {
  const double t = wrap(i, 2 * cfg.k) * kPi / cfg.k;
  return Vector4{{-std::sin(t), std::cos(t), 0.0, 0.0}};
}

Vector4 lattice_q_hat(const LatticeConfig& cfg, int j) {
  const double t = wrap(j, 2 * cfg.m) * kPi / cfg.m;
  return Vector4{{0.0, 0.0, -std::sin(t), std::cos(t)}};
}

Matrix4 rotation12(double phi) {
  Matrix4 r = Matrix4::identity();
  r(0, 0) = std::cos(phi);
  r(0, 1) = -std::sin(phi);
  r(1, 0) = std::sin(phi);
  r(1, 1) = std::cos(phi);
  return r;
}

Matrix4 rotation34(double phi) {
  Matrix4 r = Matrix4::identity();
  r(2, 2) = std::cos(phi);
  r(2, 3) = -std::sin(phi);
  r(3, 2) = std::sin(phi);
  r(3, 3) = std::cos(phi);
  return r;
}

Matrix4 base_reflection() { return Matrix4::diagonal(1, -1, 1, -1); }

Matrix4 q_circle_reflection() { return Matrix4::diagonal(-1, -1, 1, 1); }

GreatCircle GreatCircle::through(const Vector4& a, const Vector4& b) {
  const double na = a.norm();
  if (na <= kEpsilon) throw Error(ErrorCode::DegenerateCircle, "zero vector");
  const Vector4 u = (1.0 / na) * a;
  const Vector4 w = b - dot(u, b) * u;
  const double nw = w.norm();
  if (nw <= kEpsilon) {
    throw Error(ErrorCode::DegenerateCircle, "points do not span a 2-plane");
  }
  GreatCircle c;
  c.u_ = u;
  c.v_ = (1.0 / nw) * w;
  return c;
}

bool GreatCircle::contains(const Vector4& x, double eps) const {
  const Vector4 proj = dot(x, u_) * u_ + dot(x, v_) * v_;
  return (x - proj).norm() <= eps;
}

Matrix4 geodesic_reflection(const GreatCircle& c) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      r(i, j) = 2.0 * (c.u()[i] * c.u()[j] + c.v()[i] * c.v()[j]) - (i == j ? 1.0 : 0.0);
    }
  return r;
}

Matrix4 lattice_reflection(const LatticeConfig& cfg, int i, int j) {
  return rotation12(2.0 * kPi * i / cfg.k) * rotation34(2.0 * kPi * j / cfg.m) *
         base_reflection();
}

GreatCircle GeodesicPolygon::edge_circle(std::size_t i) const {
  const Vector4& a = vertex(i);
  const auto& via = via_points[i % size()];
  return GreatCircle::through(a, via ? *via : vertex(i + 1));
}

bool GeodesicPolygon::edge_contains(std::size_t i, const Vector4& x, double eps) const {
  if (!edge_circle(i).contains(x, eps)) return false;
  auto dist = [](const Vector4& a, const Vector4& b) {
    return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
  };
  auto on_arc = [&](const Vector4& a, const Vector4& b) {
    return std::abs(dist(a, x) + dist(x, b) - dist(a, b)) <= std::sqrt(eps);
  };
  const Vector4& a = vertex(i);
  const Vector4& b = vertex(i + 1);
  if (const auto& via = via_points[i % size()]) return on_arc(a, *via) || on_arc(*via, b);
  return on_arc(a, b);
}

std::vector<Vector4> GeodesicPolygon::edge_samples(std::size_t i) const {
  const Vector4& a = vertex(i);
  const Vector4& b = vertex(i + 1);
  if (const auto& via = via_points[i % size()]) {
    return {a, midpoint(a, *via), *via, midpoint(*via, b), b};
  }
  return {a, midpoint(a, b), b};
}

Vector4 GeodesicPolygon::forward_tangent(std::size_t i) const {
  const auto& via = via_points[i % size()];
  return tangent_towards(vertex(i), via ? *via : vertex(i + 1));
}

Vector4 GeodesicPolygon::backward_tangent(std::size_t i) const {
  const std::size_t prev = (i + size() - 1) % size();
  const auto& via = via_points[prev];
  return tangent_towards(vertex(i), via ? *via : vertex(prev));
}

void GeodesicPolygon::validate() const {
  const std::size_t n = size();
  if (n < 3 || labels.size() != n || angle_denominators.size() != n || via_points.size() != n) {
    throw Error(ErrorCode::Validation, "polygon arrays have inconsistent sizes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(vertex(i).norm() - 1.0) > kEpsilon) {
      throw Error(ErrorCode::Validation, "vertex " + labels[i] + " is not on S^3");
    }
    if (angle_denominators[i] < 2) {
      throw Error(ErrorCode::Validation, "angle denominator at " + labels[i] + " is below 2");
    }
    const bool antipodal = (vertex(i) + vertex(i + 1)).norm() <= kEpsilon;
    if (antipodal && !via_points[i]) {
      throw Error(ErrorCode::Validation, "antipodal edge from " + labels[i] + " needs a via point");
    }
  }
}

std::vector<int> measured_angle_denominators(const GeodesicPolygon& polygon) {
  std::vector<int> out;
  out.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const double c = dot(polygon.forward_tangent(i), polygon.backward_tangent(i));
    const double angle = std::acos(std::clamp(c, -1.0, 1.0));
    const long n = std::lround(kPi / angle);
    if (n < 2 || std::abs(angle - kPi / static_cast<double>(n)) > kEpsilon) {
      throw Error(ErrorCode::Validation,
                  "angle at " + polygon.labels[i] + " is not of the form pi/n");
    }
    out.push_back(static_cast<int>(n));
  }
  return out;
}

GeodesicPolygon xi_polygon(const LatticeConfig& cfg) {
  GeodesicPolygon p;
  p.vertices = {lattice_p(cfg, 0), lattice_q(cfg, 0), lattice_p(cfg, 1), lattice_q(cfg, 1)};
  p.labels = {"P0", "Q0", "P1", "Q1"};
  p.angle_denominators = {cfg.m, cfg.k, cfg.m, cfg.k};
  p.via_points.assign(4, std::nullopt);
  return p;
}

GeodesicPolygon eta_polygon(const LatticeConfig& cfg) {
  GeodesicPolygon p;
  p.vertices = {lattice_q(cfg, 0), lattice_p(cfg, 1), lattice_q(cfg, 1), -lattice_q(cfg, 1)};
  p.labels = {"Q0", "P1", "Q1", "-Q1"};
  p.angle_denominators = {2, cfg.m, cfg.k, 2};
  p.via_points = {std::nullopt, std::nullopt, lattice_p(cfg, 0), std::nullopt};
  return p;
}

GeodesicPolygon family_polygon(Family f, const LatticeConfig& cfg) {
  return f == Family::Xi ? xi_polygon(cfg) : eta_polygon(cfg);
}

void PolarVertexData::validate(const GeodesicPolygon& polygon) const {
  if (normals.size() != polygon.size()) {
    throw Error(ErrorCode::Validation, "one normal per vertex expected");
  }
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (std::abs(normals[i].norm() - 1.0) > kEpsilon ||
        std::abs(dot(normals[i], polygon.vertex(i))) > kEpsilon) {
      throw Error(ErrorCode::Validation, "normal at " + polygon.labels[i] + " is not a unit tangent");
    }
  }
}

PolarVertexData polar_vertex_data(Family f, const LatticeConfig& cfg) {
  if (f == Family::Xi) {
    return {{lattice_p_hat(cfg, 0), -lattice_q_hat(cfg, 0), -lattice_p_hat(cfg, 1),
             lattice_q_hat(cfg, 1)}};
  }
  return {{lattice_p_hat(cfg, 1), -lattice_p_hat(cfg, 1), lattice_q_hat(cfg, 1),
           lattice_p_hat(cfg, 0)}};
}

}  // namespace lawson
