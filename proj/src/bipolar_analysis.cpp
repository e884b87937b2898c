#include "lawson/bipolar_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "lawson/closed_forms.hpp"
#include "lawson/error.hpp"

namespace lawson {

namespace {

constexpr double kPi = std::numbers::pi;
// Samples for the positivity certificate of a pencil Gram determinant.
constexpr int kCertificateSamples = 720;
// A rank-2 condition of bounded trigonometric degree holding at this many
// points holds identically.
constexpr int kIdentitySamples = 64;

bool in_plane12(const Vector4& v) { return std::abs(v[2]) <= kEpsilon && std::abs(v[3]) <= kEpsilon; }
bool in_plane34(const Vector4& v) { return std::abs(v[0]) <= kEpsilon && std::abs(v[1]) <= kEpsilon; }

int sign_of(int parity) { return (parity & 1) ? -1 : 1; }

std::array<Bivector6, 2> spanners_at(const VertexPlane& p, double phi) {
  if (!p.parametric) return p.fixed;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c * p.fixed[0] + s * p.pencil[0], c * p.fixed[1] + s * p.pencil[1]};
}

double gram_determinant(const std::array<Bivector6, 4>& v) {
  Matrix4 g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = inner(v[i], v[j]);
  return g.determinant();
}

// Image point of a vertex class of a domain complex, and its tangent plane.
struct ClassData {
  Bivector6 image;
  VertexPlane plane;
};

ClassData class_data(const SurfaceModel& model, const SurfaceComplex& domain, std::size_t v) {
  const FaceSlot rep = domain.vertex_classes[v].front();
  const std::size_t g = domain.face_element[rep.face];
  const Matrix4& m = model.group.element(g).matrix;
  int sign = sign_of(domain.face_sheet[rep.face]);
  if (model.group.orientable_quotient()) sign *= sign_of(element_parity(model, g));
  const BipolarVertexPoint vp = vertex_point(model, rep.slot);
  ClassData d;
  d.image = static_cast<double>(sign) * wedge(m * vp.base, m * vp.normal);
  d.plane = vertex_plane(model, rep.slot, g);
  d.plane.label = model.polygon.labels[rep.slot] + "#" + std::to_string(v);
  return d;
}

}  // namespace

SurfaceModel build_model(Family f, const LatticeConfig& cfg, std::size_t cap) {
  GeodesicPolygon polygon = family_polygon(f, cfg);
  polygon.validate();
  if (measured_angle_denominators(polygon) != polygon.angle_denominators) {
    throw Error(ErrorCode::CrossCheckFailed, "measured polygon angles differ from the stored data");
  }
  PolarVertexData polar = polar_vertex_data(f, cfg);
  polar.validate(polygon);

  std::vector<GreatCircle> circles;
  for (std::size_t i = 0; i < polygon.size(); ++i) circles.push_back(polygon.edge_circle(i));

  ReflectionGroup group = family_group(f, cfg, cap);
  NormalFormGroup nf = normal_form_group(f, cfg);
  if (nf.size() != group.size()) {
    throw Error(ErrorCode::CrossCheckFailed, "closure has " + std::to_string(group.size()) +
                                                 " elements, normal forms " +
                                                 std::to_string(nf.size()));
  }
  std::vector<NormalFormElement> normal_form_of(group.size());
  std::vector<bool> hit(group.size(), false);
  for (const auto& e : nf.elements()) {
    const auto idx = group.index_of(nf.matrix(e));
    if (!idx || hit[*idx]) {
      throw Error(ErrorCode::CrossCheckFailed, "normal form element missing from the closure");
    }
    hit[*idx] = true;
    normal_form_of[*idx] = e;
  }

  std::vector<Subgroup> stabilizers;
  for (std::size_t c = 0; c < polygon.size(); ++c) {
    stabilizers.push_back(stabilizer(group, polygon.vertex(c), polygon));
  }

  SurfaceComplex surface = build_complex(group, polygon);
  std::optional<DoubleCoverComplex> cover;
  if (!surface.orientable) cover = double_cover(surface);
  const MinusIdentityStatus minus = minus_identity_status(group);

  return SurfaceModel{f,
                      cfg,
                      std::move(polygon),
                      std::move(polar),
                      std::move(circles),
                      std::move(group),
                      std::move(nf),
                      std::move(normal_form_of),
                      std::move(stabilizers),
                      std::move(surface),
                      std::move(cover),
                      minus};
}

int element_parity(const SurfaceModel& model, std::size_t element) {
  const ParitySet& p = model.group.element(element).parity;
  if (p.mixed()) throw Error(ErrorCode::MissingParity, "element has words of both parities");
  return p.odd ? 1 : 0;
}

BipolarVertexPoint vertex_point(const SurfaceModel& model, std::size_t corner) {
  const Vector4& b = model.polygon.vertex(corner);
  const Vector4& n = model.polar.normals[corner];
  return {b, n, wedge(b, n)};
}

bool is_pure_vertex(const SurfaceModel& model, std::size_t corner) {
  const BipolarVertexPoint vp = vertex_point(model, corner);
  return (in_plane12(vp.base) && in_plane12(vp.normal)) ||
         (in_plane34(vp.base) && in_plane34(vp.normal));
}

MultiplicityResult bipolar_vertex_multiplicity(const SurfaceModel& model, std::size_t corner,
                                               Execution exec) {
  const ReflectionGroup& group = model.group;
  const BipolarVertexPoint vp = vertex_point(model, corner);
  const std::size_t stab = model.corner_stabilizers[corner].size();

  MultiplicityResult r;
  r.corner = corner;
  r.label = model.polygon.labels[corner];
  r.stabilizer_order = stab;
  r.double_cover = !group.orientable_quotient();

  std::vector<Matrix4> maps;
  std::vector<int> signs;
  std::vector<Solution> index;
  const int sheets = r.double_cover ? 2 : 1;
  for (int s = 0; s < sheets; ++s) {
    for (std::size_t g = 0; g < group.size(); ++g) {
      maps.push_back(group.element(g).matrix);
      signs.push_back(r.double_cover ? sign_of(s) : sign_of(element_parity(model, g)));
      index.push_back({s, g});
    }
  }
  for (auto i : coincidence_scan(maps, signs, vp.base, vp.normal, vp.image, exec)) {
    r.solutions.push_back(index[i]);
  }
  if (r.solutions.size() % stab != 0) {
    throw Error(ErrorCode::CrossCheckFailed,
                "solution count at " + r.label + " is not a multiple of the stabilizer order");
  }
  r.count = r.solutions.size() / stab;
  r.orbit_prediction = r.double_cover ? (2 * group.size() / stab) / 2 : group.size() / stab;

  if (is_pure_vertex(model, corner)) {
    // g preserves both coordinate planes, so g(b) ^ g(n) = det(g on the
    // plane) b ^ n; only r00 reverses either plane.
    const NormalFormGroup& nf = model.normal_forms;
    std::size_t plus = 0;
    for (const auto& e : nf.elements()) {
      if (nf.kind() == NormalFormKind::EtaEvenK) {
        ++plus;  // exactly one sheet matches
        continue;
      }
      const int r00 = nf.kind() == NormalFormKind::Xi ? e.gamma : e.delta;
      if (((nf.parity(e) + r00) & 1) == 0) ++plus;
    }
    r.algebraic_prediction = plus / (2 * static_cast<std::size_t>(model.polygon.angle_denominators[corner]));
  }
  return r;
}

VertexPlane vertex_plane(const SurfaceModel& model, std::size_t corner, std::size_t element,
                         PlaneMode mode) {
  const Matrix4& g = model.group.element(element).matrix;
  const Vector4 p = g * model.polygon.vertex(corner);
  const Vector4 n = g * model.polar.normals[corner];
  const Vector4 t1 = g * model.polygon.forward_tangent(corner);
  const Vector4 t2 = g * model.polygon.backward_tangent(corner);
  VertexPlane vp;
  vp.corner = corner;
  vp.element = element;
  vp.label = model.polygon.labels[corner];
  vp.fixed = {wedge(t1, n), wedge(t2, n)};
  if (model.polygon.angle_denominators[corner] == 2) {
    if (mode == PlaneMode::BranchedOnly) {
      throw Error(ErrorCode::BranchRuleInapplicable,
                  "corner " + model.polygon.labels[corner] + " has angle pi/2");
    }
    vp.parametric = true;
    vp.pencil = {-wedge(p, t2), -wedge(p, t1)};
  }
  return vp;
}

std::vector<VertexPlane> tangent_planes_at_vertex(const SurfaceModel& model, std::size_t corner,
                                                  PlaneMode mode) {
  if (mode == PlaneMode::BranchedOnly && model.polygon.angle_denominators[corner] == 2) {
    throw Error(ErrorCode::BranchRuleInapplicable,
                "corner " + model.polygon.labels[corner] + " has angle pi/2");
  }
  const MultiplicityResult mult = bipolar_vertex_multiplicity(model, corner);
  const Subgroup& stab = model.corner_stabilizers[corner];
  const bool p_type = in_plane12(model.polygon.vertex(corner));
  const bool q_type = in_plane34(model.polygon.vertex(corner));

  std::set<std::size_t> seen;
  std::vector<VertexPlane> planes;
  for (const auto& sol : mult.solutions) {
    std::vector<std::size_t> coset;
    for (auto h : stab) coset.push_back(model.group.multiply(sol.element, h));
    std::sort(coset.begin(), coset.end());
    if (!seen.insert(coset.front()).second) continue;

    std::size_t rep = coset.front();
    std::string label = "g=" + std::to_string(rep);
    for (auto x : coset) {
      const NormalFormElement& e = model.normal_form_of[x];
      if (e.gamma != 0 || e.delta != 0) continue;
      if (p_type && e.beta == 0) {
        rep = x;
        label = "alpha=" + std::to_string(e.alpha);
        break;
      }
      if (q_type && e.alpha == 0) {
        rep = x;
        label = "beta=" + std::to_string(e.beta);
        break;
      }
    }
    VertexPlane vp = vertex_plane(model, corner, rep, mode);
    vp.label = label;
    planes.push_back(vp);
  }
  std::sort(planes.begin(), planes.end(),
            [](const VertexPlane& a, const VertexPlane& b) { return a.element < b.element; });
  return planes;
}

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Equal: return "equal";
    case PairRelation::Partial: return "partial";
    case PairRelation::Transversal: return "transversal";
    case PairRelation::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

PairRelation relate(const VertexPlane& a, const VertexPlane& b, double eps) {
  if (!a.parametric && !b.parametric) {
    const auto pa = Plane2in6::span(a.fixed[0], a.fixed[1], eps);
    const auto pb = Plane2in6::span(b.fixed[0], b.fixed[1], eps);
    switch (plane_relation(pa, pb, eps)) {
      case PlaneRelation::Equal: return PairRelation::Equal;
      case PlaneRelation::Partial: return PairRelation::Partial;
      case PlaneRelation::Transversal: return PairRelation::Transversal;
    }
  }
  if (a.parametric && b.parametric && a.corner != b.corner) return PairRelation::Indeterminate;

  // The Gram determinant is a trigonometric polynomial of degree <= 8 in phi
  // with period pi, where (cos phi, sin phi) ~ (1, b). Bernstein's inequality
  // bounds its variation between samples spaced h apart by 4 h max|q|.
  const double h = kPi / kCertificateSamples;
  double lo = INFINITY;
  double hi = 0.0;
  for (int j = 0; j < kCertificateSamples; ++j) {
    const auto sa = spanners_at(a, j * h);
    const auto sb = spanners_at(b, j * h);
    const double q = gram_determinant({sa[0], sa[1], sb[0], sb[1]});
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  if (hi > 0.0 && lo - 4.0 * h * hi / (1.0 - 4.0 * h) > eps * hi) return PairRelation::Transversal;

  bool equal = true;
  for (int j = 0; j < kIdentitySamples && equal; ++j) {
    const double phi = (j + 0.5) * kPi / kIdentitySamples;
    const auto sa = spanners_at(a, phi);
    const auto sb = spanners_at(b, phi);
    try {
      equal = plane_relation(Plane2in6::span(sa[0], sa[1], eps), Plane2in6::span(sb[0], sb[1], eps),
                             eps) == PlaneRelation::Equal;
    } catch (const Error&) {
      equal = false;
    }
  }
  return equal ? PairRelation::Equal : PairRelation::Indeterminate;
}

std::vector<ImagePoint> image_points(const SurfaceModel& model, const SurfaceComplex& domain,
                                     double eps) {
  std::vector<ImagePoint> points;
  for (std::size_t v = 0; v < domain.vertex_count(); ++v) {
    ClassData d = class_data(model, domain, v);
    auto it = std::find_if(points.begin(), points.end(), [&](const ImagePoint& p) {
      return approx_equal(p.image, d.image, eps);
    });
    if (it == points.end()) {
      points.push_back({d.image, {}, {}, {}});
      it = points.end() - 1;
    }
    it->classes.push_back(v);
    it->planes.push_back(std::move(d.plane));
  }
  for (auto& p : points) {
    for (std::size_t i = 0; i < p.planes.size(); ++i)
      for (std::size_t j = i + 1; j < p.planes.size(); ++j)
        p.relations.push_back(relate(p.planes[i], p.planes[j], eps));
  }
  return points;
}

std::string_view to_string(DomainKind d) {
  switch (d) {
    case DomainKind::S: return "S";
    case DomainKind::SModMinusOne: return "S/<-1>";
    case DomainKind::SBar: return "Sbar";
    case DomainKind::SBarModMinusOne: return "Sbar/<-1>";
  }
  return "unknown";
}

DomainDecision fundamental_domain_decision(const SurfaceModel& model, double eps) {
  const bool orientable = model.surface.orientable;
  const SurfaceComplex& undivided = orientable ? model.surface : model.cover->cover;
  DomainDecision dd;
  dd.sheets = orientable ? 1 : 2;
  dd.chi_undivided = undivided.euler_characteristic();

  // -1 fixes every bivector, so it is a symmetry of the bipolar map on S
  // when it has even parity, and on the double cover whenever it is present.
  const bool quotient = orientable ? model.minus_identity == MinusIdentityStatus::PresentEven
                                   : model.minus_identity != MinusIdentityStatus::Absent;
  if (quotient) {
    const std::vector<std::size_t> face_map = minus_identity_face_map(undivided, model.group);
    for (std::size_t v = 0; v < undivided.vertex_count(); ++v) {
      const FaceSlot rep = undivided.vertex_classes[v].front();
      const std::size_t w = undivided.vertex_of[face_map[rep.face] * undivided.sides + rep.slot];
      const ClassData a = class_data(model, undivided, v);
      const ClassData b = class_data(model, undivided, w);
      if (!approx_equal(a.image, b.image, eps) || relate(a.plane, b.plane, eps) != PairRelation::Equal) {
        throw Error(ErrorCode::InconsistentEvidence,
                    "points identified by -1 carry different image points or planes");
      }
    }
    dd.domain = quotient_by_involution(undivided, face_map);
    dd.degree = 2;
    dd.kind = orientable ? DomainKind::SModMinusOne : DomainKind::SBarModMinusOne;
  } else {
    dd.domain = undivided;
    dd.kind = orientable ? DomainKind::S : DomainKind::SBar;
  }

  dd.points = image_points(model, dd.domain, eps);
  bool pinned = false;
  for (const auto& p : dd.points) {
    dd.max_multiplicity = std::max(dd.max_multiplicity, p.classes.size());
    const bool separated = std::all_of(p.relations.begin(), p.relations.end(), [](PairRelation r) {
      return r == PairRelation::Transversal || r == PairRelation::Partial;
    });
    pinned = pinned || p.classes.size() == 1 || separated;
  }
  if (!pinned) {
    throw Error(ErrorCode::DomainUndetermined,
                "every image point carries coinciding or undecided tangent planes");
  }
  dd.chi = dd.domain.euler_characteristic();
  dd.orientable = dd.domain.orientable;
  return dd;
}

AreaBounds area_bounds(const SurfaceModel& model, const DomainDecision& decision, bool rederive) {
  AreaBounds a{closed_form::area_lower(model.family, model.cfg),
               closed_form::area_upper(model.family, model.cfg), std::nullopt, std::nullopt};
  if (rederive) {
    // Li-Yau: a point of multiplicity mu forces area >= 4 pi mu.
    a.lower_rederived = Rational(4 * static_cast<std::int64_t>(decision.max_multiplicity));
    // area(bipolar) = 2 area(minimal) - 2 pi chi on the undivided domain,
    // whose minimal surface covers S sheets times.
    const Rational bound = closed_form::surface_area_bound(model.family, model.cfg);
    a.upper_rederived = (Rational(2 * decision.sheets) * bound - Rational(2 * decision.chi_undivided)) /
                        Rational(decision.degree);
  }
  return a;
}

std::string_view to_string(Embeddedness e) {
  return e == Embeddedness::NotEmbedded ? "not_embedded" : "inconclusive";
}

Embeddedness embeddedness_verdict(const DomainDecision& decision) {
  for (const auto& p : decision.points) {
    for (auto r : p.relations) {
      if (r == PairRelation::Transversal || r == PairRelation::Partial) return Embeddedness::NotEmbedded;
    }
  }
  return Embeddedness::Inconclusive;
}

bool bipolar_orientability(const DomainDecision& decision) { return decision.orientable; }

}  // namespace lawson
