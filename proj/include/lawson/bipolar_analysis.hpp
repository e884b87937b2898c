#pragma once

// Bipolar image points at polygon vertices: multiplicities, tangent planes,
// the choice of fundamental domain, area bounds and the embeddedness verdict.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lawson/exterior_algebra.hpp"
#include "lawson/kernels.hpp"
#include "lawson/reflection_group.hpp"
#include "lawson/spherical_lattice.hpp"
#include "lawson/surface_complex.hpp"

namespace lawson {

/// Everything derived from (family, m, k) before any bipolar analysis.
struct SurfaceModel {
  Family family;
  LatticeConfig cfg;
  GeodesicPolygon polygon;
  PolarVertexData polar;
  /// Edge circles in edge order.
  std::vector<GreatCircle> circles;
  ReflectionGroup group;
  NormalFormGroup normal_forms;
  /// Normal form of each closure element.
  std::vector<NormalFormElement> normal_form_of;
  /// Dihedral stabilizer of each polygon corner.
  std::vector<Subgroup> corner_stabilizers;
  SurfaceComplex surface;
  /// Present exactly when the surface is non-orientable.
  std::optional<DoubleCoverComplex> cover;
  MinusIdentityStatus minus_identity = MinusIdentityStatus::Absent;
};

/// Throws Validation if closure and normal forms disagree as sets.
SurfaceModel build_model(Family f, const LatticeConfig& cfg, std::size_t cap = kDefaultCap);

/// Parity of a closure element when the group is orientable.
int element_parity(const SurfaceModel& model, std::size_t element);

struct BipolarVertexPoint {
  Vector4 base;
  Vector4 normal;
  Bivector6 image;
};

BipolarVertexPoint vertex_point(const SurfaceModel& model, std::size_t corner);

/// Both the vertex and its normal lie in the same coordinate 2-plane.
bool is_pure_vertex(const SurfaceModel& model, std::size_t corner);

struct Solution {
  int sheet = 0;
  std::size_t element = 0;
};

struct MultiplicityResult {
  std::size_t corner = 0;
  std::string label;
  /// Brute-force count divided by the stabilizer order.
  std::size_t count = 0;
  std::vector<Solution> solutions;
  std::size_t stabilizer_order = 0;
  /// Counted over sheet-augmented pairs (s, g).
  bool double_cover = false;
  /// |G| / |G^p|, written 1/2 * 2|G| / |G^p| in the double-cover case.
  std::size_t orbit_prediction = 0;
  /// Index-arithmetic count from the normal forms; pure vertices only.
  std::optional<std::size_t> algebraic_prediction;
};

/// Counts g (or (s, g)) with (-1)^sign g(base) ^ g(normal) = base ^ normal.
MultiplicityResult bipolar_vertex_multiplicity(const SurfaceModel& model, std::size_t corner,
                                               Execution exec = Execution::Parallel);

enum class PlaneMode { BranchedOnly, WithRightAngle };

/// Tangent plane of the bipolar surface at the image of a corner under g.
///
/// At a corner of angle pi/n with n > 2 the plane is span(g t1 ^ g n,
/// g t2 ^ g n). At a right-angle corner it is the pencil
/// span(g t1 ^ g n - b g p ^ g t2, g t2 ^ g n - b g p ^ g t1) in the unknown
/// b, which is the same for all images of the corner.
struct VertexPlane {
  std::size_t corner = 0;
  std::size_t element = 0;
  std::string label;
  bool parametric = false;
  std::array<Bivector6, 2> fixed{};
  std::array<Bivector6, 2> pencil{};
};

VertexPlane vertex_plane(const SurfaceModel& model, std::size_t corner, std::size_t element,
                         PlaneMode mode = PlaneMode::WithRightAngle);

/// One plane per solution coset g G^p, labelled alpha=... at P-vertices and
/// beta=... at Q-vertices when the coset has a pure rotation representative.
/// Throws BranchRuleInapplicable at a right-angle corner in BranchedOnly mode.
std::vector<VertexPlane> tangent_planes_at_vertex(const SurfaceModel& model, std::size_t corner,
                                                  PlaneMode mode = PlaneMode::WithRightAngle);

enum class PairRelation { Equal, Partial, Transversal, Indeterminate };

std::string_view to_string(PairRelation r);

/// Fixed planes use the rank test. A pencil pair is Transversal when the Gram
/// determinant is certified positive for every b (including b = infinity),
/// Equal when the planes agree at enough samples to force identity, and
/// Indeterminate otherwise, as is any pair of pencils from different corners.
PairRelation relate(const VertexPlane& a, const VertexPlane& b, double eps = kEpsilon);

/// Vertex classes of a domain complex sharing one bipolar image point.
struct ImagePoint {
  Bivector6 image;
  std::vector<std::size_t> classes;
  std::vector<VertexPlane> planes;
  /// Relations of all plane pairs (i < j), row-major.
  std::vector<PairRelation> relations;
};

/// Groups the vertex classes of a domain complex by image point and relates
/// their tangent planes.
std::vector<ImagePoint> image_points(const SurfaceModel& model, const SurfaceComplex& domain,
                                     double eps = kEpsilon);

enum class DomainKind { S, SModMinusOne, SBar, SBarModMinusOne };

std::string_view to_string(DomainKind d);

struct DomainDecision {
  DomainKind kind = DomainKind::S;
  SurfaceComplex domain;
  /// Sheets of the undivided domain over S (1 or 2) and the quotient degree.
  int sheets = 1;
  int degree = 1;
  std::int64_t chi_undivided = 0;
  std::int64_t chi = 0;
  bool orientable = false;
  std::vector<ImagePoint> points;
  std::size_t max_multiplicity = 0;
};

/// Throws InconsistentEvidence when points identified by -1 carry different
/// image points or planes, DomainUndetermined when no image point rules out
/// a further covering.
DomainDecision fundamental_domain_decision(const SurfaceModel& model, double eps = kEpsilon);

struct AreaBounds {
  /// Multiples of pi; the upper bound is strict.
  Rational lower;
  Rational upper;
  std::optional<Rational> lower_rederived;
  std::optional<Rational> upper_rederived;
};

/// Closed-form bounds; with rederive, also 4 * (max multiplicity on the
/// domain) and (2 sheets A - 2 chi(undivided domain)) / degree, where A is
/// the strict area bound of the minimal surface.
AreaBounds area_bounds(const SurfaceModel& model, const DomainDecision& decision, bool rederive);

enum class Embeddedness { NotEmbedded, Inconclusive };

std::string_view to_string(Embeddedness e);

/// NotEmbedded iff some image point carries a Transversal or Partial pair.
Embeddedness embeddedness_verdict(const DomainDecision& decision);

bool bipolar_orientability(const DomainDecision& decision);

}  // namespace lawson
