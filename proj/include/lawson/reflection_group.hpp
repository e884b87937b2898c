#pragma once

// Finite subgroups of SO(4) generated by geodesic reflections.
//
// ReflectionGroup is built by breadth-first closure over (matrix, word parity)
// states. NormalFormGroup enumerates the same groups from their index
// descriptions with exact modular arithmetic, so the two can be compared.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lawson/exterior_algebra.hpp"
#include "lawson/spherical_lattice.hpp"

namespace lawson {

inline constexpr std::size_t kDefaultCap = 10000;

/// Entries rounded to 12 decimals, row-major.
using MatrixKey = std::array<std::int64_t, 16>;

MatrixKey canonical_key(const Matrix4& m);
std::string to_string(const MatrixKey& key);

struct MatrixKeyHash {
  std::size_t operator()(const MatrixKey& k) const noexcept;
};

/// Word parities realising an element.
struct ParitySet {
  bool even = false;
  bool odd = false;

  bool mixed() const { return even && odd; }
  bool empty() const { return !even && !odd; }
  bool contains(int parity) const { return (parity & 1) ? odd : even; }
  void insert(int parity) { ((parity & 1) ? odd : even) = true; }
};

std::string to_string(const ParitySet& p);

struct GroupElement {
  Matrix4 matrix;
  ParitySet parity;
};

class ReflectionGroup {
 public:
  /// Breadth-first closure. Throws NonInvolutiveGenerator, CapExceeded.
  static ReflectionGroup closure(const std::vector<Matrix4>& generators,
                                 std::size_t cap = kDefaultCap);

  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const MatrixKey& key(std::size_t i) const { return keys_[i]; }

  std::size_t generator_count() const { return generators_.size(); }
  const Matrix4& generator(std::size_t i) const { return generators_[i]; }
  /// Element index of generator i.
  std::size_t generator_index(std::size_t i) const { return generator_index_[i]; }

  std::size_t identity_index() const { return identity_; }

  /// Exact key lookup, then a tolerance scan so that rounding-boundary
  /// splits cannot produce false misses.
  std::optional<std::size_t> index_of(const Matrix4& m, double eps = kEpsilon) const;

  /// Index of element(i) * generator(gen), precomputed.
  std::size_t right_multiply(std::size_t i, std::size_t gen) const {
    return right_table_[gen][i];
  }

  /// Index of element(i) * element(j). Throws Validation if the product is
  /// not in the group.
  std::size_t multiply(std::size_t i, std::size_t j) const;

  /// True iff no element is realised by words of both parities.
  bool orientable_quotient() const;

 private:
  std::vector<Matrix4> generators_;
  std::vector<std::size_t> generator_index_;
  std::vector<GroupElement> elements_;
  std::vector<MatrixKey> keys_;
  std::unordered_map<MatrixKey, std::size_t, MatrixKeyHash> lookup_;
  std::vector<std::vector<std::size_t>> right_table_;
  std::size_t identity_ = 0;
};

/// Subgroup as sorted element indices of its parent group.
using Subgroup = std::vector<std::size_t>;

/// Closure of the given parent elements under multiplication.
Subgroup generated_subgroup(const ReflectionGroup& group, const std::vector<std::size_t>& gens);

/// Reflection generators of the family: one geodesic reflection per polygon
/// edge, in edge order.
std::vector<Matrix4> family_generators(Family f, const LatticeConfig& cfg);

ReflectionGroup family_group(Family f, const LatticeConfig& cfg, std::size_t cap = kDefaultCap);

enum class NormalFormKind { Xi, EtaEvenK, EtaOddK };

std::string_view to_string(NormalFormKind k);
NormalFormKind normal_form_kind(Family f, const LatticeConfig& cfg);

/// Xi and EtaEvenK:  R12^alpha R34^beta r00^gamma
/// EtaOddK:          rQ^gamma R12^alpha R34^beta r00^delta
/// with R12 = R12(2 pi / k), R34 = R34(2 pi / m), rQ = diag(-1,-1,1,1).
struct NormalFormElement {
  NormalFormKind kind = NormalFormKind::Xi;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;

  friend bool operator==(const NormalFormElement&, const NormalFormElement&) = default;
};

class NormalFormGroup {
 public:
  NormalFormGroup(NormalFormKind kind, const LatticeConfig& cfg);

  NormalFormKind kind() const { return kind_; }
  const LatticeConfig& config() const { return cfg_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<NormalFormElement>& elements() const { return elements_; }

  NormalFormElement identity() const;
  NormalFormElement multiply(const NormalFormElement& a, const NormalFormElement& b) const;
  NormalFormElement inverse(const NormalFormElement& a) const;
  Matrix4 matrix(const NormalFormElement& e) const;

  /// gamma (Xi) or gamma + delta mod 2 (EtaOddK). Throws ParityUndefined for
  /// EtaEvenK, where every element is realised by words of both parities.
  int parity(const NormalFormElement& e) const;

  /// Normal forms of the family generators, in polygon edge order.
  std::vector<NormalFormElement> generators(Family f) const;

  /// Sorted canonical keys of all element matrices.
  std::vector<MatrixKey> matrix_keys() const;

 private:
  NormalFormElement reduce(NormalFormElement e) const;

  NormalFormKind kind_;
  LatticeConfig cfg_;
  std::vector<NormalFormElement> elements_;
};

NormalFormGroup normal_form_group(Family f, const LatticeConfig& cfg);

/// Subgroup generated by the reflections across those polygon edges whose
/// arc contains the point.
Subgroup stabilizer(const ReflectionGroup& group, const Vector4& point,
                    const GeodesicPolygon& polygon, double eps = kEpsilon);

/// True iff g maps the sampled point set of every edge onto the sampled point
/// set of some edge.
bool is_polygon_symmetry(const Matrix4& g, const GeodesicPolygon& polygon, double eps = kEpsilon);

/// All elements preserving the polygon as a point set.
Subgroup polygon_symmetry_subgroup(const ReflectionGroup& group, const GeodesicPolygon& polygon);

enum class MinusIdentityStatus { Absent, PresentEven, PresentOdd, PresentBothParities };

std::string_view to_string(MinusIdentityStatus s);

MinusIdentityStatus minus_identity_status(const ReflectionGroup& group);

}  // namespace lawson
