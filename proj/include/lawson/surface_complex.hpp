#pragma once

// The quotient surface (G x polygon)/~ as an abstract polygonal complex.
//
// Every face is a copy of the same n-gon. Side i of a face is glued to side i
// of its neighbour across that side, and a vertex class is the orbit of a
// face corner under the two side moves meeting at that corner. The same
// representation serves for S, its double cover and their quotients.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lawson/reflection_group.hpp"
#include "lawson/spherical_lattice.hpp"

namespace lawson {

using Rational = boost::rational<std::int64_t>;

/// A face side (side index) or face corner (corner index; corner c sits
/// between sides c-1 and c).
struct FaceSlot {
  std::size_t face = 0;
  std::size_t slot = 0;

  friend auto operator<=>(const FaceSlot&, const FaceSlot&) = default;
};

struct SurfaceComplex {
  std::size_t sides = 0;
  std::vector<int> corner_denominators;

  /// neighbour[face * sides + i] is the face glued across side i.
  std::vector<std::size_t> neighbour;
  std::vector<std::string> face_labels;
  /// Group element and sheet (0 or 1) of each face's representative.
  std::vector<std::size_t> face_element;
  std::vector<int> face_sheet;

  std::vector<std::pair<FaceSlot, FaceSlot>> edges;
  std::vector<std::vector<FaceSlot>> vertex_classes;
  /// vertex_of[face * sides + c] is the class of corner c of face.
  std::vector<std::size_t> vertex_of;

  /// From two-colouring the face adjacency graph.
  bool orientable = false;
  /// Orientation colour per face when orientable.
  std::optional<std::vector<int>> parity_map;

  std::size_t face_count() const { return face_labels.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t vertex_count() const { return vertex_classes.size(); }
  std::size_t neighbour_of(std::size_t face, std::size_t side) const {
    return neighbour[face * sides + side];
  }
  std::int64_t euler_characteristic() const;
};

/// Builds edges, vertex classes and the colouring from a gluing table.
/// Throws NonManifoldGluing when a side is glued to itself, the gluing is not
/// an involution, or a vertex class at a pi/n corner does not hold 2n corners.
SurfaceComplex complex_from_gluing(std::size_t sides, std::vector<int> corner_denominators,
                                   std::vector<std::size_t> neighbour,
                                   std::vector<std::string> labels,
                                   std::vector<std::size_t> face_element,
                                   std::vector<int> face_sheet);

/// Faces are group elements; side i of g is glued to side i of g * r_i.
/// Throws Validation if the polygon has nontrivial symmetry in the group.
SurfaceComplex build_complex(const ReflectionGroup& group, const GeodesicPolygon& polygon);

/// No element of the group carries both word parities.
bool orientability_by_parity(const ReflectionGroup& group);

/// Faces (s, g) with side i of (s, g) glued to side i of (s+1, g * r_i).
struct DoubleCoverComplex {
  SurfaceComplex cover;
  /// Deck involution (s, g) -> (s+1, g) on faces.
  std::vector<std::size_t> deck;
};

/// Throws AlreadyOrientable when the base is orientable, ActionNotFree if the
/// deck map fixes a cell.
DoubleCoverComplex double_cover(const SurfaceComplex& base);

/// Quotient by a face involution compatible with the gluing. Throws
/// ActionNotFree when it fixes a face, edge or vertex class.
SurfaceComplex quotient_by_involution(const SurfaceComplex& complex,
                                      const std::vector<std::size_t>& face_map);

/// Face map induced by g -> -g, using each face's group element.
std::vector<std::size_t> minus_identity_face_map(const SurfaceComplex& complex,
                                                 const ReflectionGroup& group);

/// Quotient by -1. Throws ActionNotFree if -1 is not in the group or the
/// action is not free.
SurfaceComplex quotient_by_minus_identity(const SurfaceComplex& complex,
                                          const ReflectionGroup& group);

/// |G| / |G^Gamma| * (1 - sum (n_i - 1) / (2 n_i)), exactly. Throws
/// NonIntegerChi if the result is not an integer.
Rational euler_characteristic_formula(const std::vector<int>& angle_denominators,
                                      std::size_t group_order, std::size_t sym_order);

/// Text export:
///   lawson-complex 1
///   faces F          then F lines  "f <id> <label>"
///   edges E          then E lines  "e <face>:<side> <face>:<side>"
///   vertices V       then V lines  "v <face>:<corner> ..."
void export_complex(const SurfaceComplex& complex, std::ostream& os);

}  // namespace lawson
