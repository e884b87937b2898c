#include "lawson/surface_complex.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "lawson/error.hpp"

namespace lawson {

std::int64_t SurfaceComplex::euler_characteristic() const {
  return static_cast<std::int64_t>(vertex_count()) - static_cast<std::int64_t>(edge_count()) +
         static_cast<std::int64_t>(face_count());
}

SurfaceComplex complex_from_gluing(std::size_t sides, std::vector<int> corner_denominators,
                                   std::vector<std::size_t> neighbour,
                                   std::vector<std::string> labels,
                                   std::vector<std::size_t> face_element,
                                   std::vector<int> face_sheet) {
  SurfaceComplex c;
  c.sides = sides;
  c.corner_denominators = std::move(corner_denominators);
  c.neighbour = std::move(neighbour);
  c.face_labels = std::move(labels);
  c.face_element = std::move(face_element);
  c.face_sheet = std::move(face_sheet);
  const std::size_t faces = c.face_labels.size();
  if (c.neighbour.size() != faces * sides || c.corner_denominators.size() != sides) {
    throw Error(ErrorCode::Validation, "gluing table has the wrong shape");
  }

  for (std::size_t f = 0; f < faces; ++f) {
    for (std::size_t i = 0; i < sides; ++i) {
      const std::size_t g = c.neighbour_of(f, i);
      if (g >= faces || g == f || c.neighbour_of(g, i) != f) {
        throw Error(ErrorCode::NonManifoldGluing,
                    "side " + std::to_string(i) + " of face " + std::to_string(f) +
                        " does not pair with exactly one other side");
      }
      if (f < g) c.edges.push_back({{f, i}, {g, i}});
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  c.vertex_of.assign(faces * sides, kUnset);
  for (std::size_t f = 0; f < faces; ++f) {
    for (std::size_t corner = 0; corner < sides; ++corner) {
      if (c.vertex_of[f * sides + corner] != kUnset) continue;
      const std::size_t id = c.vertex_classes.size();
      const std::size_t before = (corner + sides - 1) % sides;
      std::vector<FaceSlot> members;
      std::deque<std::size_t> queue{f};
      c.vertex_of[f * sides + corner] = id;
      while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        members.push_back({x, corner});
        for (std::size_t side : {before, corner}) {
          const std::size_t y = c.neighbour_of(x, side);
          if (c.vertex_of[y * sides + corner] == kUnset) {
            c.vertex_of[y * sides + corner] = id;
            queue.push_back(y);
          }
        }
      }
      const auto expected = static_cast<std::size_t>(2 * c.corner_denominators[corner]);
      if (members.size() != expected) {
        throw Error(ErrorCode::NonManifoldGluing,
                    "vertex class at corner " + std::to_string(corner) + " has " +
                        std::to_string(members.size()) + " corners, expected " +
                        std::to_string(expected));
      }
      std::sort(members.begin(), members.end());
      c.vertex_classes.push_back(std::move(members));
    }
  }

  // Adjacent faces carry opposite orientations of the reference polygon.
  std::vector<int> colour(faces, -1);
  bool ok = true;
  for (std::size_t start = 0; start < faces && ok; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && ok) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < sides; ++i) {
        const std::size_t y = c.neighbour_of(x, i);
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          ok = false;
          break;
        }
      }
    }
  }
  c.orientable = ok;
  if (ok) c.parity_map = std::move(colour);
  return c;
}

SurfaceComplex build_complex(const ReflectionGroup& group, const GeodesicPolygon& polygon) {
  const std::size_t n = polygon.size();
  if (group.generator_count() != n) {
    throw Error(ErrorCode::Validation, "expected one generator per polygon side");
  }
  const Subgroup sym = polygon_symmetry_subgroup(group, polygon);
  if (sym.size() != 1) {
    throw Error(ErrorCode::Validation, "polygon has a nontrivial symmetry subgroup of order " +
                                           std::to_string(sym.size()));
  }
  const std::size_t faces = group.size();
  std::vector<std::size_t> neighbour(faces * n);
  std::vector<std::string> labels(faces);
  std::vector<std::size_t> element(faces);
  for (std::size_t g = 0; g < faces; ++g) {
    for (std::size_t i = 0; i < n; ++i) neighbour[g * n + i] = group.right_multiply(g, i);
    labels[g] = to_string(group.key(g));
    element[g] = g;
  }
  return complex_from_gluing(n, polygon.angle_denominators, std::move(neighbour), std::move(labels),
                             std::move(element), std::vector<int>(faces, 0));
}

bool orientability_by_parity(const ReflectionGroup& group) { return group.orientable_quotient(); }

DoubleCoverComplex double_cover(const SurfaceComplex& base) {
  if (base.orientable) {
    throw Error(ErrorCode::AlreadyOrientable, "double cover requested for an orientable complex");
  }
  const std::size_t faces = base.face_count();
  const std::size_t n = base.sides;
  std::vector<std::size_t> neighbour(2 * faces * n);
  std::vector<std::string> labels(2 * faces);
  std::vector<std::size_t> element(2 * faces);
  std::vector<int> sheet(2 * faces);
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t f = 0; f < faces; ++f) {
      const std::size_t id = s * faces + f;
      for (std::size_t i = 0; i < n; ++i) {
        neighbour[id * n + i] = (1 - s) * faces + base.neighbour_of(f, i);
      }
      labels[id] = "s" + std::to_string(s) + "|" + base.face_labels[f];
      element[id] = base.face_element[f];
      sheet[id] = static_cast<int>(s);
    }
  }
  DoubleCoverComplex dc;
  dc.cover = complex_from_gluing(n, base.corner_denominators, std::move(neighbour),
                                 std::move(labels), std::move(element), std::move(sheet));
  dc.deck.resize(2 * faces);
  for (std::size_t f = 0; f < 2 * faces; ++f) dc.deck[f] = (f + faces) % (2 * faces);

  for (std::size_t f = 0; f < 2 * faces; ++f) {
    for (std::size_t i = 0; i < n; ++i) {
      if (dc.deck[f] == dc.cover.neighbour_of(f, i) ||
          dc.cover.vertex_of[dc.deck[f] * n + i] == dc.cover.vertex_of[f * n + i]) {
        throw Error(ErrorCode::ActionNotFree, "deck involution fixes a cell");
      }
    }
  }
  return dc;
}

SurfaceComplex quotient_by_involution(const SurfaceComplex& complex,
                                      const std::vector<std::size_t>& face_map) {
  const std::size_t faces = complex.face_count();
  const std::size_t n = complex.sides;
  if (face_map.size() != faces) throw Error(ErrorCode::Validation, "face map has the wrong size");
  for (std::size_t f = 0; f < faces; ++f) {
    const std::size_t g = face_map[f];
    if (g >= faces || face_map[g] != f) {
      throw Error(ErrorCode::Validation, "face map is not an involution");
    }
    if (g == f) throw Error(ErrorCode::ActionNotFree, "involution fixes face " + std::to_string(f));
    for (std::size_t i = 0; i < n; ++i) {
      if (face_map[complex.neighbour_of(f, i)] != complex.neighbour_of(g, i)) {
        throw Error(ErrorCode::Validation, "face map does not respect the gluing");
      }
      if (complex.neighbour_of(f, i) == g) {
        throw Error(ErrorCode::ActionNotFree, "involution fixes an edge");
      }
      if (complex.vertex_of[f * n + i] == complex.vertex_of[g * n + i]) {
        throw Error(ErrorCode::ActionNotFree, "involution fixes a vertex class");
      }
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit(faces, kUnset);
  std::vector<std::size_t> reps;
  for (std::size_t f = 0; f < faces; ++f) {
    if (orbit[f] != kUnset) continue;
    orbit[f] = orbit[face_map[f]] = reps.size();
    reps.push_back(f);
  }
  std::vector<std::size_t> neighbour(reps.size() * n);
  std::vector<std::string> labels;
  std::vector<std::size_t> element;
  std::vector<int> sheet;
  for (std::size_t o = 0; o < reps.size(); ++o) {
    const std::size_t f = reps[o];
    for (std::size_t i = 0; i < n; ++i) neighbour[o * n + i] = orbit[complex.neighbour_of(f, i)];
    labels.push_back(complex.face_labels[f]);
    element.push_back(complex.face_element[f]);
    sheet.push_back(complex.face_sheet[f]);
  }
  return complex_from_gluing(n, complex.corner_denominators, std::move(neighbour),
                             std::move(labels), std::move(element), std::move(sheet));
}

std::vector<std::size_t> minus_identity_face_map(const SurfaceComplex& complex,
                                                 const ReflectionGroup& group) {
  const auto minus = group.index_of(-Matrix4::identity());
  if (!minus) throw Error(ErrorCode::ActionNotFree, "-1 is not a group element");
  // Faces are addressed by (sheet, element); -1 keeps the sheet.
  std::vector<std::size_t> lookup(2 * group.size(), static_cast<std::size_t>(-1));
  for (std::size_t f = 0; f < complex.face_count(); ++f) {
    lookup[static_cast<std::size_t>(complex.face_sheet[f]) * group.size() + complex.face_element[f]] = f;
  }
  std::vector<std::size_t> map(complex.face_count());
  for (std::size_t f = 0; f < complex.face_count(); ++f) {
    const std::size_t g = group.multiply(*minus, complex.face_element[f]);
    const std::size_t target =
        lookup[static_cast<std::size_t>(complex.face_sheet[f]) * group.size() + g];
    if (target == static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::Validation, "-1 maps a face outside the complex");
    }
    map[f] = target;
  }
  return map;
}

SurfaceComplex quotient_by_minus_identity(const SurfaceComplex& complex,
                                          const ReflectionGroup& group) {
  return quotient_by_involution(complex, minus_identity_face_map(complex, group));
}

Rational euler_characteristic_formula(const std::vector<int>& angle_denominators,
                                      std::size_t group_order, std::size_t sym_order) {
  if (sym_order == 0 || group_order % sym_order != 0) {
    throw Error(ErrorCode::Validation, "symmetry order must divide the group order");
  }
  Rational sum(0);
  for (int n : angle_denominators) {
    if (n < 2) throw Error(ErrorCode::Validation, "angle denominator below 2");
    sum += Rational(n - 1, 2 * n);
  }
  const Rational chi =
      Rational(static_cast<std::int64_t>(group_order / sym_order)) * (Rational(1) - sum);
  if (chi.denominator() != 1) {
    throw Error(ErrorCode::NonIntegerChi, "Euler characteristic evaluates to " +
                                              std::to_string(chi.numerator()) + "/" +
                                              std::to_string(chi.denominator()));
  }
  return chi;
}

void export_complex(const SurfaceComplex& complex, std::ostream& os) {
  os << "lawson-complex 1\n";
  os << "faces " << complex.face_count() << '\n';
  for (std::size_t f = 0; f < complex.face_count(); ++f) {
    os << "f " << f << ' ' << complex.face_labels[f] << '\n';
  }
  os << "edges " << complex.edge_count() << '\n';
  for (const auto& [a, b] : complex.edges) {
    os << "e " << a.face << ':' << a.slot << ' ' << b.face << ':' << b.slot << '\n';
  }
  os << "vertices " << complex.vertex_count() << '\n';
  for (const auto& cls : complex.vertex_classes) {
    os << 'v';
    for (const auto& x : cls) os << ' ' << x.face << ':' << x.slot;
    os << '\n';
  }
}

}  // namespace lawson
