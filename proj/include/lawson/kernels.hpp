#pragma once

// Hot loops with a serial reference and an OpenMP version. Both return
// identical, deterministically ordered results.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lawson/exterior_algebra.hpp"
#include "lawson/reflection_group.hpp"
#include "lawson/spherical_lattice.hpp"

namespace lawson {

enum class Execution { Serial, Parallel };

/// Indices i with signs[i] * (maps[i] base) ^ (maps[i] normal) == target.
std::vector<std::size_t> coincidence_scan(std::span<const Matrix4> maps, std::span<const int> signs,
                                          const Vector4& base, const Vector4& normal,
                                          const Bivector6& target, Execution exec,
                                          double eps = kEpsilon);

/// Elements of the group preserving the polygon point set, ascending.
Subgroup polygon_symmetry_scan(const ReflectionGroup& group, const GeodesicPolygon& polygon,
                               Execution exec, double eps = kEpsilon);

/// Calls task(i) for i in [0, n). The parallel version uses dynamic
/// scheduling; tasks must only write to their own slot.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& task, Execution exec);

}  // namespace lawson
