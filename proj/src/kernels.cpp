#include "lawson/kernels.hpp"

#include <cstdint>

namespace lawson {

namespace {

bool coincides(const Matrix4& g, int sign, const Vector4& base, const Vector4& normal,
               const Bivector6& target, double eps) {
  const Bivector6 image = static_cast<double>(sign) * wedge(g * base, g * normal);
  return approx_equal(image, target, eps);
}

}  // namespace

std::vector<std::size_t> coincidence_scan(std::span<const Matrix4> maps, std::span<const int> signs,
                                          const Vector4& base, const Vector4& normal,
                                          const Bivector6& target, Execution exec, double eps) {
  const std::size_t n = maps.size();
  std::vector<std::uint8_t> hit(n, 0);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) hit[i] = coincides(maps[i], signs[i], base, normal, target, eps);
  } else {
    const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < sn; ++i) {
      const auto u = static_cast<std::size_t>(i);
      hit[u] = coincides(maps[u], signs[u], base, normal, target, eps);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

Subgroup polygon_symmetry_scan(const ReflectionGroup& group, const GeodesicPolygon& polygon,
                               Execution exec, double eps) {
  const std::size_t n = group.size();
  std::vector<std::uint8_t> hit(n, 0);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) hit[i] = is_polygon_symmetry(group.element(i).matrix, polygon, eps);
  } else {
    const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < sn; ++i) {
      const auto u = static_cast<std::size_t>(i);
      hit[u] = is_polygon_symmetry(group.element(u).matrix, polygon, eps);
    }
  }
  Subgroup out;
  for (std::size_t i = 0; i < n; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& task, Execution exec) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < sn; ++i) task(static_cast<std::size_t>(i));
}

}  // namespace lawson
