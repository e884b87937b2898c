#include "lawson/closed_forms.hpp"

#include <algorithm>

namespace lawson::closed_form {

namespace {

bool both_even(const LatticeConfig& cfg) { return cfg.m % 2 == 0 && cfg.k % 2 == 0; }

std::int64_t defect(const LatticeConfig& cfg) {
  return 1 - static_cast<std::int64_t>(cfg.m - 1) * (cfg.k - 1);
}

}  // namespace

std::int64_t group_order(Family f, const LatticeConfig& cfg) {
  const std::int64_t base = 2 * static_cast<std::int64_t>(cfg.m) * cfg.k;
  return (f == Family::Eta && cfg.k % 2 == 1) ? 2 * base : base;
}

std::int64_t chi_surface(Family f, const LatticeConfig& cfg) {
  if (f == Family::Eta && cfg.k % 2 == 0) return defect(cfg);
  return 2 * defect(cfg);
}

bool surface_orientable(Family f, const LatticeConfig& cfg) {
  return f == Family::Xi || cfg.k % 2 == 1;
}

MinusIdentityStatus minus_identity(Family f, const LatticeConfig& cfg) {
  if (f == Family::Xi) return both_even(cfg) ? MinusIdentityStatus::PresentEven : MinusIdentityStatus::Absent;
  if (cfg.m % 2 == 1) return MinusIdentityStatus::Absent;
  return cfg.k % 2 == 0 ? MinusIdentityStatus::PresentBothParities : MinusIdentityStatus::PresentOdd;
}

std::int64_t chi_bipolar(Family, const LatticeConfig& cfg) {
  return both_even(cfg) ? defect(cfg) : 2 * defect(cfg);
}

std::int64_t area_prefactor(const LatticeConfig& cfg) { return both_even(cfg) ? 2 : 4; }

Rational area_lower(Family, const LatticeConfig& cfg) {
  return Rational(area_prefactor(cfg) * std::max(cfg.m, cfg.k));
}

Rational area_upper(Family f, const LatticeConfig& cfg) {
  const std::int64_t m = cfg.m;
  const std::int64_t k = cfg.k;
  const std::int64_t inner = f == Family::Xi ? m * k + k - m : 3 * m * k - 3 * k - m;
  return Rational(area_prefactor(cfg) * inner);
}

Rational surface_area_bound(Family f, const LatticeConfig& cfg) {
  if (f == Family::Xi) return Rational(4 * static_cast<std::int64_t>(cfg.k));
  const std::int64_t base = static_cast<std::int64_t>(cfg.m - 1) * cfg.k;
  return Rational(cfg.k % 2 == 0 ? 2 * base : 4 * base);
}

}  // namespace lawson::closed_form
