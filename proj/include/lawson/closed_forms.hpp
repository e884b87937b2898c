#pragma once

// Closed-form values from the classification theorems, used as oracles by
// the verification harness.

#include <cstdint>

#include "lawson/reflection_group.hpp"
#include "lawson/spherical_lattice.hpp"
#include "lawson/surface_complex.hpp"

namespace lawson::closed_form {

/// 2mk, or 4mk for eta with k odd.
std::int64_t group_order(Family f, const LatticeConfig& cfg);

std::int64_t chi_surface(Family f, const LatticeConfig& cfg);
bool surface_orientable(Family f, const LatticeConfig& cfg);

/// xi: even when m and k are both even. eta, k even: present with both
/// parities when m is even. eta, k odd: odd when m is even.
MinusIdentityStatus minus_identity(Family f, const LatticeConfig& cfg);

/// 1-(m-1)(k-1) when m and k are both even, else 2(1-(m-1)(k-1)).
std::int64_t chi_bipolar(Family f, const LatticeConfig& cfg);

/// 2 when m and k are both even, else 4.
std::int64_t area_prefactor(const LatticeConfig& cfg);

/// Area bounds as multiples of pi.
Rational area_lower(Family f, const LatticeConfig& cfg);
Rational area_upper(Family f, const LatticeConfig& cfg);

/// Strict upper bound on the area of the minimal surface itself, over pi:
/// 4k for xi, 2(m-1)k for eta with k even, 4(m-1)k for eta with k odd.
Rational surface_area_bound(Family f, const LatticeConfig& cfg);

}  // namespace lawson::closed_form
