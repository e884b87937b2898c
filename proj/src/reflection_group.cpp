#include "lawson/reflection_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lawson/error.hpp"
#include "lawson/kernels.hpp"

namespace lawson {

namespace {

constexpr double kPi = std::numbers::pi;

int mod(int a, int n) { return ((a % n) + n) % n; }

bool points_match(const std::vector<Vector4>& mapped, const std::vector<Vector4>& target, double eps) {
  if (mapped.size() != target.size()) return false;
  for (const auto& x : mapped) {
    const bool found = std::any_of(target.begin(), target.end(),
                                   [&](const Vector4& y) { return approx_equal(x, y, eps); });
    if (!found) return false;
  }
  return true;
}

}  // namespace

MatrixKey canonical_key(const Matrix4& m) {
  MatrixKey key{};
  for (std::size_t i = 0; i < 16; ++i) key[i] = std::llround(m.a[i] * 1e12);
  return key;
}

std::string to_string(const MatrixKey& key) {
  std::ostringstream os;
  for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
  return os.str();
}

std::size_t MatrixKeyHash::operator()(const MatrixKey& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const ParitySet& p) {
  if (p.mixed()) return "{even,odd}";
  if (p.even) return "{even}";
  if (p.odd) return "{odd}";
  return "{}";
}

ReflectionGroup ReflectionGroup::closure(const std::vector<Matrix4>& generators, std::size_t cap) {
  if (cap < 1) throw Error(ErrorCode::Validation, "closure cap must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Matrix4& g = generators[i];
    if (!is_orthogonal(g) || max_abs_diff(g * g, Matrix4::identity()) > kEpsilon) {
      throw Error(ErrorCode::NonInvolutiveGenerator,
                  "generator " + std::to_string(i) + " is not an orthogonal involution");
    }
  }

  // Discovery phase on an unsorted element list.
  ReflectionGroup raw;
  raw.generators_ = generators;
  std::vector<std::array<bool, 2>> seen;

  auto find_or_add = [&](const Matrix4& m) -> std::size_t {
    if (auto idx = raw.index_of(m)) return *idx;
    if (raw.elements_.size() >= cap) {
      throw Error(ErrorCode::CapExceeded,
                  "group closure exceeded " + std::to_string(cap) + " elements");
    }
    const std::size_t idx = raw.elements_.size();
    raw.elements_.push_back({m, {}});
    raw.keys_.push_back(canonical_key(m));
    raw.lookup_.emplace(raw.keys_.back(), idx);
    seen.push_back({false, false});
    return idx;
  };

  std::deque<std::pair<std::size_t, int>> queue;
  const std::size_t id = find_or_add(Matrix4::identity());
  seen[id][0] = true;
  queue.emplace_back(id, 0);
  while (!queue.empty()) {
    const auto [i, p] = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      const Matrix4 prod = raw.elements_[i].matrix * g;
      const std::size_t j = find_or_add(prod);
      if (!seen[j][1 - p]) {
        seen[j][1 - p] = true;
        queue.emplace_back(j, 1 - p);
      }
    }
  }

  // Deterministic order: ascending canonical key.
  std::vector<std::size_t> order(raw.elements_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return raw.keys_[a] < raw.keys_[b]; });

  ReflectionGroup group;
  group.generators_ = generators;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t src = order[pos];
    GroupElement e{raw.elements_[src].matrix, {}};
    e.parity.even = seen[src][0];
    e.parity.odd = seen[src][1];
    group.elements_.push_back(e);
    group.keys_.push_back(raw.keys_[src]);
    group.lookup_.emplace(raw.keys_[src], pos);
  }
  group.identity_ = *group.index_of(Matrix4::identity());
  for (const auto& g : generators) group.generator_index_.push_back(*group.index_of(g));
  group.right_table_.assign(generators.size(), std::vector<std::size_t>(group.size()));
  for (std::size_t gen = 0; gen < generators.size(); ++gen) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      group.right_table_[gen][i] = group.multiply(i, group.generator_index_[gen]);
    }
  }
  return group;
}

std::optional<std::size_t> ReflectionGroup::index_of(const Matrix4& m, double eps) const {
  if (auto it = lookup_.find(canonical_key(m)); it != lookup_.end()) return it->second;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (max_abs_diff(elements_[i].matrix, m) <= eps) return i;
  }
  return std::nullopt;
}

std::size_t ReflectionGroup::multiply(std::size_t i, std::size_t j) const {
  const auto idx = index_of(elements_[i].matrix * elements_[j].matrix);
  if (!idx) throw Error(ErrorCode::Validation, "product left the group");
  return *idx;
}

bool ReflectionGroup::orientable_quotient() const {
  return std::none_of(elements_.begin(), elements_.end(),
                      [](const GroupElement& e) { return e.parity.mixed(); });
}

Subgroup generated_subgroup(const ReflectionGroup& group, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(group.size(), false);
  std::deque<std::size_t> queue{group.identity_index()};
  in[group.identity_index()] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (auto g : gens) {
      const std::size_t j = group.multiply(i, g);
      if (!in[j]) {
        in[j] = true;
        queue.push_back(j);
      }
    }
  }
  Subgroup out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<Matrix4> family_generators(Family f, const LatticeConfig& cfg) {
  const GeodesicPolygon polygon = family_polygon(f, cfg);
  std::vector<Matrix4> gens;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    gens.push_back(geodesic_reflection(polygon.edge_circle(i)));
  }
  return gens;
}

ReflectionGroup family_group(Family f, const LatticeConfig& cfg, std::size_t cap) {
  return ReflectionGroup::closure(family_generators(f, cfg), cap);
}

std::string_view to_string(NormalFormKind k) {
  switch (k) {
    case NormalFormKind::Xi: return "xi";
    case NormalFormKind::EtaEvenK: return "eta_even_k";
    case NormalFormKind::EtaOddK: return "eta_odd_k";
  }
  return "unknown";
}

NormalFormKind normal_form_kind(Family f, const LatticeConfig& cfg) {
  if (f == Family::Xi) return NormalFormKind::Xi;
  return cfg.k % 2 == 0 ? NormalFormKind::EtaEvenK : NormalFormKind::EtaOddK;
}

NormalFormGroup::NormalFormGroup(NormalFormKind kind, const LatticeConfig& cfg)
    : kind_(kind), cfg_(cfg) {
  const int outer = kind == NormalFormKind::EtaOddK ? 2 : 1;
  for (int g = 0; g < outer; ++g)
    for (int a = 0; a < cfg.k; ++a)
      for (int b = 0; b < cfg.m; ++b)
        for (int c = 0; c < 2; ++c) {
          if (kind == NormalFormKind::EtaOddK) {
            elements_.push_back({kind, a, b, g, c});
          } else {
            elements_.push_back({kind, a, b, c, 0});
          }
        }
}

NormalFormElement NormalFormGroup::reduce(NormalFormElement e) const {
  e.kind = kind_;
  e.alpha = mod(e.alpha, cfg_.k);
  e.beta = mod(e.beta, cfg_.m);
  e.gamma = mod(e.gamma, 2);
  e.delta = kind_ == NormalFormKind::EtaOddK ? mod(e.delta, 2) : 0;
  return e;
}

NormalFormElement NormalFormGroup::identity() const { return {kind_, 0, 0, 0, 0}; }

NormalFormElement NormalFormGroup::multiply(const NormalFormElement& x,
                                            const NormalFormElement& y) const {
  // r00 R r00 = R^-1 for both rotations; rQ is central.
  if (kind_ == NormalFormKind::EtaOddK) {
    const int s = x.delta ? -1 : 1;
    return reduce({kind_, x.alpha + s * y.alpha, x.beta + s * y.beta, x.gamma + y.gamma,
                   x.delta + y.delta});
  }
  const int s = x.gamma ? -1 : 1;
  return reduce({kind_, x.alpha + s * y.alpha, x.beta + s * y.beta, x.gamma + y.gamma, 0});
}

NormalFormElement NormalFormGroup::inverse(const NormalFormElement& x) const {
  const bool flip = kind_ == NormalFormKind::EtaOddK ? x.delta != 0 : x.gamma != 0;
  if (flip) return reduce(x);
  return reduce({kind_, -x.alpha, -x.beta, x.gamma, x.delta});
}

Matrix4 NormalFormGroup::matrix(const NormalFormElement& e) const {
  const Matrix4 rot = rotation12(2.0 * kPi * e.alpha / cfg_.k) * rotation34(2.0 * kPi * e.beta / cfg_.m);
  if (kind_ == NormalFormKind::EtaOddK) {
    const Matrix4 head = e.gamma ? q_circle_reflection() * rot : rot;
    return e.delta ? head * base_reflection() : head;
  }
  return e.gamma ? rot * base_reflection() : rot;
}

int NormalFormGroup::parity(const NormalFormElement& e) const {
  switch (kind_) {
    case NormalFormKind::Xi: return e.gamma & 1;
    case NormalFormKind::EtaOddK: return (e.gamma + e.delta) & 1;
    case NormalFormKind::EtaEvenK: break;
  }
  throw Error(ErrorCode::ParityUndefined,
              "eta with even k: every element is realised by words of both parities");
}

std::vector<NormalFormElement> NormalFormGroup::generators(Family f) const {
  if (f == Family::Xi) {
    // r00, r10, r11, r01
    return {reduce({kind_, 0, 0, 1, 0}), reduce({kind_, 1, 0, 1, 0}),
            reduce({kind_, 1, 1, 1, 0}), reduce({kind_, 0, 1, 1, 0})};
  }
  if (kind_ == NormalFormKind::EtaEvenK) {
    // r10, r11, r01, rQ = R12^(k/2)
    return {reduce({kind_, 1, 0, 1, 0}), reduce({kind_, 1, 1, 1, 0}),
            reduce({kind_, 0, 1, 1, 0}), reduce({kind_, cfg_.k / 2, 0, 0, 0})};
  }
  return {reduce({kind_, 1, 0, 0, 1}), reduce({kind_, 1, 1, 0, 1}), reduce({kind_, 0, 1, 0, 1}),
          reduce({kind_, 0, 0, 1, 0})};
}

std::vector<MatrixKey> NormalFormGroup::matrix_keys() const {
  std::vector<MatrixKey> keys;
  keys.reserve(elements_.size());
  for (const auto& e : elements_) keys.push_back(canonical_key(matrix(e)));
  std::sort(keys.begin(), keys.end());
  return keys;
}

NormalFormGroup normal_form_group(Family f, const LatticeConfig& cfg) {
  return NormalFormGroup(normal_form_kind(f, cfg), cfg);
}

Subgroup stabilizer(const ReflectionGroup& group, const Vector4& point,
                    const GeodesicPolygon& polygon, double eps) {
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (!polygon.edge_contains(i, point, eps)) continue;
    const auto idx = group.index_of(geodesic_reflection(polygon.edge_circle(i)));
    if (!idx) throw Error(ErrorCode::Validation, "circle reflection is not a group element");
    gens.push_back(*idx);
  }
  return generated_subgroup(group, gens);
}

bool is_polygon_symmetry(const Matrix4& g, const GeodesicPolygon& polygon, double eps) {
  const std::size_t n = polygon.size();
  std::vector<std::vector<Vector4>> samples(n);
  for (std::size_t i = 0; i < n; ++i) samples[i] = polygon.edge_samples(i);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector4> mapped;
    for (const auto& x : samples[i]) mapped.push_back(g * x);
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) found = points_match(mapped, samples[j], eps);
    if (!found) return false;
  }
  return true;
}

Subgroup polygon_symmetry_subgroup(const ReflectionGroup& group, const GeodesicPolygon& polygon) {
  return polygon_symmetry_scan(group, polygon, Execution::Parallel);
}

std::string_view to_string(MinusIdentityStatus s) {
  switch (s) {
    case MinusIdentityStatus::Absent: return "absent";
    case MinusIdentityStatus::PresentEven: return "present_even";
    case MinusIdentityStatus::PresentOdd: return "present_odd";
    case MinusIdentityStatus::PresentBothParities: return "present_both_parities";
  }
  return "unknown";
}

MinusIdentityStatus minus_identity_status(const ReflectionGroup& group) {
  const auto idx = group.index_of(-Matrix4::identity());
  if (!idx) return MinusIdentityStatus::Absent;
  const ParitySet& p = group.element(*idx).parity;
  if (p.mixed()) return MinusIdentityStatus::PresentBothParities;
  return p.even ? MinusIdentityStatus::PresentEven : MinusIdentityStatus::PresentOdd;
}

}  // namespace lawson
