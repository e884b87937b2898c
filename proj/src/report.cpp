#include "lawson/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lawson/closed_forms.hpp"

namespace lawson {

namespace {

using Json = nlohmann::ordered_json;

std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool in_plane12(const Vector4& v) { return std::abs(v[2]) <= kEpsilon && std::abs(v[3]) <= kEpsilon; }

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Json rational_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult skipped(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Skipped, std::move(detail)};
}

std::vector<PairRelation> pairwise(const std::vector<VertexPlane>& planes, double eps) {
  std::vector<PairRelation> out;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j) out.push_back(relate(planes[i], planes[j], eps));
  return out;
}

// Every rank decision that feeds the report, at one tolerance.
struct Decisions {
  std::vector<std::vector<PairRelation>> vertex;
  DomainKind kind = DomainKind::S;
  std::int64_t chi = 0;
  std::vector<std::vector<PairRelation>> domain;

  friend bool operator==(const Decisions&, const Decisions&) = default;
};

Decisions decisions_at(const SurfaceModel& model, const std::vector<std::vector<VertexPlane>>& planes,
                       double eps) {
  Decisions d;
  for (const auto& p : planes) d.vertex.push_back(pairwise(p, eps));
  const DomainDecision dd = fundamental_domain_decision(model, eps);
  d.kind = dd.kind;
  d.chi = dd.chi;
  for (const auto& p : dd.points) d.domain.push_back(p.relations);
  return d;
}

std::string join_checks(const std::vector<CheckResult>& checks) {
  std::string s;
  for (const auto& c : checks) {
    if (!s.empty()) s += ';';
    s += c.name + "=" + std::string(to_string(c.status));
  }
  return s;
}

std::string multiplicity_string(const BipolarReport& r) {
  std::string s;
  for (const auto& v : r.vertices) {
    if (!s.empty()) s += ';';
    s += v.label + "=" + std::to_string(v.multiplicity);
  }
  return s;
}

std::string vertex_details_string(const BipolarReport& r) {
  std::string s;
  for (const auto& v : r.vertices) {
    if (!s.empty()) s += ';';
    s += v.label + ":mult=" + std::to_string(v.multiplicity) + ",stab=" + std::to_string(v.stabilizer_order) +
         ",orbit=" + std::to_string(v.orbit_prediction) +
         ",alg=" + (v.algebraic_prediction ? std::to_string(*v.algebraic_prediction) : std::string("-")) +
         ",right=" + (v.right_angle ? "1" : "0") + ",planes=" + std::to_string(v.planes) +
         ",e=" + std::to_string(v.pairs.equal) + ",p=" + std::to_string(v.pairs.partial) +
         ",t=" + std::to_string(v.pairs.transversal) + ",i=" + std::to_string(v.pairs.indeterminate);
  }
  return s;
}

std::string verification_string(const BipolarReport& r) {
  if (r.checks.empty()) return "not_run";
  return r.verified() ? "pass" : "fail";
}

Json pairs_json(const PairCounts& p) {
  return Json{{"equal", p.equal},
              {"partial", p.partial},
              {"transversal", p.transversal},
              {"indeterminate", p.indeterminate}};
}

Json report_json(const BipolarReport& r) {
  Json j;
  j["family"] = std::string(to_string(r.family));
  j["m"] = r.m;
  j["k"] = r.k;
  j["excluded"] = r.excluded;
  j["group_order"] = r.group_order;
  j["chi_S"] = r.chi_S;
  j["orientable_S"] = r.orientable_S;
  j["minus_identity"] = std::string(to_string(r.minus_identity));
  j["fundamental_domain"] = std::string(to_string(r.fundamental_domain));
  j["chi_bipolar"] = r.chi_bipolar;
  j["orientable_bipolar"] = r.orientable_bipolar;
  Json verts = Json::array();
  for (const auto& v : r.vertices) {
    Json x;
    x["label"] = v.label;
    x["multiplicity"] = v.multiplicity;
    x["stabilizer_order"] = v.stabilizer_order;
    x["orbit_prediction"] = v.orbit_prediction;
    x["algebraic_prediction"] = v.algebraic_prediction ? Json(*v.algebraic_prediction) : Json(nullptr);
    x["right_angle"] = v.right_angle;
    x["planes"] = v.planes;
    x["pairs"] = pairs_json(v.pairs);
    verts.push_back(x);
  }
  j["vertices"] = verts;
  j["image_points"] = r.image_points;
  j["max_multiplicity"] = r.max_multiplicity;
  j["domain_pairs"] = pairs_json(r.domain_pairs);
  j["area_lower_over_pi"] = rational_json(r.area.lower);
  j["area_upper_over_pi"] = rational_json(r.area.upper);
  j["area_lower_rederived"] = r.area.lower_rederived ? rational_json(*r.area.lower_rederived) : Json(nullptr);
  j["area_upper_rederived"] = r.area.upper_rederived ? rational_json(*r.area.upper_rederived) : Json(nullptr);
  j["embedded"] = std::string(to_string(r.embedded));
  j["verification"] = verification_string(r);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_row(const BatchRow& row) {
  std::vector<std::string> v{std::string(to_string(row.family)), std::to_string(row.m), std::to_string(row.k)};
  if (!row.report) {
    v.push_back("failed");
    v.push_back(row.error);
    v.resize(csv_columns().size());
    return v;
  }
  const BipolarReport& r = *row.report;
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  auto opt = [](const std::optional<Rational>& x) { return x ? rational_string(*x) : std::string(); };
  const std::vector<std::string> rest{
      "ok",
      "",
      b(r.excluded),
      std::to_string(r.group_order),
      std::to_string(r.chi_S),
      b(r.orientable_S),
      std::string(to_string(r.minus_identity)),
      std::string(to_string(r.fundamental_domain)),
      std::to_string(r.chi_bipolar),
      b(r.orientable_bipolar),
      multiplicity_string(r),
      vertex_details_string(r),
      std::to_string(r.image_points),
      std::to_string(r.max_multiplicity),
      std::to_string(r.domain_pairs.equal),
      std::to_string(r.domain_pairs.partial),
      std::to_string(r.domain_pairs.transversal),
      std::to_string(r.domain_pairs.indeterminate),
      std::to_string(r.area.lower.numerator()),
      std::to_string(r.area.lower.denominator()),
      std::to_string(r.area.upper.numerator()),
      std::to_string(r.area.upper.denominator()),
      opt(r.area.lower_rederived),
      opt(r.area.upper_rederived),
      std::string(to_string(r.embedded)),
      verification_string(r),
      join_checks(r.checks)};
  v.insert(v.end(), rest.begin(), rest.end());
  return v;
}

void write_csv(std::ostream& os, const std::vector<BatchRow>& rows) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& row : rows) {
    const auto cells = csv_row(row);
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
    os << '\n';
  }
}

std::string md_rational(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator()) + "π" : rational_string(r) + "·π";
}

}  // namespace

void PairCounts::add(PairRelation r) {
  switch (r) {
    case PairRelation::Equal: ++equal; break;
    case PairRelation::Partial: ++partial; break;
    case PairRelation::Transversal: ++transversal; break;
    case PairRelation::Indeterminate: ++indeterminate; break;
  }
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool BipolarReport::verified() const {
  return !checks.empty() && std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::Fail;
  });
}

BipolarReport run_single(Family f, int m, int k, const RunFlags& flags) {
  const LatticeConfig cfg = LatticeConfig::make(m, k);
  if (cfg.excluded() && !flags.allow_excluded) {
    throw Error(ErrorCode::ExcludedCase, "(2,2) is outside the classification; pass --allow-excluded");
  }
  const SurfaceModel model = build_model(f, cfg, flags.cap);
  if (flags.export_complex_path) {
    std::ofstream out(*flags.export_complex_path);
    if (!out) throw Error(ErrorCode::Validation, "cannot write " + *flags.export_complex_path);
    export_complex(model.surface, out);
  }

  BipolarReport r;
  r.family = f;
  r.m = m;
  r.k = k;
  r.excluded = cfg.excluded();
  r.group_order = model.group.size();
  r.chi_S = model.surface.euler_characteristic();
  r.orientable_S = model.surface.orientable;
  r.minus_identity = model.minus_identity;

  std::vector<MultiplicityResult> mults;
  std::vector<std::vector<VertexPlane>> planes;
  for (std::size_t c = 0; c < model.polygon.size(); ++c) {
    mults.push_back(bipolar_vertex_multiplicity(model, c));
    planes.push_back(tangent_planes_at_vertex(model, c));
    VertexSummary v;
    v.label = mults.back().label;
    v.multiplicity = mults.back().count;
    v.stabilizer_order = mults.back().stabilizer_order;
    v.orbit_prediction = mults.back().orbit_prediction;
    v.algebraic_prediction = mults.back().algebraic_prediction;
    v.right_angle = model.polygon.angle_denominators[c] == 2;
    v.planes = planes.back().size();
    for (auto rel : pairwise(planes.back(), kEpsilon)) v.pairs.add(rel);
    r.vertices.push_back(v);
  }

  const DomainDecision dd = fundamental_domain_decision(model);
  r.fundamental_domain = dd.kind;
  r.chi_bipolar = dd.chi;
  r.orientable_bipolar = bipolar_orientability(dd);
  r.image_points = dd.points.size();
  r.max_multiplicity = dd.max_multiplicity;
  for (const auto& p : dd.points)
    for (auto rel : p.relations) r.domain_pairs.add(rel);
  r.area = area_bounds(model, dd, flags.verify);
  r.embedded = embeddedness_verdict(dd);

  if (!flags.verify) return r;

  auto& checks = r.checks;
  const auto expected_order = static_cast<std::size_t>(closed_form::group_order(f, cfg));
  checks.push_back(check("group_order",
                         model.group.size() == expected_order && model.normal_forms.size() == expected_order,
                         "closure " + std::to_string(model.group.size()) + ", normal forms " +
                             std::to_string(model.normal_forms.size()) + ", expected " +
                             std::to_string(expected_order)));

  {
    const std::vector<std::pair<int, int>> ij = f == Family::Xi
        ? std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}
        : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {0, 1}};
    double worst = 0.0;
    for (std::size_t i = 0; i < ij.size(); ++i) {
      worst = std::max(worst, max_abs_diff(model.group.generator(i),
                                           lattice_reflection(cfg, ij[i].first, ij[i].second)));
    }
    if (f == Family::Eta) worst = std::max(worst, max_abs_diff(model.group.generator(3), q_circle_reflection()));
    checks.push_back(check("generator_reflections", worst <= kEpsilon,
                           "max deviation from lattice formula " + format_double(worst)));
  }

  {
    const Subgroup sym = polygon_symmetry_scan(model.group, model.polygon, Execution::Serial);
    checks.push_back(check("polygon_symmetry_trivial", sym.size() == 1,
                           "symmetry subgroup order " + std::to_string(sym.size())));
  }

  {
    const std::vector<int> dens = model.polygon.angle_denominators;
    const Rational formula = euler_characteristic_formula(dens, model.group.size(), 1);
    const std::int64_t closed = closed_form::chi_surface(f, cfg);
    checks.push_back(check("euler_characteristic",
                           formula == Rational(r.chi_S) && r.chi_S == closed,
                           "V-E+F " + std::to_string(r.chi_S) + ", formula " + rational_string(formula) +
                               ", closed form " + std::to_string(closed)));
  }

  {
    const bool by_parity = orientability_by_parity(model.group);
    const bool closed = closed_form::surface_orientable(f, cfg);
    bool colours_match = true;
    if (model.surface.parity_map) {
      // Colouring and parity must agree up to a global flip.
      const auto& colour = *model.surface.parity_map;
      const auto& faces = model.surface.face_element;
      const int flip = colour[0] ^ (model.group.element(faces[0]).parity.odd ? 1 : 0);
      for (std::size_t f = 0; f < faces.size(); ++f) {
        colours_match = colours_match && ((colour[f] ^ flip) == (model.group.element(faces[f]).parity.odd ? 1 : 0));
      }
    }
    checks.push_back(check("orientability",
                           r.orientable_S == by_parity && by_parity == closed && colours_match,
                           std::string("colouring ") + (r.orientable_S ? "orientable" : "non-orientable") +
                               ", parity " + (by_parity ? "orientable" : "non-orientable")));
  }

  if (model.cover) {
    const SurfaceComplex& c = model.cover->cover;
    checks.push_back(check("double_cover", c.euler_characteristic() == 2 * r.chi_S && c.orientable,
                           "chi " + std::to_string(c.euler_characteristic())));
  } else {
    checks.push_back(skipped("double_cover", "surface is orientable"));
  }

  {
    const MinusIdentityStatus expected = closed_form::minus_identity(f, cfg);
    checks.push_back(check("minus_identity", r.minus_identity == expected,
                           std::string(to_string(r.minus_identity)) + ", expected " +
                               std::string(to_string(expected))));
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t c = 0; c < model.polygon.size(); ++c) {
      if (!is_pure_vertex(model, c)) continue;
      const bool p_type = in_plane12(model.polygon.vertex(c));
      const std::size_t expected = static_cast<std::size_t>(p_type ? k : m);
      const auto& mr = mults[c];
      ok = ok && mr.count == expected && mr.algebraic_prediction == expected;
      if (!detail.empty()) detail += ' ';
      detail += mr.label + "=" + std::to_string(mr.count);
    }
    checks.push_back(check("multiplicity", ok, detail));
  }

  {
    bool ok = true;
    std::size_t tested = 0;
    for (std::size_t c = 0; c < model.polygon.size(); ++c) {
      if (!is_pure_vertex(model, c) || model.polygon.angle_denominators[c] == 2) continue;
      const auto& ps = planes[c];
      const auto base = std::find_if(ps.begin(), ps.end(), [](const VertexPlane& p) {
        return p.label == "alpha=0" || p.label == "beta=0";
      });
      if (base == ps.end()) {
        ok = false;
        continue;
      }
      for (const auto& p : ps) {
        const bool p_type = in_plane12(model.polygon.vertex(c));
        const std::string prefix = p_type ? "alpha=" : "beta=";
        if (p.label.rfind(prefix, 0) != 0) {
          ok = false;
          continue;
        }
        const int idx = std::stoi(p.label.substr(prefix.size()));
        const int n = p_type ? k : m;
        const bool should_equal = idx == 0 || (n % 2 == 0 && idx == n / 2);
        ok = ok && ((relate(*base, p) == PairRelation::Equal) == should_equal);
        ++tested;
      }
    }
    checks.push_back(check("plane_pattern", ok, std::to_string(tested) + " planes against the base plane"));
  }

  if (r.excluded) {
    checks.push_back(skipped("transversal_pair", "excluded case"));
  } else {
    std::size_t transversal = 0;
    for (const auto& v : r.vertices) transversal += v.pairs.transversal;
    checks.push_back(check("transversal_pair", transversal > 0,
                           std::to_string(transversal) + " transversal vertex pairs"));
  }

  {
    const Decisions base = decisions_at(model, planes, kEpsilon);
    bool ok = true;
    for (double eps : {1e-6, 1e-12}) ok = ok && decisions_at(model, planes, eps) == base;
    checks.push_back(check("epsilon_stability", ok, "decisions at 1e-9 repeated at 1e-6 and 1e-12"));
  }

  if (dd.degree == 2) {
    checks.push_back(check("quotient_free", 2 * dd.chi == dd.chi_undivided,
                           "chi " + std::to_string(dd.chi_undivided) + " -> " + std::to_string(dd.chi)));
  } else {
    checks.push_back(skipped("quotient_free", "no -1 quotient"));
  }

  {
    const std::int64_t closed = closed_form::chi_bipolar(f, cfg);
    checks.push_back(check("bipolar_chi", r.chi_bipolar == closed,
                           std::to_string(r.chi_bipolar) + ", closed form " + std::to_string(closed)));
  }
  checks.push_back(check("bipolar_orientable", r.orientable_bipolar, std::string(to_string(dd.kind))));

  checks.push_back(check("area_bounds",
                         r.area.lower < r.area.upper && r.area.lower_rederived == r.area.lower &&
                             r.area.upper_rederived == r.area.upper,
                         "[" + rational_string(r.area.lower) + ", " + rational_string(r.area.upper) +
                             ") rederived [" + rational_string(*r.area.lower_rederived) + ", " +
                             rational_string(*r.area.upper_rederived) + ")"));

  if (r.excluded) {
    checks.push_back(skipped("embeddedness", "excluded case"));
  } else {
    checks.push_back(check("embeddedness", r.embedded == Embeddedness::NotEmbedded,
                           std::string(to_string(r.embedded))));
  }
  return r;
}

IndexRange parse_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::Validation, "bad range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  IndexRange r;
  if (dots == std::string::npos) {
    r.first = r.last = parse_int(text);
  } else {
    r.first = parse_int(std::string_view(text).substr(0, dots));
    r.last = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (r.first > r.last) throw Error(ErrorCode::Validation, "empty range '" + text + "'");
  return r;
}

std::vector<BatchRow> run_batch(Family f, IndexRange m_range, IndexRange k_range, const RunFlags& flags,
                                Execution exec) {
  std::vector<BatchRow> rows;
  for (int m = m_range.first; m <= m_range.last; ++m)
    for (int k = k_range.first; k <= k_range.last; ++k) {
      if (m == 2 && k == 2 && !flags.allow_excluded) continue;
      rows.push_back({f, m, k, std::nullopt, std::nullopt, {}});
    }
  RunFlags row_flags = flags;
  row_flags.export_complex_path.reset();
  for_each_index(
      rows.size(),
      [&](std::size_t i) {
        BatchRow& row = rows[i];
        try {
          row.report = run_single(row.family, row.m, row.k, row_flags);
        } catch (const Error& e) {
          row.error_code = e.code();
          row.error = e.what();
        } catch (const std::exception& e) {
          row.error_code = ErrorCode::Validation;
          row.error = e.what();
        }
      },
      exec);
  return rows;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return 4;
    case ErrorCode::Validation:
    case ErrorCode::ExcludedCase:
    case ErrorCode::DegenerateInput:
    case ErrorCode::DegenerateCircle:
    case ErrorCode::NonInvolutiveGenerator:
      return 2;
    default: return 3;
  }
}

OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "md") return OutputFormat::Markdown;
  throw Error(ErrorCode::Validation, "unknown format '" + std::string(s) + "'");
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{
      "family", "m", "k", "status", "error", "excluded", "group_order", "chi_S", "orientable_S", "minus_identity",
      "fundamental_domain", "chi_bipolar", "orientable_bipolar", "multiplicities", "vertex_details",
      "image_points", "max_multiplicity", "domain_equal_pairs", "domain_partial_pairs",
      "domain_transversal_pairs", "domain_indeterminate_pairs", "area_lower_num", "area_lower_den",
      "area_upper_num", "area_upper_den", "area_lower_rederived", "area_upper_rederived", "embedded",
      "verification", "checks"};
  return cols;
}

void write_report(std::ostream& os, const BipolarReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j.update(report_json(r));
      os << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::Csv:
      write_csv(os, {BatchRow{r.family, r.m, r.k, r, std::nullopt, {}}});
      return;
    case OutputFormat::Markdown: break;
  }
  os << "# " << to_string(r.family) << "(" << r.m << ", " << r.k << ")\n\n";
  os << "| quantity | value |\n|---|---|\n";
  os << "| group order | " << r.group_order << " |\n";
  os << "| chi(S) | " << r.chi_S << " |\n";
  os << "| S orientable | " << (r.orientable_S ? "yes" : "no") << " |\n";
  os << "| -1 in G | " << to_string(r.minus_identity) << " |\n";
  os << "| fundamental domain | " << to_string(r.fundamental_domain) << " |\n";
  os << "| chi(bipolar) | " << r.chi_bipolar << " |\n";
  os << "| bipolar orientable | " << (r.orientable_bipolar ? "yes" : "no") << " |\n";
  os << "| area | [" << md_rational(r.area.lower) << ", " << md_rational(r.area.upper) << ") |\n";
  os << "| embedded | " << to_string(r.embedded) << " |\n";
  os << "| verification | " << verification_string(r) << " |\n\n";
  os << "| vertex | multiplicity | orbit prediction | planes | equal | transversal | indeterminate |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& v : r.vertices) {
    os << "| " << v.label << " | " << v.multiplicity << " | " << v.orbit_prediction << " | " << v.planes
       << " | " << v.pairs.equal << " | " << v.pairs.transversal << " | " << v.pairs.indeterminate << " |\n";
  }
  if (!r.checks.empty()) {
    os << "\n| check | status | detail |\n|---|---|---|\n";
    for (const auto& c : r.checks) os << "| " << c.name << " | " << to_string(c.status) << " | " << c.detail << " |\n";
  }
}

void write_batch(std::ostream& os, const std::vector<BatchRow>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      Json j;
      j["schema_version"] = kSchemaVersion;
      Json arr = Json::array();
      for (const auto& row : rows) {
        if (row.report) {
          Json x = report_json(*row.report);
          x["status"] = "ok";
          arr.push_back(x);
        } else {
          arr.push_back(Json{{"family", std::string(to_string(row.family))},
                             {"m", row.m},
                             {"k", row.k},
                             {"status", "failed"},
                             {"error_code", std::string(to_string(*row.error_code))},
                             {"error", row.error}});
        }
      }
      j["rows"] = arr;
      os << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::Csv: write_csv(os, rows); return;
    case OutputFormat::Markdown: break;
  }
  os << "| family | m | k | |G| | chi(S) | domain | chi(bipolar) | area/pi | embedded | verification |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    os << "| " << to_string(row.family) << " | " << row.m << " | " << row.k << " | ";
    if (!row.report) {
      os << "failed: " << row.error << " | | | | | | |\n";
      continue;
    }
    const auto& r = *row.report;
    os << r.group_order << " | " << r.chi_S << " | " << to_string(r.fundamental_domain) << " | " << r.chi_bipolar
       << " | [" << rational_string(r.area.lower) << ", " << rational_string(r.area.upper) << ") | "
       << to_string(r.embedded) << " | " << verification_string(r) << " |\n";
  }
}

}  // namespace lawson
