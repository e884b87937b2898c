#pragma once

// Per-(family, m, k) reports, batch tables and their JSON, CSV and Markdown
// renderings.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lawson/bipolar_analysis.hpp"
#include "lawson/error.hpp"
#include "lawson/reflection_group.hpp"
#include "lawson/spherical_lattice.hpp"
#include "lawson/surface_complex.hpp"

namespace lawson {

inline constexpr int kSchemaVersion = 1;

struct RunFlags {
  bool verify = false;
  bool allow_excluded = false;
  std::optional<std::string> export_complex_path;
  std::size_t cap = kDefaultCap;
};

struct PairCounts {
  std::size_t equal = 0;
  std::size_t partial = 0;
  std::size_t transversal = 0;
  std::size_t indeterminate = 0;

  void add(PairRelation r);
};

struct VertexSummary {
  std::string label;
  std::size_t multiplicity = 0;
  std::size_t stabilizer_order = 0;
  std::size_t orbit_prediction = 0;
  std::optional<std::size_t> algebraic_prediction;
  bool right_angle = false;
  std::size_t planes = 0;
  PairCounts pairs;
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct BipolarReport {
  Family family = Family::Xi;
  int m = 0;
  int k = 0;
  bool excluded = false;
  std::size_t group_order = 0;
  std::int64_t chi_S = 0;
  bool orientable_S = false;
  MinusIdentityStatus minus_identity = MinusIdentityStatus::Absent;
  DomainKind fundamental_domain = DomainKind::S;
  std::int64_t chi_bipolar = 0;
  bool orientable_bipolar = false;
  std::vector<VertexSummary> vertices;
  std::size_t image_points = 0;
  std::size_t max_multiplicity = 0;
  PairCounts domain_pairs;
  AreaBounds area;
  Embeddedness embedded = Embeddedness::Inconclusive;
  /// Empty unless verification was requested.
  std::vector<CheckResult> checks;

  bool verified() const;
};

/// Full pipeline for one pair. Throws ExcludedCase for (2,2) unless allowed.
/// With flags.verify the report carries one entry per cross-check; callers
/// decide what a failed check means via verified().
BipolarReport run_single(Family f, int m, int k, const RunFlags& flags);

struct BatchRow {
  Family family = Family::Xi;
  int m = 0;
  int k = 0;
  std::optional<BipolarReport> report;
  std::optional<ErrorCode> error_code;
  std::string error;
};

struct IndexRange {
  int first = 0;
  int last = 0;
};

/// Parses "A..B" (or a single integer). Throws Validation.
IndexRange parse_range(const std::string& text);

/// Rows in order m ascending, then k; (2,2) is skipped unless allowed.
/// Failed rows carry their error instead of a report.
std::vector<BatchRow> run_batch(Family f, IndexRange m_range, IndexRange k_range,
                                const RunFlags& flags, Execution exec = Execution::Parallel);

/// 0 ok, 2 validation, 3 cross-check failure, 4 cap exceeded.
int exit_code(ErrorCode code);

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_format(std::string_view s);

void write_report(std::ostream& os, const BipolarReport& r, OutputFormat fmt);
void write_batch(std::ostream& os, const std::vector<BatchRow>& rows, OutputFormat fmt);

/// Column order of the CSV output.
const std::vector<std::string>& csv_columns();

}  // namespace lawson
