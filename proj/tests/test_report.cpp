#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "lawson/error.hpp"
#include "lawson/report.hpp"

using namespace lawson;

namespace {

RunFlags verify_flags() {
  RunFlags f;
  f.verify = true;
  return f;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    else if (c == sep && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST(RunSingle, XiThreeTwo) {
  const auto r = run_single(Family::Xi, 3, 2, verify_flags());
  EXPECT_EQ(r.chi_bipolar, -2);
  EXPECT_EQ(r.area.lower, Rational(12));
  EXPECT_EQ(r.area.upper, Rational(20));
  EXPECT_EQ(r.group_order, 12u);
  EXPECT_TRUE(r.verified());
}

TEST(RunSingle, EtaFourTwo) {
  const auto r = run_single(Family::Eta, 4, 2, verify_flags());
  EXPECT_EQ(r.chi_bipolar, -2);
  EXPECT_EQ(r.fundamental_domain, DomainKind::SBarModMinusOne);
  // Prefactor 2: lower = 2 max(m, k), upper = 2 (3mk - 3k - m).
  EXPECT_EQ(r.area.lower, Rational(8));
  EXPECT_EQ(r.area.upper, Rational(2 * (24 - 6 - 4)));
  EXPECT_TRUE(r.verified());
}

TEST(RunSingle, ExcludedCase) {
  try {
    (void)run_single(Family::Xi, 2, 2, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExcludedCase);
    EXPECT_EQ(exit_code(e.code()), 2);
  }
  RunFlags allow;
  allow.allow_excluded = true;
  allow.verify = true;
  const auto r = run_single(Family::Xi, 2, 2, allow);
  EXPECT_TRUE(r.excluded);
  EXPECT_EQ(r.embedded, Embeddedness::Inconclusive);
  EXPECT_TRUE(r.verified());
}

TEST(RunSingle, ChecksOnlyInVerifyMode) {
  const auto r = run_single(Family::Eta, 3, 3, {});
  EXPECT_TRUE(r.checks.empty());
  EXPECT_FALSE(r.verified());
  EXPECT_FALSE(r.area.upper_rederived);
}

TEST(RunSingle, CapExceededMapsToFour) {
  RunFlags f;
  f.cap = 20;
  try {
    (void)run_single(Family::Xi, 5, 5, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    EXPECT_EQ(exit_code(e.code()), 4);
  }
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code(ErrorCode::Validation), 2);
  EXPECT_EQ(exit_code(ErrorCode::DegenerateInput), 2);
  EXPECT_EQ(exit_code(ErrorCode::CrossCheckFailed), 3);
  EXPECT_EQ(exit_code(ErrorCode::InconsistentEvidence), 3);
  EXPECT_EQ(exit_code(ErrorCode::CapExceeded), 4);
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("2..5").first, 2);
  EXPECT_EQ(parse_range("2..5").last, 5);
  EXPECT_EQ(parse_range("7").first, 7);
  EXPECT_EQ(parse_range("7").last, 7);
  EXPECT_THROW(parse_range("5..2"), Error);
  EXPECT_THROW(parse_range("a..b"), Error);
  EXPECT_THROW(parse_range("2..."), Error);
}

TEST(RunBatch, XiRowCountSkipsExcluded) {
  const auto rows = run_batch(Family::Xi, {2, 4}, {2, 4}, {});
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows.front().m, 2);
  EXPECT_EQ(rows.front().k, 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_TRUE(std::pair(rows[i - 1].m, rows[i - 1].k) < std::pair(rows[i].m, rows[i].k));
  }
}

TEST(RunBatch, EtaParitySwitchesChiCase) {
  const auto rows = run_batch(Family::Eta, {2, 3}, {2, 3}, verify_flags());
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.report);
    EXPECT_TRUE(row.report->verified());
    const long base = 1 - static_cast<long>(row.m - 1) * (row.k - 1);
    EXPECT_EQ(row.report->chi_S, row.k % 2 == 0 ? base : 2 * base);
    EXPECT_EQ(row.report->orientable_S, row.k % 2 == 1);
  }
}

TEST(RunBatch, SerialAndParallelProduceSameBytes) {
  for (OutputFormat fmt : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Markdown}) {
    std::ostringstream a, b;
    write_batch(a, run_batch(Family::Eta, {2, 5}, {2, 5}, verify_flags(), Execution::Serial), fmt);
    write_batch(b, run_batch(Family::Eta, {2, 5}, {2, 5}, verify_flags(), Execution::Parallel), fmt);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(RunBatch, FailedRowsKeepTheirError) {
  RunFlags f;
  f.cap = 20;
  // Orders 12, 18 and 24.
  const auto rows = run_batch(Family::Xi, {2, 4}, {3, 3}, f);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].report);
  EXPECT_TRUE(rows[1].report);
  EXPECT_FALSE(rows[2].report);
  EXPECT_EQ(rows[2].error_code, ErrorCode::CapExceeded);
  EXPECT_FALSE(rows[2].error.empty());
}

TEST(Output, JsonSchemaAndFields) {
  const auto r = run_single(Family::Eta, 4, 3, verify_flags());
  std::ostringstream os;
  write_report(os, r, OutputFormat::Json);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("family"), "eta");
  EXPECT_EQ(j.at("chi_bipolar"), r.chi_bipolar);
  EXPECT_EQ(j.at("area_upper_over_pi").at("num"), r.area.upper.numerator());
  EXPECT_EQ(j.at("vertices").size(), 4u);
  EXPECT_EQ(j.at("verification"), "pass");
}

TEST(Output, CsvHeaderAndRowWidth) {
  const auto rows = run_batch(Family::Xi, {2, 3}, {2, 4}, verify_flags());
  std::ostringstream os;
  write_batch(os, rows, OutputFormat::Csv);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(split(line, ','), csv_columns());
  std::size_t n = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(split(line, ',').size(), csv_columns().size()) << line;
    ++n;
  }
  EXPECT_EQ(n, rows.size());
}

TEST(Output, JsonAndCsvCarryTheSameValues) {
  const auto r = run_single(Family::Xi, 4, 6, verify_flags());
  std::ostringstream js, cs;
  write_report(js, r, OutputFormat::Json);
  write_report(cs, r, OutputFormat::Csv);
  const auto j = nlohmann::json::parse(js.str());
  std::istringstream in(cs.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  const auto cols = split(header, ',');
  const auto cells = split(row, ',');
  auto cell = [&](const std::string& name) {
    return cells[static_cast<std::size_t>(std::find(cols.begin(), cols.end(), name) - cols.begin())];
  };
  for (const char* key : {"group_order", "chi_S", "chi_bipolar", "image_points", "max_multiplicity"}) {
    EXPECT_EQ(cell(key), j.at(key).dump()) << key;
  }
  EXPECT_EQ(cell("fundamental_domain"), j.at("fundamental_domain").get<std::string>());
  EXPECT_EQ(cell("minus_identity"), j.at("minus_identity").get<std::string>());
  EXPECT_EQ(cell("area_lower_num"), j.at("area_lower_over_pi").at("num").dump());
  EXPECT_EQ(cell("area_upper_den"), j.at("area_upper_over_pi").at("den").dump());
  EXPECT_EQ(cell("domain_transversal_pairs"), j.at("domain_pairs").at("transversal").dump());
  EXPECT_EQ(cell("verification"), j.at("verification").get<std::string>());
}

TEST(Output, ByteStableAcrossRuns) {
  std::ostringstream a, b;
  write_report(a, run_single(Family::Eta, 5, 4, verify_flags()), OutputFormat::Json);
  write_report(b, run_single(Family::Eta, 5, 4, verify_flags()), OutputFormat::Json);
  EXPECT_EQ(a.str(), b.str());
}
