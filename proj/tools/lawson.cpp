// Command-line front end: single reports and batch tables.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lawson/error.hpp"
#include "lawson/report.hpp"

namespace {

struct Options {
  std::string family;
  std::string format = "json";
  lawson::RunFlags flags;
  std::string export_path;
  int m = 0;
  int k = 0;
  std::string m_range;
  std::string k_range;
  bool serial = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "xi or eta")->required()->check(CLI::IsMember({"xi", "eta"}));
  cmd->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  cmd->add_flag("--verify", o.flags.verify, "run every cross-check; exit 3 if one fails");
  cmd->add_flag("--allow-excluded", o.flags.allow_excluded, "accept (m,k) = (2,2)");
  cmd->add_option("--cap", o.flags.cap, "maximum group order")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipolar surfaces of Lawson xi and eta surfaces"};
  app.require_subcommand(1);
  Options o;

  CLI::App* report = app.add_subcommand("report", "analyse one (family, m, k)");
  add_common(report, o);
  report->add_option("--m", o.m)->required();
  report->add_option("--k", o.k)->required();
  report->add_option("--export-complex", o.export_path, "write the cell complex of S to PATH");

  CLI::App* batch = app.add_subcommand("batch", "analyse a grid of (m, k)");
  add_common(batch, o);
  batch->add_option("--m-range", o.m_range, "A..B")->required();
  batch->add_option("--k-range", o.k_range, "C..D")->required();
  batch->add_flag("--serial", o.serial, "disable the parallel row loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const lawson::Family family = lawson::parse_family(o.family);
    const lawson::OutputFormat fmt = lawson::parse_format(o.format);
    if (!o.export_path.empty()) o.flags.export_complex_path = o.export_path;

    if (*report) {
      const lawson::BipolarReport r = lawson::run_single(family, o.m, o.k, o.flags);
      lawson::write_report(std::cout, r, fmt);
      if (o.flags.verify && !r.verified()) {
        for (const auto& c : r.checks) {
          if (c.status == lawson::CheckStatus::Fail) std::cerr << "check failed: " << c.name << ": " << c.detail << '\n';
        }
        return 3;
      }
      return 0;
    }

    const auto rows = lawson::run_batch(family, lawson::parse_range(o.m_range), lawson::parse_range(o.k_range),
                                        o.flags, o.serial ? lawson::Execution::Serial : lawson::Execution::Parallel);
    lawson::write_batch(std::cout, rows, fmt);
    // The worst row decides: cap overflow, then cross-check failures, then validation.
    int rc = 0;
    for (const auto& row : rows) {
      int row_rc = 0;
      if (row.error_code) {
        row_rc = lawson::exit_code(*row.error_code);
        std::cerr << lawson::to_string(family) << "(" << row.m << "," << row.k << "): " << row.error << '\n';
      } else if (o.flags.verify && !row.report->verified()) {
        row_rc = 3;
      }
      auto rank = [](int c) { return c == 4 ? 3 : c == 3 ? 2 : c == 2 ? 1 : 0; };
      if (rank(row_rc) > rank(rc)) rc = row_rc;
    }
    return rc;
  } catch (const lawson::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return lawson::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
