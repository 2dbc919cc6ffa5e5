#pragma once

#include <string>
#include <vector>

namespace dqm::cli {

enum class Format { Csv, Json };

enum class Status { Pass, Fail, Info };

const char* to_string(Status status);

struct ReportRow {
  std::string check;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::Pass;
};

/// Rows of named checks. Info rows record comparisons that are not expected
/// to hold and do not enter the overall status.
class VerificationReport {
 public:
  /// Passes when residual < tolerance.
  void add_bound(std::string check, std::string params, double residual, double tolerance);
  /// Passes when value >= minimum; the minimum goes in the tolerance column.
  void add_minimum(std::string check, std::string params, double value, double minimum);
  void add_info(std::string check, std::string params, double residual, double tolerance);
  void add(ReportRow row) { rows_.push_back(std::move(row)); }

  const std::vector<ReportRow>& rows() const noexcept { return rows_; }
  bool passed() const noexcept;

 private:
  std::vector<ReportRow> rows_;
};

/// CSV header `check,params,residual,tolerance,status`; JSON carries the
/// same fields per row plus the overall status.
std::string export_report(const VerificationReport& report, Format format);

/// 17 significant digits; `inf`, `-inf` and `nan` spelled out.
std::string format_double(double value);

/// Writes to `path`, or to `fallback` when path is empty. Throws
/// std::runtime_error if the file cannot be written.
void write_artifact(const std::string& text, const std::string& path, std::ostream& fallback);

}  // namespace dqm::cli
