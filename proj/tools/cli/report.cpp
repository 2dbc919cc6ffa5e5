#include "cli/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dqm::cli {

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Info:
      return "info";
  }
  return "fail";
}

void VerificationReport::add_bound(std::string check, std::string params, double residual,
                                   double tolerance) {
  const Status status = residual < tolerance ? Status::Pass : Status::Fail;
  rows_.push_back({std::move(check), std::move(params), residual, tolerance, status});
}

void VerificationReport::add_minimum(std::string check, std::string params, double value,
                                     double minimum) {
  const Status status = value >= minimum ? Status::Pass : Status::Fail;
  rows_.push_back({std::move(check), std::move(params), value, minimum, status});
}

void VerificationReport::add_info(std::string check, std::string params, double residual,
                                  double tolerance) {
  rows_.push_back({std::move(check), std::move(params), residual, tolerance, Status::Info});
}

bool VerificationReport::passed() const noexcept {
  for (const auto& row : rows_) {
    if (row.status == Status::Fail) return false;
  }
  return true;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

namespace {

// Params hold `key=value` pairs joined by ';', never commas, so CSV fields
// need quoting only if a check name ever grows one.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::json json_number(double value) {
  if (std::isfinite(value)) return value;
  return format_double(value);
}

}  // namespace

std::string export_report(const VerificationReport& report, Format format) {
  if (format == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows()) {
      rows.push_back({{"check", row.check},
                      {"params", row.params},
                      {"residual", json_number(row.residual)},
                      {"tolerance", json_number(row.tolerance)},
                      {"status", to_string(row.status)}});
    }
    nlohmann::json doc;
    doc["status"] = report.passed() ? "pass" : "fail";
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "check,params,residual,tolerance,status\n";
  for (const auto& row : report.rows()) {
    os << csv_field(row.check) << ',' << csv_field(row.params) << ',' << format_double(row.residual)
       << ',' << format_double(row.tolerance) << ',' << to_string(row.status) << '\n';
  }
  return os.str();
}

void write_artifact(const std::string& text, const std::string& path, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output path '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing output path '" + path + "'");
}

}  // namespace dqm::cli
