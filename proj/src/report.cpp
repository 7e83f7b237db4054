#include <sstream>

#include "procco/text.hpp"
#include "procco/validator.hpp"

namespace procco {

namespace {

std::string join_subjects(const Finding& f) {
  if (f.subjects.empty()) return "-";
  std::string out;
  for (const auto& s : f.subjects) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

}  // namespace

std::string render_findings_text(const std::vector<Finding>& findings) {
  std::ostringstream out;
  for (const auto& f : findings) {
    out << f.code << ' ' << to_string(f.severity) << ' ' << join_subjects(f) << ": " << f.message
        << '\n';
  }
  return out.str();
}

std::string render_text(const ValidationReport& report) {
  return render_findings_text(report.findings);
}

std::string render_canonical(const ValidationReport& report) {
  std::ostringstream out;
  out << "procco-report 1\n";
  out << "mode " << to_string(report.mode) << '\n';
  for (const auto& f : report.findings) {
    out << "finding " << f.code << ' ' << to_string(f.severity) << ' '
        << text::underscored(join_subjects(f)) << ' ' << text::quote(f.message) << '\n';
  }
  for (const auto& [code, n] : report.counts) out << "count " << code << ' ' << n << '\n';
  out << "total " << report.findings.size() << '\n';
  return out.str();
}

}  // namespace procco
