#include "vbpb/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace vbpb {

void Report::add(const std::string& check, long trial, bool pass, std::vector<std::pair<std::string, Mat>> witness) {
  Record rec{check, instance, seed, trial, pass, {}};
  if (!pass)
    for (auto& [name, m] : witness) rec.witness.emplace_back(name, m.str());
  records.push_back(std::move(rec));
}

void Report::add_text(const std::string& check, long trial, bool pass, const std::string& what) {
  Record rec{check, instance, seed, trial, pass, {}};
  if (!pass) rec.witness.emplace_back("error", what);
  records.push_back(std::move(rec));
}

void Report::merge(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

long Report::failures() const {
  long n = 0;
  for (auto& r : records) n += r.pass ? 0 : 1;
  return n;
}

std::vector<CheckSummary> Report::summary() const {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t> at;
  for (auto& r : records) {
    auto it = at.find(r.check);
    if (it == at.end()) {
      it = at.emplace(r.check, out.size()).first;
      out.push_back({r.check, 0, 0});
    }
    (r.pass ? out[it->second].passed : out[it->second].failed)++;
  }
  return out;
}

namespace {

// Tabs and newlines would break the one-record-per-line contract.
std::string clean(const std::string& s) {
  std::string o = s;
  for (auto& c : o)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return o;
}

std::string witness_field(const Record& r) {
  if (r.witness.empty()) return "-";
  std::string o;
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) o += ';';
    o += clean(r.witness[i].first) + "=" + clean(r.witness[i].second);
  }
  return o;
}

}

std::string emit_report(const Report& r, ReportFormat fmt) {
  std::ostringstream os;
  auto sum = r.summary();
  long total = static_cast<long>(r.records.size()), failed = r.failures();
  if (fmt == ReportFormat::Machine) {
    os << "#vbpb-report\t1\n";
    os << "H\t" << clean(r.command) << '\t' << clean(r.instance) << '\t' << r.seed << '\n';
    for (auto& w : r.warnings) os << "W\t" << clean(w) << '\n';
    for (auto& rec : r.records)
      os << "R\t" << clean(rec.check) << '\t' << clean(rec.instance) << '\t' << rec.seed << '\t' << rec.trial << '\t'
         << (rec.pass ? "PASS" : "FAIL") << '\t' << witness_field(rec) << '\n';
    for (auto& s : sum) os << "S\t" << clean(s.check) << '\t' << s.passed << '\t' << s.failed << '\n';
    os << "T\t" << total << '\t' << (total - failed) << '\t' << failed << '\n';
    return os.str();
  }
  if (!r.records.empty() || !r.warnings.empty())
    os << r.command << " on " << r.instance << " (seed " << r.seed << ")\n";
  for (auto& w : r.warnings) os << "warning: " << w << '\n';
  if (!sum.empty()) {
    std::size_t width = 5;
    for (auto& s : sum) width = std::max(width, s.check.size());
    os << std::left << std::setw(int(width)) << "check" << "  " << std::right << std::setw(8) << "passed" << "  "
       << std::setw(8) << "failed" << '\n';
    for (auto& s : sum)
      os << std::left << std::setw(int(width)) << s.check << "  " << std::right << std::setw(8) << s.passed << "  "
         << std::setw(8) << s.failed << '\n';
  }
  for (auto& rec : r.records) {
    if (rec.pass) continue;
    os << "FAIL " << rec.check << " trial " << rec.trial << '\n';
    for (auto& [k, val] : rec.witness) os << "    " << k << " = " << val << '\n';
  }
  os << "total " << total << ", passed " << (total - failed) << ", failed " << failed << '\n';
  return os.str();
}

}
