#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vbpb/linalg.hpp"

namespace vbpb {

struct Record {
  std::string check;
  std::string instance;
  std::uint64_t seed = 0;
  long trial = 0;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> witness;  // only kept on failure
};

struct CheckSummary {
  std::string check;
  long passed = 0, failed = 0;
};

struct Report {
  std::string command;
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<Record> records;
  std::vector<std::string> warnings;

  // Appends a record; witnesses are dropped when the check passed.
  void add(const std::string& check, long trial, bool pass,
           std::vector<std::pair<std::string, Mat>> witness = {});
  void add_text(const std::string& check, long trial, bool pass, const std::string& what);
  void merge(const Report& other);
  long failures() const;
  bool ok() const { return failures() == 0; }
  // Per-check counts in order of first appearance.
  std::vector<CheckSummary> summary() const;
};

enum class ReportFormat { Text, Machine };

std::string emit_report(const Report& r, ReportFormat fmt);

}
