// vbpb: validate VB-groupoid spec files and run the frame bundle checks.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "vbpb/vbpb.h"

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

struct VbgDeleter {
  void operator()(vbpb_vbg* v) const { vbpb_free(v); }
};
struct ReportDeleter {
  void operator()(vbpb_report* r) const { vbpb_report_free(r); }
};
using VbgPtr = std::unique_ptr<vbpb_vbg, VbgDeleter>;
using ReportPtr = std::unique_ptr<vbpb_report, ReportDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  vbpb_string_free(s);
  return out;
}

int report_error(const std::string& what, int status) {
  std::cerr << "vbpb: " << what << ": " << vbpb_status_name(status) << ": " << vbpb_last_error() << "\n";
  return kFail;
}

VbgPtr load(const std::string& path, int& status) {
  vbpb_vbg* raw = nullptr;
  status = vbpb_load(path.c_str(), &raw);
  return VbgPtr(raw);
}

int cmd_validate(const std::string& path) {
  int st;
  VbgPtr v = load(path, st);
  if (st != VBPB_OK) return report_error(path, st);
  size_t l, k, no, na;
  vbpb_dims(v.get(), &l, &k, &no, &na);
  std::cout << "valid: " << path << " rank (" << l << "," << k << ") over " << no << " objects, " << na
            << " arrows\n";
  return kOk;
}

int cmd_core(const std::string& path) {
  int st;
  VbgPtr v = load(path, st);
  if (st != VBPB_OK) return report_error(path, st);
  char* out = nullptr;
  if ((st = vbpb_describe_core(v.get(), &out)) != VBPB_OK) return report_error("core", st);
  std::cout << take(out);
  return kOk;
}

int cmd_frames(const std::string& path, std::uint64_t seed, std::size_t per_arrow) {
  int st;
  VbgPtr v = load(path, st);
  if (st != VBPB_OK) return report_error(path, st);
  char* out = nullptr;
  if ((st = vbpb_describe_frames(v.get(), seed, per_arrow, &out)) != VBPB_OK) return report_error("frames", st);
  std::cout << take(out);
  return kOk;
}

int cmd_check(const std::string& path, const std::string& suite, std::uint64_t seed, long trials,
              const std::string& format, const std::string& report_path) {
  int st;
  VbgPtr v = load(path, st);
  if (st != VBPB_OK) return report_error(path, st);
  std::string instance = std::filesystem::path(path).filename().string();
  vbpb_report* raw = nullptr;
  if ((st = vbpb_check(v.get(), suite.c_str(), instance.c_str(), seed, trials, &raw)) != VBPB_OK)
    return report_error("check", st);
  ReportPtr rep(raw);
  char* out = nullptr;
  int fmt = format == "machine" ? VBPB_FORMAT_MACHINE : VBPB_FORMAT_TEXT;
  if ((st = vbpb_report_emit(rep.get(), fmt, &out)) != VBPB_OK) return report_error("emit", st);
  std::cout << take(out);
  if (!report_path.empty()) {
    if ((st = vbpb_report_emit(rep.get(), VBPB_FORMAT_MACHINE, &out)) != VBPB_OK) return report_error("emit", st);
    std::ofstream f(report_path, std::ios::binary);
    f << take(out);
    if (!f) {
      std::cerr << "vbpb: cannot write " << report_path << "\n";
      return kFail;
    }
  }
  long total = 0, failed = 0;
  vbpb_report_counts(rep.get(), &total, &failed);
  return failed == 0 ? kOk : kFail;
}

int cmd_dual(const std::string& path, const std::string& out_path) {
  int st;
  VbgPtr v = load(path, st);
  if (st != VBPB_OK) return report_error(path, st);
  vbpb_vbg* raw = nullptr;
  if ((st = vbpb_dual(v.get(), &raw)) != VBPB_OK) return report_error("dual", st);
  VbgPtr d(raw);
  if ((st = vbpb_save(d.get(), out_path.c_str())) != VBPB_OK) return report_error(out_path, st);
  std::cout << "wrote " << out_path << "\n";
  return kOk;
}

}

int main(int argc, char** argv) {
  CLI::App app{"Frame bundles of finite VB-groupoids: validation and exact property checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vbpb_version());

  std::string spec;
  std::uint64_t seed = 0;
  long trials = 100;
  std::size_t per_arrow = 8;
  std::string suite = "all", format = "text", report_path, out_path;

  auto* validate = app.add_subcommand("validate", "Parse and validate a spec file");
  validate->add_option("spec", spec, "Spec file")->required();

  auto* core = app.add_subcommand("core", "Print the core and core anchor at every object");
  core->add_option("spec", spec, "Spec file")->required();

  auto* frames = app.add_subcommand("frames", "Sample s-bisection frames and base pairs");
  frames->add_option("spec", spec, "Spec file")->required();
  frames->add_option("--seed", seed, "Sampling seed")->envname("GRPD_SEED");
  frames->add_option("--per-arrow", per_arrow, "Frames per arrow")->capture_default_str();

  auto* check = app.add_subcommand("check", "Run a property suite; exit 1 on any failure");
  check->add_option("spec", spec, "Spec file")->required();
  check->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"groupoid", "gl2", "action", "duality", "roundtrip", "all"}))
      ->capture_default_str();
  check->add_option("--seed", seed, "Seed")->envname("GRPD_SEED");
  check->add_option("--trials", trials, "Random trials per check loop")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  check->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  check->add_option("--report", report_path, "Also write the machine report to this file");

  auto* dual = app.add_subcommand("dual", "Write the dual VB-groupoid in explicit form");
  dual->add_option("spec", spec, "Spec file")->required();
  dual->add_option("-o,--output", out_path, "Output spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*validate) return cmd_validate(spec);
  if (*core) return cmd_core(spec);
  if (*frames) return cmd_frames(spec, seed, per_arrow);
  if (*check) return cmd_check(spec, suite, seed, trials, format, report_path);
  if (*dual) return cmd_dual(spec, out_path);
  return kUsage;
}
