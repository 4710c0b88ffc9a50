#include "vbpb/vbpb.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "vbpb/specio.hpp"
#include "vbpb/suites.hpp"

struct vbpb_vbg {
  vbpb::VBGroupoid v;
};

struct vbpb_report {
  vbpb::Report r;
};

namespace {

thread_local std::string last_error;

int status_of(vbpb::ErrorKind k) {
  using vbpb::ErrorKind;
  switch (k) {
    case ErrorKind::ParseError: return VBPB_E_PARSE;
    case ErrorKind::ValidationFailure: return VBPB_E_VALIDATION;
    case ErrorKind::IoError: return VBPB_E_IO;
    case ErrorKind::InvalidArgument:
    case ErrorKind::NonUnitBase:
    case ErrorKind::NonFunctorialRep: return VBPB_E_ARGUMENT;
    default: return VBPB_E_MATH;
  }
}

template <class Fn>
int wrap(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return VBPB_OK;
  } catch (const vbpb::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return VBPB_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return VBPB_E_INTERNAL;
  }
}

int null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return VBPB_E_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}

extern "C" {

const char* vbpb_version(void) { return "0.1.0"; }

const char* vbpb_last_error(void) { return last_error.c_str(); }

const char* vbpb_status_name(int status) {
  switch (status) {
    case VBPB_OK: return "ok";
    case VBPB_E_PARSE: return "parse error";
    case VBPB_E_VALIDATION: return "validation error";
    case VBPB_E_IO: return "io error";
    case VBPB_E_ARGUMENT: return "invalid argument";
    case VBPB_E_MATH: return "math error";
    case VBPB_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void vbpb_string_free(char* s) { std::free(s); }

int vbpb_load(const char* path, vbpb_vbg** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return wrap([&] { *out = new vbpb_vbg{vbpb::load_spec(path)}; });
}

int vbpb_parse(const char* text, size_t len, vbpb_vbg** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return wrap([&] { *out = new vbpb_vbg{vbpb::parse_spec(std::string(text, len))}; });
}

int vbpb_save(const vbpb_vbg* v, const char* path) {
  if (!v) return null_arg("v");
  if (!path) return null_arg("path");
  return wrap([&] { vbpb::save_spec(v->v, path); });
}

int vbpb_to_string(const vbpb_vbg* v, char** out) {
  if (!v) return null_arg("v");
  if (!out) return null_arg("out");
  return wrap([&] { *out = dup(vbpb::spec_to_string(v->v)); });
}

void vbpb_free(vbpb_vbg* v) { delete v; }

int vbpb_dims(const vbpb_vbg* v, size_t* l, size_t* k, size_t* n_objects, size_t* n_arrows) {
  if (!v) return null_arg("v");
  if (l) *l = v->v.l;
  if (k) *k = v->v.k;
  if (n_objects) *n_objects = v->v.base.objects.size();
  if (n_arrows) *n_arrows = v->v.base.arrows.size();
  last_error.clear();
  return VBPB_OK;
}

int vbpb_validate(const vbpb_vbg* v, size_t* n_problems, char** problems) {
  if (!v) return null_arg("v");
  return wrap([&] {
    auto rep = vbpb::vbg_validate(v->v);
    if (n_problems) *n_problems = rep.size();
    if (problems) {
      std::string all;
      for (auto& p : rep) all += p + "\n";
      *problems = dup(all);
    }
  });
}

int vbpb_dual(const vbpb_vbg* v, vbpb_vbg** out) {
  if (!v) return null_arg("v");
  if (!out) return null_arg("out");
  *out = nullptr;
  return wrap([&] { *out = new vbpb_vbg{vbpb::vbg_dual(v->v)}; });
}

int vbpb_describe_core(const vbpb_vbg* v, char** out) {
  if (!v) return null_arg("v");
  if (!out) return null_arg("out");
  return wrap([&] {
    const auto& G = v->v.base;
    std::ostringstream os;
    os << "rank (l,k) = (" << v->v.l << "," << v->v.k << ")\n";
    for (vbpb::Object x = 0; x < G.n_objects(); ++x) {
      vbpb::Core c = vbpb::vbg_core(v->v, x);
      os << "object " << G.objects[x] << "\n";
      os << "  core basis " << c.C.basis().str() << "\n";
      os << "  anchor     " << c.rho.str() << "\n";
      os << "  unit U     " << v->v.U[x].str() << "\n";
    }
    *out = dup(os.str());
  });
}

int vbpb_describe_frames(const vbpb_vbg* v, uint64_t seed, size_t per_arrow, char** out) {
  if (!v) return null_arg("v");
  if (!out) return null_arg("out");
  return wrap([&] {
    const auto& E = v->v;
    const auto& G = E.base;
    vbpb::SampledPB sp = vbpb::sample_frames(E, seed, per_arrow);
    std::ostringstream os;
    os << "#vbpb-frames\t1\n";
    os << "H\t" << seed << '\t' << per_arrow << '\n';
    for (vbpb::Object x = 0; x < G.n_objects(); ++x)
      for (std::size_t i = 0; i < sp.basepairs[x].size(); ++i) {
        const auto& p = sp.basepairs[x][i];
        os << "P\t" << G.objects[x] << '\t' << i << "\tphi_c=" << p.phi_c.str() << "\tphi_b=" << p.phi_b.str()
           << "\tmu=" << vbpb::basepair_moment(E, p).str() << '\n';
      }
    for (vbpb::Arrow g = 0; g < G.n_arrows(); ++g)
      for (std::size_t i = 0; i < sp.frames[g].size(); ++i) {
        const auto& f = sp.frames[g][i];
        vbpb::BasePair s = vbpb::frame_bs(E, f), t = vbpb::frame_bt(E, f);
        os << "F\t" << G.arrows[g] << '\t' << i << "\tPhi=" << f.Phi.str() << "\td=" << vbpb::frame_dphi(E, f).str()
           << "\tbs_c=" << s.phi_c.str() << "\tbs_b=" << s.phi_b.str() << "\tbt_c=" << t.phi_c.str()
           << "\tbt_b=" << t.phi_b.str() << '\n';
      }
    *out = dup(os.str());
  });
}

int vbpb_check(const vbpb_vbg* v, const char* suite, const char* instance, uint64_t seed, long trials,
               vbpb_report** out) {
  if (!v) return null_arg("v");
  if (!suite) return null_arg("suite");
  if (!out) return null_arg("out");
  *out = nullptr;
  auto s = vbpb::suite_from_name(suite);
  if (!s) {
    last_error = std::string("unknown suite '") + suite + "'";
    return VBPB_E_ARGUMENT;
  }
  if (trials < 0) {
    last_error = "trials must be non-negative";
    return VBPB_E_ARGUMENT;
  }
  return wrap([&] {
    vbpb::SuiteOptions opt;
    opt.instance = instance ? instance : "instance";
    opt.seed = seed;
    opt.trials = trials;
    vbpb::Report r = vbpb::run_suite(v->v, *s, opt);
    r.command = std::string("check:") + suite;
    *out = new vbpb_report{std::move(r)};
  });
}

int vbpb_report_counts(const vbpb_report* r, long* total, long* failed) {
  if (!r) return null_arg("r");
  if (total) *total = static_cast<long>(r->r.records.size());
  if (failed) *failed = r->r.failures();
  last_error.clear();
  return VBPB_OK;
}

int vbpb_report_emit(const vbpb_report* r, int format, char** out) {
  if (!r) return null_arg("r");
  if (!out) return null_arg("out");
  if (format != VBPB_FORMAT_TEXT && format != VBPB_FORMAT_MACHINE) {
    last_error = "unknown report format";
    return VBPB_E_ARGUMENT;
  }
  return wrap([&] {
    *out = dup(vbpb::emit_report(r->r, format == VBPB_FORMAT_MACHINE ? vbpb::ReportFormat::Machine
                                                                      : vbpb::ReportFormat::Text));
  });
}

void vbpb_report_free(vbpb_report* r) { delete r; }

}
