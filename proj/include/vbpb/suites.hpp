#pragma once

#include <optional>
#include <string>

#include "vbpb/action.hpp"

namespace vbpb {

enum class Suite { Groupoid, GL2, Action, Duality, Roundtrip, All };

std::optional<Suite> suite_from_name(const std::string& name);
const char* suite_name(Suite s);

struct SuiteOptions {
  std::string instance = "instance";
  std::uint64_t seed = 0;
  long trials = 100;
  std::size_t per_arrow = 8;
  std::size_t per_object = 4;
  // representative changes per arrow in the associated-bundle checks
  long changes_per_arrow = 20;
};

// Frame groupoid axioms and moments. Also checks F against the fat representation.
Report suite_groupoid(const VBGroupoid& v, const SuiteOptions& opt);
// GL(l,k) laws with interchange and transpose. Also the GL(E) cross-check,
// plus the isotropy crossed module at three random base points.
Report suite_gl2(std::size_t l, std::size_t k, const SuiteOptions& opt);
Report suite_action(const VBGroupoid& v, const SuiteOptions& opt);
Report suite_duality(const VBGroupoid& v, const SuiteOptions& opt);
Report suite_roundtrip(const VBGroupoid& v, const SuiteOptions& opt);

Report run_suite(const VBGroupoid& v, Suite s, const SuiteOptions& opt);

}
