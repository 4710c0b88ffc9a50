#pragma once

#include <string>

#include "vbpb/vbgroupoid.hpp"

namespace vbpb {

// Spec files are JSON. Either an explicit {"groupoid": ..., "vb": ...} pair or
// {"construct": {...}} naming one of the built-in constructors. Rationals are
// strings "p/q" (plain integers are accepted too).
VBGroupoid parse_spec(const std::string& text);
VBGroupoid load_spec(const std::string& path);

// Always writes the explicit form.
std::string spec_to_string(const VBGroupoid& v);
void save_spec(const VBGroupoid& v, const std::string& path);

}
