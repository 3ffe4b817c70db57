#pragma once

#include <string>
#include <vector>

#include "vbs/complex.hpp"

namespace vbs {

// Names of the instances shipped with the library, in a fixed order.
std::vector<std::string> bundled_datasets();
bool is_bundled(const std::string& name);
VeeringComplex load_bundled(const std::string& name);

// A bundled name, a JSON file path, or a path given without ".json"; a
// leading directory on a bundled name ("data/fig8") is accepted when no such
// file exists.
VeeringComplex resolve_dataset(const std::string& name_or_path);

}  // namespace vbs
