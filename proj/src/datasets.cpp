#include "vbs/datasets.hpp"

#include <algorithm>
#include <filesystem>

namespace vbs {

namespace detail {
extern const char* const kFig8Json;
}

std::vector<std::string> bundled_datasets() { return {"fig8", "fig8-cover2"}; }

bool is_bundled(const std::string& name) {
    auto names = bundled_datasets();
    return std::find(names.begin(), names.end(), name) != names.end();
}

VeeringComplex load_bundled(const std::string& name) {
    if (name == "fig8") return parse_complex(detail::kFig8Json);
    if (name == "fig8-cover2") {
        auto base = parse_complex(detail::kFig8Json);
        return cyclic_cover(base, 2, *base.fiber_cocycle);
    }
    throw ParseError("no bundled dataset named '" + name + "'");
}

VeeringComplex resolve_dataset(const std::string& name_or_path) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(name_or_path)) return load_complex_file(name_or_path);
    if (fs::is_regular_file(name_or_path + ".json")) return load_complex_file(name_or_path + ".json");
    std::string stem = fs::path(name_or_path).filename().string();
    if (is_bundled(name_or_path)) return load_bundled(name_or_path);
    if (is_bundled(stem)) return load_bundled(stem);
    throw ParseError("no dataset or file named '" + name_or_path + "'");
}

}  // namespace vbs
