#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace support {

std::string fig8_text() {
    std::ifstream in(std::string(VBS_SOURCE_DIR) + "/data/fig8.json");
    if (!in) throw std::runtime_error("cannot read data/fig8.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    auto at = text.find(from);
    if (at == std::string::npos) throw std::runtime_error("pattern not found: " + from);
    return text.replace(at, from.size(), to);
}

}  // namespace support
