#pragma once

#include <string>
#include <vector>

#include "vbs/complex.hpp"
#include "vbs/datasets.hpp"
#include "vbs/multiloop.hpp"
#include "vbs/states.hpp"

namespace support {

inline const vbs::VeeringComplex& fig8() {
    static const vbs::VeeringComplex cx = vbs::load_bundled("fig8");
    return cx;
}

inline const vbs::VeeringComplex& cover2() {
    static const vbs::VeeringComplex cx = vbs::load_bundled("fig8-cover2");
    return cx;
}

inline std::vector<const vbs::VeeringComplex*> datasets() { return {&fig8(), &cover2()}; }

inline std::vector<vbs::MultiLoop> state_multiloops(const vbs::VeeringComplex& cx) {
    std::vector<vbs::MultiLoop> out;
    for (const auto& x : vbs::enumerate_states(cx)) out.push_back(vbs::state_multiloop(cx, x));
    return out;
}

// fig8 document with a textual substitution applied once.
std::string fig8_text();
std::string replace_once(std::string text, const std::string& from, const std::string& to);

}  // namespace support
