#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vbs/complex.hpp"
#include "vbs/multiloop.hpp"

namespace vbs {

enum class Slot : std::uint8_t { bottom, left, right, top };

const char* slot_name(Slot s);
Id slot_vertex(const VeeringComplex& cx, const Sector& s, Slot slot);

// One corner slot per sector, indexed by sector position in id order.
struct HeegaardState {
    std::vector<Slot> slots;

    friend auto operator<=>(const HeegaardState&, const HeegaardState&) = default;
    friend bool operator==(const HeegaardState&, const HeegaardState&) = default;
};

bool is_state(const VeeringComplex& cx, const HeegaardState& x);

// Backtracking over sectors in id order, slots tried bottom < left < right
// < top; the output order is that search order.
std::vector<HeegaardState> enumerate_states(const VeeringComplex& cx, unsigned threads = 1);

// (x^top, x^bot)
std::pair<HeegaardState, HeegaardState> canonical_states(const VeeringComplex& cx);

MultiLoop state_multiloop(const VeeringComplex& cx, const HeegaardState& x);
HeegaardState multiloop_state(const VeeringComplex& cx, const MultiLoop& m);

std::string format_state(const VeeringComplex& cx, const HeegaardState& x);

}  // namespace vbs
