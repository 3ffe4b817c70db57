#include "vbs/states.hpp"

#include <algorithm>
#include <map>

#include "vbs/parallel.hpp"

namespace vbs {

const char* slot_name(Slot s) {
    switch (s) {
        case Slot::bottom: return "bottom";
        case Slot::left: return "left";
        case Slot::right: return "right";
        case Slot::top: return "top";
    }
    return "?";
}

Id slot_vertex(const VeeringComplex& cx, const Sector& s, Slot slot) {
    switch (slot) {
        case Slot::bottom: return s.bottom;
        case Slot::left: return side_vertex(cx, s, Side::left);
        case Slot::right: return side_vertex(cx, s, Side::right);
        case Slot::top: return s.top;
    }
    return s.bottom;
}

bool is_state(const VeeringComplex& cx, const HeegaardState& x) {
    if (x.slots.size() != cx.sectors.size()) return false;
    std::vector<Id> hit;
    for (std::size_t i = 0; i < x.slots.size(); ++i) hit.push_back(slot_vertex(cx, cx.sectors[i], x.slots[i]));
    std::sort(hit.begin(), hit.end());
    if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) return false;
    return hit.size() == cx.vertices.size();
}

namespace {

constexpr Slot kSlots[] = {Slot::bottom, Slot::left, Slot::right, Slot::top};

void extend(const VeeringComplex& cx, std::vector<std::vector<Id>>& corners, std::size_t i, std::vector<Slot>& slots,
            std::vector<bool>& used, std::vector<HeegaardState>& out) {
    if (i == cx.sectors.size()) {
        out.push_back({slots});
        return;
    }
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t v = corners[i][k];
        if (used[v]) continue;
        used[v] = true;
        slots[i] = kSlots[k];
        extend(cx, corners, i + 1, slots, used, out);
        used[v] = false;
    }
}

}  // namespace

std::vector<HeegaardState> enumerate_states(const VeeringComplex& cx, unsigned threads) {
    if (cx.sectors.size() != cx.vertices.size()) return {};
    if (cx.sectors.empty()) return {HeegaardState{}};
    // corners[i][k]: dense vertex index of slot k of sector i
    std::vector<std::vector<Id>> corners(cx.sectors.size());
    for (std::size_t i = 0; i < cx.sectors.size(); ++i)
        for (Slot s : kSlots) corners[i].push_back(static_cast<Id>(cx.vertex_index(slot_vertex(cx, cx.sectors[i], s))));

    std::vector<std::vector<HeegaardState>> parts(4);
    parallel_for(4, threads, [&](std::size_t k) {
        std::vector<Slot> slots(cx.sectors.size(), Slot::bottom);
        std::vector<bool> used(cx.vertices.size(), false);
        used[corners[0][k]] = true;
        slots[0] = kSlots[k];
        extend(cx, corners, 1, slots, used, parts[k]);
    });
    std::vector<HeegaardState> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::pair<HeegaardState, HeegaardState> canonical_states(const VeeringComplex& cx) {
    return {HeegaardState{std::vector<Slot>(cx.sectors.size(), Slot::top)},
            HeegaardState{std::vector<Slot>(cx.sectors.size(), Slot::bottom)}};
}

MultiLoop state_multiloop(const VeeringComplex& cx, const HeegaardState& x) {
    if (!is_state(cx, x)) throw PreconditionError("not a Heegaard state");
    std::map<Id, EdgeRef> by_tail;
    for (std::size_t i = 0; i < x.slots.size(); ++i) {
        const Sector& s = cx.sectors[i];
        EdgeRef r;
        switch (x.slots[i]) {
            case Slot::bottom: continue;
            case Slot::left: r = EdgeRef::edge(s.left_bottom); break;
            case Slot::right: r = EdgeRef::edge(s.right_bottom); break;
            case Slot::top: r = EdgeRef::diag(s.id); break;
        }
        by_tail.emplace(s.bottom, r);
    }
    std::vector<Loop> loops;
    std::map<Id, bool> done;
    for (const auto& [start, first] : by_tail) {
        if (done[start]) continue;
        Loop loop;
        Id v = start;
        while (!done[v]) {
            auto it = by_tail.find(v);
            if (it == by_tail.end()) throw std::logic_error("state edges do not close into loops");
            done[v] = true;
            loop.push_back(it->second);
            v = head(cx, it->second);
        }
        if (v != start) throw std::logic_error("state edges do not close into vertex-disjoint loops");
        loops.push_back(std::move(loop));
    }
    MultiLoop m(std::move(loops));
    if (!is_embedded(cx, m)) throw std::logic_error("state multi-loop is not embedded");
    return m;
}

HeegaardState multiloop_state(const VeeringComplex& cx, const MultiLoop& m) {
    check_multiloop(cx, m);
    if (!is_embedded(cx, m)) throw PreconditionError("multi-loop is not embedded");
    HeegaardState x{std::vector<Slot>(cx.sectors.size(), Slot::bottom)};
    std::vector<bool> charged(cx.sectors.size(), false);
    auto charge = [&](std::size_t i, Slot s) {
        if (charged[i]) throw PreconditionError("sector " + std::to_string(cx.sectors[i].id) + " is charged twice");
        charged[i] = true;
        x.slots[i] = s;
    };
    for (const auto& loop : m.loops()) {
        for (EdgeRef r : loop) {
            if (r.is_diagonal()) {
                charge(cx.sector_index(r.id), Slot::top);
                continue;
            }
            std::size_t found = cx.sectors.size();
            Slot slot = Slot::bottom;
            for (std::size_t i = 0; i < cx.sectors.size(); ++i) {
                for (Side side : {Side::left, Side::right}) {
                    Id b = side == Side::left ? cx.sectors[i].left_bottom : cx.sectors[i].right_bottom;
                    if (b != r.id) continue;
                    if (found != cx.sectors.size()) throw PreconditionError("edge " + std::to_string(r.id) + " is a bottom side twice");
                    found = i;
                    slot = side == Side::left ? Slot::left : Slot::right;
                }
            }
            if (found == cx.sectors.size()) throw PreconditionError("edge " + std::to_string(r.id) + " is not a bottom side");
            charge(found, slot);
        }
    }
    if (!is_state(cx, x)) throw PreconditionError("multi-loop does not correspond to a Heegaard state");
    return x;
}

std::string format_state(const VeeringComplex& cx, const HeegaardState& x) {
    std::string s;
    for (std::size_t i = 0; i < x.slots.size(); ++i)
        s += (i ? " " : "") + std::to_string(cx.sectors[i].id) + ":" + slot_name(x.slots[i]);
    return s;
}

}  // namespace vbs
