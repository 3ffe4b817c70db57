#pragma once

#include <string>
#include <vector>

#include "vbs/complex.hpp"
#include "vbs/f2.hpp"
#include "vbs/multiloop.hpp"
#include "vbs/sweep.hpp"

namespace vbs {

struct RegionSite {
    std::size_t loop = 0;
    std::size_t pos = 0;
};

// `to` is the strum of `from` at one diagonal occurrence, sweeping
// `region_sector`.  One entry per (occurrence, side).
struct RegionMove {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t region_sector = 0;
    Side side = Side::left;

    friend bool operator==(const RegionMove&, const RegionMove&) = default;
};

// The sweep class of a single loop, with its strum sites grouped into
// region sectors.  Region sectors are numbered by their least site in
// (loop, position) order, and loops are the sorted class members, so the
// structure does not depend on which member it was built from.
struct DynamicRegion {
    Loop base;
    std::size_t base_index = 0;
    std::vector<Loop> loops;
    std::vector<RegionSite> sites;
    std::vector<std::size_t> site_sector;
    std::vector<Id> sector_label;  // underlying sector of each region sector
    std::vector<RegionMove> moves;
    // Per loop: region sectors across which the loop can be unstrummed,
    // split by the side of the loop they lie on.
    std::vector<std::vector<std::size_t>> left_sectors;
    std::vector<std::vector<std::size_t>> right_sectors;

    std::size_t sector_count() const { return sector_label.size(); }
    std::size_t index_of(const Loop& c) const;  // SIZE_MAX if absent
    bool same_structure(const DynamicRegion& other) const;
};

DynamicRegion build_dynamic_region(const VeeringComplex& cx, const Loop& c0, std::size_t cap = kDefaultCap);

struct Core {
    std::vector<std::size_t> sectors;  // sorted region-sector indices
};

Core maximal_core(const DynamicRegion& region);

// Loops reachable from the base by moves sweeping only core sectors.
std::vector<std::size_t> core_loops(const DynamicRegion& region, const Core& core);

struct CoreCheck {
    bool valid = true;
    std::string reason;
};

CoreCheck check_core(const DynamicRegion& region, const Core& core);

// Cores C1 .. Cn each adding one region sector, ending at `to`; empty when
// from == to.
std::vector<Core> core_growth_sequence(const DynamicRegion& region, const Core& from, const Core& to);

ChainComplexF2 cc_complex(const VeeringComplex& cx, const DynamicRegion& region, const Core& core);
ChainComplexF2 cc_multiloop_complex(const VeeringComplex& cx, const SweepClass& cls);

}  // namespace vbs
