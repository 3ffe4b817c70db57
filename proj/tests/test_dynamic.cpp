#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "vbs/dynamic.hpp"
#include "vbs/grading.hpp"

using namespace vbs;

namespace {

// Single graph-only loops from state resolutions and branch loops.
std::vector<Loop> single_loops(const VeeringComplex& cx) {
    std::set<Loop> out;
    for (const auto& m : support::state_multiloops(cx))
        for (const auto& r : strum_resolutions(cx, m))
            if (r.size() == 1) out.insert(r[0]);
    for (const auto& b : branch_loops(cx)) {
        Loop l;
        for (Id e : b) l.push_back(EdgeRef::edge(e));
        out.insert(normalize_loop(l));
    }
    return {out.begin(), out.end()};
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool generators_subset(const ChainComplexF2& a, const ChainComplexF2& b) {
    for (const auto& g : a.generators)
        if (std::find(b.generators.begin(), b.generators.end(), g) == b.generators.end()) return false;
    return true;
}

}  // namespace

TEST_CASE("branch loops have no region sectors") {
    for (const auto* cx : support::datasets())
        for (const auto& b : branch_loops(*cx)) {
            Loop l;
            for (Id e : b) l.push_back(EdgeRef::edge(e));
            auto region = build_dynamic_region(*cx, l);
            CHECK(region.sector_count() == 0);
            CHECK(region.loops.size() == 1);
            CHECK(homology_dim(cc_complex(*cx, region, maximal_core(region))) == 1);
        }
}

TEST_CASE("region sectors match the fixpoint oracle") {
    for (const auto* cx : support::datasets())
        for (const auto& c : single_loops(*cx)) {
            auto region = build_dynamic_region(*cx, c);
            std::vector<std::pair<std::size_t, std::size_t>> sites;
            for (const auto& s : region.sites) sites.push_back({s.loop, s.pos});
            auto labels = oracle::region_fixpoint(*cx, region.loops, sites);
            for (std::size_t i = 0; i < sites.size(); ++i)
                for (std::size_t j = 0; j < sites.size(); ++j)
                    CHECK((labels[i] == labels[j]) == (region.site_sector[i] == region.site_sector[j]));
            for (std::size_t i = 0; i < sites.size(); ++i) {
                const Loop& l = region.loops[sites[i].first];
                CHECK(l[sites[i].second].id == region.sector_label[region.site_sector[i]]);
            }
        }
}

TEST_CASE("region structure does not depend on the base member") {
    for (const auto* cx : support::datasets())
        for (const auto& c : single_loops(*cx)) {
            auto region = build_dynamic_region(*cx, c);
            CHECK(region.loops[region.base_index] == c);
            for (const auto& l : region.loops) {
                bool graph_only = std::none_of(l.begin(), l.end(), [](EdgeRef r) { return r.is_diagonal(); });
                if (!graph_only) continue;
                auto other = build_dynamic_region(*cx, l);
                CHECK(other.same_structure(region));
            }
        }
}

TEST_CASE("fig8 region of 0 3 1 2") {
    const auto& cx = support::fig8();
    auto c = parse_multiloop(cx, "0 3 1 2")[0];
    auto region = build_dynamic_region(cx, c);
    CHECK(region.loops.size() == 5);
    CHECK(region.sector_count() == 2);
    auto core = maximal_core(region);
    auto cc = cc_complex(cx, region, core);
    CHECK(cc.generators.size() == 5);
    CHECK(f2_rank(cc.boundary) == 2);
    CHECK(homology_dim(cc) == 1);
}

TEST_CASE("core growth keeps homology constant") {
    for (const auto* cx : support::datasets())
        for (const auto& c : single_loops(*cx)) {
            auto region = build_dynamic_region(*cx, c);
            Core empty;
            CHECK(check_core(region, empty).valid);
            auto base_cc = cc_complex(*cx, region, empty);
            CHECK(base_cc.generators.size() == 1);
            CHECK(homology_dim(base_cc) == 1);

            auto top = maximal_core(region);
            auto check = check_core(region, top);
            CHECK_MESSAGE(check.valid, check.reason);
            auto seq = core_growth_sequence(region, empty, top);
            CHECK(seq.size() == top.sectors.size());
            const Core* prev = &empty;
            ChainComplexF2 prev_cc = base_cc;
            for (const auto& k : seq) {
                CHECK(k.sectors.size() == prev->sectors.size() + 1);
                CHECK(subset(prev->sectors, k.sectors));
                CHECK(check_core(region, k).valid);
                auto cc = cc_complex(*cx, region, k);
                CHECK(cc.squares_to_zero());
                CHECK(generators_subset(prev_cc, cc));
                CHECK(homology_dim(cc) == 1);
                prev = &k;
                prev_cc = cc;
            }
            if (!seq.empty()) CHECK(seq.back().sectors == top.sectors);
            CHECK(core_loops(region, top).size() == region.loops.size());
        }
}

TEST_CASE("multi-loop complexes on sleek classes") {
    const auto& cx = support::fig8();
    auto empty = sweep_class(cx, MultiLoop{});
    auto cc = cc_multiloop_complex(cx, empty);
    CHECK(cc.generators.size() == 1);
    CHECK(homology_dim(cc) == 1);

    for (const auto* d : support::datasets())
        for (const auto& m : support::state_multiloops(*d)) {
            auto cls = sweep_class(*d, m);
            if (is_sleek(*d, m).sleek) {
                auto c = cc_multiloop_complex(*d, cls);
                CHECK(c.squares_to_zero());
                CHECK(homology_dim(c) == 1);
            } else {
                CHECK_THROWS_AS(cc_multiloop_complex(*d, cls), PreconditionError);
            }
        }
}
