#include "vbs/dynamic.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace vbs {

std::size_t DynamicRegion::index_of(const Loop& c) const {
    auto it = std::lower_bound(loops.begin(), loops.end(), c);
    if (it == loops.end() || *it != c) return SIZE_MAX;
    return static_cast<std::size_t>(it - loops.begin());
}

bool DynamicRegion::same_structure(const DynamicRegion& o) const {
    if (loops != o.loops || sector_label != o.sector_label || site_sector != o.site_sector) return false;
    if (left_sectors != o.left_sectors || right_sectors != o.right_sectors || moves != o.moves) return false;
    if (sites.size() != o.sites.size()) return false;
    for (std::size_t i = 0; i < sites.size(); ++i)
        if (sites[i].loop != o.sites[i].loop || sites[i].pos != o.sites[i].pos) return false;
    return true;
}

DynamicRegion build_dynamic_region(const VeeringComplex& cx, const Loop& c0, std::size_t cap) {
    if (c0.empty()) throw PreconditionError("the base loop is empty");
    for (EdgeRef r : c0)
        if (r.is_diagonal()) throw PreconditionError("the base loop must not contain diagonals");
    auto cls = sweep_class(cx, MultiLoop({c0}), cap);

    DynamicRegion region;
    region.base = normalize_loop(c0);
    for (const auto& m : cls.members) region.loops.push_back(m[0]);
    region.base_index = region.index_of(region.base);
    const std::size_t L = region.loops.size();

    // site ids, (loop, pos) order
    std::vector<std::vector<std::size_t>> site_at(L);
    for (std::size_t i = 0; i < L; ++i) {
        site_at[i].assign(region.loops[i].size(), SIZE_MAX);
        for (std::size_t p = 0; p < region.loops[i].size(); ++p) {
            if (!region.loops[i][p].is_diagonal()) continue;
            site_at[i][p] = region.sites.size();
            region.sites.push_back({i, p});
        }
    }
    std::vector<std::size_t> parent(region.sites.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    auto target = [&](const Loop& c) {
        std::size_t j = region.index_of(c);
        if (j == SIZE_MAX) throw std::logic_error("sweep class is not closed under strums");
        return j;
    };

    // Commutation rule: a strum at a different occurrence carries each
    // remaining diagonal to its image.
    for (const auto& site : region.sites) {
        const Loop& c = region.loops[site.loop];
        for (std::size_t q = 0; q < c.size(); ++q) {
            if (q == site.pos || !c[q].is_diagonal()) continue;
            for (Side side : {Side::left, Side::right}) {
                auto mv = strum_loop(cx, c, q, side);
                std::size_t j = target(mv.result);
                unite(site_at[site.loop][site.pos], site_at[j][mv.position_map[site.pos]]);
            }
        }
    }

    region.site_sector.resize(region.sites.size());
    std::vector<std::size_t> sector_of_root(region.sites.size(), SIZE_MAX);
    for (std::size_t s = 0; s < region.sites.size(); ++s) {
        std::size_t r = find(s);
        if (sector_of_root[r] == SIZE_MAX) {
            sector_of_root[r] = region.sector_label.size();
            region.sector_label.push_back(region.loops[region.sites[s].loop][region.sites[s].pos].id);
        }
        region.site_sector[s] = sector_of_root[r];
    }

    for (std::size_t s = 0; s < region.sites.size(); ++s) {
        const auto& site = region.sites[s];
        for (Side side : {Side::left, Side::right}) {
            auto mv = strum_loop(cx, region.loops[site.loop], site.pos, side);
            region.moves.push_back({site.loop, target(mv.result), region.site_sector[s], side});
        }
    }

    // A loop containing the left boundary path of a sector has the sector on
    // its right, and the other way round.
    PathIndex index(cx);
    region.left_sectors.resize(L);
    region.right_sectors.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
        for (const auto& ps : index.sites(region.loops[i])) {
            auto mv = unstrum_loop(cx, region.loops[i], ps.pos, ps.sector, ps.side);
            std::size_t j = target(mv.result);
            std::size_t sec = region.site_sector[site_at[j][mv.inserted]];
            (ps.side == Side::left ? region.right_sectors : region.left_sectors)[i].push_back(sec);
        }
        for (auto* v : {&region.left_sectors[i], &region.right_sectors[i]}) {
            std::sort(v->begin(), v->end());
            v->erase(std::unique(v->begin(), v->end()), v->end());
        }
    }
    return region;
}

Core maximal_core(const DynamicRegion& region) {
    Core k;
    k.sectors.resize(region.sector_count());
    std::iota(k.sectors.begin(), k.sectors.end(), 0);
    return k;
}

std::vector<std::size_t> core_loops(const DynamicRegion& region, const Core& core) {
    std::vector<bool> in_core(region.sector_count(), false);
    for (auto s : core.sectors) in_core.at(s) = true;
    std::vector<std::vector<std::size_t>> adj(region.loops.size());
    for (const auto& mv : region.moves) {
        if (!in_core[mv.region_sector]) continue;
        adj[mv.from].push_back(mv.to);
        adj[mv.to].push_back(mv.from);
    }
    std::vector<bool> seen(region.loops.size(), false);
    std::deque<std::size_t> queue{region.base_index};
    seen[region.base_index] = true;
    while (!queue.empty()) {
        auto a = queue.front();
        queue.pop_front();
        for (auto b : adj[a])
            if (!seen[b]) {
                seen[b] = true;
                queue.push_back(b);
            }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

CoreCheck check_core(const DynamicRegion& region, const Core& core) {
    std::vector<bool> in_core(region.sector_count(), false);
    for (auto s : core.sectors) {
        if (s >= region.sector_count()) return {false, "core names an unknown region sector"};
        in_core[s] = true;
    }
    auto R = core_loops(region, core);
    std::vector<bool> in_r(region.loops.size(), false);
    for (auto i : R) in_r[i] = true;

    std::vector<bool> swept(region.sector_count(), false);
    for (const auto& mv : region.moves)
        if (in_r[mv.from] && in_core[mv.region_sector]) swept[mv.region_sector] = true;
    for (auto s : core.sectors)
        if (!swept[s]) return {false, "region sector " + std::to_string(s) + " is not swept inside the core"};

    auto touches = [&](const std::vector<std::size_t>& secs) {
        return std::any_of(secs.begin(), secs.end(), [&](std::size_t s) { return in_core[s]; });
    };
    std::size_t no_left = 0, no_right = 0;
    for (auto i : R) {
        const Loop& c = region.loops[i];
        if (std::any_of(c.begin(), c.end(), [](EdgeRef r) { return r.is_diagonal(); })) continue;
        if (!touches(region.left_sectors[i])) ++no_left;
        if (!touches(region.right_sectors[i])) ++no_right;
    }
    if (no_left != 1 || no_right != 1)
        return {false, "core has " + std::to_string(no_left) + " left and " + std::to_string(no_right) + " right boundary loops"};
    return {};
}

std::vector<Core> core_growth_sequence(const DynamicRegion& region, const Core& from, const Core& to) {
    if (!std::includes(to.sectors.begin(), to.sectors.end(), from.sectors.begin(), from.sectors.end()))
        throw PreconditionError("growth needs from to be contained in to");
    for (const Core* k : {&from, &to}) {
        auto chk = check_core(region, *k);
        if (!chk.valid) throw PreconditionError("not a core: " + chk.reason);
    }
    std::vector<Core> seq;
    Core cur = from;
    while (cur.sectors.size() < to.sectors.size()) {
        bool grown = false;
        for (auto s : to.sectors) {
            if (std::binary_search(cur.sectors.begin(), cur.sectors.end(), s)) continue;
            Core next = cur;
            next.sectors.insert(std::lower_bound(next.sectors.begin(), next.sectors.end(), s), s);
            if (check_core(region, next).valid) {
                cur = std::move(next);
                seq.push_back(cur);
                grown = true;
                break;
            }
        }
        if (!grown) throw PreconditionError("no single-sector step extends the core");
    }
    return seq;
}

// ---------------------------------------------------------------------------
// chain complexes

ChainComplexF2 cc_complex(const VeeringComplex& cx, const DynamicRegion& region, const Core& core) {
    auto R = core_loops(region, core);
    std::vector<std::size_t> gen_of(region.loops.size(), SIZE_MAX);
    ChainComplexF2 cc;
    for (std::size_t k = 0; k < R.size(); ++k) {
        gen_of[R[k]] = k;
        cc.generators.push_back(MultiLoop({region.loops[R[k]]}));
    }
    cc.boundary = F2Matrix(R.size(), R.size());
    for (const auto& mv : region.moves) {
        if (gen_of[mv.from] == SIZE_MAX || gen_of[mv.to] == SIZE_MAX) continue;
        // red sector: strum term of `from`; blue sector: unstrum term of `to`
        if (cx.sector_color(cx.sector(region.sector_label[mv.region_sector])) == Color::red)
            cc.boundary.toggle(gen_of[mv.to], gen_of[mv.from]);
        else
            cc.boundary.toggle(gen_of[mv.from], gen_of[mv.to]);
    }
    return cc;
}

ChainComplexF2 cc_multiloop_complex(const VeeringComplex& cx, const SweepClass& cls) {
    for (const auto& m : cls.members)
        if (!is_embedded(cx, m)) throw PreconditionError("sweep class is not sleek: " + format_multiloop(m) + " is not embedded");
    ChainComplexF2 cc;
    cc.generators = cls.members;
    const std::size_t n = cls.members.size();
    cc.boundary = F2Matrix(n, n);
    auto idx = [&](const MultiLoop& m) {
        auto i = cls.index_of(m);
        if (!i) throw std::logic_error("sweep class is not closed under strums");
        return *i;
    };
    PathIndex index(cx);
    for (std::size_t j = 0; j < n; ++j) {
        const MultiLoop& c = cls.members[j];
        for (const auto& site : diagonal_sites(c)) {
            if (cx.sector_color(cx.sector(c[site.loop][site.pos].id)) != Color::red) continue;
            for (Side side : {Side::left, Side::right}) cc.boundary.toggle(idx(strum(cx, c, site, side)), j);
        }
        for (std::size_t l = 0; l < c.size(); ++l)
            for (const auto& ps : index.sites(c[l], l))
                if (cx.sector_color(cx.sector(ps.sector)) == Color::blue) cc.boundary.toggle(idx(unstrum(cx, c, ps)), j);
    }
    return cc;
}

}  // namespace vbs
