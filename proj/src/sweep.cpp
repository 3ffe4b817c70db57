#include "vbs/sweep.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace vbs {

namespace {

constexpr std::size_t kGone = SIZE_MAX;

std::size_t cyc(std::ptrdiff_t i, std::size_t n) {
    auto m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

// Normalizes raw and composes the rotation into the position map.
LoopMove finish_move(Loop raw, std::vector<std::size_t> map, std::size_t inserted_raw) {
    const std::size_t n = raw.size();
    const std::size_t r = least_rotation(raw);
    auto shift = [&](std::size_t i) { return (i + n - r) % n; };
    for (auto& q : map)
        if (q != kGone) q = shift(q);
    LoopMove mv;
    mv.result = rotate_to(raw, r);
    mv.position_map = std::move(map);
    mv.inserted = shift(inserted_raw);
    return mv;
}

bool path_matches(const Loop& c, std::size_t pos, const std::vector<Id>& path) {
    if (path.size() > c.size()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        EdgeRef r = c[(pos + i) % c.size()];
        if (r.is_diagonal() || r.id != path[i]) return false;
    }
    return true;
}

}  // namespace

PathIndex::PathIndex(const VeeringComplex& cx) : cx_(&cx), owner_(cx.edges.size(), {SIZE_MAX, Side::left}) {
    for (std::size_t i = 0; i < cx.sectors.size(); ++i) {
        const Sector& s = cx.sectors[i];
        left_.push_back(boundary_path(s, Side::left));
        right_.push_back(boundary_path(s, Side::right));
        owner_[cx.edge_index(s.left_bottom)] = {i, Side::left};
        owner_[cx.edge_index(s.right_bottom)] = {i, Side::right};
    }
}

std::vector<PathSite> PathIndex::sites(const Loop& loop, std::size_t loop_index) const {
    std::vector<PathSite> out;
    for (std::size_t p = 0; p < loop.size(); ++p) {
        if (loop[p].is_diagonal()) continue;
        auto [si, side] = owner_[cx_->edge_index(loop[p].id)];
        if (si == SIZE_MAX) continue;
        const auto& path = this->path(si, side);
        if (path_matches(loop, p, path)) out.push_back({loop_index, p, cx_->sectors[si].id, side, path.size()});
    }
    return out;
}

std::vector<DiagonalSite> diagonal_sites(const MultiLoop& m) {
    std::vector<DiagonalSite> out;
    for (std::size_t l = 0; l < m.size(); ++l)
        for (std::size_t p = 0; p < m[l].size(); ++p)
            if (m[l][p].is_diagonal()) out.push_back({l, p});
    return out;
}

std::vector<PathSite> path_sites(const VeeringComplex& cx, const MultiLoop& m) {
    PathIndex index(cx);
    std::vector<PathSite> out;
    for (std::size_t l = 0; l < m.size(); ++l) {
        auto s = index.sites(m[l], l);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

LoopMove strum_loop(const VeeringComplex& cx, const Loop& c, std::size_t pos, Side side) {
    if (pos >= c.size() || !c[pos].is_diagonal()) throw PreconditionError("strum site is not a diagonal");
    auto path = boundary_path(cx.sector(c[pos].id), side);
    const std::size_t L = path.size();
    Loop raw(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(pos));
    for (Id e : path) raw.push_back(EdgeRef::edge(e));
    raw.insert(raw.end(), c.begin() + static_cast<std::ptrdiff_t>(pos) + 1, c.end());
    std::vector<std::size_t> map(c.size());
    for (std::size_t q = 0; q < c.size(); ++q) map[q] = q < pos ? q : q == pos ? kGone : q + L - 1;
    return finish_move(std::move(raw), std::move(map), pos);
}

LoopMove unstrum_loop(const VeeringComplex& cx, const Loop& c, std::size_t pos, Id sector, Side side) {
    auto path = boundary_path(cx.sector(sector), side);
    if (pos >= c.size() || !path_matches(c, pos, path)) throw PreconditionError("unstrum site is not a full boundary path");
    const std::size_t n = c.size(), L = path.size();
    Loop raw{EdgeRef::diag(sector)};
    for (std::size_t i = L; i < n; ++i) raw.push_back(c[(pos + i) % n]);
    std::vector<std::size_t> map(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t off = cyc(static_cast<std::ptrdiff_t>(q) - static_cast<std::ptrdiff_t>(pos), n);
        map[q] = off < L ? kGone : 1 + off - L;
    }
    return finish_move(std::move(raw), std::move(map), 0);
}

MultiLoop strum(const VeeringComplex& cx, const MultiLoop& m, DiagonalSite site, Side side) {
    if (site.loop >= m.size()) throw PreconditionError("strum site out of range");
    std::vector<Loop> loops = m.loops();
    loops[site.loop] = strum_loop(cx, m[site.loop], site.pos, side).result;
    return MultiLoop(std::move(loops));
}

MultiLoop unstrum(const VeeringComplex& cx, const MultiLoop& m, const PathSite& site) {
    if (site.loop >= m.size()) throw PreconditionError("unstrum site out of range");
    std::vector<Loop> loops = m.loops();
    loops[site.loop] = unstrum_loop(cx, m[site.loop], site.pos, site.sector, site.side).result;
    return MultiLoop(std::move(loops));
}

// ---------------------------------------------------------------------------
// closure

std::optional<std::size_t> SweepClass::index_of(const MultiLoop& m) const {
    auto it = std::lower_bound(members.begin(), members.end(), m);
    if (it == members.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
}

namespace {

// Breadth-first closure.  on_new(member) is called for each member in
// discovery order (base first) and may return false to stop early.
template <typename OnNew>
void explore(const VeeringComplex& cx, const MultiLoop& base, std::size_t cap, std::vector<MultiLoop>& order,
             std::vector<SweepMove>* moves, OnNew&& on_new) {
    PathIndex index(cx);
    std::map<MultiLoop, std::size_t> seen;
    order.clear();
    auto visit = [&](const MultiLoop& m, std::size_t done) -> std::pair<std::size_t, bool> {
        auto it = seen.find(m);
        if (it != seen.end()) return {it->second, true};
        if (order.size() >= cap) {
            std::vector<MultiLoop> frontier(order.begin() + static_cast<std::ptrdiff_t>(done), order.end());
            throw CapExceeded("sweep class exceeds cap of " + std::to_string(cap), order, std::move(frontier));
        }
        seen.emplace(m, order.size());
        order.push_back(m);
        return {order.size() - 1, on_new(order.back())};
    };
    if (!visit(base, 0).second) return;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const MultiLoop cur = order[i];
        for (const auto& site : diagonal_sites(cur)) {
            Id sector = cur[site.loop][site.pos].id;
            for (Side side : {Side::left, Side::right}) {
                auto [j, go] = visit(strum(cx, cur, site, side), i);
                if (moves) moves->push_back({i, j, sector, side});
                if (!go) return;
            }
        }
        for (std::size_t l = 0; l < cur.size(); ++l) {
            for (const auto& site : index.sites(cur[l], l)) {
                auto [j, go] = visit(unstrum(cx, cur, site), i);
                if (moves) moves->push_back({j, i, site.sector, site.side});
                if (!go) return;
            }
        }
    }
}

}  // namespace

SweepClass sweep_class(const VeeringComplex& cx, const MultiLoop& m, std::size_t cap) {
    check_multiloop(cx, m);
    std::vector<MultiLoop> order;
    std::vector<SweepMove> raw_moves;
    explore(cx, m, cap, order, &raw_moves, [](const MultiLoop&) { return true; });

    SweepClass cls;
    cls.base = m;
    std::vector<std::size_t> perm(order.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
    std::vector<std::size_t> rank(order.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        rank[perm[k]] = k;
        cls.members.push_back(order[perm[k]]);
    }
    for (auto mv : raw_moves) cls.moves.push_back({rank[mv.from], rank[mv.to], mv.sector, mv.side});
    std::sort(cls.moves.begin(), cls.moves.end());
    cls.moves.erase(std::unique(cls.moves.begin(), cls.moves.end()), cls.moves.end());
    return cls;
}

SleekResult is_sleek(const VeeringComplex& cx, const MultiLoop& m, std::size_t cap) {
    check_multiloop(cx, m);
    SleekResult res;
    std::vector<MultiLoop> order;
    explore(cx, m, cap, order, nullptr, [&](const MultiLoop& x) {
        if (is_embedded(cx, x)) return true;
        res.sleek = false;
        res.witness = x;
        return false;
    });
    res.explored = order.size();
    return res;
}

// ---------------------------------------------------------------------------
// resolutions

Loop concatenate(const VeeringComplex& cx, const Loop& c1, const Loop& c2, Id v) {
    if (c1.empty() || c2.empty()) throw PreconditionError("concatenation needs two nonempty loops");
    std::size_t i = c1.size(), j = c2.size();
    for (std::size_t k = 0; k < c1.size() && i == c1.size(); ++k)
        if (head(cx, c1[k]) == v) i = k;
    for (std::size_t k = 0; k < c2.size() && j == c2.size(); ++k)
        if (tail(cx, c2[k]) == v) j = k;
    if (i == c1.size() || j == c2.size()) throw PreconditionError("vertex " + std::to_string(v) + " is not shared by both loops");
    Loop out = rotate_to(c1, (i + 1) % c1.size());
    Loop second = rotate_to(c2, j);
    out.insert(out.end(), second.begin(), second.end());
    return normalize_loop(out);
}

std::vector<MultiLoop> vertex_resolutions(const VeeringComplex& cx, const MultiLoop& m) {
    if (!m.graph_only()) throw PreconditionError("vertex resolutions need a multi-loop without diagonals");
    std::map<Id, std::vector<std::pair<std::size_t, std::size_t>>> passes;
    for (std::size_t l = 0; l < m.size(); ++l)
        for (std::size_t p = 0; p < m[l].size(); ++p) passes[tail(cx, m[l][p])].push_back({l, p});

    std::set<MultiLoop> out;
    for (const auto& [v, ps] : passes) {
        for (std::size_t a = 0; a < ps.size(); ++a) {
            for (std::size_t b = a + 1; b < ps.size(); ++b) {
                auto [l1, p1] = ps[a];
                auto [l2, p2] = ps[b];
                std::vector<Loop> loops;
                for (std::size_t l = 0; l < m.size(); ++l)
                    if (l != l1 && l != l2) loops.push_back(m[l]);
                if (l1 == l2) {
                    const Loop& c = m[l1];
                    Loop first(c.begin() + static_cast<std::ptrdiff_t>(p1), c.begin() + static_cast<std::ptrdiff_t>(p2));
                    Loop second(c.begin() + static_cast<std::ptrdiff_t>(p2), c.end());
                    second.insert(second.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(p1));
                    loops.push_back(std::move(first));
                    loops.push_back(std::move(second));
                } else {
                    Loop merged = rotate_to(m[l1], p1);
                    Loop other = rotate_to(m[l2], p2);
                    merged.insert(merged.end(), other.begin(), other.end());
                    loops.push_back(std::move(merged));
                }
                MultiLoop r(std::move(loops));
                if (r != m) out.insert(std::move(r));
            }
        }
    }
    return {out.begin(), out.end()};
}

std::vector<MultiLoop> representatives_of_cycle(const VeeringComplex& cx, const CycleVector& v, std::size_t cap) {
    if (!is_cycle(cx, v)) throw PreconditionError("representatives need a boundary-zero vector");
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) < 0) throw PreconditionError("representatives need a non-negative vector");

    // Edge copies, numbered densely.
    std::vector<Id> copy_edge;
    for (std::size_t i = 0; i < cx.edges.size(); ++i)
        for (std::int64_t k = 0; k < v(static_cast<Eigen::Index>(i)); ++k) copy_edge.push_back(cx.edges[i].id);
    const std::size_t copies = copy_edge.size();

    std::vector<std::vector<std::size_t>> ins(cx.vertices.size()), outs(cx.vertices.size());
    for (std::size_t c = 0; c < copies; ++c) {
        const Edge& e = cx.edge(copy_edge[c]);
        ins[cx.vertex_index(e.to)].push_back(c);
        outs[cx.vertex_index(e.from)].push_back(c);
    }
    const double raw_limit = std::min(1e8, static_cast<double>(std::max<std::size_t>(cap, 1)) * 1000.0);
    double combos = 1;
    for (const auto& in : ins)
        for (std::size_t k = 2; k <= in.size(); ++k) combos *= static_cast<double>(k);
    if (combos > raw_limit)
        throw CapExceeded("too many vertex matchings (" + std::to_string(combos) + ") to enumerate", {}, {});

    std::vector<std::vector<std::size_t>> perm(cx.vertices.size());
    for (std::size_t x = 0; x < perm.size(); ++x) {
        perm[x].resize(ins[x].size());
        std::iota(perm[x].begin(), perm[x].end(), 0);
    }
    std::set<MultiLoop> out;
    std::vector<std::size_t> succ(copies);
    std::vector<bool> used(copies);
    for (;;) {
        for (std::size_t x = 0; x < perm.size(); ++x)
            for (std::size_t i = 0; i < ins[x].size(); ++i) succ[ins[x][i]] = outs[x][perm[x][i]];
        std::fill(used.begin(), used.end(), false);
        std::vector<Loop> loops;
        for (std::size_t c = 0; c < copies; ++c) {
            if (used[c]) continue;
            Loop loop;
            for (std::size_t d = c; !used[d]; d = succ[d]) {
                used[d] = true;
                loop.push_back(EdgeRef::edge(copy_edge[d]));
            }
            loops.push_back(std::move(loop));
        }
        out.insert(MultiLoop(std::move(loops)));
        if (out.size() > cap) throw CapExceeded("representatives exceed cap of " + std::to_string(cap), {out.begin(), out.end()}, {});

        std::size_t x = 0;
        while (x < perm.size() && !std::next_permutation(perm[x].begin(), perm[x].end())) ++x;
        if (x == perm.size()) break;
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// branch loops

std::size_t BranchBipartition::east_count() const { return static_cast<std::size_t>(std::count(east.begin(), east.end(), true)); }
std::size_t BranchBipartition::west_count() const { return east.size() - east_count(); }

std::optional<BranchBipartition> orientability_bipartition(const VeeringComplex& cx) {
    BranchBipartition bp;
    bp.loops = branch_loops(cx);
    std::vector<std::size_t> loop_of(cx.edges.size());
    for (std::size_t l = 0; l < bp.loops.size(); ++l)
        for (Id e : bp.loops[l]) loop_of[cx.edge_index(e)] = l;

    std::vector<std::vector<std::size_t>> adj(bp.loops.size());
    for (const auto& v : cx.vertices) {
        std::vector<std::size_t> through;
        for (const auto& e : cx.edges)
            if (e.from == v.id) through.push_back(loop_of[cx.edge_index(e.id)]);
        if (through.size() != 2 || through[0] == through[1]) return std::nullopt;
        adj[through[0]].push_back(through[1]);
        adj[through[1]].push_back(through[0]);
    }
    std::vector<int> label(bp.loops.size(), -1);
    for (std::size_t start = 0; start < bp.loops.size(); ++start) {
        if (label[start] != -1) continue;
        label[start] = 0;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t a = queue.front();
            queue.pop_front();
            for (std::size_t b : adj[a]) {
                if (label[b] == -1) {
                    label[b] = 1 - label[a];
                    queue.push_back(b);
                } else if (label[b] == label[a]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int l : label) bp.east.push_back(l == 0);
    return bp;
}

bool block_is_sleek(const VeeringComplex& cx, const std::vector<HeegaardState>& states, const std::vector<std::size_t>& members,
                    std::size_t cap) {
    for (std::size_t i : members)
        if (is_sleek(cx, state_multiloop(cx, states[i]), cap).sleek) return true;
    return false;
}

BranchCount sleek_branch_count(const VeeringComplex& cx, std::size_t cap, unsigned threads) {
    auto bp = orientability_bipartition(cx);
    if (!bp) throw PreconditionError("no branch-loop bipartition exists");
    BranchCount bc;
    std::vector<std::vector<Loop>> by_label(2);
    for (std::size_t l = 0; l < bp->loops.size(); ++l) {
        Loop loop;
        for (Id e : bp->loops[l]) loop.push_back(EdgeRef::edge(e));
        by_label[bp->east[l] ? 0 : 1].push_back(std::move(loop));
    }
    bc.east = by_label[0].size();
    bc.west = by_label[1].size();
    for (std::size_t lab = 0; lab < 2; ++lab) {
        const auto& group = by_label[lab];
        if (group.size() > 30) throw PreconditionError("too many branch loops with one label to enumerate");
        for (std::uint64_t mask = lab == 0 ? 0 : 1; mask < (std::uint64_t{1} << group.size()); ++mask) {
            std::vector<Loop> chosen;
            for (std::size_t i = 0; i < group.size(); ++i)
                if ((mask >> i) & 1) chosen.push_back(group[i]);
            MultiLoop m(std::move(chosen));
            ++bc.unions;
            if (is_embedded(cx, m) && is_sleek(cx, m, cap).sleek) {
                ++bc.count;
                bc.sleek_unions.push_back(std::move(m));
            }
        }
    }
    auto states = enumerate_states(cx, threads);
    H1Lattice lattice(cx);
    auto part = s_tilde_partition(cx, lattice, states, threads);
    for (const auto& b : part.blocks)
        if (b.has_top) bc.top_block_sleek = block_is_sleek(cx, states, b.members, cap);
    bc.bound = bc.count + (bc.top_block_sleek ? 0 : 1);
    return bc;
}

}  // namespace vbs
