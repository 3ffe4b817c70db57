#include "vbs/grading.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>

#include "vbs/parallel.hpp"

namespace vbs {

bool CycleVectorLess::operator()(const CycleVector& a, const CycleVector& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

bool is_cycle(const VeeringComplex& cx, const CycleVector& v) {
    if (static_cast<std::size_t>(v.size()) != cx.edges.size()) return false;
    std::vector<std::int64_t> net(cx.vertices.size(), 0);
    for (std::size_t i = 0; i < cx.edges.size(); ++i) {
        net[cx.vertex_index(cx.edges[i].from)] -= v(static_cast<Eigen::Index>(i));
        net[cx.vertex_index(cx.edges[i].to)] += v(static_cast<Eigen::Index>(i));
    }
    return std::all_of(net.begin(), net.end(), [](std::int64_t x) { return x == 0; });
}

CycleVector path_vector(const VeeringComplex& cx, const std::vector<Id>& edges) {
    CycleVector v = CycleVector::Zero(static_cast<Eigen::Index>(cx.edges.size()));
    for (Id e : edges) v(static_cast<Eigen::Index>(cx.edge_index(e))) += 1;
    return v;
}

std::vector<MultiLoop> strum_resolutions(const VeeringComplex& cx, const MultiLoop& m) {
    const std::size_t k = m.diagonal_count();
    if (k > 30) throw PreconditionError("too many diagonals to resolve exhaustively");
    std::set<MultiLoop> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Loop> loops;
        std::size_t bit = 0;
        for (const auto& loop : m.loops()) {
            Loop resolved;
            for (EdgeRef r : loop) {
                if (!r.is_diagonal()) {
                    resolved.push_back(r);
                    continue;
                }
                Side side = (mask >> bit++) & 1 ? Side::right : Side::left;
                for (Id e : boundary_path(cx.sector(r.id), side)) resolved.push_back(EdgeRef::edge(e));
            }
            loops.push_back(std::move(resolved));
        }
        out.insert(MultiLoop(std::move(loops)));
    }
    return {out.begin(), out.end()};
}

CycleVector cycle_vector(const VeeringComplex& cx, const MultiLoop& m) {
    CycleVector v = CycleVector::Zero(static_cast<Eigen::Index>(cx.edges.size()));
    for (const auto& loop : m.loops())
        for (EdgeRef r : loop) {
            if (r.is_diagonal()) throw PreconditionError("cycle_vector needs a multi-loop without diagonals");
            v(static_cast<Eigen::Index>(cx.edge_index(r.id))) += 1;
        }
    return v;
}

std::vector<CycleVector> epsilon_tilde(const VeeringComplex& cx, const HeegaardState& x) {
    std::vector<CycleVector> out;
    for (const auto& r : strum_resolutions(cx, state_multiloop(cx, x))) out.push_back(cycle_vector(cx, r));
    CycleVectorLess less;
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end(), [](const CycleVector& a, const CycleVector& b) { return a == b; }), out.end());
    return out;
}

bool sorted_sets_intersect(const std::vector<CycleVector>& a, const std::vector<CycleVector>& b) {
    CycleVectorLess less;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (less(*i, *j))
            ++i;
        else if (less(*j, *i))
            ++j;
        else
            return true;
    }
    return false;
}

std::string format_class(const H1MClass& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.free.size(); ++i) s += (i ? "," : "") + std::to_string(c.free[i]);
    s += ")";
    if (!c.torsion.empty()) {
        s += "+t(";
        for (std::size_t i = 0; i < c.torsion.size(); ++i) s += (i ? "," : "") + std::to_string(c.torsion[i]);
        s += ")";
    }
    return s;
}

// ---------------------------------------------------------------------------

H1Lattice::H1Lattice(const VeeringComplex& cx) : cx_(&cx) {
    std::vector<std::size_t> parent(cx.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < cx.edges.size(); ++i) {
        auto a = find(cx.vertex_index(cx.edges[i].from));
        auto b = find(cx.vertex_index(cx.edges[i].to));
        if (a != b) {
            parent[a] = b;
        } else {
            non_tree_.push_back(cx.edges[i].id);
            non_tree_pos_.push_back(i);
        }
    }
    const auto r = static_cast<Eigen::Index>(non_tree_.size());
    IntMatrix<std::int64_t> A(static_cast<Eigen::Index>(cx.sectors.size()), r);
    for (std::size_t i = 0; i < cx.sectors.size(); ++i)
        A.row(static_cast<Eigen::Index>(i)) = cycle_coordinates(sector_boundary(cx.sectors[i])).transpose();
    hnf_ = hermite_normal_form(A);
    auto snf = smith_normal_form(A);
    smith_v_ = snf.V;
    invariants_ = snf.invariants;
    for (auto d : invariants_)
        if (d > 1) torsion_.push_back(d);
    free_rank_ = non_tree_.size() - invariants_.size();
}

IntVector<std::int64_t> H1Lattice::cycle_coordinates(const CycleVector& v) const {
    IntVector<std::int64_t> x(static_cast<Eigen::Index>(non_tree_pos_.size()));
    for (std::size_t i = 0; i < non_tree_pos_.size(); ++i) x(static_cast<Eigen::Index>(i)) = v(static_cast<Eigen::Index>(non_tree_pos_[i]));
    return x;
}

CycleVector H1Lattice::sector_boundary(const Sector& s) const {
    return path_vector(*cx_, boundary_path(s, Side::left)) - path_vector(*cx_, boundary_path(s, Side::right));
}

H1MClass H1Lattice::classify(const CycleVector& v) const {
    if (!is_cycle(*cx_, v)) throw PreconditionError("h1m_class needs a boundary-zero vector");
    IntVector<std::int64_t> y = smith_v_.transpose() * cycle_coordinates(v);
    H1MClass c;
    for (std::size_t t = 0; t < invariants_.size(); ++t)
        if (invariants_[t] > 1) c.torsion.push_back(floor_mod(y(static_cast<Eigen::Index>(t)), invariants_[t]));
    for (Eigen::Index t = static_cast<Eigen::Index>(invariants_.size()); t < y.size(); ++t) c.free.push_back(y(t));
    return c;
}

IntVector<std::int64_t> H1Lattice::canonical_representative(const CycleVector& v) const {
    if (!is_cycle(*cx_, v)) throw PreconditionError("h1m_class needs a boundary-zero vector");
    return hnf_reduce(hnf_, cycle_coordinates(v));
}

H1MClass H1Lattice::add(const H1MClass& a, const H1MClass& b) const {
    H1MClass c;
    for (std::size_t i = 0; i < torsion_.size(); ++i) c.torsion.push_back(floor_mod(a.torsion[i] + b.torsion[i], torsion_[i]));
    for (std::size_t i = 0; i < a.free.size(); ++i) c.free.push_back(a.free[i] + b.free[i]);
    return c;
}

// ---------------------------------------------------------------------------

namespace {

void flag_canonical(const VeeringComplex& cx, const std::vector<HeegaardState>& states, GradingPartition& p) {
    auto [top, bot] = canonical_states(cx);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == top) p.blocks[p.block_of[i]].has_top = true;
        if (states[i] == bot) p.blocks[p.block_of[i]].has_bottom = true;
    }
}

// Blocks from a labelling where each state's label is the least state index
// in its class.
GradingPartition from_roots(const std::vector<std::size_t>& root, const std::vector<H1MClass>& classes) {
    GradingPartition p;
    p.block_of.assign(root.size(), 0);
    std::vector<std::size_t> block_of_root(root.size(), SIZE_MAX);
    for (std::size_t i = 0; i < root.size(); ++i) {
        std::size_t r = root[i];
        if (block_of_root[r] == SIZE_MAX) {
            block_of_root[r] = p.blocks.size();
            p.blocks.push_back({});
            p.blocks.back().spinc = classes[i];
        }
        p.block_of[i] = block_of_root[r];
        p.blocks[block_of_root[r]].members.push_back(i);
    }
    return p;
}

}  // namespace

std::vector<std::vector<CycleVector>> epsilon_tilde_all(const VeeringComplex& cx, const std::vector<HeegaardState>& states,
                                                        unsigned threads) {
    std::vector<std::vector<CycleVector>> eps(states.size());
    parallel_for(states.size(), threads, [&](std::size_t i) { eps[i] = epsilon_tilde(cx, states[i]); });
    return eps;
}

GradingPartition spinc_partition(const VeeringComplex& cx, const H1Lattice& lattice, const std::vector<HeegaardState>& states,
                                 unsigned threads) {
    std::vector<H1MClass> classes(states.size());
    parallel_for(states.size(), threads, [&](std::size_t i) {
        auto res = strum_resolutions(cx, state_multiloop(cx, states[i]));
        classes[i] = lattice.classify(cycle_vector(cx, res.front()));
    });
    std::vector<std::size_t> root(states.size());
    std::map<H1MClass, std::size_t> first;
    for (std::size_t i = 0; i < states.size(); ++i) root[i] = first.emplace(classes[i], i).first->second;
    auto p = from_roots(root, classes);
    flag_canonical(cx, states, p);
    return p;
}

GradingPartition s_tilde_partition(const VeeringComplex& cx, const H1Lattice& lattice, const std::vector<HeegaardState>& states,
                                   const std::vector<std::vector<CycleVector>>& eps) {
    const std::size_t n = states.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto a = find(i), b = find(j);
            if (a == b || !sorted_sets_intersect(eps[i], eps[j])) continue;
            parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::size_t> root(n);
    std::vector<H1MClass> classes(n);
    for (std::size_t i = 0; i < n; ++i) {
        root[i] = find(i);
        classes[i] = lattice.classify(eps[i].front());
    }
    auto p = from_roots(root, classes);
    flag_canonical(cx, states, p);
    return p;
}

GradingPartition s_tilde_partition(const VeeringComplex& cx, const H1Lattice& lattice, const std::vector<HeegaardState>& states,
                                   unsigned threads) {
    return s_tilde_partition(cx, lattice, states, epsilon_tilde_all(cx, states, threads));
}

}  // namespace vbs
