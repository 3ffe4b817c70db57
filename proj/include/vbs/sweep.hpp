#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vbs/complex.hpp"
#include "vbs/grading.hpp"
#include "vbs/multiloop.hpp"

namespace vbs {

constexpr std::size_t kDefaultCap = 1000000;

struct CapExceeded : std::runtime_error {
    CapExceeded(const std::string& what, std::vector<MultiLoop> partial_set, std::vector<MultiLoop> frontier_set)
        : std::runtime_error(what), partial(std::move(partial_set)), frontier(std::move(frontier_set)) {}
    std::vector<MultiLoop> partial;
    std::vector<MultiLoop> frontier;
};

// A diagonal occurrence: position pos of loop number loop.
struct DiagonalSite {
    std::size_t loop = 0;
    std::size_t pos = 0;
};

// A full boundary path of a sector occurring as a contiguous (cyclic)
// subpath, starting at position pos.
struct PathSite {
    std::size_t loop = 0;
    std::size_t pos = 0;
    Id sector = 0;
    Side side = Side::left;
    std::size_t length = 0;
};

// A loop-level move with positions tracked: position_map[q] is where old
// position q sits in the normalized result (SIZE_MAX if q was replaced);
// inserted is where the new path (or diagonal) starts.
struct LoopMove {
    Loop result;
    std::vector<std::size_t> position_map;
    std::size_t inserted = 0;
};

// Finds boundary paths quickly: each edge is the bottom side of exactly one
// sector, so at most one path can start at a given position.
class PathIndex {
public:
    explicit PathIndex(const VeeringComplex& cx);
    const VeeringComplex& complex() const { return *cx_; }
    std::vector<PathSite> sites(const Loop& loop, std::size_t loop_index = 0) const;
    const std::vector<Id>& path(std::size_t sector_index, Side side) const {
        return side == Side::left ? left_[sector_index] : right_[sector_index];
    }

private:
    const VeeringComplex* cx_;
    std::vector<std::vector<Id>> left_, right_;
    std::vector<std::pair<std::size_t, Side>> owner_;  // per dense edge position
};

std::vector<DiagonalSite> diagonal_sites(const MultiLoop& m);
std::vector<PathSite> path_sites(const VeeringComplex& cx, const MultiLoop& m);

LoopMove strum_loop(const VeeringComplex& cx, const Loop& c, std::size_t pos, Side side);
LoopMove unstrum_loop(const VeeringComplex& cx, const Loop& c, std::size_t pos, Id sector, Side side);

MultiLoop strum(const VeeringComplex& cx, const MultiLoop& m, DiagonalSite site, Side side);
MultiLoop unstrum(const VeeringComplex& cx, const MultiLoop& m, const PathSite& site);

// `to` is the strum of `from` at a diagonal of `sector` towards `side`.
struct SweepMove {
    std::size_t from = 0;
    std::size_t to = 0;
    Id sector = 0;
    Side side = Side::left;

    friend auto operator<=>(const SweepMove&, const SweepMove&) = default;
    friend bool operator==(const SweepMove&, const SweepMove&) = default;
};

struct SweepClass {
    MultiLoop base;
    std::vector<MultiLoop> members;  // sorted
    std::vector<SweepMove> moves;    // sorted, duplicate-free

    std::optional<std::size_t> index_of(const MultiLoop& m) const;
};

SweepClass sweep_class(const VeeringComplex& cx, const MultiLoop& m, std::size_t cap = kDefaultCap);

struct SleekResult {
    bool sleek = true;
    std::optional<MultiLoop> witness;  // first non-embedded member found
    std::size_t explored = 0;
};

// Stops at the first non-embedded member in breadth-first order.
SleekResult is_sleek(const VeeringComplex& cx, const MultiLoop& m, std::size_t cap = kDefaultCap);

Loop concatenate(const VeeringComplex& cx, const Loop& c1, const Loop& c2, Id v);

std::vector<MultiLoop> vertex_resolutions(const VeeringComplex& cx, const MultiLoop& m);

std::vector<MultiLoop> representatives_of_cycle(const VeeringComplex& cx, const CycleVector& v, std::size_t cap = kDefaultCap);

struct BranchBipartition {
    std::vector<std::vector<Id>> loops;  // branch_loops order
    std::vector<bool> east;              // the first loop is eastward
    std::size_t east_count() const;
    std::size_t west_count() const;
};

std::optional<BranchBipartition> orientability_bipartition(const VeeringComplex& cx);

struct BranchCount {
    std::size_t east = 0;
    std::size_t west = 0;
    std::size_t unions = 0;  // same-label unions examined, the empty one once
    std::size_t count = 0;   // of those, embedded and sleek
    bool top_block_sleek = false;
    std::size_t bound = 0;
    std::vector<MultiLoop> sleek_unions;
};

BranchCount sleek_branch_count(const VeeringComplex& cx, std::size_t cap = kDefaultCap, unsigned threads = 1);

// Whether some state of the block has a sleek multi-loop.
bool block_is_sleek(const VeeringComplex& cx, const std::vector<HeegaardState>& states, const std::vector<std::size_t>& members,
                    std::size_t cap);

}  // namespace vbs
