#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "vbs/complex.hpp"
#include "vbs/lattice.hpp"
#include "vbs/multiloop.hpp"
#include "vbs/states.hpp"

namespace vbs {

// Edge multiplicities indexed by dense edge position (id order).
using CycleVector = IntVector<std::int64_t>;

struct CycleVectorLess {
    bool operator()(const CycleVector& a, const CycleVector& b) const;
};

bool is_cycle(const VeeringComplex& cx, const CycleVector& v);
CycleVector path_vector(const VeeringComplex& cx, const std::vector<Id>& edges);

// All ways of replacing every diagonal by one of its sector's boundary
// paths, deduplicated and sorted.
std::vector<MultiLoop> strum_resolutions(const VeeringComplex& cx, const MultiLoop& m);

CycleVector cycle_vector(const VeeringComplex& cx, const MultiLoop& m);

// Sorted, duplicate-free.
std::vector<CycleVector> epsilon_tilde(const VeeringComplex& cx, const HeegaardState& x);

bool sorted_sets_intersect(const std::vector<CycleVector>& a, const std::vector<CycleVector>& b);

// Class in H1(G) / span of sector boundaries, as Smith coordinates: torsion
// residues for invariant factors > 1, then the free coordinates.
struct H1MClass {
    std::vector<std::int64_t> torsion;
    std::vector<std::int64_t> free;

    friend auto operator<=>(const H1MClass&, const H1MClass&) = default;
    friend bool operator==(const H1MClass&, const H1MClass&) = default;
};

std::string format_class(const H1MClass& c);

class H1Lattice {
public:
    explicit H1Lattice(const VeeringComplex& cx);

    std::size_t cycle_rank() const { return static_cast<std::size_t>(non_tree_.size()); }
    const std::vector<Id>& basis_edges() const { return non_tree_; }
    // Values on the non-tree edges of a fixed spanning forest.
    IntVector<std::int64_t> cycle_coordinates(const CycleVector& v) const;
    // [dS] = left boundary path - right boundary path.
    CycleVector sector_boundary(const Sector& s) const;

    H1MClass classify(const CycleVector& v) const;
    // Coset representative by Hermite reduction, in cycle coordinates.
    IntVector<std::int64_t> canonical_representative(const CycleVector& v) const;
    H1MClass add(const H1MClass& a, const H1MClass& b) const;

    const std::vector<std::int64_t>& torsion_orders() const { return torsion_; }
    std::size_t free_rank() const { return free_rank_; }

private:
    const VeeringComplex* cx_;
    std::vector<Id> non_tree_;
    std::vector<std::size_t> non_tree_pos_;  // dense edge positions of non_tree_
    IntMatrix<std::int64_t> hnf_;
    IntMatrix<std::int64_t> smith_v_;
    std::vector<std::int64_t> invariants_;
    std::vector<std::int64_t> torsion_;
    std::size_t free_rank_ = 0;
};

struct GradingBlock {
    std::vector<std::size_t> members;  // state indices, ascending
    H1MClass spinc;
    bool has_top = false;
    bool has_bottom = false;
};

struct GradingPartition {
    std::vector<GradingBlock> blocks;     // ordered by least member
    std::vector<std::size_t> block_of;    // state index -> block
};

std::vector<std::vector<CycleVector>> epsilon_tilde_all(const VeeringComplex& cx, const std::vector<HeegaardState>& states,
                                                        unsigned threads = 1);

GradingPartition spinc_partition(const VeeringComplex& cx, const H1Lattice& lattice, const std::vector<HeegaardState>& states,
                                 unsigned threads = 1);

GradingPartition s_tilde_partition(const VeeringComplex& cx, const H1Lattice& lattice, const std::vector<HeegaardState>& states,
                                   const std::vector<std::vector<CycleVector>>& eps);
GradingPartition s_tilde_partition(const VeeringComplex& cx, const H1Lattice& lattice, const std::vector<HeegaardState>& states,
                                   unsigned threads = 1);

}  // namespace vbs
