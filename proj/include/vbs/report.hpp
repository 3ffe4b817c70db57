#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vbs/complex.hpp"
#include "vbs/grading.hpp"
#include "vbs/sweep.hpp"

namespace vbs {

enum class BlockStatus { sleek, not_sleek, unresolved };
const char* status_name(BlockStatus s);

struct BlockReport {
    std::size_t id = 0;
    std::vector<std::size_t> states;
    H1MClass spinc;
    bool has_top = false;
    bool has_bottom = false;
    BlockStatus status = BlockStatus::unresolved;
    std::optional<MultiLoop> witness;          // non-embedded member when not sleek
    std::size_t class_size = 0;                // sweep class used for homology
    bool class_matches_block = false;          // that class is exactly the block's state multi-loops
    std::optional<std::size_t> homology;       // sleek blocks only
    std::optional<std::int64_t> pairing;       // fibered reports only
    std::string note;
};

struct Report {
    std::string name;
    std::size_t states = 0;
    std::vector<BlockReport> blocks;
    std::size_t sleek_blocks = 0;
    std::size_t unresolved_blocks = 0;
    std::size_t homology_total = 0;
    bool top_bonus = false;
    std::size_t lower_bound = 0;
};

struct Caps {
    std::size_t sweep = kDefaultCap;
};

// states -> s-tilde blocks -> sleekness -> homology of the sleek classes.
Report sfh_report(const VeeringComplex& cx, const Caps& caps = {}, unsigned threads = 1);

struct FiberedRow {
    std::int64_t n = 0;
    std::size_t states = 0;
    std::size_t blocks = 0;
    std::size_t sleek = 0;
    std::size_t unresolved = 0;
    std::size_t homology = 0;
};

struct FiberedReport {
    Report report;
    std::map<Id, std::int64_t> diagonal_weight;  // per sector
    std::int64_t pairing_bottom = 0;
    std::int64_t pairing_top = 0;
    bool pairings_consistent = true;  // every block pairs to a single value
    std::vector<FiberedRow> rows;     // ascending n
};

// Extends a graph-edge weight to the diagonals; throws PreconditionError
// when the two boundary paths of some sector pair differently.
std::map<Id, std::int64_t> extend_to_diagonals(const VeeringComplex& cx, const std::map<Id, std::int64_t>& omega);
std::int64_t pairing(const VeeringComplex& cx, const std::map<Id, std::int64_t>& omega,
                     const std::map<Id, std::int64_t>& diagonal_weight, const MultiLoop& m);

FiberedReport fibered_report(const VeeringComplex& cx, const std::map<Id, std::int64_t>& omega, const Caps& caps = {},
                             unsigned threads = 1);

}  // namespace vbs
