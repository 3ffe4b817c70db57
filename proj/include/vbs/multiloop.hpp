#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vbs/complex.hpp"

namespace vbs {

// An edge of G+: a graph edge, or the diagonal of a sector (carrying the
// sector id).  Graph edges order before diagonals.
struct EdgeRef {
    enum Kind : std::uint8_t { graph = 0, diagonal = 1 };
    Kind kind = graph;
    Id id = 0;

    static EdgeRef edge(Id e) { return {graph, e}; }
    static EdgeRef diag(Id s) { return {diagonal, s}; }
    bool is_diagonal() const { return kind == diagonal; }

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

using Loop = std::vector<EdgeRef>;

Id tail(const VeeringComplex& cx, EdgeRef r);
Id head(const VeeringComplex& cx, EdgeRef r);

// Offset of the lexicographically least rotation.
std::size_t least_rotation(const Loop& loop);
Loop rotate_to(const Loop& loop, std::size_t start);
Loop normalize_loop(const Loop& loop);

// Multiset of loops.  Always kept normalized: every loop at its least
// rotation, loops sorted.  Equality of normalized values is the identity
// used for all set membership.
class MultiLoop {
public:
    MultiLoop() = default;
    explicit MultiLoop(std::vector<Loop> loops);

    const std::vector<Loop>& loops() const { return loops_; }
    bool empty() const { return loops_.empty(); }
    std::size_t size() const { return loops_.size(); }
    const Loop& operator[](std::size_t i) const { return loops_[i]; }
    std::size_t edge_count() const;
    std::size_t diagonal_count() const;
    bool graph_only() const { return diagonal_count() == 0; }

    friend auto operator<=>(const MultiLoop&, const MultiLoop&) = default;
    friend bool operator==(const MultiLoop&, const MultiLoop&) = default;

private:
    std::vector<Loop> loops_;
};

// Every loop is nonempty and composes head to tail.
bool is_closed(const VeeringComplex& cx, const Loop& loop);
void check_multiloop(const VeeringComplex& cx, const MultiLoop& m);

// Vertex visits (tails of edges) across all loops, sorted, with repeats.
std::vector<Id> visited_vertices(const VeeringComplex& cx, const MultiLoop& m);
// No vertex of G+ is visited twice across the whole multiset.
bool is_embedded(const VeeringComplex& cx, const MultiLoop& m);

std::string edge_ref_name(EdgeRef r);
std::string format_loop(const Loop& loop);
std::string format_multiloop(const MultiLoop& m);

// Text form: loops separated by ';', edges by spaces or commas, diagonals
// written "d<sector-id>".  "" or "{}" is the empty multi-loop.
MultiLoop parse_multiloop(const VeeringComplex& cx, const std::string& text);

}  // namespace vbs
