#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vbs {

using Id = std::uint32_t;

enum class Color : std::uint8_t { blue, red };
enum class Side : std::uint8_t { left, right };

const char* color_name(Color c);
const char* side_name(Side s);

struct Vertex {
    Id id = 0;
    Color color = Color::blue;
};

struct Edge {
    Id id = 0;
    Id from = 0;
    Id to = 0;
};

// Two (incoming, outgoing) edge pairs at a vertex: the smooth strands.
struct Smoothing {
    Id vertex = 0;
    std::array<std::pair<Id, Id>, 2> pairs{};
};

struct Sector {
    Id id = 0;
    Id bottom = 0;
    Id top = 0;
    Id left_bottom = 0;
    Id right_bottom = 0;
    std::vector<Id> left_top;
    std::vector<Id> right_top;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by operations whose documented precondition does not hold.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dual graph with colors, smoothings and diamond sectors.  All vectors are
// kept sorted by id; lookups go through binary search so ids may be sparse.
struct VeeringComplex {
    std::string name;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Smoothing> smoothings;
    std::vector<Sector> sectors;
    std::optional<std::map<Id, std::int64_t>> fiber_cocycle;

    void sort_by_id();

    // Dense positions in the sorted vectors; throw std::out_of_range on a
    // missing id.
    std::size_t vertex_index(Id v) const;
    std::size_t edge_index(Id e) const;
    std::size_t sector_index(Id s) const;
    bool has_vertex(Id v) const;
    bool has_edge(Id e) const;
    bool has_sector(Id s) const;

    const Vertex& vertex(Id v) const { return vertices[vertex_index(v)]; }
    const Edge& edge(Id e) const { return edges[edge_index(e)]; }
    const Sector& sector(Id s) const { return sectors[sector_index(s)]; }
    Color color(Id v) const { return vertex(v).color; }

    // A sector takes the color of its top vertex.
    Color sector_color(const Sector& s) const { return color(s.top); }
    bool is_toggle(const Sector& s) const { return color(s.bottom) != color(s.top); }
};

// Bottom side followed by the whole top chain on that side.
std::vector<Id> boundary_path(const Sector& s, Side side);
Id side_vertex(const VeeringComplex& cx, const Sector& s, Side side);

struct CheckResult {
    std::string check_id;
    bool passed = true;
    std::vector<Id> offending;
    std::string message;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    std::vector<const CheckResult*> failures() const;
};

ValidationReport validate(const VeeringComplex& cx);

VeeringComplex parse_complex(const std::string& document);
VeeringComplex load_complex_file(const std::string& path);
std::string serialize(const VeeringComplex& cx);

// Smooth cycles of G, each given as a rotation-normalized edge id list,
// sorted.  Every edge appears on exactly one loop.
std::vector<std::vector<Id>> branch_loops(const VeeringComplex& cx);

// Successor of edge e along its branch loop: the outgoing edge paired with
// e at head(e).
Id smooth_successor(const VeeringComplex& cx, Id e);

bool is_connected(const VeeringComplex& cx);

// n-fold cyclic cover; vertex (v,k) gets id v*n+k, likewise edges and
// sectors.  The result is validated and must be connected.
VeeringComplex cyclic_cover(const VeeringComplex& cx, int n, const std::map<Id, std::int64_t>& weight);

}  // namespace vbs
