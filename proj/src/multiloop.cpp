#include "vbs/multiloop.hpp"

#include <algorithm>
#include <sstream>

namespace vbs {

Id tail(const VeeringComplex& cx, EdgeRef r) {
    return r.is_diagonal() ? cx.sector(r.id).bottom : cx.edge(r.id).from;
}

Id head(const VeeringComplex& cx, EdgeRef r) {
    return r.is_diagonal() ? cx.sector(r.id).top : cx.edge(r.id).to;
}

std::size_t least_rotation(const Loop& loop) {
    // Booth's algorithm on the doubled sequence.
    const std::size_t n = loop.size();
    if (n < 2) return 0;
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    auto at = [&](std::size_t i) { return loop[i % n]; };
    for (std::size_t j = 1; j < 2 * n; ++j) {
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
            if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && at(j) != at(k)) {
            if (at(j) < at(k)) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

Loop rotate_to(const Loop& loop, std::size_t start) {
    Loop out;
    out.reserve(loop.size());
    for (std::size_t i = 0; i < loop.size(); ++i) out.push_back(loop[(start + i) % loop.size()]);
    return out;
}

Loop normalize_loop(const Loop& loop) { return rotate_to(loop, least_rotation(loop)); }

MultiLoop::MultiLoop(std::vector<Loop> loops) : loops_(std::move(loops)) {
    for (auto& l : loops_) l = normalize_loop(l);
    std::sort(loops_.begin(), loops_.end());
}

std::size_t MultiLoop::edge_count() const {
    std::size_t n = 0;
    for (const auto& l : loops_) n += l.size();
    return n;
}

std::size_t MultiLoop::diagonal_count() const {
    std::size_t n = 0;
    for (const auto& l : loops_)
        for (auto r : l) n += r.is_diagonal();
    return n;
}

bool is_closed(const VeeringComplex& cx, const Loop& loop) {
    if (loop.empty()) return false;
    for (std::size_t i = 0; i < loop.size(); ++i)
        if (head(cx, loop[i]) != tail(cx, loop[(i + 1) % loop.size()])) return false;
    return true;
}

void check_multiloop(const VeeringComplex& cx, const MultiLoop& m) {
    for (const auto& l : m.loops()) {
        for (auto r : l) {
            if (r.is_diagonal() ? !cx.has_sector(r.id) : !cx.has_edge(r.id))
                throw PreconditionError("unknown edge " + edge_ref_name(r) + " in multi-loop");
        }
        if (!is_closed(cx, l)) throw PreconditionError("loop (" + format_loop(l) + ") is not a closed path");
    }
}

std::vector<Id> visited_vertices(const VeeringComplex& cx, const MultiLoop& m) {
    std::vector<Id> vs;
    vs.reserve(m.edge_count());
    for (const auto& l : m.loops())
        for (auto r : l) vs.push_back(tail(cx, r));
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool is_embedded(const VeeringComplex& cx, const MultiLoop& m) {
    auto vs = visited_vertices(cx, m);
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

std::string edge_ref_name(EdgeRef r) { return (r.is_diagonal() ? "d" : "") + std::to_string(r.id); }

std::string format_loop(const Loop& loop) {
    std::string s;
    for (std::size_t i = 0; i < loop.size(); ++i) s += (i ? " " : "") + edge_ref_name(loop[i]);
    return s;
}

std::string format_multiloop(const MultiLoop& m) {
    if (m.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "; " : "") + format_loop(m[i]);
    return s;
}

MultiLoop parse_multiloop(const VeeringComplex& cx, const std::string& text) {
    std::vector<Loop> loops;
    std::string t = text;
    if (t == "{}") t.clear();
    std::stringstream by_loop(t);
    std::string piece;
    while (std::getline(by_loop, piece, ';')) {
        std::replace(piece.begin(), piece.end(), ',', ' ');
        std::stringstream words(piece);
        std::string w;
        Loop loop;
        while (words >> w) {
            bool diag = w[0] == 'd';
            std::string digits = diag ? w.substr(1) : w;
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError("bad edge token '" + w + "' in multi-loop");
            Id id = static_cast<Id>(std::stoul(digits));
            loop.push_back(diag ? EdgeRef::diag(id) : EdgeRef::edge(id));
        }
        if (!loop.empty()) loops.push_back(std::move(loop));
    }
    MultiLoop m(std::move(loops));
    check_multiloop(cx, m);
    return m;
}

}  // namespace vbs
