#include "vbs/complex.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vbs {

using json = nlohmann::ordered_json;

const char* color_name(Color c) { return c == Color::blue ? "blue" : "red"; }
const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

namespace {

template <typename T>
std::size_t index_of(const std::vector<T>& v, Id id, const char* what) {
    auto it = std::lower_bound(v.begin(), v.end(), id, [](const T& a, Id b) { return a.id < b; });
    if (it == v.end() || it->id != id) throw std::out_of_range(std::string("no ") + what + " with id " + std::to_string(id));
    return static_cast<std::size_t>(it - v.begin());
}

template <typename T>
bool contains_id(const std::vector<T>& v, Id id) {
    auto it = std::lower_bound(v.begin(), v.end(), id, [](const T& a, Id b) { return a.id < b; });
    return it != v.end() && it->id == id;
}

}  // namespace

void VeeringComplex::sort_by_id() {
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    std::sort(vertices.begin(), vertices.end(), by_id);
    std::sort(edges.begin(), edges.end(), by_id);
    std::sort(sectors.begin(), sectors.end(), by_id);
    std::sort(smoothings.begin(), smoothings.end(), [](const Smoothing& a, const Smoothing& b) { return a.vertex < b.vertex; });
}

std::size_t VeeringComplex::vertex_index(Id v) const { return index_of(vertices, v, "vertex"); }
std::size_t VeeringComplex::edge_index(Id e) const { return index_of(edges, e, "edge"); }
std::size_t VeeringComplex::sector_index(Id s) const { return index_of(sectors, s, "sector"); }
bool VeeringComplex::has_vertex(Id v) const { return contains_id(vertices, v); }
bool VeeringComplex::has_edge(Id e) const { return contains_id(edges, e); }
bool VeeringComplex::has_sector(Id s) const { return contains_id(sectors, s); }

std::vector<Id> boundary_path(const Sector& s, Side side) {
    std::vector<Id> path;
    const auto& chain = side == Side::left ? s.left_top : s.right_top;
    path.reserve(chain.size() + 1);
    path.push_back(side == Side::left ? s.left_bottom : s.right_bottom);
    path.insert(path.end(), chain.begin(), chain.end());
    return path;
}

Id side_vertex(const VeeringComplex& cx, const Sector& s, Side side) {
    return cx.edge(side == Side::left ? s.left_bottom : s.right_bottom).to;
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<const CheckResult*> ValidationReport::failures() const {
    std::vector<const CheckResult*> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(&c);
    return out;
}

// ---------------------------------------------------------------------------
// validation

namespace {

struct CheckBuilder {
    CheckResult result;
    std::vector<std::string> notes;

    explicit CheckBuilder(std::string id) { result.check_id = std::move(id); }

    void fail(Id who, std::string why) {
        result.passed = false;
        result.offending.push_back(who);
        if (notes.size() < 8) notes.push_back(std::move(why));
    }

    CheckResult finish(const std::string& ok_message) {
        std::sort(result.offending.begin(), result.offending.end());
        result.offending.erase(std::unique(result.offending.begin(), result.offending.end()), result.offending.end());
        if (result.passed) {
            result.message = ok_message;
        } else {
            std::string msg;
            for (std::size_t i = 0; i < notes.size(); ++i) msg += (i ? "; " : "") + notes[i];
            result.message = msg;
        }
        return result;
    }
};

bool smooth_at(const VeeringComplex& cx, Id in, Id out) {
    Id v = cx.edge(in).to;
    for (const auto& sm : cx.smoothings) {
        if (sm.vertex != v) continue;
        for (const auto& [a, b] : sm.pairs)
            if (a == in && b == out) return true;
    }
    return false;
}

}  // namespace

ValidationReport validate(const VeeringComplex& cx) {
    ValidationReport report;
    const std::string vs = "vertex ";
    const std::string ss = "sector ";
    const std::string es = "edge ";

    std::vector<int> in_deg(cx.vertices.size(), 0), out_deg(cx.vertices.size(), 0);
    bool endpoints_ok = true;
    {
        CheckBuilder b("edge-endpoints");
        for (const auto& e : cx.edges) {
            if (!cx.has_vertex(e.from) || !cx.has_vertex(e.to)) {
                b.fail(e.id, es + std::to_string(e.id) + " has a missing endpoint");
                endpoints_ok = false;
                continue;
            }
            out_deg[cx.vertex_index(e.from)]++;
            in_deg[cx.vertex_index(e.to)]++;
        }
        report.checks.push_back(b.finish("all edge endpoints exist"));
    }
    {
        CheckBuilder b("valence");
        for (std::size_t i = 0; i < cx.vertices.size(); ++i)
            if (in_deg[i] != 2 || out_deg[i] != 2)
                b.fail(cx.vertices[i].id, vs + std::to_string(cx.vertices[i].id) + " has in/out degree " +
                                              std::to_string(in_deg[i]) + "/" + std::to_string(out_deg[i]));
        report.checks.push_back(b.finish("every vertex is (2,2)-valent"));
    }
    {
        CheckBuilder b("smoothing");
        std::map<Id, int> seen;
        for (const auto& sm : cx.smoothings) seen[sm.vertex]++;
        for (const auto& v : cx.vertices) {
            if (seen[v.id] != 1) {
                b.fail(v.id, vs + std::to_string(v.id) + " has " + std::to_string(seen[v.id]) + " smoothing entries");
                continue;
            }
            const auto& sm = *std::find_if(cx.smoothings.begin(), cx.smoothings.end(),
                                           [&](const Smoothing& s) { return s.vertex == v.id; });
            std::multiset<Id> ins, outs, want_in, want_out;
            bool refs_ok = true;
            for (const auto& [a, o] : sm.pairs) {
                if (!cx.has_edge(a) || !cx.has_edge(o)) refs_ok = false;
                ins.insert(a);
                outs.insert(o);
            }
            for (const auto& e : cx.edges) {
                if (e.to == v.id) want_in.insert(e.id);
                if (e.from == v.id) want_out.insert(e.id);
            }
            if (!refs_ok || ins != want_in || outs != want_out)
                b.fail(v.id, vs + std::to_string(v.id) + " smoothing does not cover its edge ends exactly once");
        }
        for (const auto& [v, n] : seen)
            if (!cx.has_vertex(v)) b.fail(v, "smoothing for missing vertex " + std::to_string(v));
        report.checks.push_back(b.finish("smoothings cover every edge end once"));
    }

    bool paths_ok = true;
    {
        CheckBuilder b("sector-paths");
        for (const auto& s : cx.sectors) {
            bool ok = cx.has_vertex(s.bottom) && cx.has_vertex(s.top);
            for (Side side : {Side::left, Side::right}) {
                auto path = boundary_path(s, side);
                if (path.size() < 2) ok = false;
                for (Id e : path)
                    if (!cx.has_edge(e)) ok = false;
                if (!ok) break;
                if (cx.edge(path.front()).from != s.bottom) ok = false;
                for (std::size_t i = 1; i < path.size(); ++i)
                    if (cx.edge(path[i]).from != cx.edge(path[i - 1]).to) ok = false;
                if (cx.edge(path.back()).to != s.top) ok = false;
            }
            if (!ok) {
                paths_ok = false;
                b.fail(s.id, ss + std::to_string(s.id) + " boundary paths do not run bottom to top");
            }
        }
        report.checks.push_back(b.finish("every sector is a diamond with directed boundary paths"));
    }
    {
        CheckBuilder b("edge-incidence");
        std::map<Id, int> bottom_count, top_count;
        for (const auto& s : cx.sectors) {
            bottom_count[s.left_bottom]++;
            bottom_count[s.right_bottom]++;
            for (Id e : s.left_top) top_count[e]++;
            for (Id e : s.right_top) top_count[e]++;
        }
        for (const auto& e : cx.edges)
            if (bottom_count[e.id] != 1 || top_count[e.id] != 2)
                b.fail(e.id, es + std::to_string(e.id) + " occurs " + std::to_string(bottom_count[e.id]) +
                                 " times as a bottom side and " + std::to_string(top_count[e.id]) + " times in top chains");
        for (const auto& [e, n] : bottom_count)
            if (!cx.has_edge(e)) b.fail(e, "sector references missing edge " + std::to_string(e));
        report.checks.push_back(b.finish("each edge is one bottom side and lies in two top chains"));
    }
    for (bool top : {false, true}) {
        CheckBuilder b(top ? "top-bijection" : "bottom-bijection");
        std::map<Id, int> hits;
        for (const auto& s : cx.sectors) hits[top ? s.top : s.bottom]++;
        for (const auto& v : cx.vertices)
            if (hits[v.id] != 1)
                b.fail(v.id, vs + std::to_string(v.id) + " is the " + (top ? "top" : "bottom") + " of " +
                                 std::to_string(hits[v.id]) + " sectors");
        for (const auto& [v, n] : hits)
            if (!cx.has_vertex(v)) b.fail(v, "sector corner at missing vertex " + std::to_string(v));
        report.checks.push_back(b.finish(top ? "sector to top vertex is a bijection" : "sector to bottom vertex is a bijection"));
    }

    // Checks below look at edges and colors of corners; they assume the
    // path structure is sound and are skipped otherwise.
    std::map<Id, std::vector<Id>> sectors_with_bottom;
    for (const auto& s : cx.sectors) {
        sectors_with_bottom[s.left_bottom].push_back(s.id);
        sectors_with_bottom[s.right_bottom].push_back(s.id);
    }
    const bool structural = endpoints_ok && paths_ok;
    {
        CheckBuilder b("side-colors");
        if (structural) {
            for (const auto& s : cx.sectors) {
                Color c = cx.sector_color(s);
                for (Side side : {Side::left, Side::right})
                    if (cx.color(side_vertex(cx, s, side)) != c)
                        b.fail(s.id, ss + std::to_string(s.id) + " " + side_name(side) + " corner color differs from its top");
            }
        }
        report.checks.push_back(b.finish(structural ? "side corners carry the sector color" : "skipped: sector paths invalid"));
    }
    {
        CheckBuilder b("top-chain");
        if (structural) {
            for (const auto& s : cx.sectors) {
                Color c = cx.sector_color(s);
                for (Side side : {Side::left, Side::right}) {
                    const auto& chain = side == Side::left ? s.left_top : s.right_top;
                    const std::size_t delta = chain.size();
                    bool ok = true;
                    for (std::size_t i = 0; i < delta && ok; ++i) {
                        auto it = sectors_with_bottom.find(chain[i]);
                        if (it == sectors_with_bottom.end() || it->second.size() != 1) {
                            ok = false;
                            break;
                        }
                        const Sector& si = cx.sector(it->second.front());
                        const bool toggle = cx.is_toggle(si);
                        const Color ci = cx.sector_color(si);
                        if (delta == 1) {
                            ok = !toggle && ci == c;
                        } else if (i == 0 || i + 1 == delta) {
                            ok = toggle;
                        } else {
                            ok = !toggle && ci != c;
                        }
                    }
                    if (!ok) b.fail(s.id, ss + std::to_string(s.id) + " " + side_name(side) + " top chain breaks the toggle/fan rule");
                }
            }
        }
        report.checks.push_back(b.finish(structural ? "top chains follow the toggle/fan rule" : "skipped: sector paths invalid"));
    }
    {
        CheckBuilder b("side-smoothness");
        bool smooth_ok = structural;
        for (const auto& v : report.checks)
            if ((v.check_id == "smoothing" || v.check_id == "valence") && !v.passed) smooth_ok = false;
        if (smooth_ok) {
            for (const auto& s : cx.sectors) {
                for (Side side : {Side::left, Side::right}) {
                    auto path = boundary_path(s, side);
                    bool ok = !smooth_at(cx, path[0], path[1]);
                    for (std::size_t i = 2; i < path.size(); ++i) ok = ok && smooth_at(cx, path[i - 1], path[i]);
                    if (!ok)
                        b.fail(s.id, ss + std::to_string(s.id) + " " + side_name(side) +
                                         " side is not a smooth arc turning at its side corner");
                }
            }
        }
        report.checks.push_back(b.finish(smooth_ok ? "top chains are smooth and each side corner is a turn"
                                                   : "skipped: smoothings or paths invalid"));
    }
    {
        CheckBuilder b("connected");
        if (endpoints_ok && !is_connected(cx)) b.fail(cx.vertices.front().id, "the dual graph is disconnected");
        report.checks.push_back(b.finish("the dual graph is connected"));
    }
    {
        CheckBuilder b("fiber-cocycle");
        if (cx.fiber_cocycle) {
            const auto& w = *cx.fiber_cocycle;
            for (const auto& e : cx.edges)
                if (!w.count(e.id) || w.at(e.id) < 0) b.fail(e.id, "cocycle missing or negative on edge " + std::to_string(e.id));
            for (const auto& [e, x] : w)
                if (!cx.has_edge(e)) b.fail(e, "cocycle names missing edge " + std::to_string(e));
            if (b.result.passed && structural) {
                for (const auto& s : cx.sectors) {
                    std::int64_t l = 0, r = 0;
                    for (Id e : boundary_path(s, Side::left)) l += w.at(e);
                    for (Id e : boundary_path(s, Side::right)) r += w.at(e);
                    if (l != r) b.fail(s.id, ss + std::to_string(s.id) + " boundary paths pair differently with the cocycle");
                }
            }
        }
        report.checks.push_back(b.finish(cx.fiber_cocycle ? "fiber cocycle vanishes on sector boundaries" : "no fiber cocycle given"));
    }
    return report;
}

bool is_connected(const VeeringComplex& cx) {
    if (cx.vertices.empty()) return true;
    std::vector<std::size_t> parent(cx.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = cx.vertices.size();
    for (const auto& e : cx.edges) {
        auto a = find(cx.vertex_index(e.from)), b = find(cx.vertex_index(e.to));
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

// ---------------------------------------------------------------------------
// branch loops

Id smooth_successor(const VeeringComplex& cx, Id e) {
    Id v = cx.edge(e).to;
    for (const auto& sm : cx.smoothings) {
        if (sm.vertex != v) continue;
        for (const auto& [a, b] : sm.pairs)
            if (a == e) return b;
    }
    throw PreconditionError("edge " + std::to_string(e) + " has no smooth successor");
}

std::vector<std::vector<Id>> branch_loops(const VeeringComplex& cx) {
    std::vector<bool> used(cx.edges.size(), false);
    std::vector<std::vector<Id>> loops;
    for (std::size_t i = 0; i < cx.edges.size(); ++i) {
        if (used[i]) continue;
        std::vector<Id> loop;
        Id e = cx.edges[i].id;
        while (!used[cx.edge_index(e)]) {
            used[cx.edge_index(e)] = true;
            loop.push_back(e);
            e = smooth_successor(cx, e);
        }
        if (e != loop.front()) throw PreconditionError("smoothings do not form closed branch loops");
        loops.push_back(std::move(loop));
    }
    // Starting each loop at its least edge already gives the least rotation,
    // since ids on one branch loop are distinct.
    std::sort(loops.begin(), loops.end());
    return loops;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) field_error(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) field_error(where, std::string("missing field '") + key + "'");
    return *it;
}

Id read_id(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 0xffffffffLL)
        field_error(where, "expected a non-negative integer id");
    return static_cast<Id>(v.get<std::int64_t>());
}

std::vector<Id> read_id_list(const json& v, const std::string& where) {
    if (!v.is_array()) field_error(where, "expected an array of ids");
    std::vector<Id> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_id(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

const json& require_array(const json& root, const char* key) {
    const json& a = require(root, key, "document");
    if (!a.is_array()) field_error(key, "expected an array");
    return a;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

VeeringComplex parse_complex(const std::string& document) {
    json root;
    try {
        root = json::parse(document);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(document, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
    if (!root.is_object()) field_error("document", "expected a top-level object");

    VeeringComplex cx;
    const json& name = require(root, "name", "document");
    if (!name.is_string()) field_error("name", "expected a string");
    cx.name = name.get<std::string>();

    const json& vs = require_array(root, "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string where = "vertices[" + std::to_string(i) + "]";
        Vertex v;
        v.id = read_id(require(vs[i], "id", where), where + ".id");
        const json& c = require(vs[i], "color", where);
        if (c == "blue")
            v.color = Color::blue;
        else if (c == "red")
            v.color = Color::red;
        else
            field_error(where + ".color", "expected \"blue\" or \"red\"");
        cx.vertices.push_back(v);
    }
    const json& es = require_array(root, "edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
        std::string where = "edges[" + std::to_string(i) + "]";
        Edge e;
        e.id = read_id(require(es[i], "id", where), where + ".id");
        e.from = read_id(require(es[i], "from", where), where + ".from");
        e.to = read_id(require(es[i], "to", where), where + ".to");
        cx.edges.push_back(e);
    }
    const json& sms = require_array(root, "smoothings");
    for (std::size_t i = 0; i < sms.size(); ++i) {
        std::string where = "smoothings[" + std::to_string(i) + "]";
        Smoothing sm;
        sm.vertex = read_id(require(sms[i], "vertex", where), where + ".vertex");
        const json& pairs = require(sms[i], "pairs", where);
        if (!pairs.is_array() || pairs.size() != 2) field_error(where + ".pairs", "expected two [in, out] pairs");
        for (std::size_t k = 0; k < 2; ++k) {
            auto p = read_id_list(pairs[k], where + ".pairs[" + std::to_string(k) + "]");
            if (p.size() != 2) field_error(where + ".pairs[" + std::to_string(k) + "]", "expected [in, out]");
            sm.pairs[k] = {p[0], p[1]};
        }
        cx.smoothings.push_back(sm);
    }
    const json& ss = require_array(root, "sectors");
    for (std::size_t i = 0; i < ss.size(); ++i) {
        std::string where = "sectors[" + std::to_string(i) + "]";
        Sector s;
        s.id = read_id(require(ss[i], "id", where), where + ".id");
        s.bottom = read_id(require(ss[i], "bottom", where), where + ".bottom");
        s.top = read_id(require(ss[i], "top", where), where + ".top");
        s.left_bottom = read_id(require(ss[i], "left_bottom", where), where + ".left_bottom");
        s.right_bottom = read_id(require(ss[i], "right_bottom", where), where + ".right_bottom");
        s.left_top = read_id_list(require(ss[i], "left_top", where), where + ".left_top");
        s.right_top = read_id_list(require(ss[i], "right_top", where), where + ".right_top");
        cx.sectors.push_back(std::move(s));
    }
    if (auto it = root.find("fiber_cocycle"); it != root.end()) {
        if (!it->is_object()) field_error("fiber_cocycle", "expected an object edge-id -> integer");
        std::map<Id, std::int64_t> w;
        for (auto kv = it->begin(); kv != it->end(); ++kv) {
            std::string where = "fiber_cocycle." + kv.key();
            Id e = 0;
            try {
                std::size_t used = 0;
                long long k = std::stoll(kv.key(), &used);
                if (used != kv.key().size() || k < 0) throw std::invalid_argument("id");
                e = static_cast<Id>(k);
            } catch (const std::exception&) {
                field_error(where, "key is not an edge id");
            }
            if (!kv.value().is_number_integer() || kv.value().get<std::int64_t>() < 0)
                field_error(where, "expected a non-negative integer");
            w[e] = kv.value().get<std::int64_t>();
        }
        cx.fiber_cocycle = std::move(w);
    }

    cx.sort_by_id();
    auto check_unique = [](const auto& v, const char* what) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].id == v[i - 1].id) throw ParseError(std::string("duplicate ") + what + " id " + std::to_string(v[i].id));
    };
    check_unique(cx.vertices, "vertex");
    check_unique(cx.edges, "edge");
    check_unique(cx.sectors, "sector");

    auto dangling = [](const std::string& where, const char* what, Id id) {
        throw ParseError("dangling reference at " + where + ": no " + what + " " + std::to_string(id));
    };
    for (const auto& e : cx.edges) {
        if (!cx.has_vertex(e.from)) dangling("edge " + std::to_string(e.id) + ".from", "vertex", e.from);
        if (!cx.has_vertex(e.to)) dangling("edge " + std::to_string(e.id) + ".to", "vertex", e.to);
    }
    for (const auto& sm : cx.smoothings) {
        std::string where = "smoothing of vertex " + std::to_string(sm.vertex);
        if (!cx.has_vertex(sm.vertex)) dangling(where, "vertex", sm.vertex);
        for (const auto& [a, b] : sm.pairs) {
            if (!cx.has_edge(a)) dangling(where, "edge", a);
            if (!cx.has_edge(b)) dangling(where, "edge", b);
        }
    }
    for (const auto& s : cx.sectors) {
        std::string where = "sector " + std::to_string(s.id);
        if (!cx.has_vertex(s.bottom)) dangling(where + ".bottom", "vertex", s.bottom);
        if (!cx.has_vertex(s.top)) dangling(where + ".top", "vertex", s.top);
        for (Side side : {Side::left, Side::right})
            for (Id e : boundary_path(s, side))
                if (!cx.has_edge(e)) dangling(where + "." + side_name(side) + " path", "edge", e);
    }
    if (cx.fiber_cocycle)
        for (const auto& [e, x] : *cx.fiber_cocycle)
            if (!cx.has_edge(e)) dangling("fiber_cocycle", "edge", e);
    return cx;
}

VeeringComplex load_complex_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

std::string serialize(const VeeringComplex& input) {
    VeeringComplex cx = input;
    cx.sort_by_id();
    json root;
    root["name"] = cx.name;
    json vs = json::array();
    for (const auto& v : cx.vertices) vs.push_back(json{{"id", v.id}, {"color", color_name(v.color)}});
    root["vertices"] = vs;
    json es = json::array();
    for (const auto& e : cx.edges) es.push_back(json{{"id", e.id}, {"from", e.from}, {"to", e.to}});
    root["edges"] = es;
    json sms = json::array();
    for (const auto& sm : cx.smoothings) {
        json pairs = json::array();
        for (const auto& [a, b] : sm.pairs) pairs.push_back(json::array({a, b}));
        sms.push_back(json{{"vertex", sm.vertex}, {"pairs", pairs}});
    }
    root["smoothings"] = sms;
    json ss = json::array();
    for (const auto& s : cx.sectors)
        ss.push_back(json{{"id", s.id},
                          {"bottom", s.bottom},
                          {"top", s.top},
                          {"left_bottom", s.left_bottom},
                          {"right_bottom", s.right_bottom},
                          {"left_top", s.left_top},
                          {"right_top", s.right_top}});
    root["sectors"] = ss;
    if (cx.fiber_cocycle) {
        json w = json::object();
        for (const auto& [e, x] : *cx.fiber_cocycle) w[std::to_string(e)] = x;
        root["fiber_cocycle"] = w;
    }
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// covers

VeeringComplex cyclic_cover(const VeeringComplex& cx, int n, const std::map<Id, std::int64_t>& weight) {
    if (n < 2) throw PreconditionError("cover modulus must be at least 2");
    const auto N = static_cast<std::int64_t>(n);
    auto w = [&](Id e) -> std::int64_t {
        auto it = weight.find(e);
        if (it == weight.end()) throw PreconditionError("cover weight missing on edge " + std::to_string(e));
        return ((it->second % N) + N) % N;
    };
    auto lift = [&](Id id, std::int64_t k) { return static_cast<Id>(static_cast<std::int64_t>(id) * N + ((k % N) + N) % N); };

    for (const auto& s : cx.sectors) {
        std::int64_t l = 0, r = 0;
        for (Id e : boundary_path(s, Side::left)) l += w(e);
        for (Id e : boundary_path(s, Side::right)) r += w(e);
        if ((l - r) % N != 0)
            throw PreconditionError("sector " + std::to_string(s.id) + " does not lift: boundary weights differ mod " + std::to_string(n));
    }

    VeeringComplex out;
    out.name = cx.name + "-cover" + std::to_string(n);
    for (const auto& v : cx.vertices)
        for (std::int64_t k = 0; k < N; ++k) out.vertices.push_back({lift(v.id, k), v.color});
    for (const auto& e : cx.edges)
        for (std::int64_t k = 0; k < N; ++k) out.edges.push_back({lift(e.id, k), lift(e.from, k), lift(e.to, k + w(e.id))});
    for (const auto& sm : cx.smoothings) {
        for (std::int64_t k = 0; k < N; ++k) {
            Smoothing lifted;
            lifted.vertex = lift(sm.vertex, k);
            for (std::size_t i = 0; i < 2; ++i) {
                auto [a, b] = sm.pairs[i];
                lifted.pairs[i] = {lift(a, k - w(a)), lift(b, k)};
            }
            out.smoothings.push_back(lifted);
        }
    }
    for (const auto& s : cx.sectors) {
        for (std::int64_t k = 0; k < N; ++k) {
            Sector t;
            t.id = lift(s.id, k);
            t.bottom = lift(s.bottom, k);
            std::int64_t top_level = 0;
            for (Side side : {Side::left, Side::right}) {
                std::int64_t level = k;
                Id bottom_edge = side == Side::left ? s.left_bottom : s.right_bottom;
                (side == Side::left ? t.left_bottom : t.right_bottom) = lift(bottom_edge, level);
                level += w(bottom_edge);
                auto& chain = side == Side::left ? t.left_top : t.right_top;
                for (Id e : side == Side::left ? s.left_top : s.right_top) {
                    chain.push_back(lift(e, level));
                    level += w(e);
                }
                top_level = level;
            }
            t.top = lift(s.top, top_level);
            out.sectors.push_back(std::move(t));
        }
    }
    if (cx.fiber_cocycle) {
        std::map<Id, std::int64_t> lifted;
        for (const auto& [e, x] : *cx.fiber_cocycle)
            for (std::int64_t k = 0; k < N; ++k) lifted[lift(e, k)] = x;
        out.fiber_cocycle = std::move(lifted);
    }
    out.sort_by_id();

    if (!is_connected(out)) throw PreconditionError("the cover is disconnected; its Heegaard surface would not be connected");
    auto report = validate(out);
    if (!report.ok()) {
        std::string ids;
        for (const auto* f : report.failures()) ids += (ids.empty() ? "" : ", ") + f->check_id;
        throw PreconditionError("cover fails validation: " + ids);
    }
    return out;
}

}  // namespace vbs
