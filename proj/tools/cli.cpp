#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "vbs/datasets.hpp"
#include "vbs/dynamic.hpp"
#include "vbs/grading.hpp"
#include "vbs/report.hpp"
#include "vbs/states.hpp"

namespace vbs::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json edge_json(EdgeRef r) { return r.is_diagonal() ? json("d" + std::to_string(r.id)) : json(r.id); }

json multiloop_json(const MultiLoop& m) {
    json a = json::array();
    for (const auto& loop : m.loops()) {
        json l = json::array();
        for (EdgeRef r : loop) l.push_back(edge_json(r));
        a.push_back(l);
    }
    return a;
}

json loop_json(const Loop& loop) {
    json l = json::array();
    for (EdgeRef r : loop) l.push_back(edge_json(r));
    return l;
}

json state_json(const VeeringComplex& cx, const HeegaardState& x) {
    json o = json::object();
    for (std::size_t i = 0; i < x.slots.size(); ++i) o[std::to_string(cx.sectors[i].id)] = slot_name(x.slots[i]);
    return o;
}

json class_json(const H1MClass& c) { return json{{"free", c.free}, {"torsion", c.torsion}}; }

// Column-aligned text, or tab-separated when tsv is set.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows, bool tsv) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (tsv) {
                line += (c ? "\t" : "") + r[c];
            } else {
                line += r[c];
                if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
            }
        }
        out << line << "\n";
    }
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

VeeringComplex load(const RunConfig& cfg) {
    if (cfg.input.empty()) throw UsageError("no dataset given (positional argument or --input)");
    try {
        return resolve_dataset(cfg.input);
    } catch (const ParseError& e) {
        std::string what = e.what();
        if (what.rfind("no dataset", 0) == 0) throw UsageError(what);
        throw;
    }
}

bool require_valid(const VeeringComplex& cx, std::ostream& err) {
    auto report = validate(cx);
    if (report.ok()) return true;
    for (const auto* f : report.failures()) err << "FAIL " << f->check_id << ": " << f->message << "\n";
    return false;
}

MultiLoop chosen_multiloop(const VeeringComplex& cx, const RunConfig& cfg, unsigned threads) {
    if (cfg.multiloop) return parse_multiloop(cx, *cfg.multiloop);
    if (cfg.state) {
        auto states = enumerate_states(cx, threads);
        if (*cfg.state >= states.size())
            throw UsageError("state index " + std::to_string(*cfg.state) + " out of range (" + std::to_string(states.size()) + " states)");
        return state_multiloop(cx, states[*cfg.state]);
    }
    throw UsageError("give --state N or --multiloop TEXT");
}

Loop chosen_loop(const VeeringComplex& cx, const RunConfig& cfg, unsigned threads) {
    if (cfg.loop) {
        auto m = parse_multiloop(cx, *cfg.loop);
        if (m.size() != 1) throw UsageError("--loop needs exactly one loop");
        return m[0];
    }
    if (cfg.state) {
        // first full resolution of the state's multi-loop
        auto m = strum_resolutions(cx, chosen_multiloop(cx, cfg, threads)).front();
        if (m.size() != 1) throw UsageError("the state's resolution is not a single loop; give --loop");
        return m[0];
    }
    throw UsageError("give --loop TEXT or --state N");
}

// ---------------------------------------------------------------------------

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    auto cx = load(cfg);
    auto report = validate(cx);
    if (cfg.format == Format::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"check", c.check_id}, {"pass", c.passed}, {"offending", c.offending}, {"message", c.message}});
        out << json{{"name", cx.name}, {"ok", report.ok()}, {"checks", checks}}.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"result", "check", "offending", "message"}};
        for (const auto& c : report.checks) {
            std::string ids;
            for (std::size_t i = 0; i < c.offending.size(); ++i) ids += (i ? "," : "") + std::to_string(c.offending[i]);
            rows.push_back({c.passed ? "PASS" : "FAIL", c.check_id, ids.empty() ? "-" : ids, c.message});
        }
        print_table(out, rows, cfg.format == Format::tsv);
    }
    return report.ok() ? ok : failed;
}

int cmd_states(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    auto states = enumerate_states(cx, cfg.threads);
    if (cfg.format == Format::json) {
        json a = json::array();
        for (std::size_t i = 0; i < states.size(); ++i)
            a.push_back(json{{"id", i}, {"slots", state_json(cx, states[i])}, {"multiloop", multiloop_json(state_multiloop(cx, states[i]))}});
        out << a.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"id", "slots", "multiloop"}};
        for (std::size_t i = 0; i < states.size(); ++i)
            rows.push_back({std::to_string(i), format_state(cx, states[i]), format_multiloop(state_multiloop(cx, states[i]))});
        print_table(out, rows, cfg.format == Format::tsv);
    }
    return ok;
}

int cmd_gradings(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    auto states = enumerate_states(cx, cfg.threads);
    H1Lattice lattice(cx);
    auto spinc = spinc_partition(cx, lattice, states, cfg.threads);
    auto st = s_tilde_partition(cx, lattice, states, cfg.threads);
    if (cfg.format == Format::json) {
        json a = json::array();
        for (std::size_t i = 0; i < states.size(); ++i)
            a.push_back(json{{"id", i},
                             {"slots", state_json(cx, states[i])},
                             {"spinc", class_json(spinc.blocks[spinc.block_of[i]].spinc)},
                             {"spinc_block", spinc.block_of[i]},
                             {"s_tilde_block", st.block_of[i]}});
        json basis = json::array();
        for (Id e : lattice.basis_edges()) basis.push_back(e);
        out << json{{"name", cx.name},
                    {"cycle_basis_edges", basis},
                    {"free_rank", lattice.free_rank()},
                    {"torsion", lattice.torsion_orders()},
                    {"states", a}}
                   .dump(2)
            << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"id", "slots", "spinc", "spinc_block", "s_tilde_block"}};
        for (std::size_t i = 0; i < states.size(); ++i)
            rows.push_back({std::to_string(i), format_state(cx, states[i]), format_class(spinc.blocks[spinc.block_of[i]].spinc),
                            std::to_string(spinc.block_of[i]), std::to_string(st.block_of[i])});
        print_table(out, rows, cfg.format == Format::tsv);
    }
    return ok;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    auto m = chosen_multiloop(cx, cfg, cfg.threads);
    SweepClass cls;
    try {
        cls = sweep_class(cx, m, cfg.cap);
    } catch (const CapExceeded& e) {
        err << e.what() << " (explored " << e.partial.size() << ", frontier " << e.frontier.size() << ")\n";
        return unresolved;
    }
    std::optional<MultiLoop> witness;
    for (const auto& x : cls.members)
        if (!is_embedded(cx, x)) {
            witness = x;
            break;
        }
    if (cfg.format == Format::json) {
        json members = json::array(), moves = json::array();
        for (const auto& x : cls.members) members.push_back(multiloop_json(x));
        for (const auto& mv : cls.moves)
            moves.push_back(json{{"from", mv.from}, {"to", mv.to}, {"sector", mv.sector}, {"side", side_name(mv.side)}});
        out << json{{"base", multiloop_json(cls.base)},
                    {"size", cls.members.size()},
                    {"sleek", !witness},
                    {"witness", witness ? multiloop_json(*witness) : json(nullptr)},
                    {"members", members},
                    {"moves", moves}}
                   .dump(2)
            << "\n";
    } else {
        out << "base: " << format_multiloop(cls.base) << "\n";
        out << "size: " << cls.members.size() << "\nsleek: " << (witness ? "no" : "yes") << "\n";
        if (witness) out << "witness: " << format_multiloop(*witness) << "\n";
        std::vector<std::vector<std::string>> rows{{"member", "multiloop", "embedded"}};
        for (std::size_t i = 0; i < cls.members.size(); ++i)
            rows.push_back({std::to_string(i), format_multiloop(cls.members[i]), is_embedded(cx, cls.members[i]) ? "yes" : "no"});
        print_table(out, rows, cfg.format == Format::tsv);
        std::vector<std::vector<std::string>> mrows{{"from", "to", "sector", "side"}};
        for (const auto& mv : cls.moves)
            mrows.push_back({std::to_string(mv.from), std::to_string(mv.to), std::to_string(mv.sector), side_name(mv.side)});
        print_table(out, mrows, cfg.format == Format::tsv);
    }
    return ok;
}

int cmd_sleek(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    auto m = chosen_multiloop(cx, cfg, cfg.threads);
    SleekResult res;
    try {
        res = is_sleek(cx, m, cfg.cap);
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return unresolved;
    }
    std::optional<std::size_t> size;
    if (res.sleek) size = res.explored;
    if (cfg.format == Format::json) {
        out << json{{"multiloop", multiloop_json(m)},
                    {"sleek", res.sleek},
                    {"witness", res.witness ? multiloop_json(*res.witness) : json(nullptr)},
                    {"explored", res.explored},
                    {"class_size", size ? json(*size) : json(nullptr)}}
                   .dump(2)
            << "\n";
    } else {
        out << "multiloop: " << format_multiloop(m) << "\nsleek: " << (res.sleek ? "yes" : "no") << "\n";
        if (res.witness) out << "witness: " << format_multiloop(*res.witness) << "\n";
        out << "explored: " << res.explored << "\n";
    }
    return ok;
}

int cmd_core(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    auto c0 = chosen_loop(cx, cfg, cfg.threads);
    DynamicRegion region;
    try {
        region = build_dynamic_region(cx, c0, cfg.cap);
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return unresolved;
    }
    auto top = maximal_core(region);
    auto seq = core_growth_sequence(region, Core{}, top);
    std::vector<std::size_t> dims{homology_dim(cc_complex(cx, region, Core{}))};
    std::vector<std::size_t> sizes{1};
    for (const auto& k : seq) {
        auto cc = cc_complex(cx, region, k);
        sizes.push_back(cc.generators.size());
        dims.push_back(homology_dim(cc));
    }
    if (cfg.format == Format::json) {
        json growth = json::array();
        growth.push_back(json{{"sectors", json::array()}, {"loops", sizes[0]}, {"homology", dims[0]}});
        for (std::size_t i = 0; i < seq.size(); ++i)
            growth.push_back(json{{"sectors", seq[i].sectors}, {"loops", sizes[i + 1]}, {"homology", dims[i + 1]}});
        json labels = json::array();
        for (Id s : region.sector_label) labels.push_back(s);
        json o{{"base", loop_json(region.base)},
               {"class_size", region.loops.size()},
               {"region_sectors", region.sector_count()},
               {"sector_labels", labels},
               {"growth", growth}};
        if (cfg.moves) {
            json loops = json::array(), moves = json::array();
            for (const auto& l : region.loops) loops.push_back(loop_json(l));
            for (const auto& mv : region.moves)
                moves.push_back(json{{"from", mv.from}, {"to", mv.to}, {"region_sector", mv.region_sector}, {"side", side_name(mv.side)}});
            o["loops"] = loops;
            o["moves"] = moves;
        }
        out << o.dump(2) << "\n";
    } else {
        out << "base: " << format_loop(region.base) << "\n";
        out << "class size: " << region.loops.size() << "\nregion sectors: " << region.sector_count() << "\n";
        std::vector<std::vector<std::string>> rows{{"step", "sectors", "loops", "homology"}};
        rows.push_back({"0", "-", std::to_string(sizes[0]), std::to_string(dims[0])});
        for (std::size_t i = 0; i < seq.size(); ++i)
            rows.push_back({std::to_string(i + 1), join(seq[i].sectors), std::to_string(sizes[i + 1]), std::to_string(dims[i + 1])});
        print_table(out, rows, cfg.format == Format::tsv);
        if (cfg.moves) {
            std::vector<std::vector<std::string>> mrows{{"from", "to", "region_sector", "side"}};
            for (const auto& mv : region.moves)
                mrows.push_back({format_loop(region.loops[mv.from]), format_loop(region.loops[mv.to]), std::to_string(mv.region_sector),
                                 side_name(mv.side)});
            print_table(out, mrows, cfg.format == Format::tsv);
        }
    }
    return ok;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    ChainComplexF2 cc;
    std::string source;
    try {
        if (cfg.loop) {
            auto region = build_dynamic_region(cx, chosen_loop(cx, cfg, cfg.threads), cfg.cap);
            cc = cc_complex(cx, region, maximal_core(region));
            source = "maximal core of " + format_loop(region.base);
        } else {
            auto m = chosen_multiloop(cx, cfg, cfg.threads);
            auto s = is_sleek(cx, m, cfg.cap);
            if (!s.sleek) {
                err << "the class of " << format_multiloop(m) << " is not sleek; witness " << format_multiloop(*s.witness) << "\n";
                return failed;
            }
            cc = cc_multiloop_complex(cx, sweep_class(cx, m, cfg.cap));
            source = "sweep class of " + format_multiloop(m);
        }
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return unresolved;
    }
    auto dim = homology_dim(cc);
    if (cfg.format == Format::json) {
        out << json{{"source", source}, {"generators", cc.generators.size()}, {"rank", f2_rank(cc.boundary)}, {"homology", dim}}.dump(2)
            << "\n";
    } else {
        out << source << "\ngenerators: " << cc.generators.size() << "\nrank: " << f2_rank(cc.boundary) << "\nhomology: " << dim << "\n";
    }
    return ok;
}

json block_json(const BlockReport& b) {
    return json{{"id", b.id},
                {"states", b.states},
                {"size", b.states.size()},
                {"spinc", class_json(b.spinc)},
                {"contains_top", b.has_top},
                {"contains_bottom", b.has_bottom},
                {"status", status_name(b.status)},
                {"sleek", b.status == BlockStatus::sleek},
                {"class_size", b.status == BlockStatus::sleek ? json(b.class_size) : json(nullptr)},
                {"homology", b.homology ? json(*b.homology) : json(nullptr)},
                {"pairing", b.pairing ? json(*b.pairing) : json(nullptr)},
                {"witness", b.witness ? multiloop_json(*b.witness) : json(nullptr)},
                {"note", b.note}};
}

std::vector<std::string> block_row(const BlockReport& b) {
    std::vector<std::string> r{std::to_string(b.id), join(b.states), format_class(b.spinc), b.has_top ? "yes" : "no",
                               b.has_bottom ? "yes" : "no", status_name(b.status),
                               b.homology ? std::to_string(*b.homology) : "-"};
    if (b.pairing) r.push_back(std::to_string(*b.pairing));
    return r;
}

json totals_json(const Report& r) {
    return json{{"sleek_blocks", r.sleek_blocks},
                {"unresolved_blocks", r.unresolved_blocks},
                {"homology_total", r.homology_total},
                {"top_bonus", r.top_bonus},
                {"lower_bound", r.lower_bound}};
}

void print_totals(std::ostream& out, const Report& r) {
    out << "sleek blocks: " << r.sleek_blocks << "\nunresolved blocks: " << r.unresolved_blocks
        << "\nhomology total: " << r.homology_total << "\ntop bonus: " << (r.top_bonus ? 1 : 0)
        << "\nlower bound: " << r.lower_bound << "\n";
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    auto r = sfh_report(cx, Caps{cfg.cap}, cfg.threads);
    if (cfg.format == Format::json) {
        json blocks = json::array();
        for (const auto& b : r.blocks) blocks.push_back(block_json(b));
        out << json{{"name", r.name}, {"states", r.states}, {"blocks", blocks}, {"totals", totals_json(r)}}.dump(2) << "\n";
    } else {
        out << r.name << ": " << r.states << " states, " << r.blocks.size() << " s-tilde blocks\n";
        std::vector<std::vector<std::string>> rows{{"block", "states", "spinc", "top", "bottom", "status", "homology"}};
        for (const auto& b : r.blocks) rows.push_back(block_row(b));
        print_table(out, rows, cfg.format == Format::tsv);
        print_totals(out, r);
    }
    return r.unresolved_blocks ? unresolved : ok;
}

int cmd_fibered(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    if (!cx.fiber_cocycle) {
        err << "the dataset has no fiber_cocycle\n";
        return failed;
    }
    auto fr = fibered_report(cx, *cx.fiber_cocycle, Caps{cfg.cap}, cfg.threads);
    const auto& r = fr.report;
    if (cfg.format == Format::json) {
        json rows = json::array(), blocks = json::array(), diag = json::object();
        for (const auto& row : fr.rows)
            rows.push_back(json{{"n", row.n},
                                {"states", row.states},
                                {"blocks", row.blocks},
                                {"sleek", row.sleek},
                                {"unresolved", row.unresolved},
                                {"homology", row.homology}});
        for (const auto& b : r.blocks) blocks.push_back(block_json(b));
        for (const auto& [s, w] : fr.diagonal_weight) diag["d" + std::to_string(s)] = w;
        out << json{{"name", r.name},
                    {"pairing_bottom", fr.pairing_bottom},
                    {"pairing_top", fr.pairing_top},
                    {"pairings_consistent", fr.pairings_consistent},
                    {"diagonal_weights", diag},
                    {"rows", rows},
                    {"blocks", blocks},
                    {"totals", totals_json(r)}}
                   .dump(2)
            << "\n";
    } else {
        out << r.name << ": pairing(bottom) = " << fr.pairing_bottom << ", pairing(top) = " << fr.pairing_top << "\n";
        std::vector<std::vector<std::string>> rows{{"n", "states", "blocks", "sleek", "unresolved", "homology"}};
        for (const auto& row : fr.rows)
            rows.push_back({std::to_string(row.n), std::to_string(row.states), std::to_string(row.blocks), std::to_string(row.sleek),
                            std::to_string(row.unresolved), std::to_string(row.homology)});
        print_table(out, rows, cfg.format == Format::tsv);
        out << "\n";
        std::vector<std::vector<std::string>> brows{{"block", "states", "spinc", "top", "bottom", "status", "homology", "pairing"}};
        for (const auto& b : r.blocks) brows.push_back(block_row(b));
        print_table(out, brows, cfg.format == Format::tsv);
        print_totals(out, r);
    }
    return r.unresolved_blocks ? unresolved : ok;
}

int cmd_cover(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto cx = load(cfg);
    if (!require_valid(cx, err)) return failed;
    std::map<Id, std::int64_t> w;
    if (cfg.weight == "fiber") {
        if (!cx.fiber_cocycle) throw UsageError("the dataset has no fiber_cocycle; use --weight zero");
        w = *cx.fiber_cocycle;
    } else if (cfg.weight == "zero") {
        for (const auto& e : cx.edges) w[e.id] = 0;
    } else {
        throw UsageError("--weight must be fiber or zero");
    }
    auto cover = cyclic_cover(cx, cfg.modulus, w);
    if (cfg.output.empty()) {
        out << serialize(cover);
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) throw UsageError("cannot write " + cfg.output);
        f << serialize(cover);
    }
    return ok;
}

int cmd_datasets(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::json) {
        out << json(bundled_datasets()).dump(2) << "\n";
    } else {
        for (const auto& n : bundled_datasets()) out << n << "\n";
    }
    return ok;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const auto& c = cfg.subcommand;
        if (c == "validate") return cmd_validate(cfg, out);
        if (c == "states") return cmd_states(cfg, out, err);
        if (c == "gradings") return cmd_gradings(cfg, out, err);
        if (c == "sweep") return cmd_sweep(cfg, out, err);
        if (c == "sleek") return cmd_sleek(cfg, out, err);
        if (c == "core") return cmd_core(cfg, out, err);
        if (c == "homology") return cmd_homology(cfg, out, err);
        if (c == "report") return cmd_report(cfg, out, err);
        if (c == "fibered-report") return cmd_fibered(cfg, out, err);
        if (c == "cover") return cmd_cover(cfg, out, err);
        if (c == "datasets") return cmd_datasets(cfg, out);
        err << "unknown subcommand '" << c << "'\n";
        return usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failed;
    }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heegaard states, gradings, sweep classes and chain complexes of veering branched surfaces", "vbs"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    std::string format = "text";
    std::string positional;

    auto common = [&](CLI::App* sub, bool dataset = true) {
        if (dataset) {
            sub->add_option("dataset", positional, "bundled dataset name or JSON file");
            sub->add_option("--input", cfg.input, "path to a JSON dataset");
        }
        sub->add_option("--cap", cfg.cap, "maximum sweep-class size")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "tsv", "json"}));
        sub->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
        sub->add_option("--seed", cfg.seed, "seed for randomized helpers");
    };
    auto pick = [&](CLI::App* sub) {
        sub->add_option("--state", cfg.state, "state index as listed by `states`");
        sub->add_option("--multiloop", cfg.multiloop, "multi-loop, e.g. \"0 3; d1 2\"");
    };

    common(app.add_subcommand("validate", "check the complex against all invariants"));
    common(app.add_subcommand("states", "list Heegaard states"));
    common(app.add_subcommand("gradings", "spin^c classes and s-tilde blocks of every state"));
    auto* sweep = app.add_subcommand("sweep", "sweep-equivalence class of a multi-loop");
    common(sweep);
    pick(sweep);
    auto* sleek = app.add_subcommand("sleek", "sleekness of a multi-loop");
    common(sleek);
    pick(sleek);
    auto* core = app.add_subcommand("core", "dynamic region and core growth of a loop");
    common(core);
    core->add_option("--loop", cfg.loop, "a single loop without diagonals");
    core->add_option("--state", cfg.state, "use the first resolution of this state's multi-loop");
    core->add_flag("--moves", cfg.moves, "include the move graph");
    auto* hom = app.add_subcommand("homology", "homology of a sleek class, or of a loop's maximal core");
    common(hom);
    pick(hom);
    hom->add_option("--loop", cfg.loop, "a single loop; uses the maximal core of its region");
    common(app.add_subcommand("report", "lower bound from sleek s-tilde blocks"));
    common(app.add_subcommand("fibered-report", "per-pairing table using the dataset's fiber cocycle"));
    auto* cover = app.add_subcommand("cover", "cyclic cover of a complex");
    common(cover);
    cover->add_option("--modulus", cfg.modulus, "cover degree")->check(CLI::Range(2, 1 << 20));
    cover->add_option("--weight", cfg.weight, "fiber (the dataset cocycle) or zero")->check(CLI::IsMember({"fiber", "zero"}));
    cover->add_option("--output", cfg.output, "write the cover here");
    common(app.add_subcommand("datasets", "list bundled datasets"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return usage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (!positional.empty() && !cfg.input.empty()) {
        err << "usage error: give the dataset either positionally or with --input\n";
        return usage;
    }
    if (!positional.empty()) cfg.input = positional;
    cfg.format = format == "json" ? Format::json : format == "tsv" ? Format::tsv : Format::text;
    return run(cfg, out, err);
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"vbs"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vbs::cli
