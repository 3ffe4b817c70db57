#include "vbs/report.hpp"

#include <algorithm>
#include <set>

#include "vbs/dynamic.hpp"
#include "vbs/parallel.hpp"

namespace vbs {

const char* status_name(BlockStatus s) {
    switch (s) {
        case BlockStatus::sleek: return "sleek";
        case BlockStatus::not_sleek: return "not-sleek";
        case BlockStatus::unresolved: return "unresolved";
    }
    return "?";
}

namespace {

void analyze_block(const VeeringComplex& cx, const std::vector<MultiLoop>& mus,
                   const Caps& caps, BlockReport& b) {
    bool capped = false;
    for (std::size_t i : b.states) {
        SleekResult s;
        try {
            s = is_sleek(cx, mus[i], caps.sweep);
        } catch (const CapExceeded& e) {
            capped = true;
            b.note = e.what();
            continue;
        }
        if (!s.sleek) {
            if (!b.witness) b.witness = s.witness;
            continue;
        }
        try {
            auto cls = sweep_class(cx, mus[i], caps.sweep);
            b.class_size = cls.members.size();
            std::vector<MultiLoop> mine;
            for (std::size_t k : b.states) mine.push_back(mus[k]);
            std::sort(mine.begin(), mine.end());
            b.class_matches_block = mine == cls.members;
            b.homology = homology_dim(cc_multiloop_complex(cx, cls));
            b.status = BlockStatus::sleek;
            b.witness.reset();
            b.note.clear();
            return;
        } catch (const CapExceeded& e) {
            capped = true;
            b.note = e.what();
        }
    }
    b.status = capped ? BlockStatus::unresolved : BlockStatus::not_sleek;
}

void total_up(Report& r) {
    r.sleek_blocks = r.unresolved_blocks = r.homology_total = 0;
    r.top_bonus = false;
    for (const auto& b : r.blocks) {
        if (b.status == BlockStatus::sleek) {
            ++r.sleek_blocks;
            r.homology_total += *b.homology;
        }
        if (b.status == BlockStatus::unresolved) ++r.unresolved_blocks;
        if (b.has_top && b.status != BlockStatus::sleek) r.top_bonus = true;
    }
    r.lower_bound = r.homology_total + (r.top_bonus ? 1 : 0);
}

struct Pipeline {
    std::vector<HeegaardState> states;
    std::vector<MultiLoop> mus;
    Report report;
};

Pipeline run_pipeline(const VeeringComplex& cx, const Caps& caps, unsigned threads) {
    Pipeline p;
    p.report.name = cx.name;
    p.states = enumerate_states(cx, threads);
    p.report.states = p.states.size();
    p.mus.resize(p.states.size());
    parallel_for(p.states.size(), threads, [&](std::size_t i) { p.mus[i] = state_multiloop(cx, p.states[i]); });
    H1Lattice lattice(cx);
    auto part = s_tilde_partition(cx, lattice, p.states, threads);
    for (std::size_t k = 0; k < part.blocks.size(); ++k) {
        BlockReport b;
        b.id = k;
        b.states = part.blocks[k].members;
        b.spinc = part.blocks[k].spinc;
        b.has_top = part.blocks[k].has_top;
        b.has_bottom = part.blocks[k].has_bottom;
        p.report.blocks.push_back(std::move(b));
    }
    parallel_for(p.report.blocks.size(), threads,
                 [&](std::size_t k) { analyze_block(cx, p.mus, caps, p.report.blocks[k]); });
    total_up(p.report);
    return p;
}

}  // namespace

Report sfh_report(const VeeringComplex& cx, const Caps& caps, unsigned threads) { return run_pipeline(cx, caps, threads).report; }

std::map<Id, std::int64_t> extend_to_diagonals(const VeeringComplex& cx, const std::map<Id, std::int64_t>& omega) {
    auto w = [&](Id e) {
        auto it = omega.find(e);
        if (it == omega.end()) throw PreconditionError("cocycle missing on edge " + std::to_string(e));
        return it->second;
    };
    std::map<Id, std::int64_t> diag;
    for (const auto& s : cx.sectors) {
        std::int64_t l = 0, r = 0;
        for (Id e : boundary_path(s, Side::left)) l += w(e);
        for (Id e : boundary_path(s, Side::right)) r += w(e);
        if (l != r) throw PreconditionError("inconsistent cocycle: sector " + std::to_string(s.id) + " boundary paths pair to " +
                                            std::to_string(l) + " and " + std::to_string(r));
        diag[s.id] = l;
    }
    return diag;
}

std::int64_t pairing(const VeeringComplex&, const std::map<Id, std::int64_t>& omega,
                     const std::map<Id, std::int64_t>& diagonal_weight, const MultiLoop& m) {
    std::int64_t total = 0;
    for (const auto& loop : m.loops())
        for (EdgeRef r : loop) total += r.is_diagonal() ? diagonal_weight.at(r.id) : omega.at(r.id);
    return total;
}

FiberedReport fibered_report(const VeeringComplex& cx, const std::map<Id, std::int64_t>& omega, const Caps& caps, unsigned threads) {
    FiberedReport fr;
    fr.diagonal_weight = extend_to_diagonals(cx, omega);
    for (const auto& [e, x] : omega)
        if (x < 0) throw PreconditionError("fiber cocycle must be non-negative");
    auto p = run_pipeline(cx, caps, threads);
    auto [top, bot] = canonical_states(cx);
    std::map<std::int64_t, FiberedRow> rows;
    for (auto& b : p.report.blocks) {
        std::set<std::int64_t> values;
        for (std::size_t i : b.states) values.insert(pairing(cx, omega, fr.diagonal_weight, p.mus[i]));
        if (values.size() != 1) fr.pairings_consistent = false;
        b.pairing = *values.begin();
        auto& row = rows[*b.pairing];
        row.n = *b.pairing;
        row.states += b.states.size();
        ++row.blocks;
        if (b.status == BlockStatus::sleek) {
            ++row.sleek;
            row.homology += *b.homology;
        }
        if (b.status == BlockStatus::unresolved) ++row.unresolved;
    }
    fr.pairing_top = pairing(cx, omega, fr.diagonal_weight, state_multiloop(cx, top));
    fr.pairing_bottom = pairing(cx, omega, fr.diagonal_weight, state_multiloop(cx, bot));
    if (fr.pairing_bottom != 0) throw std::logic_error("the bottom state must pair to zero");
    for (auto& [n, row] : rows) fr.rows.push_back(row);
    fr.report = std::move(p.report);
    return fr;
}

}  // namespace vbs
