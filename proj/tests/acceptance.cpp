// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "support.hpp"
#include "vbs/dynamic.hpp"
#include "vbs/grading.hpp"
#include "vbs/report.hpp"
#include "vbs/states.hpp"
#include "vbs/sweep.hpp"

using namespace vbs;

namespace {

// Wall-clock limits in seconds; 0 means untimed.
constexpr double kStatesLimit = 1.0;
constexpr double kHomologyLimit = 10.0;
constexpr double kOracleLimit = 60.0;
constexpr std::uint64_t kSeed = 0x5eed2024;
constexpr std::size_t kRandomClasses = 6;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << what;
            pass = false;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) {
        std::ostringstream why;
        why << "took " << secs << " s, limit " << limit << " s";
        o.require(false, why.str());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name;
    std::cout << " (" << static_cast<long>(secs * 1000) << " ms)";
    if (!o.pass) std::cout << ": " << o.detail.str();
    std::cout << "\n";
}

std::vector<std::size_t> sizes_of(const GradingPartition& p) {
    std::vector<std::size_t> s;
    for (const auto& b : p.blocks) s.push_back(b.members.size());
    std::sort(s.begin(), s.end());
    return s;
}

Loop as_loop(const std::vector<Id>& edges) {
    Loop l;
    for (Id e : edges) l.push_back(EdgeRef::edge(e));
    return normalize_loop(l);
}

// Periodic boundary points of the blown-up cat map [[2,1],[1,1]]: the
// |tr(A^n) - 2| points of period n on the torus, with the fixed origin
// replaced by its four prong directions, counted per orbit.
std::int64_t hand_count(int n) {
    std::int64_t a = 2, b = 1, c = 1, d = 1, p = 1, q = 0, r = 0, s = 1;
    for (int i = 0; i < n; ++i) {
        std::int64_t np = p * a + q * c, nq = p * b + q * d, nr = r * a + s * c, ns = r * b + s * d;
        p = np, q = nq, r = nr, s = ns;
    }
    return (std::llabs(p + s - 2) - 1 + 4) / n;
}

}  // namespace

int main() {
    const auto& fig8 = support::fig8();
    const auto& cover = support::cover2();

    criterion(1, "fig8 has exactly 10 states including x^bot and x^top", kStatesLimit, [&](Outcome& o) {
        auto states = enumerate_states(fig8);
        auto [top, bot] = canonical_states(fig8);
        o.require(states.size() == 10, "state count " + std::to_string(states.size()));
        o.require(std::find(states.begin(), states.end(), top) != states.end(), "x^top missing");
        o.require(std::find(states.begin(), states.end(), bot) != states.end(), "x^bot missing");
    });

    H1Lattice fig8_lattice(fig8);
    auto fig8_states = enumerate_states(fig8);

    criterion(2, "fig8 spin^c blocks have sizes 1, 1, 4, 4 with x^top and x^bot alone", 0, [&](Outcome& o) {
        auto sp = spinc_partition(fig8, fig8_lattice, fig8_states);
        o.require(sizes_of(sp) == std::vector<std::size_t>{1, 1, 4, 4}, "wrong block sizes");
        for (const auto& b : sp.blocks)
            if (b.has_top || b.has_bottom) o.require(b.members.size() == 1, "x^top or x^bot shares a block");
    });

    criterion(3, "one size-4 spin^c block splits into 4 s-tilde singletons, the other stays whole", 0, [&](Outcome& o) {
        auto sp = spinc_partition(fig8, fig8_lattice, fig8_states);
        auto st = s_tilde_partition(fig8, fig8_lattice, fig8_states);
        std::multiset<std::size_t> split_counts;
        for (const auto& b : sp.blocks) {
            if (b.members.size() != 4) continue;
            std::set<std::size_t> sub;
            for (std::size_t i : b.members) sub.insert(st.block_of[i]);
            split_counts.insert(sub.size());
        }
        o.require(split_counts == std::multiset<std::size_t>{1, 4}, "size-4 blocks do not split as 4 + 1");
    });

    criterion(4, "every sleek s-tilde block on fig8 and fig8-cover2 has homology 1", kHomologyLimit, [&](Outcome& o) {
        for (const auto* cx : support::datasets()) {
            auto r = sfh_report(*cx);
            o.require(r.unresolved_blocks == 0, cx->name + " has unresolved blocks");
            o.require(r.sleek_blocks > 0, cx->name + " has no sleek block");
            for (const auto& b : r.blocks)
                if (b.status == BlockStatus::sleek)
                    o.require(b.homology == std::optional<std::size_t>(1), cx->name + " block " + std::to_string(b.id));
        }
    });

    criterion(5, "every constructed complex squares to zero", 0, [&](Outcome& o) {
        for (const auto* cx : support::datasets()) {
            for (const auto& m : support::state_multiloops(*cx)) {
                if (!is_sleek(*cx, m).sleek) continue;
                o.require(cc_multiloop_complex(*cx, sweep_class(*cx, m)).squares_to_zero(), format_multiloop(m));
            }
            std::set<Loop> loops;
            for (const auto& m : support::state_multiloops(*cx))
                for (const auto& r : strum_resolutions(*cx, m))
                    if (r.size() == 1) loops.insert(r[0]);
            for (const auto& c : loops) {
                auto region = build_dynamic_region(*cx, c);
                for (const auto& k : core_growth_sequence(region, Core{}, maximal_core(region)))
                    o.require(cc_complex(*cx, region, k).squares_to_zero(), format_loop(c));
            }
        }
    });

    criterion(6, "homology is constant along core growth for random single-loop classes", 0, [&](Outcome& o) {
        std::vector<std::pair<const VeeringComplex*, Loop>> pool;
        for (const auto* cx : support::datasets()) {
            std::set<Loop> loops;
            for (const auto& m : support::state_multiloops(*cx))
                for (const auto& r : strum_resolutions(*cx, m))
                    if (r.size() == 1) loops.insert(r[0]);
            for (const auto& b : branch_loops(*cx)) loops.insert(as_loop(b));
            for (const auto& c : loops) pool.push_back({cx, c});
        }
        std::mt19937_64 rng(kSeed);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t tested = 0, nontrivial = 0;
        for (const auto& [cx, c] : pool) {
            if (tested == kRandomClasses) break;
            ++tested;
            auto region = build_dynamic_region(*cx, c);
            auto seq = core_growth_sequence(region, Core{}, maximal_core(region));
            if (!seq.empty()) ++nontrivial;
            std::size_t base = homology_dim(cc_complex(*cx, region, Core{}));
            for (const auto& k : seq) o.require(homology_dim(cc_complex(*cx, region, k)) == base, cx->name + " " + format_loop(c));
        }
        o.require(tested >= 5, "fewer than 5 classes available");
        o.require(nontrivial > 0, "no sampled class had a nontrivial growth sequence");
    });

    criterion(7, "epsilon-tilde members share one H1(M) class, zero at x^bot", 0, [&](Outcome& o) {
        for (const auto* cx : support::datasets()) {
            H1Lattice lattice(*cx);
            auto bot = canonical_states(*cx).second;
            auto zero = lattice.classify(CycleVector::Zero(static_cast<Eigen::Index>(cx->edges.size())));
            for (const auto& x : enumerate_states(*cx)) {
                auto eps = epsilon_tilde(*cx, x);
                std::set<H1MClass> classes;
                for (const auto& v : eps) classes.insert(lattice.classify(v));
                o.require(classes.size() == 1, cx->name + " " + format_state(*cx, x));
                if (x == bot) o.require(classes.size() == 1 && *classes.begin() == zero, "x^bot is not at zero");
            }
        }
    });

    criterion(8, "fig8 branch bipartition: N = 1, all 3 unions sleek, bound >= 4", 0, [&](Outcome& o) {
        auto bp = orientability_bipartition(fig8);
        o.require(bp.has_value(), "no bipartition");
        if (!bp) return;
        std::size_t n = bp->east_count();
        o.require(n == 1, "N = " + std::to_string(n));
        auto bc = sleek_branch_count(fig8);
        std::size_t expect = (std::size_t{1} << (n + 1)) - 1;
        o.require(bc.unions == expect && bc.count == expect, "sleek unions " + std::to_string(bc.count));
        o.require(bc.bound >= (std::size_t{1} << (n + 1)), "branch bound " + std::to_string(bc.bound));
        o.require(sfh_report(fig8).lower_bound >= (std::size_t{1} << (n + 1)), "report bound too small");
    });

    criterion(9, "fig8 fibered rows: pairings 0 and 3, rows n = 1, 2 contribute 4 each", 0, [&](Outcome& o) {
        auto fr = fibered_report(fig8, *fig8.fiber_cocycle);
        o.require(fr.pairing_bottom == 0, "pairing(x^bot) = " + std::to_string(fr.pairing_bottom));
        o.require(fr.pairing_top == 3, "pairing(x^top) = " + std::to_string(fr.pairing_top));
        for (int n : {1, 2}) {
            auto expect = static_cast<std::size_t>(hand_count(n));
            const FiberedRow* row = nullptr;
            for (const auto& r : fr.rows)
                if (r.n == n) row = &r;
            if (!row) {
                o.require(false, "no row n = " + std::to_string(n));
                continue;
            }
            std::ostringstream why;
            why << "row n = " << n << ": homology " << row->homology << " from " << row->sleek << " sleek of " << row->blocks
                << " blocks, expected " << expect;
            o.require(row->homology == expect && row->sleek == 4 && expect == 4, why.str());
        }
    });

    criterion(10, "oracle equivalence: states, representatives, F2 rank", kOracleLimit, [&](Outcome& o) {
        auto cover3 = cyclic_cover(fig8, 3, *fig8.fiber_cocycle);
        for (const auto* cx : {&fig8, &cover, static_cast<const VeeringComplex*>(&cover3)}) {
            if (cx->sectors.size() > 6) continue;
            auto states = enumerate_states(*cx);
            o.require(std::set<HeegaardState>(states.begin(), states.end()) == oracle::brute_force_states(*cx),
                      cx->name + " states");
        }
        for (const auto* cx : support::datasets()) {
            std::set<CycleVector, CycleVectorLess> vectors;
            for (const auto& x : enumerate_states(*cx))
                for (const auto& v : epsilon_tilde(*cx, x)) vectors.insert(v);
            for (const auto& v : vectors) {
                std::set<std::vector<Loop>> got;
                for (const auto& r : representatives_of_cycle(*cx, v)) got.insert(r.loops());
                o.require(got == oracle::closed_walk_decompositions(*cx, v), cx->name + " representatives");
            }
        }
        std::mt19937_64 rng(kSeed);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t rows = 1 + rng() % 50, cols = 1 + rng() % 50;
            std::bernoulli_distribution bit(0.05 + 0.45 * static_cast<double>(trial % 4) / 3.0);
            F2Matrix m(rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    if (bit(rng)) m.set(r, c, true);
            o.require(f2_rank(m) == oracle::dense_rank(oracle::to_dense(m)), "f2 rank");
        }
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
