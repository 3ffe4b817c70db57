#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "vbs/grading.hpp"
#include "vbs/lattice.hpp"

using namespace vbs;
using Mat = IntMatrix<std::int64_t>;
using Vec = IntVector<std::int64_t>;

namespace {

Mat random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::uniform_int_distribution<int> d(-4, 4);
    Mat a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = d(rng);
    return a;
}

double det(const Mat& m) { return m.cast<double>().determinant(); }

// x - y lies in the row lattice of A, read off the Smith form.
bool same_coset_smith(const SmithForm<std::int64_t>& s, const Vec& x, const Vec& y) {
    Vec z = s.V.transpose() * (x - y);
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        std::int64_t d = i < static_cast<Eigen::Index>(s.invariants.size()) ? s.invariants[i] : 0;
        if (d == 0 ? z(i) != 0 : z(i) % d != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Smith form identities on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::Index m = 1 + static_cast<Eigen::Index>(rng() % 5), n = 1 + static_cast<Eigen::Index>(rng() % 5);
        Mat a = random_matrix(rng, m, n);
        auto s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(std::abs(std::abs(det(s.U)) - 1.0) < 1e-9);
        CHECK(std::abs(std::abs(det(s.V)) - 1.0) < 1e-9);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        for (std::size_t k = 0; k < s.invariants.size(); ++k) {
            CHECK(s.invariants[k] > 0);
            if (k + 1 < s.invariants.size()) CHECK(s.invariants[k + 1] % s.invariants[k] == 0);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a.cast<double>());
        CHECK(static_cast<Eigen::Index>(s.invariants.size()) == lu.rank());
    }
}

TEST_CASE("Hermite reduction and Smith cosets agree") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::Index m = 1 + static_cast<Eigen::Index>(rng() % 4), n = 1 + static_cast<Eigen::Index>(rng() % 4);
        Mat a = random_matrix(rng, m, n);
        Mat h = hermite_normal_form(a);
        auto s = smith_normal_form(a);
        CHECK(h.rows() == static_cast<Eigen::Index>(s.invariants.size()));
        Vec x(n), y(n), c(m);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = d(rng);
        for (Eigen::Index i = 0; i < m; ++i) c(i) = d(rng);
        Vec shifted = x + a.transpose() * c;
        CHECK(hnf_reduce(h, x) == hnf_reduce(h, shifted));
        CHECK(same_coset_smith(s, x, shifted));
        for (Eigen::Index i = 0; i < n; ++i) y(i) = d(rng) % 2;
        CHECK((hnf_reduce(h, x) == hnf_reduce(h, y)) == same_coset_smith(s, x, y));
    }
}

TEST_CASE("strum resolutions match the recursive oracle") {
    for (const auto* cx : support::datasets()) {
        for (const auto& m : support::state_multiloops(*cx)) {
            std::set<std::vector<Loop>> got;
            for (const auto& r : strum_resolutions(*cx, m)) {
                CHECK(r.graph_only());
                got.insert(r.loops());
            }
            CHECK(got == oracle::brute_force_resolutions(*cx, m));
        }
    }
}

TEST_CASE("epsilon tilde lies in one H1(M) class, zero at the bottom state") {
    for (const auto* cx : support::datasets()) {
        H1Lattice lattice(*cx);
        auto states = enumerate_states(*cx);
        auto bot = canonical_states(*cx).second;
        for (const auto& x : states) {
            auto eps = epsilon_tilde(*cx, x);
            REQUIRE_FALSE(eps.empty());
            CHECK(std::is_sorted(eps.begin(), eps.end(), CycleVectorLess{}));
            auto c0 = lattice.classify(eps.front());
            for (const auto& v : eps) {
                CHECK(is_cycle(*cx, v));
                CHECK(lattice.classify(v) == c0);
            }
            if (x == bot) {
                CHECK(eps.size() == 1);
                CHECK(eps.front().isZero());
            }
        }
    }
}

TEST_CASE("sector boundaries vanish and classes add") {
    for (const auto* cx : support::datasets()) {
        H1Lattice lattice(*cx);
        H1MClass zero = lattice.classify(CycleVector::Zero(static_cast<Eigen::Index>(cx->edges.size())));
        for (const auto& s : cx->sectors) {
            auto b = lattice.sector_boundary(s);
            CHECK(lattice.classify(b) == zero);
            CHECK(lattice.canonical_representative(b) == lattice.canonical_representative(b * 0));
        }
        std::vector<CycleVector> vs;
        for (const auto& x : enumerate_states(*cx))
            for (const auto& v : epsilon_tilde(*cx, x)) vs.push_back(v);
        for (std::size_t i = 0; i < vs.size(); i += 3)
            for (std::size_t j = 0; j < vs.size(); j += 5) {
                CHECK(lattice.classify(vs[i] + vs[j]) == lattice.add(lattice.classify(vs[i]), lattice.classify(vs[j])));
                bool same_hnf = lattice.canonical_representative(vs[i]) == lattice.canonical_representative(vs[j]);
                CHECK(same_hnf == (lattice.classify(vs[i]) == lattice.classify(vs[j])));
            }
    }
}

TEST_CASE("H1 of the mapping torus and its double cover") {
    // Monodromy [[2,1],[1,1]]: H1 = Z + coker(A^n - I), |det(A^n - I)| = |tr A^n - 2|.
    auto trace_power = [](int n) {
        std::int64_t a = 2, b = 1, c = 1, d = 1, p = 1, q = 0, r = 0, s = 1;
        for (int i = 0; i < n; ++i) {
            std::int64_t np = p * a + q * c, nq = p * b + q * d, nr = r * a + s * c, ns = r * b + s * d;
            p = np, q = nq, r = nr, s = ns;
        }
        return p + s;
    };
    H1Lattice base(support::fig8());
    CHECK(base.free_rank() == 1);
    CHECK(trace_power(1) - 2 == 1);
    CHECK(base.torsion_orders().empty());

    H1Lattice cover(support::cover2());
    CHECK(cover.free_rank() == 1);
    std::int64_t order = 1;
    for (auto t : cover.torsion_orders()) order *= t;
    CHECK(order == trace_power(2) - 2);
    CHECK(cover.torsion_orders() == std::vector<std::int64_t>{5});
}

TEST_CASE("fig8 spin^c partition") {
    const auto& cx = support::fig8();
    H1Lattice lattice(cx);
    auto states = enumerate_states(cx);
    auto part = spinc_partition(cx, lattice, states);
    std::multiset<std::size_t> sizes;
    for (const auto& b : part.blocks) {
        sizes.insert(b.members.size());
        if (b.has_top || b.has_bottom) CHECK(b.members.size() == 1);
    }
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 4, 4});
}

TEST_CASE("s-tilde refines spin^c") {
    for (const auto* cx : support::datasets()) {
        H1Lattice lattice(*cx);
        auto states = enumerate_states(*cx);
        auto sp = spinc_partition(*cx, lattice, states);
        auto st = s_tilde_partition(*cx, lattice, states);
        CHECK(st.blocks.size() >= sp.blocks.size());
        for (const auto& b : st.blocks)
            for (std::size_t i : b.members) CHECK(sp.block_of[i] == sp.block_of[b.members.front()]);
        for (std::size_t k = 0; k + 1 < st.blocks.size(); ++k) CHECK(st.blocks[k].members.front() < st.blocks[k + 1].members.front());
        CHECK(s_tilde_partition(*cx, lattice, states, 4).block_of == st.block_of);

        // Components of the "shares a vector" graph, by flood fill over a
        // quadratic adjacency test.
        auto eps = epsilon_tilde_all(*cx, states);
        const std::size_t n = states.size();
        std::vector<std::size_t> comp(n, n);
        for (std::size_t s = 0; s < n; ++s) {
            if (comp[s] != n) continue;
            std::vector<std::size_t> stack{s};
            comp[s] = s;
            while (!stack.empty()) {
                std::size_t i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < n; ++j) {
                    if (comp[j] != n) continue;
                    bool share = false;
                    for (const auto& v : eps[i])
                        for (const auto& w : eps[j]) share = share || v == w;
                    if (share) {
                        comp[j] = s;
                        stack.push_back(j);
                    }
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK((comp[i] == comp[j]) == (st.block_of[i] == st.block_of[j]));
    }
    H1Lattice lattice(support::fig8());
    auto st = s_tilde_partition(support::fig8(), lattice, enumerate_states(support::fig8()));
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : st.blocks) blocks.push_back(b.members);
    CHECK(blocks == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3, 6, 7, 8}, {4}, {5}, {9}});
    CHECK(st.blocks.size() == 7);
}

TEST_CASE("cover has fifteen s-tilde blocks") {
    const auto& cx = support::cover2();
    H1Lattice lattice(cx);
    CHECK(s_tilde_partition(cx, lattice, enumerate_states(cx)).blocks.size() == 15);
}
