#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "vbs/complex.hpp"

using namespace vbs;

namespace {

const CheckResult& check(const ValidationReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.check_id == id) return c;
    FAIL("no check " << id);
    throw std::logic_error("unreachable");
}

bool throws_containing(const std::string& doc, const std::string& needle) {
    try {
        parse_complex(doc);
    } catch (const ParseError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("fig8 parses into two sectors on two vertices") {
    const auto& cx = support::fig8();
    CHECK(cx.sectors.size() == 2);
    CHECK(cx.vertices.size() == 2);
    CHECK(cx.edges.size() == 4);
    CHECK(cx.fiber_cocycle.has_value());
}

TEST_CASE("parse errors") {
    auto text = support::fig8_text();
    SUBCASE("dangling vertex") {
        CHECK(throws_containing(support::replace_once(text, R"({"id": 3, "from": 1, "to": 0})", R"({"id": 3, "from": 1, "to": 7})"),
                                "dangling reference"));
    }
    SUBCASE("dangling edge in a sector") {
        CHECK(throws_containing(support::replace_once(text, R"("left_top": [3, 1])", R"("left_top": [3, 9])"), "dangling reference"));
    }
    SUBCASE("duplicate id") {
        CHECK(throws_containing(support::replace_once(text, R"({"id": 3, "from": 1, "to": 0})", R"({"id": 2, "from": 1, "to": 0})"),
                                "duplicate"));
    }
    SUBCASE("syntax error carries a line") {
        CHECK(throws_containing(support::replace_once(text, R"("name": "fig8",)", R"("name": "fig8")"), "line 3"));
    }
    SUBCASE("missing field names the field") {
        CHECK(throws_containing(support::replace_once(text, R"("bottom": 0, )", ""), "bottom"));
    }
}

TEST_CASE("serialize round trip") {
    const auto& cx = support::fig8();
    auto once = serialize(cx);
    auto again = parse_complex(once);
    CHECK(serialize(again) == once);
    CHECK(serialize(support::cover2()) == serialize(parse_complex(serialize(support::cover2()))));
}

TEST_CASE("bundled complexes validate") {
    for (const auto* cx : support::datasets()) {
        auto r = validate(*cx);
        CHECK(r.ok());
        CHECK(r.failures().empty());
        CHECK(oracle::chains_breaking_rule(*cx).empty());
    }
}

TEST_CASE("recoloring a vertex breaks the top chain rule") {
    for (std::string from : {R"({"id": 0, "color": "blue"})", R"({"id": 1, "color": "red"})"}) {
        std::string to = from.find("blue") != std::string::npos ? R"({"id": 0, "color": "red"})" : R"({"id": 1, "color": "blue"})";
        auto cx = parse_complex(support::replace_once(support::fig8_text(), from, to));
        auto r = validate(cx);
        CHECK_FALSE(r.ok());
        const auto& c = check(r, "top-chain");
        CHECK_FALSE(c.passed);
        auto bad = oracle::chains_breaking_rule(cx);
        CHECK_FALSE(bad.empty());
        CHECK(c.offending == bad);
    }
}

TEST_CASE("a three-valent vertex fails the valence check") {
    auto cx = parse_complex(support::replace_once(support::fig8_text(), R"({"id": 3, "from": 1, "to": 0})", R"({"id": 3, "from": 1, "to": 1})"));
    auto r = validate(cx);
    CHECK_FALSE(check(r, "valence").passed);
}

TEST_CASE("branch loops partition the edges") {
    for (const auto* cx : support::datasets()) {
        auto loops = branch_loops(*cx);
        std::vector<Id> all;
        for (const auto& l : loops) {
            all.insert(all.end(), l.begin(), l.end());
            for (std::size_t i = 0; i < l.size(); ++i) CHECK(smooth_successor(*cx, l[i]) == l[(i + 1) % l.size()]);
        }
        std::sort(all.begin(), all.end());
        CHECK(all.size() == cx->edges.size());
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
    CHECK(branch_loops(support::fig8()) == std::vector<std::vector<Id>>{{0, 2}, {1, 3}});
}

TEST_CASE("cyclic cover lifts branch loops by the gcd rule") {
    const auto& base = support::fig8();
    const auto& w = *base.fiber_cocycle;
    for (int n : {2, 3}) {
        auto cover = cyclic_cover(base, n, w);
        CHECK(validate(cover).ok());
        CHECK(cover.sectors.size() == base.sectors.size() * n);
        // A loop of length L and weight k lifts to gcd(n, k) loops of
        // length L * n / gcd(n, k).
        std::multiset<std::size_t> expect, got;
        for (const auto& l : branch_loops(base)) {
            std::int64_t k = 0;
            for (Id e : l) k += w.at(e);
            auto g = static_cast<std::size_t>(std::gcd<std::int64_t>(n, k));
            for (std::size_t i = 0; i < g; ++i) expect.insert(l.size() * n / g);
        }
        for (const auto& l : branch_loops(cover)) got.insert(l.size());
        CHECK(got == expect);
    }
    CHECK(support::cover2().name == "fig8-cover2");
    CHECK(support::cover2().sectors.size() == 4);
}

TEST_CASE("cover preconditions") {
    const auto& base = support::fig8();
    std::map<Id, std::int64_t> zero{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK_THROWS_AS(cyclic_cover(base, 2, zero), PreconditionError);
    std::map<Id, std::int64_t> skew{{0, 1}, {1, 0}, {2, 0}, {3, 0}};
    CHECK_THROWS_AS(cyclic_cover(base, 2, skew), PreconditionError);
    CHECK_THROWS_AS(cyclic_cover(base, 1, *base.fiber_cocycle), PreconditionError);
}
