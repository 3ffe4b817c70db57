#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = vbs::cli::main_with_args(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("states subcommand") {
    auto r = run({"states", "data/fig8", "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 11);  // header + 10 rows
    auto j = run({"states", "fig8", "--format", "json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.size() == 10);
}

TEST_CASE("validation failures exit with 1 and name the check") {
    auto path = std::filesystem::temp_directory_path() / "vbs-test-bad.json";
    {
        std::ofstream f(path);
        f << support::replace_once(support::fig8_text(), R"({"id": 0, "color": "blue"})", R"({"id": 0, "color": "red"})");
    }
    auto r = run({"validate", path.string()});
    CHECK(r.code == 1);
    CHECK((r.out + r.err).find("top-chain") != std::string::npos);
    auto s = run({"states", path.string()});
    CHECK(s.code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
    for (std::vector<std::string> args : {std::vector<std::string>{"report", "fig8", "--format", "json"},
                                          std::vector<std::string>{"gradings", "fig8-cover2"},
                                          std::vector<std::string>{"fibered-report", "fig8"}}) {
        auto a = run(args);
        auto b = run(args);
        args.push_back("--threads");
        args.push_back("3");
        auto c = run(args);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
        CHECK(a.code == c.code);
    }
}

TEST_CASE("usage errors exit with 64") {
    CHECK(run({}).code == 64);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({"states"}).code == 64);
    CHECK(run({"states", "fig8", "--format", "xml"}).code == 64);
    CHECK(run({"sweep", "fig8"}).code == 64);
}

TEST_CASE("an unknown dataset is a usage error") { CHECK(run({"states", "no-such-dataset"}).code == 64); }

TEST_CASE("datasets and cover") {
    auto d = run({"datasets"});
    CHECK(d.code == 0);
    CHECK(d.out.find("fig8-cover2") != std::string::npos);
    auto c = run({"cover", "data/fig8.json", "--modulus", "2"});
    CHECK(c.code == 0);
    CHECK(vbs::serialize(vbs::parse_complex(c.out)) == vbs::serialize(support::cover2()));
}

TEST_CASE("sleek and core subcommands") {
    CHECK(run({"sleek", "fig8", "--state", "1"}).code == 0);
    auto ns = run({"sleek", "fig8", "--state", "9"});
    CHECK(ns.out.find("0 3 1 d1") != std::string::npos);
    auto core = run({"core", "fig8", "--loop", "0 3 1 2", "--format", "json"});
    CHECK(core.code == 0);
    CHECK(core.out.find("\"homology\"") != std::string::npos);
    CHECK(run({"sweep", "fig8", "--state", "3", "--cap", "2"}).code == 2);
}
