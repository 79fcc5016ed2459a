#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"

using chronomine::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (fixtures::dir() / name).string(); }

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("mine connected on graph A matches the golden file") {
    const auto r = run({"mine", "connected", fixture("graph_a.txt")});
    CHECK(r.code == 0);
    CHECK(r.out == fixtures::slurp(fixtures::golden_dir() / "graph_a_connected.jsonl"));
}

TEST_CASE("mine cliques on the triangle matches the golden file") {
    for (const char* memory : {"stack", "restart"}) {
        const auto r = run({"mine", "cliques", fixture("triangle.txt"), "--memory", memory});
        CHECK(r.code == 0);
        CHECK(r.out == fixtures::slurp(fixtures::golden_dir() / "triangle_cliques.jsonl"));
    }
}

TEST_CASE("stats line and filters") {
    const auto r = run({"mine", "cliques", fixture("triangle.txt"), "--min-duration", "5", "--stats"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    const auto stats = nlohmann::json::parse(ls[1]);
    CHECK(stats["type"] == "stats");
    CHECK(stats["outputs"] == 1);
    CHECK(stats["max_delay_ns"].get<long long>() <= stats["wall_time_ns"].get<long long>());

    const auto big = run({"mine", "cliques", fixture("triangle.txt"), "--min-size", "3"});
    CHECK(lines(big.out).size() == 1);
    const auto singles = run({"mine", "connected", fixture("graph_a.txt"), "--include-singletons", "--min-size", "1"});
    CHECK(lines(singles.out).size() == 6);
}

TEST_CASE("every mined line is a JSON object with sorted arrays") {
    const auto r = run({"mine", "cliques", fixture("bowtie.txt")});
    REQUIRE(r.code == 0);
    for (const auto& line : lines(r.out)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["type"] == "clique");
        const auto vs = j["vertices"].get<std::vector<int>>();
        CHECK(std::is_sorted(vs.begin(), vs.end()));
        const auto es = j["edges"].get<std::vector<std::vector<int>>>();
        CHECK(std::is_sorted(es.begin(), es.end()));
    }
}

TEST_CASE("output is deterministic across runs and thread counts") {
    const auto a = run({"mine", "connected", fixture("bowtie.txt"), "--kind", "2edge"});
    ::setenv("CHRONOMINE_THREADS", "3", 1);
    const auto b = run({"mine", "connected", fixture("bowtie.txt"), "--kind", "2edge"});
    ::setenv("CHRONOMINE_THREADS", "zero", 1);
    const auto bad = run({"mine", "connected", fixture("bowtie.txt")});
    ::unsetenv("CHRONOMINE_THREADS");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(bad.code == 2);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({"mine", "connected", "--kind", "strong", fixture("graph_a.txt")}).code == 2);
    CHECK(run({"mine", "connected", "--kind", "3edge", fixture("graph_a.txt")}).code == 2);
    CHECK(run({"mine", "cliques", fixture("directed_cycle.txt")}).code == 2);
    CHECK(run({"mine", "cliques", fixture("missing.txt")}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);

    const auto path = (std::filesystem::temp_directory_path() / "chronomine_corrupt.txt").string();
    {
        std::ofstream(path) << "1 2 1 3\n1 2 x 4\n";
    }
    const auto corrupt = run({"check", path});
    CHECK(corrupt.code == 2);
    CHECK(corrupt.err.find("line 2") != std::string::npos);
}

TEST_CASE("check on fixtures and random instances") {
    for (const char* name : {"graph_a.txt", "triangle.txt", "gamma_gap.txt", "directed_cycle.txt", "bowtie.txt"}) {
        const auto r = run({"check", fixture(name)});
        CHECK_MESSAGE(r.code == 0, name << ": " << r.out << r.err);
    }
    const auto r = run({"check", "--random", "--seed", "42", "--count", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("ok:", 0) == 0);
    CHECK(run({"check"}).code == 2);
}

TEST_CASE("gen") {
    const auto a = run({"gen", "--vertices", "5", "--edges", "6", "--tmax", "10", "--seed", "1"});
    CHECK(a.code == 0);
    std::size_t pairs = 0;
    for (const auto& line : lines(a.out)) pairs += !line.empty() && line[0] != '#';
    CHECK(pairs == 6);
    CHECK_NOTHROW(chronomine::TemporalGraph::parse(a.out));
    const auto b = run({"gen", "--vertices", "5", "--edges", "6", "--tmax", "10", "--seed", "1"});
    CHECK(a.out == b.out);
    CHECK(run({"gen", "--vertices", "5", "--edges", "100", "--tmax", "10", "--seed", "1"}).code == 2);
    const auto multi =
        run({"gen", "--vertices", "6", "--edges", "10", "--tmax", "9", "--seed", "2", "--multi-interval", "0.5"});
    CHECK(multi.code == 0);
}

TEST_CASE("oracle subcommands agree with the miners") {
    const auto mined = run({"mine", "connected", fixture("graph_a.txt")});
    const auto brute = run({"oracle", "connected", fixture("graph_a.txt")});
    CHECK(brute.code == 0);
    auto a = lines(mined.out), b = lines(brute.out);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    const auto simple = run({"oracle", "cliques", fixture("triangle.txt"), "--method", "simple"});
    CHECK(simple.out == fixtures::slurp(fixtures::golden_dir() / "triangle_cliques.jsonl"));
}

TEST_CASE("labels survive into the output") {
    const auto path = (std::filesystem::temp_directory_path() / "chronomine_labels.txt").string();
    {
        std::ofstream(path) << "10 7 1 4\n7 30 2 4\n10 30 1 4\n";
    }
    const auto r = run({"mine", "cliques", path});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[1] == R"({"type":"clique","vertices":[7,10,30],"edges":[[7,10,1,4],[7,30,2,4],[10,30,1,4]],"tau":[2,4]})");
}
