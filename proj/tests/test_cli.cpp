#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commring/graph_io.hpp"
#include "commring/ring_io.hpp"

using namespace commring;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(COMMRING_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("cli: ring make, graph build, solve gamma pipeline") {
    TempDir dir("commring_cli_pipeline");
    auto made = run("ring make --type E --p 3 -o " + dir.file("e9.ring"));
    CHECK(made.exit_code == 0);

    auto built = run("graph build --ring " + dir.file("e9.ring") +
                     " --format dimacs -o " + dir.file("e9.dimacs"));
    CHECK(built.exit_code == 0);

    auto solved = run("solve gamma --in " + dir.file("e9.dimacs"));
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.rfind("gamma 4\n", 0) == 0);
}

TEST_CASE("cli: solve gamma-s on K5 prints 1") {
    TempDir dir("commring_cli_k5");
    {
        std::ofstream out(dir.file("k5.dimacs"));
        out << write_dimacs(complete_graph(5));
    }
    auto solved = run("solve gamma-s --in " + dir.file("k5.dimacs"));
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.rfind("gamma_s 1\n", 0) == 0);
}

TEST_CASE("cli: ring enum writes two order-4 classes deterministically") {
    TempDir a("commring_cli_enum_a");
    TempDir b("commring_cli_enum_b");
    CHECK(run("ring enum --order 4 --noncommutative -o " + a.path.string())
              .exit_code == 0);
    CHECK(run("ring enum --order 4 --noncommutative --jobs 3 -o " +
              b.path.string())
              .exit_code == 0);

    for (const char* name : {"r4_0.ring", "r4_1.ring", "manifest_4.json"}) {
        CHECK(std::filesystem::exists(a.path / name));
        CHECK(slurp(a.file(name)) == slurp(b.file(name)));
    }
    FiniteRing r0 = read_ring_file(a.file("r4_0.ring"));
    CHECK(r0.n == 4);
    CHECK_FALSE(is_commutative(r0));
}

TEST_CASE("cli: graph build --complement emits the complement") {
    TempDir dir("commring_cli_complement");
    run("ring make --type E --p 2 -o " + dir.file("e4.ring"));
    auto direct = run("graph build --ring " + dir.file("e4.ring"));
    auto comp = run("graph build --ring " + dir.file("e4.ring") + " --complement");
    CHECK(direct.out.rfind("p edge 3 0\n", 0) == 0);
    CHECK(comp.out.rfind("p edge 3 3\n", 0) == 0);
}

TEST_CASE("cli: export converts DIMACS to DOT") {
    TempDir dir("commring_cli_export");
    run("ring make --type F --p 2 -o " + dir.file("f4.ring"));
    run("graph build --ring " + dir.file("f4.ring") + " -o " +
        dir.file("f4.dimacs"));
    auto dot = run("export --in " + dir.file("f4.dimacs") + " --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.rfind("graph commuting {", 0) == 0);
}

TEST_CASE("cli: verify exclusions to order 7 exits zero") {
    TempDir dir("commring_cli_verify");
    auto verified = run("verify --suite exclusions --max-order 7 --report " +
                        dir.file("report.jsonl"));
    CHECK(verified.exit_code == 0);
    std::string report = slurp(dir.file("report.jsonl"));
    CHECK(report.find("\"check\":\"Lem6\"") != std::string::npos);
    CHECK(report.find("\"status\":\"fail\"") == std::string::npos);
}

TEST_CASE("cli: verify reports are stable across --jobs, modulo millis") {
    TempDir dir("commring_cli_verify_jobs");
    auto strip = [](std::string s) {
        for (size_t pos = 0; (pos = s.find("\"millis\":", pos)) != std::string::npos;) {
            size_t end = s.find_first_of(",}", pos + 9);
            s.erase(pos + 9, end - pos - 9);
            pos += 9;
        }
        return s;
    };
    run("verify --suite p2 --max-order 4 --jobs 1 --report " + dir.file("a.jsonl"));
    run("verify --suite p2 --max-order 4 --jobs 4 --report " + dir.file("b.jsonl"));
    CHECK(strip(slurp(dir.file("a.jsonl"))) == strip(slurp(dir.file("b.jsonl"))));
}

TEST_CASE("cli: exit codes distinguish error classes") {
    TempDir dir("commring_cli_errors");
    CHECK(run("frobnicate").exit_code == 2);                      // usage
    CHECK(run("solve gamma --in /nonexistent.dimacs").exit_code == 3);  // file
    {
        std::ofstream out(dir.file("bad.ring"));
        out << "{\"format\":\"commring/1\",\"order\":2,\"add\":[[0,1],[1,0]],"
               "\"mul\":[[1,1],[1,1]]}";
    }
    CHECK(run("graph build --ring " + dir.file("bad.ring")).exit_code == 4);
    CHECK(run("ring make --type Q --order 4 -o " + dir.file("q.ring"))
              .exit_code == 4);
}
