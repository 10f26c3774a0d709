#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fraccover/fhw.hpp"
#include "fraccover/json_io.hpp"
#include "generators.hpp"

// End-to-end checks of the fraccover binary; FRACCOVER_BIN is injected by
// the build.

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FRACCOVER_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

fs::path write_temp(const std::string& name, const std::string& contents) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << contents;
    return p;
}

const char* kH4 =
    "e0(v1,v2,v3,v4).\ne1(v0,v1).\ne2(v0,v2).\ne3(v0,v3).\ne4(v0,v4).\n";
const char* kTriangle = "eab(a,b).\nebc(b,c).\neca(c,a).\n";

}  // namespace

TEST_CASE("cli: cover on H_4 reports 7/4 with support 5") {
    auto h4 = write_temp("cli_h4.hg", kH4);
    RunResult res = run_cli("cover " + h4.string() + " --output json");
    REQUIRE(res.status == 0);
    auto j = fraccover::Json::parse(res.out);
    CHECK(j.at("weight") == "7/4");
    CHECK(j.at("support_size") == 5);
    CHECK(j.at("weights").at("e0") == "3/4");
}

TEST_CASE("cli: cover with an explicit vertex list") {
    auto h4 = write_temp("cli_h4b.hg", kH4);
    RunResult res = run_cli("cover " + h4.string() + " --vertices v1,v2 --output json");
    REQUIRE(res.status == 0);
    auto j = fraccover::Json::parse(res.out);
    CHECK(fraccover::rat_parse(j.at("weight").get<std::string>()) <= fraccover::Rat(2));
}

TEST_CASE("cli: reduce on H_4 keeps the budget and reports coverage") {
    auto h4 = write_temp("cli_h4c.hg", kH4);
    RunResult res = run_cli("reduce " + h4.string() + " --c 2 --k 2 --trace --output json");
    REQUIRE(res.status == 0);
    auto j = fraccover::Json::parse(res.out);
    CHECK(fraccover::rat_parse(j.at("nu").at("weight").get<std::string>()) <=
          fraccover::Rat(2));
    CHECK(j.at("coverage_superset") == true);
    CHECK(j.at("trace").is_array());
    CHECK(j.at("trace").back().at("kind") == "certify");
}

TEST_CASE("cli: fhw on the triangle with k=1 exits 2") {
    auto tri = write_temp("cli_tri.hg", kTriangle);
    RunResult res = run_cli("fhw " + tri.string() + " --k 1 --q 3");
    CHECK(res.status == 2);
    CHECK(res.out.find("no TD within budget") != std::string::npos);
}

TEST_CASE("cli: fhw on the triangle with k=3/2 finds a decomposition") {
    auto tri = write_temp("cli_tri2.hg", kTriangle);
    RunResult res = run_cli("fhw " + tri.string() + " --k 3/2 --q 3 --brute --output json");
    REQUIRE(res.status == 0);
    auto j = fraccover::Json::parse(res.out);
    CHECK(j.at("found") == true);
    CHECK(j.at("brute_found") == true);
    CHECK(j.at("decomposition").at("width") == "3/2");
    // Emitted decompositions re-validate.
    fraccover::Hypergraph h = fraccover::parse_hypergraph(kTriangle);
    auto td = fraccover::td_from_json(h, j.at("decomposition"));
    CHECK(fraccover::validate_td(h, td).ok);
}

TEST_CASE("cli: fhw --deepen reports per-level outcomes") {
    auto tri = write_temp("cli_tri3.hg", kTriangle);
    RunResult res = run_cli("fhw " + tri.string() + " --k 3/2 --deepen --output json");
    REQUIRE(res.status == 0);
    auto j = fraccover::Json::parse(res.out);
    REQUIRE(j.at("levels").is_array());
    CHECK(j.at("levels").front().at("q") == 1);
    CHECK(j.at("found") == true);
}

TEST_CASE("cli: dual emits a re-parsable hypergraph file") {
    auto h4 = write_temp("cli_h4d.hg", kH4);
    RunResult res = run_cli("dual " + h4.string());
    REQUIRE(res.status == 0);
    fraccover::Hypergraph dual = fraccover::parse_hypergraph(res.out);
    CHECK(dual.vertex_count() == 5);
    CHECK(dual.edge_count() == 5);
}

TEST_CASE("cli: analyze reports the intersection profile") {
    auto h4 = write_temp("cli_h4e.hg", kH4);
    RunResult res = run_cli("analyze " + h4.string() + " --c 2 --d 1 --output json");
    REQUIRE(res.status == 0);
    auto j = fraccover::Json::parse(res.out);
    CHECK(j.at("profile").at(1).at("c") == 2);
    CHECK(j.at("profile").at(1).at("d") == 1);
    CHECK(j.at("is_cd").at("holds") == true);
}

TEST_CASE("cli: vcover matches the dual cover number") {
    auto tri = write_temp("cli_tri4.hg", kTriangle);
    RunResult res = run_cli("vcover " + tri.string() + " --output json");
    REQUIRE(res.status == 0);
    auto j = fraccover::Json::parse(res.out);
    CHECK(j.at("weight") == "3/2");
}

TEST_CASE("cli: errors exit 1 with distinct messages") {
    RunResult missing = run_cli("cover /nonexistent.hg");
    CHECK(missing.status == 1);

    auto bad = write_temp("cli_bad.hg", "e0().\n");
    RunResult parse_err = run_cli("cover " + bad.string());
    CHECK(parse_err.status == 1);
    CHECK(parse_err.out.find("parse error") != std::string::npos);

    auto h4 = write_temp("cli_h4f.hg", kH4);
    RunResult over = run_cli("reduce " + h4.string() + " --c 2 --k 1");
    CHECK(over.status == 1);

    RunResult cap = run_cli("reduce " + h4.string() + " --c 2 --k 2 --cap 1");
    CHECK(cap.status == 1);
    CHECK(cap.out.find("cap exceeded") != std::string::npos);
}

TEST_CASE("cli: FRACCOVER_CAP environment override") {
    auto h4 = write_temp("cli_h4g.hg", kH4);
    std::string cmd = "FRACCOVER_CAP=1 " + std::string(FRACCOVER_BIN) + " reduce " +
                      h4.string() + " --c 2 --k 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::string out;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int rc = pclose(pipe);
    CHECK(WEXITSTATUS(rc) == 1);
    CHECK(out.find("cap exceeded") != std::string::npos);
}

TEST_CASE("cli: identical runs produce byte-identical JSON") {
    auto h4 = write_temp("cli_h4h.hg", kH4);
    for (const std::string& args :
         {std::string("cover "), std::string("analyze "), std::string("vcover ")}) {
        RunResult a = run_cli(args + h4.string() + " --output json");
        RunResult b = run_cli(args + h4.string() + " --output json");
        REQUIRE(a.status == 0);
        CHECK(a.out == b.out);
    }
    RunResult a = run_cli("fhw " + h4.string() + " --k 2 --q 5 --output json");
    RunResult b = run_cli("fhw " + h4.string() + " --k 2 --q 5 --output json");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
}
