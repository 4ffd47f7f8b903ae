#include "doctest.h"

#include <stdexcept>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "skewdet/acceptance.hpp"
#include "skewdet/json_io.hpp"

using namespace skewdet;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SKEWDET_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json run_json(const std::string& args, int expected_code) {
    auto r = run(args);
    CHECK(r.code == expected_code);
    return Json::parse(r.out);
}

std::string write_temp(const std::string& name, const Json& j) {
    auto dir = fs::temp_directory_path() / "skewdet_cli_test";
    fs::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << j.dump();
    return p.string();
}

}  // namespace

TEST_CASE("count a single box") {
    auto file = write_temp("single.json", to_json(SkewShape::make({1})));
    auto j = run_json("count --shape " + file, 0);
    CHECK(j["command"] == "count");
    CHECK(j["status"] == "ok");
    CHECK(j["payload"]["count"] == "1");
    auto text = run("--format text count --shape " + file);
    CHECK(text.code == 0);
    CHECK(text.out == "1\n");
    auto brute = run_json("count --method brute --shape " + file, 0);
    CHECK(brute["payload"]["count"] == "1");
}

TEST_CASE("schur methods agree") {
    auto file = write_temp("s321.json", to_json(SkewShape::make({3, 2, 1}, {1})));
    auto a = run_json("schur --shape " + file + " --vars 3 --method direct", 0);
    auto b = run_json("schur --shape " + file + " --vars 3 --method jt", 0);
    CHECK(a["payload"]["polynomial"] == b["payload"]["polynomial"]);
}

TEST_CASE("verify the three-strip cover") {
    auto file = write_temp("three.json", to_json(reference_thick_decomposition().decomposition));
    auto j = run_json("verify --decomp " + file + " --vars 4", 0);
    CHECK(j["payload"]["equal"] == true);
    CHECK(j["payload"]["r"] == 3);
    auto v = run_json("validate --decomp " + file, 0);
    CHECK(v["payload"]["ok"] == true);
    CHECK(v["payload"]["nested"] == true);
    CHECK(v["payload"]["r"] == 3);
}

TEST_CASE("invalid cover is a violation") {
    auto file = write_temp("interior.json", to_json(interior_start_decomposition()));
    auto j = run_json("validate --decomp " + file, 1);
    CHECK(j["status"] == "violation");
    CHECK(j["payload"]["ok"] == false);
}

TEST_CASE("decompose") {
    auto file = write_temp("square.json", to_json(SkewShape::make({2, 2})));
    auto rim = run_json("decompose --shape " + file + " --strategy rim", 0);
    CHECK(rim["payload"]["strips"].size() == 2);
    auto thick = run_json("decompose --shape " + file + " --strategy thick-rim", 0);
    CHECK(thick["payload"]["strips"].size() == 1);
}

TEST_CASE("m-strip methods agree") {
    auto closed = run_json("mstrip --m 3 --n 2 --method closed", 0);
    auto brute = run_json("mstrip --m 3 --n 2 --method brute", 0);
    auto thm = run_json("mstrip --m 3 --n 2 --method thm", 0);
    CHECK(closed["payload"]["count"] == brute["payload"]["count"]);
    CHECK(thm["payload"]["count"] == brute["payload"]["count"]);
    run_json("mstrip --m 6 --n 3 --method closed", 1);
    run_json("mstrip --m 6 --n 1", 1);
}

TEST_CASE("sequences") {
    auto j = run_json("sequences --limit 6", 0);
    REQUIRE(j["payload"].is_array());
    CHECK(j["payload"].size() == 7);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("count").code == 2);
    CHECK(run("count --shape x.json --bogus").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("bad input is an error") {
    auto j = run_json("count --shape /nonexistent/shape.json", 1);
    CHECK(j["status"] == "error");
    auto file = write_temp("bad.json", Json{{"lambda", {1, 2}}});
    CHECK(run("count --shape " + file).code == 1);
}

TEST_CASE("brute force respects the oracle cap") {
    auto file = write_temp("big.json", to_json(SkewShape::make({5, 5, 5})));
    CHECK(run("count --method brute --shape " + file).code == 1);
    CHECK(run("count --shape " + file).code == 0);
}

TEST_CASE("output file") {
    auto dir = fs::temp_directory_path() / "skewdet_cli_test";
    fs::create_directories(dir);
    auto out = (dir / "out.json").string();
    fs::remove(out);
    auto r = run("--out " + out + " mstrip --m 2 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    auto j = Json::parse(in);
    CHECK(j["payload"]["count"] == "5");
}

TEST_CASE("reproduce a single criterion") {
    auto j = run_json("reproduce --only 1", 0);
    CHECK(j["status"] == "ok");
}
