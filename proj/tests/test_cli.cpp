#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using ditcalc::cli::CliEnvironment;
using ditcalc::cli::run;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ditcalc_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string write(const std::string& name, const std::string& content) const {
        const auto p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const CliEnvironment& env = {}) {
    std::ostringstream out, err;
    const int code = run(args, out, err, env);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("entropy command") {
    TempDir dir;
    auto discrete = dir.write("d4.txt", "a\nb\nc\nd\n");
    auto r = invoke({"entropy", discrete});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "h = 3/4"));
    CHECK(contains(r.out, "H(base 2) = 2\n"));
    CHECK(contains(r.out, "H_m = 4\n"));

    auto j = invoke({"entropy", discrete, "--json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["h_exact"]["num"] == 3);
    CHECK(doc["h_exact"]["den"] == 4);
    CHECK(std::abs(doc["H"].get<double>() - 2.0) <= 1e-12);
    CHECK(std::abs(doc["H_m"].get<double>() - 4.0) <= 1e-12);
    CHECK(doc["blocks"].size() == 4);

    auto one = invoke({"entropy", dir.write("one.txt", "a b c\n")});
    CHECK(one.code == 0);
    CHECK(contains(one.out, "h = 0"));
    CHECK(contains(one.out, "H_m = 1\n"));

    auto dup = invoke({"entropy", dir.write("dup.txt", "a b\nc a\n")});
    CHECK(dup.code == 2);
    CHECK(contains(dup.err, "'a'"));
    CHECK(contains(dup.err, "line 2"));

    auto missing = invoke({"entropy", (dir.path / "absent.txt").string()});
    CHECK(missing.code == 2);

    auto dits = invoke({"entropy", dir.write("two.txt", "a\nb\n"), "--dump-dits"});
    CHECK(dits.code == 0);
    CHECK(contains(dits.out, "dits:"));
}

TEST_CASE("dist command") {
    TempDir dir;
    auto uniform = invoke({"dist", dir.write("u.csv", "label,count\nw,1\nx,1\ny,1\nz,1\n")});
    CHECK(uniform.code == 0);
    CHECK(contains(uniform.out, "h = 3/4 (0.75)"));
    CHECK(contains(uniform.out, "repeat rate = 0.25"));
    CHECK(contains(uniform.out, "numbers equivalent = 4"));

    auto single = invoke({"dist", dir.write("s.csv", "label,prob\nonly,1\n")});
    CHECK(single.code == 0);
    CHECK(contains(single.out, "h = 0"));

    auto bad = invoke({"dist", dir.write("b.csv", "label,prob\nx,0.5\ny,0.4\n")});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());

    auto fam = invoke({"dist", dir.write("u2.csv", "label,count\nw,1\nx,1\ny,1\nz,1\n"), "--family",
                       "tsallis", "--param", "2"});
    CHECK(fam.code == 0);
    CHECK(contains(fam.out, "tsallis(2) = 0.75"));

    auto unknown = invoke({"dist", dir.write("u3.csv", "label,count\nw,1\n"), "--family", "renyi", "--param", "2"});
    CHECK(unknown.code == 2);

    auto quad = invoke({"dist", dir.write("h.csv", "label,prob\na,0.5\nb,0.5\n"), "--quadratic",
                        dir.write("m.txt", "0 3\n3 0\n")});
    CHECK(quad.code == 0);
    CHECK(contains(quad.out, "1.5"));
}

TEST_CASE("entropy and dist agree on block probabilities") {
    TempDir dir;
    auto part = invoke({"entropy", dir.write("p.txt", "a b c\nd\ne f\n"), "--json"});
    auto dist = invoke({"dist", dir.write("p.csv", "label,count\nB0,3\nB1,1\nB2,2\n"), "--json"});
    REQUIRE(part.code == 0);
    REQUIRE(dist.code == 0);
    auto a = nlohmann::json::parse(part.out);
    auto b = nlohmann::json::parse(dist.out);
    CHECK(std::abs(a["h"].get<double>() - b["h"].get<double>()) <= 1e-12);
    CHECK(std::abs(a["H"].get<double>() - b["H"].get<double>()) <= 1e-12);
    CHECK(std::abs(a["H_m"].get<double>() - b["H_m"].get<double>()) <= 1e-12);
}

TEST_CASE("compare command") {
    TempDir dir;
    auto rows = dir.write("rows.txt", "r0c0 r0c1\nr1c0 r1c1\n");
    auto cols = dir.write("cols.txt", "r0c0 r1c0\nr0c1 r1c1\n");
    auto r = invoke({"compare", rows, cols});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "independent: yes"));
    CHECK(contains(r.out, "m(pi,sigma) = 1/4"));
    CHECK(contains(r.out, "join = {r0c0}{r0c1}{r1c0}{r1c1}"));
    CHECK(contains(r.out, "meet = {r0c0 r0c1 r1c0 r1c1}"));

    auto j = invoke({"compare", rows, cols, "--json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["independent"] == true);
    CHECK(doc["m"] == doc["modular_rhs"]);
    CHECK(doc["h_meet"]["num"] == 0);

    auto same = nlohmann::json::parse(invoke({"compare", rows, rows, "--json"}).out);
    CHECK(same["m"] == same["h_pi"]);
    CHECK(same["independent"] == false);

    auto blob = dir.write("blob.txt", "r0c0 r0c1 r1c0 r1c1\n");
    auto with_blob = nlohmann::json::parse(invoke({"compare", rows, blob, "--json"}).out);
    CHECK(with_blob["m"]["num"] == 0);
    CHECK(with_blob["independent"] == true);

    auto other = dir.write("other.txt", "a b\nc d\n");
    auto mismatch = invoke({"compare", rows, other});
    CHECK(mismatch.code == 2);
}

TEST_CASE("demo commands") {
    auto b = invoke({"demo", "binary", "--n", "2"});
    CHECK(b.code == 0);
    CHECK(contains(b.out, "+8 dits"));
    CHECK(contains(b.out, "+4 dits"));
    CHECK(contains(b.out, "total dits = 12"));

    auto c = invoke({"demo", "coins", "--n", "2", "--json"});
    REQUIRE(c.code == 0);
    auto doc = nlohmann::json::parse(c.out);
    CHECK(doc["total_dits"] == 72);

    CHECK(invoke({"demo", "binary", "--n", "17"}).code == 2);
    CHECK(invoke({"demo", "coins", "--n", "0"}).code == 2);
}

TEST_CASE("verify command") {
    auto ok = invoke({"verify", "--max-n", "4", "--trials", "50"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "PASS modular_law"));
    CHECK_FALSE(contains(ok.out, "FAIL"));

    CHECK(invoke({"verify", "--max-n", "1"}).code == 2);
    CHECK(invoke({"verify", "--max-n", "7"}).code == 2);

    auto broken = invoke({"verify", "--max-n", "3", "--trials", "10", "--mutate", "meet"});
    CHECK(broken.code == 1);
    CHECK(contains(broken.out, "FAIL meet_dit_interior"));

    auto j = invoke({"verify", "--max-n", "3", "--trials", "10", "--json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["passed"] == true);
    CHECK_FALSE(doc["reports"].empty());
}

TEST_CASE("log base from the environment and flags") {
    TempDir dir;
    auto file = dir.write("d9.txt", "1\n2\n3\n4\n5\n6\n7\n8\n9\n");
    CliEnvironment env;
    env.base = "3";
    auto from_env = invoke({"entropy", file}, env);
    CHECK(from_env.code == 0);
    CHECK(contains(from_env.out, "H(base 3) = 2\n"));

    auto flag_wins = invoke({"entropy", file, "--base", "9"}, env);
    CHECK(contains(flag_wins.out, "H(base 9) = 1\n"));

    env.base = "one";
    CHECK(invoke({"entropy", file}, env).code == 2);
    CHECK(invoke({"entropy", file, "--base", "1"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}
