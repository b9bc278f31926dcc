// End-to-end checks of the command-line tool: exit codes, printed values,
// and output files.  The binary path and config directory come from the
// build system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "bergstab/annulus.hpp"
#include "bergstab/kernels.hpp"
#include "temp_path.hpp"

using bergstab::testing::temp_path;

namespace {

const std::string kCli = BERGSTAB_CLI_PATH;
const std::string kConfigs = BERGSTAB_CONFIG_DIR;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string out_file = temp_path("cli") + ".out";
    std::string cmd = env + " " + kCli + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), buf.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("kernel on the trivial-subgroup config prints the disc value") {
    RunResult r = run("kernel --config " + kConfigs + "/trivial.cfg --z 0,0 --w 0,0");
    CHECK(r.exit_code == 0);
    // 1/pi = 0.3183098...
    CHECK(r.output.find("0.31831") != std::string::npos);
}

TEST_CASE("green on the trivial-subgroup config prints log 2") {
    RunResult r = run("green --config " + kConfigs + "/trivial.cfg --z 0,0 --w 0.5,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.693147") != std::string::npos);
}

TEST_CASE("kernel machine record on the annulus config matches the oracle") {
    // Disc grid point (0.345, 0) maps to the half-plane as i(1+z)/(1-z).
    bergstab::Complex zh = bergstab::cayley_to_halfplane_raw({0.345, 0.0});
    bergstab::Complex wh = bergstab::cayley_to_halfplane_raw({0.0, -0.345});
    std::ostringstream zs, ws;
    zs << std::setprecision(17) << zh.real() << "," << zh.imag();
    ws << std::setprecision(17) << wh.real() << "," << wh.imag();

    std::string rec = temp_path("krec") + ".rec";
    RunResult r = run("kernel --config " + kConfigs + "/annulus_match.cfg --z " + zs.str() +
                      " --w " + ws.str() + " --out " + rec);
    REQUIRE(r.exit_code == 0);

    std::string record = slurp(rec);
    std::remove(rec.c_str());
    std::size_t pos = record.find("value ");
    REQUIRE(pos != std::string::npos);
    std::size_t comma = record.find(',', pos);
    double re = std::stod(record.substr(pos + 6, comma - pos - 6));
    double im = std::stod(record.substr(comma + 1));

    bergstab::Complex oracle = bergstab::annulus_pullback_oracle(
        std::exp(2.0 * bergstab::kPi), bergstab::ModelPoint{zh, bergstab::Model::halfplane},
        bergstab::ModelPoint{wh, bergstab::Model::halfplane}, 60);
    CHECK(std::abs(bergstab::Complex{re, im} - oracle) <= 1e-8 * std::abs(oracle));
}

TEST_CASE("green on the cyclic config prints a positive value with its tail") {
    RunResult r = run("green --config " + kConfigs + "/cyclic9.cfg --z 0,1 --w 0.5,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("g(z,w) = ") != std::string::npos);
    CHECK(r.output.find("tail <= ") != std::string::npos);
    CHECK(r.output.find("g(z,w) = -") == std::string::npos);
}

TEST_CASE("green at coincident points exits with the singularity code") {
    RunResult r = run("green --config " + kConfigs + "/trivial.cfg --z 0.5,0 --w 0.5,0");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("\"code\":3") != std::string::npos);
}

TEST_CASE("malformed configs exit with the schema code") {
    std::string bad = temp_path("badcfg") + ".cfg";
    {
        std::ofstream out(bad);
        out << "[group]\nmodel = disc\nrank = notanumber\n";
    }
    RunResult r = run("kernel --config " + bad + " --z 0,0 --w 0,0");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("\"code\":2") != std::string::npos);
    std::remove(bad.c_str());

    RunResult missing = run("kernel --config /nonexistent.cfg --z 0,0 --w 0,0");
    CHECK(missing.exit_code == 2);

    // Tower command on a config without a [tower] section.
    RunResult no_tower = run("tower --config " + kConfigs + "/annulus_match.cfg");
    CHECK(no_tower.exit_code == 2);
}

TEST_CASE("kernel level selection picks tower subgroups") {
    RunResult base = run("kernel --config " + kConfigs + "/cyclic9.cfg --z 0,1 --w 0.2,1.5");
    RunResult lvl2 = run("kernel --config " + kConfigs +
                         "/cyclic9.cfg --level 2 --z 0,1 --w 0.2,1.5");
    RunResult top = run("kernel --config " + kConfigs +
                        "/cyclic9.cfg --level top --z 0,1 --w 0.2,1.5");
    CHECK(base.exit_code == 0);
    CHECK(lvl2.exit_code == 0);
    CHECK(top.exit_code == 0);
    CHECK(base.output != lvl2.output);
    CHECK(run("kernel --config " + kConfigs + "/cyclic9.cfg --level 9 --z 0,1 --w 0.2,1.5")
              .exit_code == 2);
}

TEST_CASE("tau on the scaling group is certified log 3") {
    RunResult r = run("tau --config " + kConfigs + "/cyclic9.cfg --z 0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1.09861") != std::string::npos);
    CHECK(r.output.find("certified = true") != std::string::npos);
}

TEST_CASE("enumerate reports the closed-form count") {
    RunResult r = run("enumerate --config " + kConfigs +
                      "/schottky_tower.cfg --max-word-length 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("count = 17") != std::string::npos);
}

TEST_CASE("enumerate past the cap exits with the resource code") {
    std::string capped = temp_path("capped") + ".cfg";
    {
        std::ofstream out(capped);
        out << "[group]\nmodel = disc\nrank = 2\n"
            << "gen0 = 1, 0, 0.8, 0, 0.8, 0, 1, 0\n"
            << "gen1 = 1, 0, 0, 0.8, 0, -0.8, 1, 0\n"
            << "asserted_free_discrete = true\nasserted_convergence_type = true\n"
            << "[series]\nmax_len = 9\ncap = 1000\n";
    }
    RunResult r = run("enumerate --config " + capped);
    CHECK(r.exit_code == 4);
    std::remove(capped.c_str());
}

TEST_CASE("effective bound prints the value and its validity note") {
    RunResult r = run("effective --genus 2 --tau 1.0986122886681098");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("5.50899") != std::string::npos);
    CHECK(r.output.find("valid for") != std::string::npos);

    RunResult invalid = run("effective --genus 2 --tau 0.5");
    CHECK(invalid.exit_code == 3);
}

TEST_CASE("selftest passes") {
    RunResult r = run("selftest");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("tower emits csv and record files with embedded metadata") {
    std::string base = temp_path("tower");
    RunResult r = run("tower --config " + kConfigs + "/cyclic9.cfg --format both --out " + base);
    CHECK(r.exit_code == 0);
    std::string csv = slurp(base + ".csv");
    std::string rec = slurp(base + ".record");
    CHECK(csv.find("# config_hash=") != std::string::npos);
    CHECK(csv.find("j,index,tau,") != std::string::npos);
    CHECK(rec.find("tower_report") != std::string::npos);
    CHECK(rec.find("level 4") != std::string::npos);
    std::remove((base + ".csv").c_str());
    std::remove((base + ".record").c_str());
}

TEST_CASE("worker count does not change tower output bytes") {
    std::string b1 = temp_path("tw1"), b2 = temp_path("tw2");
    RunResult r1 = run("tower --config " + kConfigs + "/cyclic9.cfg --out " + b1,
                       "BERGSTAB_WORKERS=1");
    RunResult r2 = run("tower --config " + kConfigs + "/cyclic9.cfg --out " + b2,
                       "BERGSTAB_WORKERS=8");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(b1 + ".csv") == slurp(b2 + ".csv"));
    std::remove((b1 + ".csv").c_str());
    std::remove((b2 + ".csv").c_str());
}
