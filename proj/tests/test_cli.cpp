#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abdisk/checks.hpp"
#include "abdisk/dos.hpp"
#include "abdisk/errors.hpp"
#include "abdisk/report.hpp"
#include "abdisk/resolvent.hpp"

using namespace abdisk;
using nlohmann::json;

namespace {

RunConfig base(Command cmd) {
    RunConfig cfg;
    cfg.command = cmd;
    return cfg;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with the given arguments; stderr is discarded,
// stdout captured. Exit code -1 flags a harness failure.
CliResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(ABDISK_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace

TEST_CASE("numbers render with 15 significant digits and no locale") {
    CHECK(format_double(4.0) == "4");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_double(1e-9) == "1e-09");
    CHECK(format_double(12345678901234567.0) == "1.23456789012346e+16");
    // round trip: 15 significant digits identify a double to ~1 ulp
    const double v = 0.0659249002101849;
    CHECK(std::stod(format_double(v)) == doctest::Approx(v).epsilon(1e-15));
}

TEST_CASE("spectrum report lists levels in family order with the edge") {
    RunConfig cfg = base(Command::spectrum);
    cfg.phys.b = 1.0;
    const Report rep = run_spectrum(cfg);
    CHECK(rep.exit_code == 0);
    const auto ls = lines_of(rep.text);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "# abdisk spectrum csv v1");
    CHECK(ls[1] == "# b=1 nu=0 R=1");
    CHECK(ls[2] == "# continuum_edge=5");
    CHECK(ls[3] == "family,n,energy,l_min,l_max,l_infinite,weight");
    CHECK(ls[4] == "free_landau,0,4,0,0,1,0.318309886183791");

    // below half flux: edge-only output, no level rows
    RunConfig weak = base(Command::spectrum);
    weak.phys.b = 0.3;
    weak.phys.nu = -0.5;
    const auto wls = lines_of(run_spectrum(weak).text);
    REQUIRE(wls.size() == 4);
    CHECK(wls[2] == "# continuum_edge=1.36");
    CHECK(wls[3] == "family,n,energy,l_min,l_max,l_infinite,weight");

    // mixed families sort by (family, n); vortex row carries its count weight
    RunConfig mix = base(Command::spectrum);
    mix.phys.b = 2.0;
    mix.phys.nu = -0.5;
    const auto mls = lines_of(run_spectrum(mix).text);
    REQUIRE(mls.size() == 7);
    CHECK(mls[4] == "free_landau,0,8,0,0,1,0.954929658551372");
    CHECK(mls[5] == "free_landau,1,16,0,0,1,0.318309886183791");
    CHECK(mls[6] == "vortex_plus,0,13,1,1,0,1");
}

TEST_CASE("spectrum json round-trips through the documented schema") {
    RunConfig cfg = base(Command::spectrum);
    cfg.phys.b = -2.0;
    cfg.phys.nu = -0.5;
    cfg.format = OutputFormat::json;
    const Report rep = run_spectrum(cfg);
    const json doc = json::parse(rep.text);
    CHECK(doc.at("schema") == "abdisk.spectrum.v1");
    CHECK(doc.at("config").at("b") == -2.0);
    CHECK(doc.at("continuum_edge") == 17.0);
    REQUIRE(doc.at("levels").size() == 3);
    const auto& lv = doc.at("levels").at(2);
    CHECK(lv.at("family") == "vortex_minus");
    CHECK(lv.at("n") == 0);
    CHECK(lv.at("energy") == 13.0);
    CHECK(lv.at("l_min") == 0);
    CHECK(lv.at("l_max") == 0);
    CHECK(lv.at("l_infinite") == false);
    CHECK(lv.at("weight") == 1.0);
    // Landau rows of b < 0 keep the semi-infinite l set on the other side
    CHECK(doc.at("levels").at(0).at("l_min") == 1);
    CHECK(doc.at("levels").at(0).at("l_infinite") == true);
}

TEST_CASE("dos report scans the grid and lists discrete terms by energy") {
    RunConfig cfg = base(Command::dos);
    cfg.phys.b = 2.0;
    cfg.phys.nu = -0.5;
    cfg.emin = 6.0;
    cfg.emax = 18.0;
    cfg.count = 4;
    const Report rep = run_dos(cfg);
    const auto ls = lines_of(rep.text);
    REQUIRE(ls.size() == 17);
    CHECK(ls[0] == "# abdisk dos csv v1");
    CHECK(ls[2] == "# continuum_edge=17");
    CHECK(ls[3] == "energy,rho0_c,rho_nu_c,above_edge");
    // below the edge both continuous columns are exactly zero
    CHECK(ls[4] == "6,0,0,0");
    CHECK(ls[5] == "10,0,0,0");
    CHECK(ls[6] == "14,0,0,0");
    // the E = 18 row is above the edge with nonzero columns
    CHECK(ls[7].substr(0, 3) == "18,");
    CHECK(ls[7].back() == '1');
    CHECK(ls[8] == "# rho0 discrete terms v1");
    CHECK(ls[9] == "energy,weight,family");
    CHECK(ls[10] == "8,0.954929658551372,free_landau");
    CHECK(ls[11] == "16,0.318309886183791,free_landau");
    CHECK(ls[12] == "# rho_nu discrete terms v1");
    CHECK(ls[13] == "energy,weight,family");
    // by energy: the Landau counterterms straddle the vortex level
    CHECK(ls[14] == "8,-0.5,free_landau");
    CHECK(ls[15] == "13,1,vortex_plus");
    CHECK(ls[16] == "16,-1.5,free_landau");
}

TEST_CASE("dos grid is monotone and the nu = 0 correction column is zero") {
    RunConfig cfg = base(Command::dos);
    cfg.phys.b = 0.4;
    cfg.emin = 0.0;
    cfg.emax = 12.0;
    cfg.count = 25;
    cfg.format = OutputFormat::json;
    const json doc = json::parse(run_dos(cfg).text);
    CHECK(doc.at("schema") == "abdisk.dos.v1");
    const auto& samples = doc.at("samples");
    REQUIRE(samples.size() == 25);
    double prev = -1.0;
    for (const auto& s : samples) {
        const double e = s.at("energy");
        CHECK(e > prev);
        prev = e;
        CHECK(s.at("rho_nu_c") == 0.0);
        if (!s.at("above_edge").get<bool>()) CHECK(s.at("rho0_c") == 0.0);
    }
    CHECK(doc.at("rho_nu_discrete").empty());

    // single-point grid evaluates emin alone
    cfg.count = 1;
    cfg.emin = 9.0;
    const json one = json::parse(run_dos(cfg).text);
    REQUIRE(one.at("samples").size() == 1);
    CHECK(one.at("samples").at(0).at("energy") == 9.0);

    cfg.count = 0;
    CHECK_THROWS_AS(run_dos(cfg), Error);
}

TEST_CASE("green report prints the decomposition and checks the mode sum") {
    RunConfig cfg = base(Command::green);
    cfg.phys.b = 0.5;
    cfg.phys.nu = -0.3;
    cfg.check = true;
    const Report rep = run_green(cfg);
    const auto ls = lines_of(rep.text);
    REQUIRE(ls.size() == 11);
    CHECK(ls[0] == "# abdisk green csv v1");
    CHECK(ls[4] == "# branch=0");
    CHECK(ls[5] == "quantity,re,im");
    CHECK(ls[6].substr(0, 3) == "g0,");
    CHECK(ls[7].substr(0, 6) == "delta,");
    CHECK(ls[8].substr(0, 6) == "total,");
    CHECK(ls[9].substr(0, 9) == "mode_sum,");
    REQUIRE(ls[10].substr(0, 12) == "discrepancy,");
    // documented sample pair: closed form and mode sum agree to 1e-6
    const double disc = std::stod(ls[10].substr(12));
    CHECK(disc < 1e-6);
}

TEST_CASE("green report at nu = 0 has an exactly zero delta row") {
    RunConfig cfg = base(Command::green);
    cfg.phys.b = 0.8;
    const Report rep = run_green(cfg);
    const auto ls = lines_of(rep.text);
    REQUIRE(ls.size() == 9);
    CHECK(ls[7] == "delta,0,0");
}

TEST_CASE("green reports conjugate values when the points are swapped") {
    RunConfig cfg = base(Command::green);
    cfg.phys.b = 0.5;
    cfg.phys.nu = -0.3;
    cfg.k2 = Complex(-2.0, 0.0);
    cfg.format = OutputFormat::json;
    const json fwd = json::parse(run_green(cfg).text);

    std::swap(cfg.z_r, cfg.zp_r);
    std::swap(cfg.z_phi, cfg.zp_phi);
    const json bwd = json::parse(run_green(cfg).text);

    for (const char* key : {"g0", "total"}) {
        const double re_f = fwd.at(key).at("re");
        const double im_f = fwd.at(key).at("im");
        const double re_b = bwd.at(key).at("re");
        const double im_b = bwd.at(key).at("im");
        CHECK(re_b == doctest::Approx(re_f).epsilon(1e-12));
        CHECK(im_b == doctest::Approx(-im_f).epsilon(1e-12));
    }
    CHECK(fwd.at("branch").get<int>() == -bwd.at("branch").get<int>());
}

TEST_CASE("identical configs produce byte-identical reports") {
    RunConfig cfg = base(Command::dos);
    cfg.phys.b = 1.3;
    cfg.phys.nu = -0.6;
    cfg.emin = 2.0;
    cfg.emax = 30.0;
    cfg.count = 17;
    CHECK(run_dos(cfg).text == run_dos(cfg).text);

    RunConfig g = base(Command::green);
    g.phys.nu = -0.4;
    g.check = true;
    CHECK(run_green(g).text == run_green(g).text);

    RunConfig v = base(Command::verify);
    v.suite = "spectrum";
    CHECK(run_verify(v).text == run_verify(v).text);
}

TEST_CASE("verify reports per-check lines and fails iff a check fails") {
    RunConfig cfg = base(Command::verify);
    cfg.suite = "spectrum";
    const Report rep = run_verify(cfg);
    CHECK(rep.exit_code == 0);
    const auto ls = lines_of(rep.text);
    REQUIRE(ls.size() >= 5);
    CHECK(ls[0] == "# abdisk verify csv v1");
    CHECK(ls[2] == "suite,check,error,bound,status");
    for (std::size_t i = 3; i + 1 < ls.size(); ++i)
        CHECK(ls[i].substr(ls[i].size() - 4) == "pass");

    // the flat-limit reference check fails by design; the suite reports it
    cfg.suite = "flatlimit";
    const Report flat = run_verify(cfg);
    CHECK(flat.exit_code == 1);
    CHECK(flat.text.find(",fail") != std::string::npos);
    CHECK(flat.text.find("# checks=2 failures=1") != std::string::npos);

    // every suite token is runnable and "all" is their concatenation
    RunConfig all = base(Command::verify);
    std::size_t total = 0;
    for (const std::string& name : check_suite_names()) {
        all.suite = name;
        total += json::parse(
                     [&] {
                         RunConfig j = all;
                         j.format = OutputFormat::json;
                         return run_verify(j).text;
                     }())
                     .at("checks")
                     .size();
    }
    all.suite = "all";
    all.format = OutputFormat::json;
    const json doc = json::parse(run_verify(all).text);
    CHECK(doc.at("checks").size() == total);
    CHECK(doc.at("failures") == 1);

    CHECK_THROWS_AS(run_checks("nosuch"), Error);
}

TEST_CASE("verify bound scaling turns the known failure on and off") {
    RunConfig cfg = base(Command::verify);
    cfg.suite = "flatlimit";
    cfg.tol_scale = 150.0;  // 0.02 * 150 = 3 > 2: the literal check passes
    CHECK(run_verify(cfg).exit_code == 0);
    cfg.tol_scale = 1e-20;
    CHECK(run_verify(cfg).exit_code == 1);
    cfg.tol_scale = -1.0;
    CHECK_THROWS_AS(run_verify(cfg), Error);
}

TEST_CASE("cli binary: exit codes split flag, domain, and check failures") {
    CHECK(run_cli("verify --suite specfun").exit_code == 0);
    CHECK(run_cli("verify --suite flatlimit").exit_code == 1);
    CHECK(run_cli("verify --suite nosuch").exit_code == 2);
    CHECK(run_cli("dos --n 0").exit_code == 2);
    CHECK(run_cli("--bogus-flag").exit_code == 2);
    CHECK(run_cli("green --z-r 0.4 --z-phi 1 --zp-r 0.4 --zp-phi 1").exit_code ==
          3);
    CHECK(run_cli("green --k2-re 2 --k2-im 0").exit_code == 3);
    CHECK(run_cli("spectrum --nu 0.5").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli binary output matches the library report byte for byte") {
    RunConfig cfg = base(Command::spectrum);
    cfg.phys.b = 2.0;
    cfg.phys.nu = -0.5;
    const CliResult got = run_cli("spectrum --b 2 --nu -0.5");
    CHECK(got.exit_code == 0);
    CHECK(got.out == run_spectrum(cfg).text);

    const CliResult twice = run_cli("spectrum --b 2 --nu -0.5");
    CHECK(twice.out == got.out);

    cfg.format = OutputFormat::json;
    const CliResult js = run_cli("spectrum --b 2 --nu -0.5 --format json");
    CHECK(js.out == run_spectrum(cfg).text);
}
