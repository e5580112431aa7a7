// Command-line front end: spectrum enumeration, DoS scans, Green-function
// evaluation, and the verification suites, as CSV or JSON on stdout.
//
// Exit codes: 0 success, 1 verification failure, 2 bad flags or unknown
// suite, 3 domain/seam violation (message on stderr names the constraint).
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "abdisk/checks.hpp"
#include "abdisk/errors.hpp"
#include "abdisk/report.hpp"

namespace {

void add_physics_flags(CLI::App* cmd, abdisk::RunConfig& cfg) {
    cmd->add_option("--b", cfg.phys.b, "Field strength (dimensionless)")
        ->capture_default_str();
    cmd->add_option("--nu", cfg.phys.nu, "Vortex charge, in (-1, 0]")
        ->capture_default_str();
    cmd->add_option("--R", cfg.phys.R, "Curvature radius, > 0")
        ->capture_default_str();
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectrum, density of states, and Green function of a "
                 "charged particle on the hyperbolic disk with a flux line"};
    app.require_subcommand(1);

    abdisk::RunConfig cfg;
    std::string format = "csv";

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Enumerate discrete levels and the "
                                       "continuum edge");
    add_physics_flags(spectrum, cfg);
    add_format_flag(spectrum, format);

    CLI::App* dos = app.add_subcommand(
        "dos", "Scan the continuous density of states over an energy grid "
               "and list the discrete terms");
    add_physics_flags(dos, cfg);
    add_format_flag(dos, format);
    dos->add_option("--emin", cfg.emin, "Grid start energy")
        ->capture_default_str();
    dos->add_option("--emax", cfg.emax, "Grid end energy")
        ->capture_default_str();
    dos->add_option("--n", cfg.count, "Grid point count, >= 1")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* green = app.add_subcommand(
        "green", "Evaluate the resolvent kernel at one point pair");
    add_physics_flags(green, cfg);
    add_format_flag(green, format);
    double k2_re = cfg.k2.real();
    double k2_im = cfg.k2.imag();
    green->add_option("--k2-re", k2_re, "Re k2")->capture_default_str();
    green->add_option("--k2-im", k2_im, "Im k2")->capture_default_str();
    green->add_option("--z-r", cfg.z_r, "|z|")->capture_default_str();
    green->add_option("--z-phi", cfg.z_phi, "arg z")->capture_default_str();
    green->add_option("--zp-r", cfg.zp_r, "|z'|")->capture_default_str();
    green->add_option("--zp-phi", cfg.zp_phi, "arg z'")->capture_default_str();
    green->add_flag("--check", cfg.check,
                    "Also evaluate the angular mode sum and print the "
                    "discrepancy");
    green->add_option("--modesum-rel", cfg.modesum_rel,
                      "Relative target of the --check mode sum")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "Run built-in consistency suites and report per-check "
                  "pass/fail lines");
    add_format_flag(verify, format);
    std::vector<std::string> suites = abdisk::check_suite_names();
    suites.insert(suites.begin(), "all");
    verify->add_option("--suite", cfg.suite, "Suite to run")
        ->check(CLI::IsMember(suites))
        ->capture_default_str();
    verify->add_option("--tol-scale", cfg.tol_scale,
                       "Factor applied to every check bound")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.format = format == "json" ? abdisk::OutputFormat::json
                                  : abdisk::OutputFormat::csv;
    cfg.k2 = abdisk::Complex(k2_re, k2_im);
    if (spectrum->parsed()) cfg.command = abdisk::Command::spectrum;
    if (dos->parsed()) cfg.command = abdisk::Command::dos;
    if (green->parsed()) cfg.command = abdisk::Command::green;
    if (verify->parsed()) cfg.command = abdisk::Command::verify;

    try {
        const abdisk::Report rep = abdisk::run(cfg);
        std::fputs(rep.text.c_str(), stdout);
        return rep.exit_code;
    } catch (const abdisk::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
