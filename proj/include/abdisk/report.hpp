#pragma once

#include <string>

#include "abdisk/geometry.hpp"
#include "abdisk/spectrum.hpp"
#include "abdisk/tolerances.hpp"

namespace abdisk {

// Command execution behind the CLI. Each run_* function renders one report
// deterministically: identical configs produce byte-identical text, every
// number is printed with 15 significant digits and no locale influence.
// Domain violations surface as Error; the tool maps them to exit code 3.

enum class Command { spectrum, dos, green, verify };
enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::spectrum;
    PhysicalConfig phys;

    // Energy grid for dos: count points from emin to emax inclusive
    // (count == 1 evaluates emin alone). Requires count >= 1.
    double emin = 0.0;
    double emax = 10.0;
    int count = 11;

    // Spectral point for green; must lie off the closed positive real axis.
    Complex k2 = Complex(-1.0, 0.0);

    // Point pair for green, in polar form.
    double z_r = 0.5;
    double z_phi = 0.8;
    double zp_r = 0.25;
    double zp_phi = 2.2;

    OutputFormat format = OutputFormat::csv;

    // green: also evaluate the angular mode sum and print the discrepancy.
    bool check = false;
    // Relative target of that mode sum.
    double modesum_rel = tol::modesum_rel_default;

    // verify: which suite to run ("all" or one name from
    // check_suite_names()), and a factor applied to every check bound.
    std::string suite = "all";
    double tol_scale = 1.0;
};

struct Report {
    std::string text;
    int exit_code = 0;
};

// 15 significant digits, shortest-general form, locale independent.
std::string format_double(double v);

Report run_spectrum(const RunConfig& cfg);
Report run_dos(const RunConfig& cfg);
Report run_green(const RunConfig& cfg);
Report run_verify(const RunConfig& cfg);

// Dispatch on cfg.command.
Report run(const RunConfig& cfg);

// Stable token for a level family ("free_landau", "vortex_plus",
// "vortex_minus"), shared by CSV and JSON output.
std::string family_token(LevelFamily family);

}  // namespace abdisk
