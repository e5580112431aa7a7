#include "abdisk/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "abdisk/checks.hpp"
#include "abdisk/dos.hpp"
#include "abdisk/errors.hpp"
#include "abdisk/radial.hpp"
#include "abdisk/resolvent.hpp"

namespace abdisk {

std::string format_double(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

std::string family_token(LevelFamily family) {
    switch (family) {
        case LevelFamily::free_landau: return "free_landau";
        case LevelFamily::vortex_plus: return "vortex_plus";
        case LevelFamily::vortex_minus: return "vortex_minus";
    }
    fail(ErrorKind::domain, "unknown level family");
}

namespace {

std::string fd(double v) { return format_double(v); }

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x",
                                  static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

// Non-finite values have no JSON number form; emit them as strings.
std::string json_number(double v) {
    if (std::isfinite(v)) return fd(v);
    return '"' + fd(v) + '"';
}

std::string json_complex(Complex v) {
    return "{\"re\": " + json_number(v.real()) +
           ", \"im\": " + json_number(v.imag()) + "}";
}

std::string json_config(const PhysicalConfig& phys) {
    return "{\"b\": " + json_number(phys.b) + ", \"nu\": " + json_number(phys.nu) +
           ", \"R\": " + json_number(phys.R) + "}";
}

// Check names are comma-free by construction; keep the column parseable even
// if an exception message sneaks one in.
std::string csv_name(std::string s) {
    for (char& ch : s)
        if (ch == ',') ch = ';';
    return s;
}

std::string csv_config(const PhysicalConfig& phys) {
    return "# b=" + fd(phys.b) + " nu=" + fd(phys.nu) + " R=" + fd(phys.R) +
           "\n";
}

std::vector<EnergyLevel> collect_levels(const PhysicalConfig& phys) {
    std::vector<EnergyLevel> rows = landau_levels(phys);
    const std::vector<EnergyLevel> vortex = vortex_levels(phys);
    rows.insert(rows.end(), vortex.begin(), vortex.end());
    std::sort(rows.begin(), rows.end(),
              [](const EnergyLevel& a, const EnergyLevel& b) {
                  const int fa = static_cast<int>(a.family);
                  const int fb = static_cast<int>(b.family);
                  return fa != fb ? fa < fb : a.n < b.n;
              });
    return rows;
}

std::string level_csv_row(const EnergyLevel& lv) {
    return family_token(lv.family) + "," + std::to_string(lv.n) + "," +
           fd(lv.value) + "," + std::to_string(lv.l_min) + "," +
           std::to_string(lv.l_max) + "," + (lv.l_infinite ? "1" : "0") + "," +
           fd(lv.weight) + "\n";
}

std::string level_json_row(const EnergyLevel& lv) {
    return "    {\"family\": \"" + family_token(lv.family) +
           "\", \"n\": " + std::to_string(lv.n) +
           ", \"energy\": " + json_number(lv.value) +
           ", \"l_min\": " + std::to_string(lv.l_min) +
           ", \"l_max\": " + std::to_string(lv.l_max) +
           ", \"l_infinite\": " + (lv.l_infinite ? "true" : "false") +
           ", \"weight\": " + json_number(lv.weight) + "}";
}

std::string term_csv_row(const DiscreteDosTerm& t) {
    return fd(t.energy) + "," + fd(t.weight) + "," + family_token(t.family) +
           "\n";
}

std::string term_json_row(const DiscreteDosTerm& t) {
    return "    {\"energy\": " + json_number(t.energy) +
           ", \"weight\": " + json_number(t.weight) + ", \"family\": \"" +
           family_token(t.family) + "\"}";
}

template <typename Row>
std::string json_array(const std::vector<Row>& rows,
                       std::string (*render)(const Row&)) {
    if (rows.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += render(rows[i]);
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "  ]";
    return out;
}

std::vector<double> energy_grid(const RunConfig& cfg) {
    if (cfg.count < 1) fail(ErrorKind::domain, "grid count must be >= 1");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(cfg.count));
    if (cfg.count == 1) {
        grid.push_back(cfg.emin);
        return grid;
    }
    const double step = (cfg.emax - cfg.emin) / (cfg.count - 1);
    for (int i = 0; i < cfg.count; ++i) grid.push_back(cfg.emin + step * i);
    return grid;
}

}  // namespace

Report run_spectrum(const RunConfig& cfg) {
    cfg.phys.validate();
    const std::vector<EnergyLevel> rows = collect_levels(cfg.phys);
    const double edge = continuum_edge(cfg.phys);
    Report rep;
    if (cfg.format == OutputFormat::csv) {
        rep.text += "# abdisk spectrum csv v1\n";
        rep.text += csv_config(cfg.phys);
        rep.text += "# continuum_edge=" + fd(edge) + "\n";
        rep.text += "family,n,energy,l_min,l_max,l_infinite,weight\n";
        for (const auto& lv : rows) rep.text += level_csv_row(lv);
    } else {
        rep.text += "{\n";
        rep.text += "  \"schema\": \"abdisk.spectrum.v1\",\n";
        rep.text += "  \"config\": " + json_config(cfg.phys) + ",\n";
        rep.text += "  \"continuum_edge\": " + json_number(edge) + ",\n";
        rep.text += "  \"levels\": " + json_array(rows, level_json_row) + "\n";
        rep.text += "}\n";
    }
    return rep;
}

Report run_dos(const RunConfig& cfg) {
    cfg.phys.validate();
    const std::vector<double> grid = energy_grid(cfg);
    std::vector<DosSample> samples;
    samples.reserve(grid.size());
    for (double e : grid) samples.push_back(dos_sample(e, cfg.phys));
    const auto by_energy = [](std::vector<DiscreteDosTerm> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const DiscreteDosTerm& a, const DiscreteDosTerm& b) {
                      return a.energy < b.energy;
                  });
        return terms;
    };
    const std::vector<DiscreteDosTerm> rho0_d = by_energy(rho0_discrete(cfg.phys));
    const std::vector<DiscreteDosTerm> rho_nu_d =
        by_energy(rho_nu_discrete(cfg.phys));
    const double edge = continuum_edge(cfg.phys);
    Report rep;
    if (cfg.format == OutputFormat::csv) {
        rep.text += "# abdisk dos csv v1\n";
        rep.text += csv_config(cfg.phys);
        rep.text += "# continuum_edge=" + fd(edge) + "\n";
        rep.text += "energy,rho0_c,rho_nu_c,above_edge\n";
        for (const auto& s : samples)
            rep.text += fd(s.E) + "," + fd(s.rho0_c) + "," + fd(s.rho_nu_c) +
                        "," + (s.above_edge ? "1" : "0") + "\n";
        rep.text += "# rho0 discrete terms v1\n";
        rep.text += "energy,weight,family\n";
        for (const auto& t : rho0_d) rep.text += term_csv_row(t);
        rep.text += "# rho_nu discrete terms v1\n";
        rep.text += "energy,weight,family\n";
        for (const auto& t : rho_nu_d) rep.text += term_csv_row(t);
    } else {
        rep.text += "{\n";
        rep.text += "  \"schema\": \"abdisk.dos.v1\",\n";
        rep.text += "  \"config\": " + json_config(cfg.phys) + ",\n";
        rep.text += "  \"continuum_edge\": " + json_number(edge) + ",\n";
        rep.text += "  \"samples\": [\n";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& s = samples[i];
            rep.text += "    {\"energy\": " + json_number(s.E) +
                        ", \"rho0_c\": " + json_number(s.rho0_c) +
                        ", \"rho_nu_c\": " + json_number(s.rho_nu_c) +
                        ", \"above_edge\": " + (s.above_edge ? "true" : "false") +
                        "}";
            rep.text += i + 1 < samples.size() ? ",\n" : "\n";
        }
        rep.text += "  ],\n";
        rep.text +=
            "  \"rho0_discrete\": " + json_array(rho0_d, term_json_row) + ",\n";
        rep.text +=
            "  \"rho_nu_discrete\": " + json_array(rho_nu_d, term_json_row) +
            "\n";
        rep.text += "}\n";
    }
    return rep;
}

Report run_green(const RunConfig& cfg) {
    cfg.phys.validate();
    const DiskPoint z = DiskPoint::from_polar(cfg.z_r, cfg.z_phi);
    const DiskPoint zp = DiskPoint::from_polar(cfg.zp_r, cfg.zp_phi);
    const SpectralParameter sp = chi_of(cfg.phys, cfg.k2);
    const GreenDecomposition dec = green_closed(z, zp, cfg.phys, sp);
    Complex mode_sum;
    double discrepancy = 0.0;
    if (cfg.check) {
        mode_sum = green_mode_sum(z, zp, cfg.phys, sp, cfg.modesum_rel);
        discrepancy = std::abs(dec.total - mode_sum);
    }
    Report rep;
    if (cfg.format == OutputFormat::csv) {
        rep.text += "# abdisk green csv v1\n";
        rep.text += csv_config(cfg.phys);
        rep.text += "# k2_re=" + fd(cfg.k2.real()) + " k2_im=" +
                    fd(cfg.k2.imag()) + "\n";
        rep.text += "# z_r=" + fd(cfg.z_r) + " z_phi=" + fd(cfg.z_phi) +
                    " zp_r=" + fd(cfg.zp_r) + " zp_phi=" + fd(cfg.zp_phi) +
                    "\n";
        rep.text += "# branch=" + std::to_string(dec.branch) + "\n";
        rep.text += "quantity,re,im\n";
        rep.text += "g0," + fd(dec.g0.real()) + "," + fd(dec.g0.imag()) + "\n";
        rep.text +=
            "delta," + fd(dec.delta.real()) + "," + fd(dec.delta.imag()) + "\n";
        rep.text +=
            "total," + fd(dec.total.real()) + "," + fd(dec.total.imag()) + "\n";
        if (cfg.check) {
            rep.text += "mode_sum," + fd(mode_sum.real()) + "," +
                        fd(mode_sum.imag()) + "\n";
            rep.text += "discrepancy," + fd(discrepancy) + ",0\n";
        }
    } else {
        rep.text += "{\n";
        rep.text += "  \"schema\": \"abdisk.green.v1\",\n";
        rep.text += "  \"config\": " + json_config(cfg.phys) + ",\n";
        rep.text += "  \"k2\": " + json_complex(cfg.k2) + ",\n";
        rep.text += "  \"z\": {\"r\": " + json_number(cfg.z_r) +
                    ", \"phi\": " + json_number(cfg.z_phi) + "},\n";
        rep.text += "  \"zp\": {\"r\": " + json_number(cfg.zp_r) +
                    ", \"phi\": " + json_number(cfg.zp_phi) + "},\n";
        rep.text += "  \"branch\": " + std::to_string(dec.branch) + ",\n";
        rep.text += "  \"g0\": " + json_complex(dec.g0) + ",\n";
        rep.text += "  \"delta\": " + json_complex(dec.delta) + ",\n";
        rep.text += "  \"total\": " + json_complex(dec.total);
        if (cfg.check) {
            rep.text += ",\n  \"mode_sum\": " + json_complex(mode_sum) + ",\n";
            rep.text += "  \"discrepancy\": " + json_number(discrepancy) + "\n";
        } else {
            rep.text += "\n";
        }
        rep.text += "}\n";
    }
    return rep;
}

Report run_verify(const RunConfig& cfg) {
    if (!(cfg.tol_scale > 0.0))
        fail(ErrorKind::domain, "tol_scale must be positive");
    const std::vector<CheckResult> results = run_checks(cfg.suite);
    int failures = 0;
    Report rep;
    if (cfg.format == OutputFormat::csv) {
        rep.text += "# abdisk verify csv v1\n";
        rep.text += "# suite=" + cfg.suite + " tol_scale=" + fd(cfg.tol_scale) +
                    "\n";
        rep.text += "suite,check,error,bound,status\n";
    } else {
        rep.text += "{\n";
        rep.text += "  \"schema\": \"abdisk.verify.v1\",\n";
        rep.text += "  \"suite\": \"" + json_escape(cfg.suite) + "\",\n";
        rep.text += "  \"tol_scale\": " + json_number(cfg.tol_scale) + ",\n";
        rep.text += "  \"checks\": [\n";
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        const double bound = r.bound * cfg.tol_scale;
        const bool pass = r.error <= bound;
        if (!pass) ++failures;
        if (cfg.format == OutputFormat::csv) {
            rep.text += r.suite + "," + csv_name(r.name) + "," + fd(r.error) +
                        "," + fd(bound) + "," + (pass ? "pass" : "fail") + "\n";
        } else {
            rep.text += "    {\"suite\": \"" + json_escape(r.suite) +
                        "\", \"name\": \"" + json_escape(r.name) +
                        "\", \"error\": " + json_number(r.error) +
                        ", \"bound\": " + json_number(bound) +
                        ", \"status\": \"" + (pass ? "pass" : "fail") + "\"}";
            rep.text += i + 1 < results.size() ? ",\n" : "\n";
        }
    }
    if (cfg.format == OutputFormat::csv) {
        rep.text += "# checks=" + std::to_string(results.size()) +
                    " failures=" + std::to_string(failures) + "\n";
    } else {
        rep.text += "  ],\n";
        rep.text += "  \"failures\": " + std::to_string(failures) + "\n";
        rep.text += "}\n";
    }
    rep.exit_code = failures == 0 ? 0 : 1;
    return rep;
}

Report run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::spectrum: return run_spectrum(cfg);
        case Command::dos: return run_dos(cfg);
        case Command::green: return run_green(cfg);
        case Command::verify: return run_verify(cfg);
    }
    fail(ErrorKind::domain, "unknown command");
}

}  // namespace abdisk
