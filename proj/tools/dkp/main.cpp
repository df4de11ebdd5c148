// Command-line surface for the DKP oscillator library: algebra verification,
// spectrum solving and sweeps, bound-state evaluation and checks, Lieb-lattice
// band structures and polarization integrals. Emits deterministic CSV or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dkp/algebra.hpp"
#include "dkp/errors.hpp"
#include "dkp/io.hpp"
#include "dkp/lieb.hpp"
#include "dkp/spectrum.hpp"
#include "dkp/states.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string format = "csv"; // csv | json
    std::string path;           // empty = stdout
};

std::string branch_name(dkp::spectrum::Branch b) {
    return b == dkp::spectrum::Branch::Particle ? "particle" : "antiparticle";
}

void emit(const Output& out, const std::string& command, const json& config,
          const dkp::io::Schema& schema, const std::vector<dkp::io::Row>& rows) {
    std::ostringstream body;
    if (out.format == "csv") {
        dkp::io::write_csv(body, schema, rows);
    } else {
        json doc;
        doc["tool"] = "dkp";
        doc["version"] = kVersion;
        doc["command"] = command;
        doc["config"] = config;
        json jrows = json::array();
        for (const auto& row : rows) {
            json r;
            for (std::size_t j = 0; j < row.size(); ++j) {
                const auto& col = schema.cols[j];
                switch (row[j].type) {
                    case dkp::io::ColType::Float: r[col.name] = row[j].num; break;
                    case dkp::io::ColType::Int: r[col.name] = row[j].inum; break;
                    case dkp::io::ColType::Str: r[col.name] = row[j].str; break;
                }
            }
            jrows.push_back(std::move(r));
        }
        doc["rows"] = std::move(jrows);
        body << doc.dump(2) << '\n';
    }
    if (out.path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw dkp::Error("OutputUnwritable", "cannot open " + out.path);
        f << body.str();
    }
}

void emit_error(const Output& out, const std::string& code, const std::string& message) {
    if (out.format == "json") {
        json doc;
        doc["error"] = {{"code", code}, {"message", message}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::string safe = message;
        for (char& c : safe)
            if (c == ',' || c == '\n') c = ';';
        std::cout << "error_code,message\n" << code << ',' << safe << '\n';
    }
}

// The level used by `state eval` / `state check`: lowest positive energy for
// the particle branch, highest negative for the antiparticle branch.
dkp::spectrum::EnergyLevel pick_level(const std::vector<dkp::spectrum::EnergyLevel>& levels,
                                      const std::string& branch) {
    std::optional<dkp::spectrum::EnergyLevel> best;
    for (const auto& lv : levels) {
        if (branch == "particle" && lv.E > 0 && (!best || lv.E < best->E)) best = lv;
        if (branch == "antiparticle" && lv.E < 0 && (!best || lv.E > best->E)) best = lv;
    }
    if (!best)
        throw dkp::Error("NoAdmissibleLevel", "no admissible " + branch + " level for these inputs");
    return *best;
}

struct StateArgs {
    double mass = 1.0, omega = 0.0, omega_tilde = 0.0, tol = 1e-10;
    int l = 0, nr = 0;
    std::string branch = "particle";
};

dkp::states::BoundState make_state(const StateArgs& a) {
    const dkp::spectrum::OscillatorParams p{a.mass, a.omega, a.omega_tilde};
    const dkp::spectrum::QuantumNumbers q{a.nr, a.l};
    return dkp::states::build_state(p, q, pick_level(dkp::spectrum::solve_spectrum(p, q, a.tol), a.branch));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-1 DKP oscillator in (2+1) dimensions: spectra, states, Lieb lattice"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", out.path, "Write the table to this file instead of stdout");

    // algebra verify
    auto* algebra_cmd = app.add_subcommand("algebra", "beta-matrix algebra checks");
    auto* verify = algebra_cmd->add_subcommand("verify", "verify the DKP trilinear algebra exactly");
    int rep = 3;
    verify->add_option("--rep", rep, "Representation dimension")->check(CLI::IsMember({3, 6}));

    // spectrum solve / sweep
    auto* spectrum_cmd = app.add_subcommand("spectrum", "energy spectra");
    auto* solve = spectrum_cmd->add_subcommand("solve", "solve the quantization condition");
    StateArgs sa;
    solve->add_option("--mass", sa.mass, "Rest mass (> 0)")->required();
    solve->add_option("--omega", sa.omega, "Oscillator frequency");
    solve->add_option("--omega-tilde", sa.omega_tilde, "Cyclotron-like frequency qB/(2m)");
    solve->add_option("--l", sa.l, "Angular momentum quantum number");
    solve->add_option("--nr", sa.nr, "Radial quantum number (>= 0)");
    solve->add_option("--tol", sa.tol, "Residual tolerance");

    auto* sweep = spectrum_cmd->add_subcommand("sweep", "sweep one frequency axis");
    StateArgs swa;
    std::string axis = "omega";
    double range_min = -2.0, range_max = 2.0;
    int steps = 41, nr_max = 3;
    sweep->add_option("--mass", swa.mass, "Rest mass (> 0)")->required();
    sweep->add_option("--axis", axis, "Swept axis")->check(CLI::IsMember({"omega", "omega_tilde"}));
    sweep->add_option("--omega", swa.omega, "Fixed omega (when sweeping omega_tilde)");
    sweep->add_option("--omega-tilde", swa.omega_tilde, "Fixed omega_tilde (when sweeping omega)");
    sweep->add_option("--range-min", range_min, "Axis lower bound")->required();
    sweep->add_option("--range-max", range_max, "Axis upper bound")->required();
    sweep->add_option("--steps", steps, "Grid points (>= 2)");
    sweep->add_option("--l", swa.l, "Angular momentum quantum number");
    sweep->add_option("--nr-max", nr_max, "Emit levels for nr = 0..nr_max");
    sweep->add_option("--tol", swa.tol, "Residual tolerance");

    // state eval / check
    auto* state_cmd = app.add_subcommand("state", "bound-state fields and checks");
    auto* eval = state_cmd->add_subcommand("eval", "sample the spinor components and J0");
    StateArgs ea;
    double r_min = 0.0, r_max = 0.0;
    int r_points = 64, phi_points = 16;
    eval->add_option("--mass", ea.mass, "Rest mass (> 0)")->required();
    eval->add_option("--omega", ea.omega, "Oscillator frequency");
    eval->add_option("--omega-tilde", ea.omega_tilde, "Cyclotron-like frequency");
    eval->add_option("--l", ea.l, "Angular momentum quantum number");
    eval->add_option("--nr", ea.nr, "Radial quantum number (>= 0)");
    eval->add_option("--branch", ea.branch, "Energy branch")
        ->check(CLI::IsMember({"particle", "antiparticle"}));
    eval->add_option("--r-min", r_min, "Radial lower bound (default 0.05/sqrt(alpha))");
    eval->add_option("--r-max", r_max, "Radial upper bound (default 7.5/sqrt(alpha))");
    eval->add_option("--r-points", r_points, "Radial samples");
    eval->add_option("--phi-points", phi_points, "Azimuthal samples");
    eval->add_option("--tol", ea.tol, "Residual tolerance");

    auto* check = state_cmd->add_subcommand("check", "equation-of-motion and normalization checks");
    StateArgs ca;
    int grid_points = 2000;
    check->add_option("--mass", ca.mass, "Rest mass (> 0)")->required();
    check->add_option("--omega", ca.omega, "Oscillator frequency");
    check->add_option("--omega-tilde", ca.omega_tilde, "Cyclotron-like frequency");
    check->add_option("--l", ca.l, "Angular momentum quantum number");
    check->add_option("--nr", ca.nr, "Radial quantum number (>= 0)");
    check->add_option("--branch", ca.branch, "Energy branch")
        ->check(CLI::IsMember({"particle", "antiparticle"}));
    check->add_option("--grid-points", grid_points, "Radial grid size for the residuals");
    check->add_option("--tol", ca.tol, "Residual tolerance");

    // lieb bands / polarization
    auto* lieb_cmd = app.add_subcommand("lieb", "Lieb-lattice application");
    auto* bands = lieb_cmd->add_subcommand("bands", "band structure on a k-grid");
    double vf = 1.0, bands_mass = 1.0, k_max = 2.0;
    int k_steps = 25;
    bands->add_option("--vf", vf, "Fermi velocity (> 0)");
    bands->add_option("--mass", bands_mass, "Bandgap energy (any sign)");
    bands->add_option("--k-max", k_max, "Grid extent: k in [-k_max, k_max]^2");
    bands->add_option("--steps", k_steps, "Grid points per axis");

    auto* polar = lieb_cmd->add_subcommand("polarization", "one-loop polarization integrals");
    double s_point = 0.0, s_min = 0.0, s_max = 0.0;
    int s_steps = 0, sign_m = 1;
    auto* s_opt = polar->add_option("--ptilde2-over-m2", s_point, "Single evaluation point (<= 4)");
    polar->add_option("--range-min", s_min, "Scan lower bound");
    auto* smax_opt = polar->add_option("--range-max", s_max, "Scan upper bound (<= 4)");
    polar->add_option("--steps", s_steps, "Scan points (>= 2)");
    polar->add_option("--sign-m", sign_m, "Sign of the bandgap")->check(CLI::IsMember({-1, 1}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion") return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        using dkp::io::Cell;
        using dkp::io::Row;

        if (verify->parsed()) {
            const auto kind = rep == 3 ? dkp::algebra::RepKind::ThreeDim : dkp::algebra::RepKind::SixDim;
            const auto report = dkp::algebra::verify_dkp_algebra(dkp::algebra::beta_matrices(kind));
            std::vector<Row> rows{{Cell::of(rep), Cell::of(report.triples_checked),
                                   Cell::of(report.max_deviation),
                                   Cell::of(static_cast<int>(report.exact_zero)),
                                   Cell::of(static_cast<int>(report.failing.size()))}};
            emit(out, "algebra verify", json{{"rep", rep}}, dkp::io::algebra_schema(), rows);
        } else if (solve->parsed()) {
            const dkp::spectrum::OscillatorParams p{sa.mass, sa.omega, sa.omega_tilde};
            const auto levels = dkp::spectrum::solve_spectrum(p, {sa.nr, sa.l}, sa.tol);
            std::vector<Row> rows;
            for (const auto& lv : levels)
                rows.push_back({Cell::of(0.0), Cell::of(sa.l), Cell::of(sa.nr), Cell::of(lv.E),
                                Cell::of(branch_name(lv.branch)), Cell::of(1), Cell::of(lv.residual)});
            const json cfg{{"mass", sa.mass},        {"omega", sa.omega}, {"omega_tilde", sa.omega_tilde},
                           {"l", sa.l},              {"nr", sa.nr},       {"tol", sa.tol}};
            emit(out, "spectrum solve", cfg, dkp::io::spectrum_schema(), rows);
        } else if (sweep->parsed()) {
            const dkp::spectrum::OscillatorParams tmpl{swa.mass, swa.omega, swa.omega_tilde};
            std::vector<dkp::spectrum::QuantumNumbers> qs;
            for (int nr = 0; nr <= nr_max; ++nr) qs.push_back({nr, swa.l});
            const auto ax = axis == "omega" ? dkp::spectrum::SweepAxis::Omega
                                            : dkp::spectrum::SweepAxis::OmegaTilde;
            const auto table = dkp::spectrum::sweep(tmpl, qs, ax, range_min, range_max, steps, swa.tol);
            std::vector<Row> rows;
            for (const auto& r : table) {
                std::string label;
                switch (r.kind) {
                    case dkp::spectrum::SweepRow::Kind::Level: label = branch_name(r.branch); break;
                    case dkp::spectrum::SweepRow::Kind::EpsPlus: label = "epsilon_plus"; break;
                    case dkp::spectrum::SweepRow::Kind::EpsMinus: label = "epsilon_minus"; break;
                }
                rows.push_back({Cell::of(r.axis_value), Cell::of(r.l), Cell::of(r.n_r), Cell::of(r.E),
                                Cell::of(label), Cell::of(static_cast<int>(r.admissible)),
                                Cell::of(r.residual)});
            }
            const json cfg{{"mass", swa.mass},   {"axis", axis},           {"omega", swa.omega},
                           {"omega_tilde", swa.omega_tilde}, {"range_min", range_min},
                           {"range_max", range_max},         {"steps", steps},
                           {"l", swa.l},         {"nr_max", nr_max},       {"tol", swa.tol}};
            emit(out, "spectrum sweep", cfg, dkp::io::spectrum_schema(), rows);
        } else if (eval->parsed()) {
            auto st = make_state(ea);
            const double scale = 1.0 / std::sqrt(st.alpha);
            const double lo = r_min > 0.0 ? r_min : 0.05 * scale;
            const double hi = r_max > 0.0 ? r_max : 7.5 * scale;
            const auto grid = dkp::states::FieldGrid::uniform(lo, hi, r_points, phi_points);
            const auto charge = dkp::states::charge_density_and_normalize(st, grid);
            const auto phi1 = dkp::states::sample_phi1(st, grid);
            const auto p23 = dkp::states::components_phi23(st, grid);
            std::vector<Row> rows;
            for (std::size_t ir = 0; ir < grid.r.size(); ++ir)
                for (std::size_t ip = 0; ip < grid.phi.size(); ++ip) {
                    const std::size_t k = grid.idx(ir, ip);
                    rows.push_back({Cell::of(grid.r[ir]), Cell::of(grid.phi[ip]),
                                    Cell::of(phi1[k].real()), Cell::of(phi1[k].imag()),
                                    Cell::of(p23.phi2[k].real()), Cell::of(p23.phi2[k].imag()),
                                    Cell::of(p23.phi3[k].real()), Cell::of(p23.phi3[k].imag()),
                                    Cell::of(charge.j0[k].real())});
                }
            const json cfg{{"mass", ea.mass},   {"omega", ea.omega},     {"omega_tilde", ea.omega_tilde},
                           {"l", ea.l},         {"nr", ea.nr},           {"branch", ea.branch},
                           {"r_min", lo},       {"r_max", hi},           {"r_points", r_points},
                           {"phi_points", phi_points}, {"E", st.E},      {"norm", st.norm}};
            emit(out, "state eval", cfg, dkp::io::state_schema(), rows);
        } else if (check->parsed()) {
            auto st = make_state(ca);
            const double scale = 1.0 / std::sqrt(st.alpha);
            std::vector<double> nodes(static_cast<std::size_t>(grid_points));
            const double lo2 = 0.25 * scale, hi2 = 8.0 * scale;
            for (int i = 0; i < grid_points; ++i)
                nodes[static_cast<std::size_t>(i)] = lo2 + i * (hi2 - lo2) / (grid_points - 1);
            const double res2 = dkp::states::residual_second_order(st, nodes);
            const auto cgrid =
                dkp::states::FieldGrid::uniform(0.01 * scale, 8.0 * scale, grid_points, 16);
            const auto cl = dkp::states::first_order_closure(st, cgrid);
            const auto charge = dkp::states::charge_density_and_normalize(st, cgrid);
            std::vector<Row> rows{{Cell::of(ca.l), Cell::of(ca.nr), Cell::of(st.E), Cell::of(res2),
                                   Cell::of(cl.eq17), Cell::of(cl.eq18), Cell::of(cl.eq19),
                                   Cell::of(charge.charge), Cell::of(charge.norm)}};
            const json cfg{{"mass", ca.mass}, {"omega", ca.omega}, {"omega_tilde", ca.omega_tilde},
                           {"l", ca.l},       {"nr", ca.nr},       {"branch", ca.branch},
                           {"grid_points", grid_points}};
            emit(out, "state check", cfg, dkp::io::state_check_schema(), rows);
        } else if (bands->parsed()) {
            const dkp::lieb::LiebParams lp{vf, bands_mass, 1.0};
            std::vector<Row> rows;
            for (int i = 0; i < k_steps; ++i)
                for (int j = 0; j < k_steps; ++j) {
                    const double k1 = -k_max + 2.0 * k_max * i / (k_steps - 1);
                    const double k2 = -k_max + 2.0 * k_max * j / (k_steps - 1);
                    const auto ev = dkp::lieb::dispersion(k1, k2, lp);
                    rows.push_back({Cell::of(k1), Cell::of(k2), Cell::of(ev(0)), Cell::of(ev(1)),
                                    Cell::of(ev(2))});
                }
            const json cfg{{"vf", vf}, {"mass", bands_mass}, {"k_max", k_max}, {"steps", k_steps}};
            emit(out, "lieb bands", cfg, dkp::io::lieb_band_schema(), rows);
        } else if (polar->parsed()) {
            std::vector<double> pts;
            if (s_steps > 0 && smax_opt->count() > 0) {
                if (s_steps < 2) throw dkp::Error("UsageError", "--steps must be >= 2 for a scan");
                for (int i = 0; i < s_steps; ++i)
                    pts.push_back(s_min + i * (s_max - s_min) / (s_steps - 1));
            } else if (s_opt->count() > 0) {
                pts.push_back(s_point);
            } else {
                throw dkp::Error("UsageError",
                                 "provide --ptilde2-over-m2 or --range-min/--range-max/--steps");
            }
            std::vector<Row> rows;
            for (double s : pts)
                rows.push_back(
                    {Cell::of(s), Cell::of(dkp::lieb::pi_even(s)), Cell::of(dkp::lieb::pi_odd(s, sign_m))});
            const json cfg{{"sign_m", sign_m}};
            emit(out, "lieb polarization", cfg, dkp::io::polarization_schema(), rows);
        } else {
            std::cerr << app.help() << '\n';
            return 2;
        }
    } catch (const dkp::Error& e) {
        if (e.code() == "UsageError") {
            emit_error(out, e.code(), e.what());
            return 2;
        }
        emit_error(out, e.code(), e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        emit_error(out, "UsageError", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error(out, "InternalError", e.what());
        return 1;
    }
    return 0;
}
