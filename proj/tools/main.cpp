#include <array>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qclimit/constants.hpp"
#include "qclimit/decay.hpp"
#include "qclimit/epr.hpp"
#include "qclimit/errors.hpp"
#include "qclimit/gravatom.hpp"
#include "qclimit/madelung.hpp"
#include "qclimit/matterwave.hpp"
#include "qclimit/report.hpp"
#include "qclimit/semiclassical.hpp"

namespace {

using qclimit::report::format_scientific;

void print_value(const std::string& name, double value, const std::string& unit = "") {
    std::cout << name << " = " << format_scientific(value);
    if (!unit.empty())
        std::cout << ' ' << unit;
    std::cout << '\n';
}

void print_complex(const std::string& name, std::complex<double> value) {
    std::cout << name << " = " << format_scientific(value.real()) << " + "
              << format_scientific(value.imag()) << "i\n";
}

qclimit::epr::FamilyKind parse_family(const std::string& name) {
    if (name == "antidiagonal")
        return qclimit::epr::FamilyKind::Antidiagonal;
    if (name == "blockdiagonal")
        return qclimit::epr::FamilyKind::BlockDiagonal;
    if (name == "product")
        return qclimit::epr::FamilyKind::Product;
    throw qclimit::validation_error("unknown family '" + name +
                                    "' (expected antidiagonal, blockdiagonal or product)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qclimit: quantum treatments of macroscopic systems, audited numerically"};
    app.require_subcommand(1);
    std::string constants_path;
    app.add_option("--constants", constants_path, "key=value file overriding physical constants");

    // solar ---------------------------------------------------------------
    auto* solar = app.add_subcommand("solar", "gravitational bound states of the sun-earth system");
    std::optional<double> solar_level;
    bool solar_classical = false;
    std::optional<double> solar_match;
    bool solar_peak = false;
    bool solar_scales = false;
    std::optional<double> solar_density;
    std::vector<double> solar_wavefunction;
    solar->add_option("--level", solar_level, "energy of level n (n may be huge and non-integer)");
    solar->add_flag("--classical", solar_classical, "classical orbit energies, both conventions");
    solar->add_option("--match", solar_match, "quantum number matching an energy magnitude [J]");
    solar->add_flag("--peak", solar_peak, "location of the ground-state radial density maximum");
    solar->add_flag("--scales", solar_scales, "alpha, bohr radius and ground energy");
    solar->add_option("--density", solar_density, "radial density at dimensionless radius rho");
    solar->add_option("--wavefunction", solar_wavefunction,
                      "n l rho: small-n radial wavefunction (bohr-radius units)")
        ->expected(3);

    // decay ---------------------------------------------------------------
    auto* dec = app.add_subcommand("decay", "decay of the stationary state under jupiter's field");
    bool decay_time_flag = false;
    std::optional<double> decay_survival_t;
    std::optional<double> decay_ode_t;
    long decay_steps = 10000;
    double decay_n = 1e74;
    int decay_case = 0;
    double decay_me = 0.0;
    bool decay_prefactor = false;
    bool decay_first_time = false;
    bool decay_max = false;
    dec->add_flag("--time", decay_time_flag, "decay time under the constant perturbation");
    dec->add_option("--survival", decay_survival_t, "survival coefficient at time t [s]");
    dec->add_option("--ode", decay_ode_t, "RK4 cross-check of the coefficient at time t [s]");
    dec->add_option("--steps", decay_steps, "RK4 step count (>= 100)");
    dec->add_option("--n", decay_n, "initial quantum number");
    dec->add_option("--case", decay_case, "selection rule: 1 (delta l = 0) or 2 (|delta l| = 1)");
    dec->add_option("--matrix-element", decay_me, "radial matrix element magnitude");
    dec->add_flag("--prefactor", decay_prefactor, "first-order prefactor of the chosen case");
    dec->add_flag("--first-time", decay_first_time, "first-order decay time (or NO_DECAY)");
    dec->add_flag("--max-time", decay_max, "upper bound pi/|omega_1n|");

    // matterwave ------------------------------------------------------------
    auto* mw = app.add_subcommand("matterwave", "matter-wave diffraction feasibility");
    std::optional<double> mw_mass, mw_speed, mw_x1, mw_distance, mw_period, mw_lambda;
    mw->add_option("--mass", mw_mass, "particle mass [kg]");
    mw->add_option("--speed", mw_speed, "particle speed [m/s]");
    mw->add_option("--x1", mw_x1, "first-maximum offset to resolve [m]");
    mw->add_option("--distance", mw_distance, "grating-to-detector distance [m]");
    mw->add_option("--period", mw_period, "grating period for light-grating requirements [m]");
    mw->add_option("--lambda", mw_lambda, "wavelength override [m]");

    // chsh ------------------------------------------------------------------
    auto* chsh = app.add_subcommand("chsh", "two-qubit correlation bounds and sampling");
    std::string chsh_family = "antidiagonal";
    bool chsh_maximize = false;
    long chsh_budget = 100000;
    std::vector<double> chsh_diag;
    double chsh_x1 = 0.0, chsh_y1 = 0.0, chsh_x2 = 0.0, chsh_y2 = 0.0;
    bool chsh_delta = false;
    long chsh_runs = 0;
    std::uint64_t chsh_seed = 1;
    chsh->add_option("--family", chsh_family, "antidiagonal | blockdiagonal | product");
    chsh->add_flag("--maximize", chsh_maximize, "maximize Delta over the family");
    chsh->add_option("--budget", chsh_budget, "evaluation budget for --maximize");
    chsh->add_option("--diag", chsh_diag, "c11_11,c11_22,c22_11,c22_22")
        ->expected(4)
        ->delimiter(',');
    std::vector<double> chsh_u, chsh_v;
    chsh->add_option("--u", chsh_u, "u11,Re(u12) of the product-family left factor")
        ->expected(2)
        ->delimiter(',');
    chsh->add_option("--v", chsh_v, "v11,Re(v12) of the product-family right factor")
        ->expected(2)
        ->delimiter(',');
    chsh->add_option("--x1", chsh_x1, "off-diagonal real part x1");
    chsh->add_option("--y1", chsh_y1, "off-diagonal imaginary part y1");
    chsh->add_option("--x2", chsh_x2, "off-diagonal real part x2");
    chsh->add_option("--y2", chsh_y2, "off-diagonal imaginary part y2");
    chsh->add_flag("--delta", chsh_delta, "correlation Delta of the given family state");
    chsh->add_option("--sample", chsh_runs, "Monte Carlo runs of the (A,B) coincidence");
    chsh->add_option("--seed", chsh_seed, "Monte Carlo seed");

    // madelung ----------------------------------------------------------------
    auto* mad = app.add_subcommand("madelung", "coherent-state decomposition and residuals");
    double mad_mass = 1.0, mad_omega = 1.0, mad_x0 = 0.0, mad_p0 = 0.0;
    std::optional<double> mad_hbar;
    double mad_x = 0.0, mad_t = 0.0;
    std::optional<double> mad_dx, mad_dt;
    mad->add_option("--mass", mad_mass, "oscillator mass [kg]");
    mad->add_option("--omega", mad_omega, "angular frequency [1/s]");
    mad->add_option("--x0", mad_x0, "initial position expectation [m]");
    mad->add_option("--p0", mad_p0, "initial momentum expectation [kg m/s]");
    mad->add_option("--hbar", mad_hbar, "hbar override (defaults to the constants file)");
    mad->add_option("--x", mad_x, "evaluation position [m]");
    mad->add_option("--t", mad_t, "evaluation time [s]");
    mad->add_option("--dx", mad_dx, "spatial step for the continuity residual");
    mad->add_option("--dt", mad_dt, "time step for the continuity residual");

    // wkb -----------------------------------------------------------------------
    auto* wkb = app.add_subcommand("wkb", "semiclassical levels, waves and state counting");
    std::optional<int> wkb_levels;
    double wkb_mass = 1.0, wkb_omega = 1.0;
    std::optional<double> wkb_hbar;
    std::optional<double> wkb_energy;
    std::optional<double> wkb_x;
    std::optional<double> wkb_mu;
    int wkb_ndof = 1;
    std::vector<double> wkb_defect_evs;
    std::optional<double> wkb_defect_n;
    wkb->add_option("--levels", wkb_levels, "half-integer quantized harmonic levels up to N");
    wkb->add_option("--mass", wkb_mass, "oscillator mass [kg]");
    wkb->add_option("--omega", wkb_omega, "angular frequency [1/s]");
    wkb->add_option("--hbar", wkb_hbar, "hbar override (defaults to the constants file)");
    wkb->add_option("--energy", wkb_energy, "energy of the semiclassical wave [J]");
    wkb->add_option("--x", wkb_x, "evaluation position [m]");
    wkb->add_option("--mu", wkb_mu, "phase-space cell volume [(J s)^n]");
    wkb->add_option("--ndof", wkb_ndof, "degrees of freedom of the cell");
    wkb->add_option("--defect", wkb_defect_evs, "eigenvalues of a quasi-projector candidate")
        ->delimiter(',');
    wkb->add_option("--n-expected", wkb_defect_n, "expected state count for --defect");

    // report ----------------------------------------------------------------------
    auto* rpt = app.add_subcommand("report", "recompute and compare every audited quantity");
    std::string report_format = "table";
    rpt->add_option("--format", report_format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        namespace consts = qclimit::constants;
        const consts::PhysicalConstants c =
            constants_path.empty() ? consts::default_constants()
                                   : consts::load_overrides(constants_path);

        if (*solar) {
            const auto sys = qclimit::gravatom::sun_earth(c);
            if (solar_level)
                print_value("E_n", qclimit::gravatom::energy_level(sys, c, *solar_level), "J");
            if (solar_classical) {
                const auto orbit = qclimit::gravatom::classical_orbit_energy(sys, c);
                print_value("T_plus_V", orbit.signed_total, "J");
                print_value("magnitude_sum", orbit.magnitude_sum, "J");
            }
            if (solar_match)
                print_value("n_match",
                            qclimit::gravatom::matching_quantum_number(sys, c, *solar_match));
            if (solar_peak)
                print_value("r_m", qclimit::gravatom::radial_density_peak(sys, c), "m");
            if (solar_scales) {
                const auto scales = qclimit::gravatom::gravitational_scales(sys, c);
                print_value("alpha", scales.alpha, "1/m");
                print_value("bohr_radius", scales.bohr_radius, "m");
                print_value("E_1", scales.ground_energy, "J");
            }
            if (solar_density)
                print_value("radial_density", qclimit::gravatom::radial_density(*solar_density));
            if (!solar_wavefunction.empty())
                print_value("R_nl",
                            qclimit::gravatom::radial_wavefunction(
                                static_cast<int>(solar_wavefunction[0]),
                                static_cast<int>(solar_wavefunction[1]), solar_wavefunction[2]));
            return 0;
        }

        if (*dec) {
            const auto sys = qclimit::gravatom::sun_earth(c);
            const auto setup = qclimit::decay::make_perturbation_setup(sys, c, decay_n);
            const auto decay_case_of = [&]() {
                if (decay_case != 1 && decay_case != 2)
                    throw qclimit::validation_error("--case must be 1 or 2");
                return qclimit::decay::DecayCase{decay_case == 1
                                                     ? qclimit::decay::SelectionRule::DeltaL0
                                                     : qclimit::decay::SelectionRule::DeltaL1,
                                                 decay_me};
            };
            if (decay_time_flag)
                print_value("t_d", qclimit::decay::decay_time(setup, c), "s");
            if (decay_survival_t)
                print_complex("c_n",
                              qclimit::decay::survival_coefficient(setup, c, *decay_survival_t));
            if (decay_ode_t)
                print_complex("c_n_rk4", qclimit::decay::integrate_coefficient_ode(
                                             setup, c, *decay_ode_t, decay_steps));
            if (decay_prefactor)
                print_value("prefactor",
                            qclimit::decay::perturbation_prefactor(setup, c, decay_case_of()));
            if (decay_first_time) {
                const auto t = qclimit::decay::first_order_decay_time(setup, c, decay_case_of());
                if (t)
                    print_value("t_d_first_order", *t, "s");
                else
                    std::cout << "t_d_first_order = NO_DECAY\n";
            }
            if (decay_max)
                print_value("max_decay_time", qclimit::decay::max_decay_time(setup, c), "s");
            return 0;
        }

        if (*mw) {
            double lambda = mw_lambda.value_or(0.0);
            if (mw_mass && mw_speed) {
                lambda = qclimit::matterwave::de_broglie_wavelength(c, {*mw_mass, *mw_speed});
                print_value("lambda", lambda, "m");
            }
            double period = mw_period.value_or(0.0);
            if (mw_x1 && mw_distance) {
                if (!(lambda > 0.0))
                    throw qclimit::validation_error(
                        "need --lambda or --mass/--speed to derive a wavelength");
                period = qclimit::matterwave::required_grating_period(lambda, *mw_x1,
                                                                      *mw_distance);
                print_value("grating_period", period, "m");
            }
            if (period > 0.0) {
                const auto light = qclimit::matterwave::light_grating_requirements(c, period);
                print_value("lambda_light", light.lambda_light, "m");
                print_value("photon_energy", light.photon_energy_eV, "eV");
                print_value("temperature", light.temperature_K, "K");
            }
            return 0;
        }

        if (*chsh) {
            const auto kind = parse_family(chsh_family);
            const auto settings = qclimit::epr::standard_settings();
            if (chsh_maximize) {
                const auto result = qclimit::epr::maximize_delta(kind, settings, chsh_budget);
                print_value("delta_max", result.delta);
                for (size_t i = 0; i < result.witness.size(); ++i)
                    print_value("witness." + result.param_names[i], result.witness[i]);
                std::cout << "evaluations = " << result.evaluations << '\n';
            }
            if (chsh_delta || chsh_runs > 0) {
                const auto symmetric_qubit = [](const std::vector<double>& entries,
                                                const char* name) {
                    if (entries.size() != 2)
                        throw qclimit::validation_error(std::string(name) +
                                                        " with two entries is required");
                    qclimit::hilbert::ComplexMatrix m(2, 2);
                    m << entries[0], entries[1], entries[1], 1.0 - entries[0];
                    return qclimit::hilbert::DensityOperator(m);
                };
                const auto rho = [&]() {
                    if (kind == qclimit::epr::FamilyKind::Product)
                        return qclimit::epr::build_product(
                            {symmetric_qubit(chsh_u, "--u"), symmetric_qubit(chsh_v, "--v")});
                    if (chsh_diag.size() != 4)
                        throw qclimit::validation_error("--diag with four entries is required");
                    const std::array<double, 4> diag{chsh_diag[0], chsh_diag[1], chsh_diag[2],
                                                     chsh_diag[3]};
                    if (kind == qclimit::epr::FamilyKind::Antidiagonal)
                        return qclimit::epr::build_antidiagonal(
                            {diag, chsh_x1, chsh_y1, chsh_x2, chsh_y2});
                    return qclimit::epr::build_blockdiagonal(
                        {diag, chsh_x1, chsh_y1, chsh_x2, chsh_y2});
                }();
                if (chsh_delta)
                    print_value("delta", qclimit::epr::correlation_delta(rho, settings));
                if (chsh_runs > 0)
                    print_value("sample_mean",
                                qclimit::epr::sample_outcomes(rho, settings.A, settings.B,
                                                              chsh_runs, chsh_seed));
            }
            return 0;
        }

        if (*mad) {
            const qclimit::madelung::CoherentStateParams packet{
                mad_mass, mad_omega, mad_x0, mad_p0, mad_hbar.value_or(c.hbar)};
            const auto mean = qclimit::madelung::classical_trajectory(packet, mad_t);
            print_value("x_mean", mean.position, "m");
            print_value("p_mean", mean.momentum, "kg m/s");
            const auto fields = qclimit::madelung::madelung_fields(packet, mad_x, mad_t);
            print_value("R", fields.amplitude);
            print_value("S", fields.action, "J s");
            print_value("Q", fields.quantum_potential, "J");
            print_value("hj_residual", qclimit::madelung::quantum_hj_residual(packet, mad_x, mad_t),
                        "J");
            if (mad_dx && mad_dt)
                print_value("continuity_residual",
                            qclimit::madelung::continuity_residual(packet, mad_x, mad_t, *mad_dx,
                                                                   *mad_dt));
            print_value("classical_limit_gap",
                        qclimit::madelung::classical_limit_gap(packet, mad_x, mad_t), "J");
            return 0;
        }

        if (*wkb) {
            const double hbar = wkb_hbar.value_or(c.hbar);
            const auto pot = qclimit::semiclassical::Potential1D::harmonic(wkb_mass, wkb_omega);
            if (wkb_levels) {
                const auto levels = qclimit::semiclassical::bohr_sommerfeld_levels(
                    pot, *wkb_levels, wkb_mass, hbar);
                for (size_t i = 0; i < levels.size(); ++i)
                    print_value("E_" + std::to_string(i + 1), levels[i], "J");
            }
            if (wkb_energy && wkb_x)
                print_complex("psi_wkb", qclimit::semiclassical::wkb_wavefunction(
                                             pot, *wkb_energy, *wkb_x, hbar));
            if (wkb_mu)
                print_value("state_count", qclimit::semiclassical::cell_state_count(
                                               {*wkb_mu, wkb_ndof}, c.h));
            if (!wkb_defect_evs.empty()) {
                if (!wkb_defect_n)
                    throw qclimit::validation_error("--defect requires --n-expected");
                qclimit::hilbert::ComplexMatrix f = qclimit::hilbert::ComplexMatrix::Zero(
                    static_cast<Eigen::Index>(wkb_defect_evs.size()),
                    static_cast<Eigen::Index>(wkb_defect_evs.size()));
                for (size_t i = 0; i < wkb_defect_evs.size(); ++i)
                    f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
                        wkb_defect_evs[i];
                const auto defect =
                    qclimit::semiclassical::quasi_projector_defect(f, *wkb_defect_n);
                print_value("trace_gap", defect.trace_gap);
                print_value("idempotency_defect", defect.idempotency_defect);
            }
            return 0;
        }

        if (*rpt) {
            const auto rep = qclimit::report::run_report(c);
            if (report_format == "json")
                std::cout << qclimit::report::to_json(rep) << '\n';
            else
                std::cout << qclimit::report::to_table(rep);
            return rep.has_unexpected_mismatch() ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
