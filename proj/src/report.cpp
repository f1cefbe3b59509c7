#include "qclimit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qclimit/decay.hpp"
#include "qclimit/epr.hpp"
#include "qclimit/gravatom.hpp"
#include "qclimit/madelung.hpp"
#include "qclimit/matterwave.hpp"
#include "qclimit/numeric.hpp"

namespace qclimit::report {

namespace {

/// Evaluation budget of each Delta maximization inside the report; fixed so
/// consecutive runs are byte-identical.
constexpr long kReportMaximizeBudget = 200000;

/// Mass and speed of the jogging interference 'beam', and the detector
/// geometry the feasibility estimate assumes.
constexpr double kJoggerMass = 90.0;          // kg
constexpr double kJoggerSpeedKmh = 10.0;      // km/h
constexpr double kDetectorResolution = 1e-9;  // m
constexpr double kDetectorDistance = 1e3;     // m

/// Classical total energy the quantum number is matched against.
constexpr double kPublishedClassicalEnergy = 7.96e33; // J

RegressionRow make_row(std::string id, std::string description, std::string unit,
                       double computed, std::optional<double> paper_value, double tolerance,
                       bool expected_mismatch = false) {
    RegressionRow row;
    row.id = std::move(id);
    row.description = std::move(description);
    row.unit = std::move(unit);
    row.computed = computed;
    row.paper_value = paper_value;
    row.tolerance = tolerance;
    row.expected_mismatch = expected_mismatch;
    if (paper_value.has_value()) {
        row.rel_dev = (computed - *paper_value) / std::abs(*paper_value);
        row.status = std::abs(*row.rel_dev) <= tolerance ? RowStatus::Match : RowStatus::Mismatch;
    } else {
        row.status = RowStatus::Info;
    }
    return row;
}

void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    out += '"';
}

} // namespace

const char* to_string(RowStatus s) {
    switch (s) {
    case RowStatus::Match: return "MATCH";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Info: return "INFO";
    }
    return "?";
}

bool RegressionReport::has_unexpected_mismatch() const {
    return std::any_of(rows.begin(), rows.end(), [](const RegressionRow& row) {
        return row.status == RowStatus::Mismatch && !row.expected_mismatch;
    });
}

std::string format_scientific(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.11e", v + 0.0); // normalize -0.0
    return buf;
}

RegressionReport run_report(const constants::PhysicalConstants& c) {
    RegressionReport rep;
    rep.artifact_version = kArtifactVersion;
    rep.constants_fingerprint = constants::fingerprint(c);

    const gravatom::TwoBodySystem sys = gravatom::sun_earth(c);
    const gravatom::GravAtomScales scales = gravitational_scales(sys, c);
    const decay::PerturbationSetup setup = decay::make_perturbation_setup(sys, c);

    rep.rows.push_back(make_row(
        "constants.r_SJ", "mean sun-jupiter distance fixed by the perturbation scenario", "m",
        c.r_SJ, 7.88e11, 1e-12));

    rep.rows.push_back(make_row(
        "gravatom.ground_energy",
        "ground-state energy of the sun-earth system treated as a gravitational bound state",
        "J", scales.ground_energy, -1.70e182, 0.02));

    const gravatom::OrbitEnergy orbit = classical_orbit_energy(sys, c);
    rep.rows.push_back(make_row(
        "gravatom.classical_energy_sum",
        "|T| + |V| of the classical circular orbit (the published convention)", "J",
        orbit.magnitude_sum, kPublishedClassicalEnergy, 0.02));
    rep.rows.push_back(make_row(
        "gravatom.classical_energy_signed",
        "signed T + V of the classical circular orbit, shown for comparison", "J",
        orbit.signed_total, std::nullopt, 0.0));

    rep.rows.push_back(make_row(
        "gravatom.match_n",
        "quantum number whose level energy matches the classical total (order-of-magnitude row)",
        "1", matching_quantum_number(sys, c, kPublishedClassicalEnergy), 1e74, 9.0));

    rep.rows.push_back(make_row(
        "gravatom.peak_radius", "location of the ground-state radial density maximum", "m",
        radial_density_peak(sys, c), 2.34e-138, 0.02));

    const double radial_norm = numeric::integrate_adaptive(
        [](double rho) { return gravatom::radial_density(rho); }, 0.0, 60.0, 1e-13);
    rep.rows.push_back(make_row(
        "gravatom.radial_norm", "normalization integral of the ground-state radial density", "1",
        radial_norm, 1.0, 1e-10));

    rep.rows.push_back(make_row(
        "gravatom.alpha", "inverse gravitational bohr radius", "1/m", scales.alpha,
        std::nullopt, 0.0));

    rep.rows.push_back(make_row(
        "decay.h_prime", "constant perturbation energy of jupiter's field", "J", setup.h_prime,
        std::nullopt, 0.0));

    const double t_d = decay::decay_time(setup, c);
    rep.rows.push_back(make_row(
        "decay.t_d", "decay time of the stationary state under the constant perturbation", "s",
        t_d, 1.14e-64, 0.02));

    const std::complex<double> survival = decay::survival_coefficient(setup, c, t_d);
    rep.rows.push_back(make_row(
        "decay.survival_re", "real part of the survival coefficient at the decay time", "1",
        survival.real(), -0.5, 1e-12));
    rep.rows.push_back(make_row(
        "decay.survival_im", "imaginary part of the survival coefficient at the decay time", "1",
        survival.imag(), -std::sqrt(3.0) / 2.0, 1e-12));

    const decay::DecayCase case1{decay::SelectionRule::DeltaL0, 0.0};
    const decay::DecayCase case2{decay::SelectionRule::DeltaL1, 0.0};
    rep.rows.push_back(make_row(
        "decay.f_prefactor", "first-order prefactor of the s-to-s channel", "1/m^2",
        perturbation_prefactor(setup, c, case1), 4.57e-177, 0.02));
    rep.rows.push_back(make_row(
        "decay.g_prefactor", "first-order prefactor of the p-to-s channel", "1/m",
        perturbation_prefactor(setup, c, case2), -2.25e-164, 0.02));

    rep.rows.push_back(make_row(
        "decay.max_first_order_time",
        "pi/|omega_1n| computed from the level gap; the published figure is inconsistent with "
        "the published ground-state energy and the row is kept visible as a known mismatch",
        "s", decay::max_decay_time(setup, c), 5.09e-148, 0.02, /*expected_mismatch=*/true));

    const matterwave::BeamParticle jogger{kJoggerMass, kJoggerSpeedKmh * 1000.0 / 3600.0};
    const double lambda = de_broglie_wavelength(c, jogger);
    rep.rows.push_back(make_row(
        "matterwave.lambda_de_broglie", "de Broglie wavelength of a 90 kg body at 10 km/h", "m",
        lambda, 2.65e-36, 0.01));

    const double period = matterwave::required_grating_period(lambda, kDetectorResolution,
                                                              kDetectorDistance);
    rep.rows.push_back(make_row(
        "matterwave.grating_period",
        "grating period needed for a 1 nm first maximum 1 km behind the grating", "m", period,
        2.65e-24, 0.01));

    const matterwave::LightGratingRequirements light =
        matterwave::light_grating_requirements(c, period);
    rep.rows.push_back(make_row(
        "matterwave.lambda_light", "wavelength of a standing-light grating with that period",
        "m", light.lambda_light, 5.30e-24, 0.01));
    rep.rows.push_back(make_row(
        "matterwave.photon_energy", "photon energy of that radiation", "eV",
        light.photon_energy_eV, 2.37e17, 0.03));
    rep.rows.push_back(make_row(
        "matterwave.temperature", "equivalent temperature of that radiation", "K",
        light.temperature_K, 2.71e21, 0.03));

    const epr::MeasurementSettings settings = epr::standard_settings();
    const epr::DeltaMaximum anti =
        epr::maximize_delta(epr::FamilyKind::Antidiagonal, settings, kReportMaximizeBudget);
    rep.rows.push_back(make_row(
        "chsh.delta_antidiagonal", "maximal correlation over the anti-diagonal family", "1",
        anti.delta, 2.0, 1e-3));

    const epr::DeltaMaximum product =
        epr::maximize_delta(epr::FamilyKind::Product, settings, kReportMaximizeBudget);
    rep.rows.push_back(make_row(
        "chsh.delta_product", "maximal correlation over product states", "1", product.delta,
        std::sqrt(2.0), 1e-3));

    const epr::DeltaMaximum block =
        epr::maximize_delta(epr::FamilyKind::BlockDiagonal, settings, kReportMaximizeBudget);
    rep.rows.push_back(make_row(
        "chsh.delta_blockdiagonal",
        "maximal correlation over the block-diagonal family; independent maximization gives "
        "sqrt(2) where 1.40 was published, kept visible as a known near-miss",
        "1", block.delta, 1.40, 1e-3, /*expected_mismatch=*/true));

    const madelung::CoherentStateParams packet{1.0, 1.0, 0.0, 0.0, c.hbar};
    rep.rows.push_back(make_row(
        "madelung.classical_limit_gap",
        "hbar-dependent offset of the coherent-state quantum potential (m = 1 kg, omega = 1/s); "
        "it does not vanish in the classical limit",
        "J", classical_limit_gap(packet, 0.0, 0.0), std::nullopt, 0.0));

    return rep;
}

std::string to_table(const RegressionReport& r) {
    std::ostringstream out;
    out << "artifact_version: " << r.artifact_version << '\n';
    out << "constants_fingerprint: " << r.constants_fingerprint << '\n';
    char line[512];
    std::snprintf(line, sizeof(line), "%-32s %-8s %-20s %-20s %-12s %-8s %s\n", "id", "status",
                  "computed", "published", "rel_dev", "unit", "description");
    out << line;
    for (const RegressionRow& row : r.rows) {
        const std::string paper =
            row.paper_value ? format_scientific(*row.paper_value) : std::string("-");
        char dev[32] = "-";
        if (row.rel_dev)
            std::snprintf(dev, sizeof(dev), "%.2e", *row.rel_dev);
        std::snprintf(line, sizeof(line), "%-32s %-8s %-20s %-20s %-12s %-8s %s\n",
                      row.id.c_str(), to_string(row.status),
                      format_scientific(row.computed).c_str(), paper.c_str(), dev,
                      row.unit.c_str(), row.description.c_str());
        out << line;
    }
    return out.str();
}

std::string to_json(const RegressionReport& r) {
    std::string out = "{";
    out += "\"artifact_version\":";
    append_json_string(out, r.artifact_version);
    out += ",\"constants_fingerprint\":";
    append_json_string(out, r.constants_fingerprint);
    out += ",\"rows\":[";
    bool first = true;
    for (const RegressionRow& row : r.rows) {
        if (!first)
            out += ',';
        first = false;
        out += "{\"id\":";
        append_json_string(out, row.id);
        out += ",\"description\":";
        append_json_string(out, row.description);
        out += ",\"computed\":";
        out += format_scientific(row.computed);
        out += ",\"paper_value\":";
        out += row.paper_value ? format_scientific(*row.paper_value) : std::string("null");
        out += ",\"unit\":";
        append_json_string(out, row.unit);
        out += ",\"rel_dev\":";
        out += row.rel_dev ? format_scientific(*row.rel_dev) : std::string("null");
        out += ",\"status\":";
        append_json_string(out, to_string(row.status));
        out += '}';
    }
    out += "]}";
    return out;
}

} // namespace qclimit::report
