#include "qclimit/matterwave.hpp"

#include <cmath>

#include "qclimit/errors.hpp"

namespace qclimit::matterwave {

double de_broglie_wavelength(const constants::PhysicalConstants& c, const BeamParticle& b) {
    if (!(b.mass > 0.0 && b.speed > 0.0))
        throw validation_error("de_broglie_wavelength: mass and speed must be positive");
    return c.h / (b.mass * b.speed);
}

double first_maximum_offset(double lambda, const GratingSetup& g) {
    if (!(g.period > 0.0 && g.detector_distance > 0.0))
        throw validation_error("first_maximum_offset: grating geometry must be positive");
    if (!(lambda > 0.0))
        throw validation_error("first_maximum_offset: wavelength must be positive");
    if (!(lambda < g.period))
        throw validation_error(
            "first_maximum_offset: no first-order maximum, wavelength >= grating period");
    return g.detector_distance * std::tan(std::asin(lambda / g.period));
}

double required_grating_period(double lambda, double x1, double detector_distance) {
    if (!(lambda > 0.0 && x1 > 0.0 && detector_distance > 0.0))
        throw validation_error("required_grating_period: all inputs must be positive");
    return lambda / std::sin(std::atan(x1 / detector_distance));
}

LightGratingRequirements light_grating_requirements(const constants::PhysicalConstants& c,
                                                    double period) {
    if (!(period > 0.0))
        throw validation_error("light_grating_requirements: period must be positive");
    LightGratingRequirements out{};
    out.lambda_light = 2.0 * period;
    const double photon_energy = c.h * c.c_light / out.lambda_light;
    out.photon_energy_eV = photon_energy / c.eV;
    out.temperature_K = photon_energy / c.k_B;
    return out;
}

} // namespace qclimit::matterwave
