#pragma once

#include "qclimit/constants.hpp"

namespace qclimit::matterwave {

struct GratingSetup {
    double period;               ///< s [m]
    double detector_distance;    ///< d [m]
    double first_maximum_offset; ///< x1 [m]
};

struct BeamParticle {
    double mass;  ///< [kg]
    double speed; ///< [m s^-1]
};

/// lambda = h / (m v).
double de_broglie_wavelength(const constants::PhysicalConstants& c, const BeamParticle& b);

/// x1 = d * tan(asin(lambda/s)); throws when lambda >= s and no first-order
/// maximum exists.
double first_maximum_offset(double lambda, const GratingSetup& g);

/// s = lambda / sin(atan(x1/d)), the exact inverse of the above.
double required_grating_period(double lambda, double x1, double detector_distance);

/// What a standing-light grating of the given period demands of its
/// radiation source.
struct LightGratingRequirements {
    double lambda_light;     ///< 2 s [m]
    double photon_energy_eV; ///< h c / lambda_light, in eV
    double temperature_K;    ///< h c / (lambda_light k_B) [K]
};

LightGratingRequirements light_grating_requirements(const constants::PhysicalConstants& c,
                                                    double period);

} // namespace qclimit::matterwave
