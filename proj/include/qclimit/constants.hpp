#pragma once

#include <string>

namespace qclimit::constants {

/// Universal constants and astronomical parameters, SI units throughout.
///
/// Every other module receives its constants through this struct; no
/// physical constant literal appears anywhere else in the library. The
/// values are standard reference data (CODATA-style rounding); h is kept
/// equal to 2*pi*hbar and that relation is enforced by validate().
struct PhysicalConstants {
    double hbar;      ///< reduced Planck constant [J s]
    double h;         ///< Planck constant, 2*pi*hbar [J s]
    double G;         ///< Newtonian constant of gravitation [m^3 kg^-1 s^-2]
    double c_light;   ///< speed of light in vacuum [m s^-1]
    double k_B;       ///< Boltzmann constant [J K^-1]
    double eV;        ///< electron volt [J]
    double M_earth;   ///< mass of the earth [kg]
    double M_sun;     ///< mass of the sun [kg]
    double M_jupiter; ///< mass of jupiter [kg]
    double r_SJ;      ///< mean sun-jupiter distance [m]
    double AU;        ///< astronomical unit [m]
    double v_earth;   ///< mean orbital speed of the earth [m s^-1]
};

/// Built-in reference values.
PhysicalConstants default_constants();

/// Default constants with fields replaced from a flat key=value file.
///
/// Keys must match the field names exactly; lines whose first non-space
/// character is '#' are comments. Unknown keys and non-positive values are
/// rejected with validation_error, a missing file with configuration_error.
PhysicalConstants load_overrides(const std::string& path);

/// Throws validation_error unless all fields are strictly positive and
/// h = 2*pi*hbar to relative 1e-12.
void validate(const PhysicalConstants& c);

/// 64-bit FNV-1a hash of the field bit patterns in declaration order, hex.
std::string fingerprint(const PhysicalConstants& c);

} // namespace qclimit::constants
