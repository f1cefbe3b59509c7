#include "qclimit/constants.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numbers>
#include <utility>
#include <vector>

#include "qclimit/errors.hpp"

namespace qclimit::constants {

namespace {

struct FieldEntry {
    const char* name;
    double PhysicalConstants::* member;
};

// Declaration order; also the hashing order of fingerprint().
const std::vector<FieldEntry>& field_table() {
    static const std::vector<FieldEntry> table = {
        {"hbar", &PhysicalConstants::hbar},
        {"h", &PhysicalConstants::h},
        {"G", &PhysicalConstants::G},
        {"c_light", &PhysicalConstants::c_light},
        {"k_B", &PhysicalConstants::k_B},
        {"eV", &PhysicalConstants::eV},
        {"M_earth", &PhysicalConstants::M_earth},
        {"M_sun", &PhysicalConstants::M_sun},
        {"M_jupiter", &PhysicalConstants::M_jupiter},
        {"r_SJ", &PhysicalConstants::r_SJ},
        {"AU", &PhysicalConstants::AU},
        {"v_earth", &PhysicalConstants::v_earth},
    };
    return table;
}

std::string trim(const std::string& s) {
    size_t begin = 0;
    size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
        --end;
    return s.substr(begin, end - begin);
}

double parse_value(const std::string& text, int lineno) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || end != begin + text.size())
        throw validation_error("constants override line " + std::to_string(lineno) +
                               ": cannot parse value '" + text + "'");
    return value;
}

} // namespace

PhysicalConstants default_constants() {
    PhysicalConstants c{};
    c.hbar = 1.0546e-34;
    c.h = 2.0 * std::numbers::pi * c.hbar;
    c.G = 6.674e-11;
    c.c_light = 2.99792458e8;
    c.k_B = 1.380649e-23;
    c.eV = 1.602176634e-19;
    c.M_earth = 5.972e24;
    c.M_sun = 1.989e30;
    c.M_jupiter = 1.898e27;
    c.r_SJ = 7.88e11;
    c.AU = 1.496e11;
    c.v_earth = 2.978e4;
    return c;
}

PhysicalConstants load_overrides(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw configuration_error("cannot open constants override file: " + path);

    PhysicalConstants c = default_constants();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw validation_error("constants override line " + std::to_string(lineno) +
                                   ": expected key=value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value_text = trim(stripped.substr(eq + 1));

        double PhysicalConstants::* member = nullptr;
        for (const auto& entry : field_table()) {
            if (key == entry.name) {
                member = entry.member;
                break;
            }
        }
        if (member == nullptr)
            throw validation_error("constants override line " + std::to_string(lineno) +
                                   ": unknown constant '" + key + "'");
        c.*member = parse_value(value_text, lineno);
    }
    validate(c);
    return c;
}

void validate(const PhysicalConstants& c) {
    for (const auto& entry : field_table()) {
        const double value = c.*(entry.member);
        if (!(value > 0.0))
            throw validation_error(std::string("constant '") + entry.name +
                                   "' must be strictly positive");
    }
    const double two_pi_hbar = 2.0 * std::numbers::pi * c.hbar;
    if (std::abs(c.h - two_pi_hbar) > 1e-12 * c.h)
        throw validation_error("constants must satisfy h = 2*pi*hbar to relative 1e-12");
}

std::string fingerprint(const PhysicalConstants& c) {
    std::uint64_t hash = 1469598103934665603ull;
    for (const auto& entry : field_table()) {
        const double value = c.*(entry.member);
        std::uint64_t bits = 0;
        std::memcpy(&bits, &value, sizeof(bits));
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (bits >> (8 * byte)) & 0xffu;
            hash *= 1099511628211ull;
        }
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xfu];
        hash >>= 4;
    }
    return out;
}

} // namespace qclimit::constants
