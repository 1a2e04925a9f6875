#pragma once

#include <map>
#include <string>

#include "rydgate/half_int.hpp"

namespace rydgate {

// One fine-structure level with hyperfine coupling data.
struct LevelData {
    std::string label;
    double energy_offset = 0.0;  // rad/s relative to the species reference
    double hyperfine_A = 0.0;    // magnetic dipole constant, rad/s
    double lifetime = 0.0;       // s
    HalfInt I;
    HalfInt j;
};

// Atomic species data for two-photon Rydberg excitation through a single
// intermediate level: ground -> intermediate -> ns Rydberg series.
struct SpeciesData {
    std::string name;
    HalfInt nuclear_spin;
    double qubit_splitting = 0.0;  // omega_q, rad/s
    LevelData ground;
    LevelData intermediate;
    HalfInt rydberg_j;

    // <intermediate||r||ground>, in meters (sign carried).
    double dipole_ground_intermediate = 0.0;
    // <ns||r||intermediate> = rydberg_dipole_scale / n^{3/2}, in meters.
    double rydberg_dipole_scale = 0.0;
    // Rydberg hyperfine law A(n) = rydberg_hf_coeff / (n - quantum_defect)^3, rad/s.
    double rydberg_hf_coeff = 0.0;
    double quantum_defect = 0.0;
    double rydberg_g_j = 0.0;

    // Non-resonant ground polarizabilities keyed by nominal wavelength in nm,
    // stored in SI units (tabulated data, not recomputed).
    std::map<int, double> ground_polarizability_si;
    // Nominal excitation wavelengths (nm) of the two legs.
    double wavelength1_nm = 0.0;
    double wavelength2_nm = 0.0;

    double rydberg_hf_A(int n) const;          // rad/s
    double ground_polarizability(int nm) const;  // SI; throws on unknown tag
    double field1_omega() const;               // optical angular frequency, rad/s
    double field2_omega() const;
};

// Shift of hyperfine level f from the fine-structure center of mass:
// (A/2) [f(f+1) - I(I+1) - j(j+1)], valid for j = 1/2 manifolds here.
double hyperfine_shift(double A, HalfInt I, HalfInt j, HalfInt f);

// Free-electron (ponderomotive) polarizability -e^2/(m_e omega^2), SI.
double rydberg_nonres_polarizability(double omega);

// Built-in Cs 6s1/2 -> 7p1/2 -> ns1/2 dataset.
SpeciesData cs_species();

// Load a species from a JSON file (schema mirrors cs.json; units are encoded
// in key names). Throws std::runtime_error on schema violations.
SpeciesData load_species(const std::string& path);

}  // namespace rydgate
