#include "rydgate/atom_data.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "rydgate/constants.hpp"

namespace rydgate {

namespace kc = constants;

double hyperfine_shift(double A, HalfInt I, HalfInt j, HalfInt f) {
    if (!triangle_ok(I, j, f)) throw std::domain_error("hyperfine_shift: f does not couple I and j");
    auto g = [](HalfInt x) { return x.value() * (x.value() + 1.0); };
    return 0.5 * A * (g(f) - g(I) - g(j));
}

double rydberg_nonres_polarizability(double omega) {
    return -kc::electron_charge * kc::electron_charge / (kc::electron_mass * omega * omega);
}

double SpeciesData::rydberg_hf_A(int n) const {
    const double nstar = n - quantum_defect;
    return rydberg_hf_coeff / (nstar * nstar * nstar);
}

double SpeciesData::ground_polarizability(int nm) const {
    auto it = ground_polarizability_si.find(nm);
    if (it == ground_polarizability_si.end())
        throw std::runtime_error("no tabulated ground polarizability at " + std::to_string(nm) +
                                 " nm");
    return it->second;
}

double SpeciesData::field1_omega() const {
    return kc::two_pi * kc::speed_of_light / (wavelength1_nm * 1e-9);
}

double SpeciesData::field2_omega() const {
    return kc::two_pi * kc::speed_of_light / (wavelength2_nm * 1e-9);
}

SpeciesData cs_species() {
    SpeciesData cs;
    cs.name = "Cs";
    cs.nuclear_spin = HalfInt::from_twice(7);
    cs.qubit_splitting = kc::ghz_to_rad(9.192631770);

    cs.ground.label = "6s1/2";
    cs.ground.I = cs.nuclear_spin;
    cs.ground.j = HalfInt::from_twice(1);
    cs.ground.hyperfine_A = cs.qubit_splitting / 4.0;  // f=3..4 splitting is 4A for I=7/2
    cs.ground.lifetime = 0.0;

    cs.intermediate.label = "7p1/2";
    cs.intermediate.I = cs.nuclear_spin;
    cs.intermediate.j = HalfInt::from_twice(1);
    cs.intermediate.hyperfine_A = kc::mhz_to_rad(94.35);
    cs.intermediate.lifetime = 0.155e-6;

    cs.rydberg_j = HalfInt::from_twice(1);
    cs.dipole_ground_intermediate = -0.276 * kc::bohr_radius;
    cs.rydberg_dipole_scale = -8.08 * kc::bohr_radius;
    cs.rydberg_hf_coeff = kc::mhz_to_rad(13200.0);
    cs.quantum_defect = 4.05;
    cs.rydberg_g_j = kc::electron_g_factor;

    cs.ground_polarizability_si[459] = kc::cm3_to_si(-11.6e-24);
    cs.ground_polarizability_si[1038] = kc::cm3_to_si(189.0e-24);
    cs.wavelength1_nm = 459.0;
    cs.wavelength2_nm = 1038.0;
    return cs;
}

namespace {

using nlohmann::json;

HalfInt half_from_twice_field(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::runtime_error("species file: missing integer field " + key);
    return HalfInt::from_twice(j[key].get<int>());
}

double num(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::runtime_error("species file: missing numeric field " + key);
    return j[key].get<double>();
}

}  // namespace

SpeciesData load_species(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open species file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("species file parse error: " + std::string(e.what()));
    }

    SpeciesData s;
    s.name = j.value("name", "unnamed");
    s.nuclear_spin = half_from_twice_field(j, "nuclear_spin_twice");
    s.qubit_splitting = kc::ghz_to_rad(num(j, "qubit_splitting_GHz"));

    const json& g = j.at("ground");
    s.ground.label = g.value("label", "ground");
    s.ground.I = s.nuclear_spin;
    s.ground.j = half_from_twice_field(g, "j_twice");
    s.ground.hyperfine_A = s.qubit_splitting / 4.0;

    const json& p = j.at("intermediate");
    s.intermediate.label = p.value("label", "intermediate");
    s.intermediate.I = s.nuclear_spin;
    s.intermediate.j = half_from_twice_field(p, "j_twice");
    s.intermediate.hyperfine_A = kc::mhz_to_rad(num(p, "hyperfine_A_MHz"));
    s.intermediate.lifetime = num(p, "lifetime_us") * 1e-6;
    if (s.intermediate.lifetime <= 0.0)
        throw std::runtime_error("species file: intermediate lifetime must be positive");

    const json& r = j.at("rydberg");
    s.rydberg_j = half_from_twice_field(r, "j_twice");
    s.rydberg_dipole_scale = num(r, "dipole_scale_a0") * kc::bohr_radius;
    s.rydberg_hf_coeff = kc::mhz_to_rad(num(r, "hyperfine_coeff_MHz"));
    s.quantum_defect = num(r, "quantum_defect");
    s.rydberg_g_j = r.value("g_j", kc::electron_g_factor);

    s.dipole_ground_intermediate = num(j, "dipole_ground_intermediate_a0") * kc::bohr_radius;
    s.wavelength1_nm = num(j, "wavelength1_nm");
    s.wavelength2_nm = num(j, "wavelength2_nm");

    const json& pol = j.at("ground_polarizability_1e24_cm3");
    for (auto it = pol.begin(); it != pol.end(); ++it) {
        s.ground_polarizability_si[std::stoi(it.key())] =
            kc::cm3_to_si(it.value().get<double>() * 1e-24);
    }
    return s;
}

}  // namespace rydgate
