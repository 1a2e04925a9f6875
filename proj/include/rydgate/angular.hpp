#pragma once

#include "rydgate/half_int.hpp"

namespace rydgate::angular {

struct CGKey {
    HalfInt j1, m1, j2, m2, j, m;
};

// Clebsch-Gordan coefficient C^{j,m}_{j1,m1,j2,m2} in the Condon-Shortley
// convention. Evaluated with exact rational arithmetic (Racah's formula),
// rounded to double at the end.
//
// Throws std::domain_error for structurally malformed keys (negative j,
// |m| > j, or j/m parity mismatch). Keys that are well formed but violate
// the selection rules (m != m1+m2, triangle rule) return 0.
double clebsch_gordan(const CGKey& key);
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

// Wigner 6j symbol {a b c; d e f} via the Racah sum with exact factorial
// arithmetic. Ill-formed triads return 0 by convention; never throws.
double six_j(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f);

// Hyperfine recoupling coefficient
//   c_{Ijf}^{j'f'} = (-1)^{1+I+f+j'} sqrt(2f+1) {j I f; f' 1 j'}
// used for dipole couplings between hyperfine levels of j and j' manifolds.
double hf_recoupling(HalfInt I, HalfInt j, HalfInt f, HalfInt j_prime, HalfInt f_prime);

}  // namespace rydgate::angular
