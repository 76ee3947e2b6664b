#pragma once

// Spherical Hecke algebra of C2 as a Z[v,v^-1]-module: standard basis H,
// Kazhdan-Lusztig basis built from the Kostka-Foulkes oracle via
//
//   Hbar_lam = sum_{mu <= lam dominant} K_{lam,mu}(v^2) * H_mu,
//
// the precanonical bases N^1..N^4 and the positivity-restoring N3~.  Only
// module structure and base change are implemented; no products.

#include "c2charge/laurent.hpp"
#include "c2charge/root_system.hpp"

#include <map>
#include <string>

namespace c2c {

// Standard-basis coordinates of a Hecke element.
using HeckeElement = std::map<Weight, Laurent>;

void he_accumulate(HeckeElement& acc, const HeckeElement& x, const Laurent& coeff);
bool he_equal(const HeckeElement& a, const HeckeElement& b);
std::map<Weight, long long> specialize_v1(const HeckeElement& x);
std::string he_str(const HeckeElement& x);

HeckeElement standard_basis(Weight lam);  // lam dominant
HeckeElement kl_basis(Weight lam);        // lam dominant

// Extension of Hbar to arbitrary lam through the dot action: zero when
// lam + rho is singular, otherwise a sign times a dominant Hbar.
HeckeElement kl_extended(Weight lam);

// N^i_lam = sum over subsets I of the roots of height >= i of
// (-v^2)^{|I|} Hbar_{lam - sum(I)};  i in 1..4.
HeckeElement precanonical(int i, Weight lam);

// Direct form of the atomic basis N^2 (for cross-checks).
HeckeElement n2_direct(Weight lam);

// N3~ : N^3 when lam1 != 0, Hbar when lam1 == 0.
HeckeElement n3_tilde(Weight lam);

struct ConversionReport {
  bool ok = true;
  std::string detail;  // first failing weight when !ok
};

// Both conversion lemmas as exact Laurent identities for all dominant
// weights with lam1 + lam2 <= bound.
ConversionReport verify_conversions(long long bound);

}  // namespace c2c
