#pragma once

// Independent ground truth for Kostka-Foulkes polynomials: the q-analog
// Kostant partition function P_q and Lusztig's alternating sum
//
//   K_{lam,mu}(q) = sum_{w in W} (-1)^{l(w)} P_q(w(lam+rho) - (mu+rho)).
//
// Everything here is exact integer arithmetic in the orthogonal basis
// e1, e2 with a1 = e1-e2, a2 = 2*e2.  This module deliberately depends on
// nothing from the crystal or decomposition code.

#include "c2charge/laurent.hpp"
#include "c2charge/root_system.hpp"

namespace c2c {

struct EuclideanWeight {
  long long x1 = 0;
  long long x2 = 0;
  constexpr auto operator<=>(const EuclideanWeight&) const = default;
};

inline EuclideanWeight to_euclid(Weight w) { return {w.l1 + w.l2, w.l2}; }
inline Weight from_euclid(EuclideanWeight e) { return {e.x1 - e.x2, e.x2}; }

// Sum over solutions of nu = a*a1 + b*a2 + c*a12 + d*a21 (all >= 0) of
// q^{a+b+c+d}; zero polynomial when there is no solution.
Laurent q_kostant(EuclideanWeight nu);

// Both weights must be dominant.  Result is a polynomial in q.
Laurent kostka_foulkes(Weight lam, Weight mu);

// dim V(lam)_mu; mu arbitrary (replaced by its dominant representative).
long long weight_multiplicity(Weight lam, Weight mu);

// (l1+1)(l2+1)(l1+l2+2)(l1+2*l2+3)/6
long long weyl_dim(Weight lam);

}  // namespace c2c
