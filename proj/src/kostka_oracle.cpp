#include "c2charge/kostka_oracle.hpp"

#include <stdexcept>

namespace c2c {

Laurent q_kostant(EuclideanWeight nu) {
  // nu = a*(1,-1) + b*(0,2) + c*(2,0) + d*(1,1)
  //    = (a + 2c + d, -a + 2b + d)
  Laurent out;
  if (nu.x1 < 0) return out;
  for (long long d = 0; d <= nu.x1; ++d) {
    for (long long c = 0; 2 * c + d <= nu.x1; ++c) {
      long long a = nu.x1 - 2 * c - d;
      long long twob = nu.x2 + a - d;
      if (twob < 0 || twob % 2 != 0) continue;
      long long b = twob / 2;
      out += Laurent::monomial(1, a + b + c + d);
    }
  }
  return out;
}

Laurent kostka_foulkes(Weight lam, Weight mu) {
  if (!is_dominant(lam) || !is_dominant(mu))
    throw std::invalid_argument("kostka_foulkes: weights must be dominant");
  EuclideanWeight target = to_euclid(mu + rho);
  Laurent out;
  for (const WeylElement& w : weyl_group()) {
    EuclideanWeight img = to_euclid(w.apply(lam + rho));
    EuclideanWeight diff{img.x1 - target.x1, img.x2 - target.x2};
    out += q_kostant(diff).scaled(w.sign());
  }
  return out;
}

long long weight_multiplicity(Weight lam, Weight mu) {
  return kostka_foulkes(lam, dominant_representative(mu)).eval_one();
}

long long weyl_dim(Weight lam) {
  return (lam.l1 + 1) * (lam.l2 + 1) * (lam.l1 + lam.l2 + 2) * (lam.l1 + 2 * lam.l2 + 3) / 6;
}

}  // namespace c2c
