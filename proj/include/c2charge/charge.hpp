#pragma once

// The statistic layer: sigma_m / r_m for every wall index, swapping
// functions, the charge in both formulations, Delta totals, and the
// generating functions compared against the Kostka-Foulkes oracle.
//
// For T in P(lam) inside B(lam') with mu = wt(T), a the atom depth and
// p = pat(T):
//
//   sigma_m(T) = ell_m(mu, lam - a*w2) - N_m(mu, lam - a*w2)
//                + D_m(mu, lam, a) + a + 2p
//   r_m(T)     = -sigma_m(T) + <lam', rho^>
//
// r_m can be half-integral, so every r here is doubled (r2 = 2*r).

#include "c2charge/bruhat_graphs.hpp"
#include "c2charge/decomposition.hpp"
#include "c2charge/kostka_oracle.hpp"
#include "c2charge/laurent.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>

namespace c2c {

class ChargeContext {
 public:
  explicit ChargeContext(const Decomposition& dec);

  const Crystal& crystal() const { return dec_->crystal(); }
  const Decomposition& decomposition() const { return *dec_; }

  // Stabilization index: beyond it every r_m equals r_infinity.
  long long m_star() const { return m_star_; }

  long long sigma_m(size_t i, long long m) const;  // m >= 0 or kInfinity
  long long r2_m(size_t i, long long m) const;
  long long r2_parabolic(size_t i) const;  // -<rho^,wt> + phi1 - ell^1(wt)
  long long r2_mv(size_t i) const;         // -<rho^,wt>

  // Charge via atomic numbers and via the epsilon formula; both require a
  // dominant weight.
  long long charge_atomic(size_t i) const;
  long long charge_eps(size_t i) const;

  // Swapping function psi_{t mu} at wall index m (reflection t_{m+1});
  // throws unless wt(T) = t_{m+1} mu with mu < t_{m+1} mu.
  bool swap_applicable(size_t i, long long m) const;
  size_t swap(size_t i, long long m) const;
  long long swap_elevation(size_t i, long long m) const;

  // h~_m as weight -> Laurent in v, v-exponent = 2 r_m.
  std::map<Weight, Laurent> generating_function(long long m) const;

  // Sum over B(lam)_mu of q^{c(T)}; mu dominant.
  Laurent kostka_via_charge(Weight mu) const;

  // Delta^1, Delta^2, Delta^12, Delta^21.
  std::array<long long, 4> delta_totals(size_t i) const;

  const BruhatGraph& graph(Weight top) const;  // cached per dominant top

 private:
  const Decomposition* dec_;
  long long m_star_ = 0;
  mutable std::map<Weight, std::unique_ptr<BruhatGraph>> graphs_;
};

struct ChargeReport {
  bool ok = true;
  std::string detail;
};

// Wall-crossing recursions of h~ at every consecutive index pair up to
// m_star, for the crystal bound to ctx.
ChargeReport verify_wall_crossing(const ChargeContext& ctx);

// phi2 / phi12 identities on principal preatoms (wt1 <= 0), plus the
// sigma_infinity closed form, for all dominant tops with l1+l2 <= bound.
ChargeReport phi12_identity_check(long long bound);

}  // namespace c2c
