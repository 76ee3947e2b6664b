#include "c2charge/charge.hpp"

#include <cassert>
#include <stdexcept>

namespace c2c {

ChargeContext::ChargeContext(const Decomposition& dec) : dec_(&dec) {
  // The graphs that feed r_m are Gamma_zeta for atom tops zeta; all of them
  // embed in Gamma_lam', so its stable index bounds every wall that matters.
  m_star_ = graph(crystal().highest_weight()).m_star();
}

const BruhatGraph& ChargeContext::graph(Weight top) const {
  auto it = graphs_.find(top);
  if (it == graphs_.end())
    it = graphs_.emplace(top, std::make_unique<BruhatGraph>(top)).first;
  return *it->second;
}

long long ChargeContext::sigma_m(size_t i, long long m) const {
  Weight mu = weight(crystal().element(i));
  long long a = dec_->at(i);
  long long p = dec_->pat(i);
  Weight lam_pre = dec_->preatom_top(i);
  Weight zeta = dec_->zeta(i);
  const BruhatGraph& g = graph(zeta);
  return ell_m(g, m, mu) - ns_count(g, m, mu) + truncated_staircase(m, mu, lam_pre, a) + a +
         2 * p;
}

long long ChargeContext::r2_m(size_t i, long long m) const {
  Weight top = crystal().highest_weight();
  return -2 * sigma_m(i, m) + rho_pairing2(top);
}

long long ChargeContext::r2_parabolic(size_t i) const {
  Element el = crystal().element(i);
  Weight mu = weight(el);
  return -rho_pairing2(mu) + 2 * phi1(el) - 2 * ell_line_count(mu, RootKind::A1);
}

long long ChargeContext::r2_mv(size_t i) const {
  return -rho_pairing2(weight(crystal().element(i)));
}

long long ChargeContext::charge_atomic(size_t i) const {
  Weight mu = weight(crystal().element(i));
  if (!is_dominant(mu))
    throw std::invalid_argument("charge_atomic: weight must be dominant");
  // c = <lam - mu, rho^> - at - 2*pat; the preatomic number enters doubled,
  // matching r_0 (the single-pat form fails the Kostka-Foulkes equality
  // already at B((2,0))).
  long long doubled = rho_pairing2(crystal().highest_weight() - mu);
  assert(doubled % 2 == 0);
  return doubled / 2 - dec_->at(i) - 2 * dec_->pat(i);
}

long long ChargeContext::charge_eps(size_t i) const {
  Element el = crystal().element(i);
  if (!is_dominant(weight(el)))
    throw std::invalid_argument("charge_eps: weight must be dominant");
  return eps1(el) + eps2(el) + eps12(el) + dec_->eps21_hat(i);
}

bool ChargeContext::swap_applicable(size_t i, long long m) const {
  Weight tmu = weight(crystal().element(i));
  return bruhat_reflection_order(tmu, t_k(m + 1)) == Order::less;
}

long long ChargeContext::swap_elevation(size_t i, long long m) const {
  AffineCoroot t = t_k(m + 1);
  Weight tmu = weight(crystal().element(i));
  if (bruhat_reflection_order(tmu, t) != Order::less)
    throw std::invalid_argument("swap: wt(T) is not t_{m+1}(mu) with mu < t_{m+1}(mu)");
  Weight mu = reflect(t, tmu);
  Weight zeta = dec_->zeta(i);
  assert(dominance_leq(mu, zeta) && dominance_leq(tmu, zeta));
  LabeledEdge e{mu, tmu, t.level, t.kind};
  return elevation(e, zeta);
}

size_t ChargeContext::swap(size_t i, long long m) const {
  long long omega = swap_elevation(i, m);
  Weight mu = reflect(t_k(m + 1), weight(crystal().element(i)));
  return dec_->element_of_weight_in_atom(dec_->pat(i), dec_->at(i) + omega, mu);
}

std::map<Weight, Laurent> ChargeContext::generating_function(long long m) const {
  std::map<Weight, Laurent> out;
  for (size_t i = 0; i < crystal().size(); ++i)
    out[weight(crystal().element(i))] += Laurent::monomial(1, r2_m(i, m));
  return out;
}

Laurent ChargeContext::kostka_via_charge(Weight mu) const {
  if (!is_dominant(mu))
    throw std::invalid_argument("kostka_via_charge: mu must be dominant");
  Laurent out;
  for (size_t i = 0; i < crystal().size(); ++i)
    if (weight(crystal().element(i)) == mu) out += Laurent::monomial(1, charge_atomic(i));
  return out;
}

std::array<long long, 4> ChargeContext::delta_totals(size_t i) const {
  Element el = crystal().element(i);
  Weight mu = weight(el);
  long long d1 = phi1(el) - ell_line_count(mu, RootKind::A1);
  long long d2 = phi2(el) - ell_line_count(mu, RootKind::A2);
  long long d12 = phi12(el) - ell_line_count(mu, RootKind::A12);
  long long d21 = phi_hat(RootKind::A21, mu, dec_->zeta(i)) - ell_line_count(mu, RootKind::A21);
  return {d1, d2, d12, d21};
}

ChargeReport verify_wall_crossing(const ChargeContext& ctx) {
  Weight lam = ctx.crystal().highest_weight();
  long long mstar = ctx.m_star();
  std::map<long long, std::map<Weight, Laurent>> h;
  for (long long m = 0; m <= mstar; ++m) h[m] = ctx.generating_function(m);
  const Laurent vm2 = Laurent::monomial(1, -2);  // v^-2
  for (long long m = 0; m < mstar; ++m) {
    AffineCoroot t = t_k(m + 1);
    for (const Weight& mu : ctx.graph(lam).vertices()) {
      if (bruhat_reflection_order(mu, t) != Order::greater) continue;
      Weight tmu = reflect(t, mu);
      if (!dominance_leq(tmu, lam)) continue;
      if (!(h[m][tmu] == h[m + 1][tmu] * vm2))
        return {false, "v^-2 rule fails at lam=" + to_string(lam) + " m=" + std::to_string(m) +
                           " mu=" + to_string(mu)};
      Laurent expect = h[m + 1][mu] + (Laurent::one() - vm2) * h[m + 1][tmu];
      if (!(h[m][mu] == expect))
        return {false, "mixing rule fails at lam=" + to_string(lam) + " m=" + std::to_string(m) +
                           " mu=" + to_string(mu)};
    }
  }
  return {};
}

ChargeReport phi12_identity_check(long long bound) {
  for (Weight lam : dominant_weights_with_height_leq(bound)) {
    Crystal crystal(lam);
    for (size_t i = 0; i < crystal.size(); ++i) {
      Element el = crystal.element(i);
      if (!in_principal_preatom(el.s, lam)) continue;
      Weight mu = weight(el);
      if (mu.l1 > 0) continue;
      long long a = at_raw(el);  // these identities run on the raw tower depth
      Weight zr = lam - a * w2;
      if (phi2(el) != phi_hat(RootKind::A2, mu, zr))
        return {false, "phi2 identity fails at lam=" + to_string(lam) + " s=" + to_string(el.s)};
      long long expect = phi_hat(RootKind::A12, mu, zr) - ns_count_closed_inf(mu, zr) +
                         truncated_staircase(kInfinity, mu, lam, a);
      if (phi12(el) != expect)
        return {false, "phi12 identity fails at lam=" + to_string(lam) + " s=" + to_string(el.s)};
    }
    // sigma_infinity closed form over the whole crystal
    Decomposition dec(crystal);
    ChargeContext ctx(dec);
    for (size_t i = 0; i < crystal.size(); ++i) {
      Element el = crystal.element(i);
      Weight mu = weight(el);
      long long nice = ell_line_count(mu, RootKind::A1) + phi2(el) + phi12(el) +
                       phi_hat(RootKind::A21, mu, dec.preatom_top(i)) + 2 * dec.pat(i);
      if (ctx.sigma_m(i, kInfinity) != nice)
        return {false, "sigma_inf form fails at lam=" + to_string(lam) + " s=" + to_string(el.s)};
    }
  }
  return {};
}

}  // namespace c2c
