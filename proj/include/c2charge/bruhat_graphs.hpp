#pragma once

// Bruhat graphs of dominant weights, the fixed reflection order on
// N(y_infinity), twisted orientations, the swappable-edge classification,
// non-swappable counts, elevation and NS staircases.
//
// The reflection order (period four in M >= 1):
//   t_{4M-3} = (2M-1)d - a21^,  t_{4M-2} = M d - a12^,
//   t_{4M-1} = 2M d - a21^,     t_{4M}   = M d - a2^.
//
// Edges are stored once, undirected with Bruhat polarity (lower -> upper);
// the m-twisted view reverses exactly the edges whose label lies among the
// first m roots of the order.

#include "c2charge/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace c2c {

struct LabeledEdge {
  Weight lower, upper;
  long long level = 0;   // M in M*delta - kind^
  RootKind kind = RootKind::A1;
  constexpr auto operator<=>(const LabeledEdge&) const = default;
};

AffineCoroot t_k(long long k);  // k >= 1

// Position of an affine coroot in the reflection order; nullopt when the
// root is not in N(y_infinity) (a1-direction or level < 1).
std::optional<long long> order_index(AffineCoroot t);
std::optional<long long> order_index(const LabeledEdge& e);

inline constexpr long long kInfinity = -1;  // "m = infinity" marker

class BruhatGraph {
 public:
  explicit BruhatGraph(Weight lam);

  Weight lam() const { return lam_; }
  const std::vector<Weight>& vertices() const { return vertices_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const std::vector<size_t>& incident(Weight mu) const;  // throws if mu not a vertex

  // Largest order index among edge labels (0 when none); every twisted view
  // with m >= this is stable.
  long long m_star() const { return m_star_; }

 private:
  Weight lam_;
  std::vector<Weight> vertices_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<size_t>> incident_;
  long long m_star_ = 0;
};

bool edge_reversed(const LabeledEdge& e, long long m);

// Arrows pointing to mu in the m-twisted graph (m = kInfinity for the
// stable view).  mu must be a vertex.
std::vector<LabeledEdge> arrows_m(const BruhatGraph& g, long long m, Weight mu);
long long ell_m(const BruhatGraph& g, long long m, Weight mu);
long long ell_m_dir(const BruhatGraph& g, long long m, Weight mu, RootKind kind);

// Swappability of an order-labeled edge: brute-force arrow counting against
// the closed-form classification.
bool is_swappable_bruteforce(const BruhatGraph& g, const LabeledEdge& e);
bool classify_swappable(const LabeledEdge& e, Weight lam);

// N_m(mu,lam): edges mu -> t_k mu <= lam, k <= m, not swappable.
long long ns_count(const BruhatGraph& g, long long m, Weight mu);
long long ns_count_closed_inf(Weight mu, Weight lam);
long long ns_count_closed_finite(long long m, Weight mu, Weight lam);
// The stable closed form before clamping at zero; this is the quantity the
// arrow-counting identities balance against (it can dip below zero exactly
// where no alpha2 edge exists at all).
long long ns_count_inf_formula(Weight mu, Weight lam);

// Elevation: least j >= 0 with the j-reduced edge swappable in E(lam - j*w2).
long long elevation(const LabeledEdge& e, Weight lam);

// Longest NS staircase over (mu, lam); labels restricted to N(y_m) for
// finite m.  staircase_closed_inf is Prop-style closed form.
long long staircase_hat(long long m, Weight mu, Weight lam);
long long staircase_closed_inf(Weight mu, Weight lam);

// D_m(mu, lam, k) = min(k, staircase_hat(m, mu, lam - k*w2)).
long long truncated_staircase(long long m, Weight mu, Weight lam, long long k);

// In-arrow count at nu along the beta-line of the m-twisted graph of X.
long long ell_line_m_infinite(long long m, Weight nu, RootKind beta);

// ell-hat of the paper: ell^1(mu) + ell^2_m(mu) + hatted a21/a12 counts,
// with the phi-hat formula replacing counts when mu is not <= lam.
// Mirrored across s1 when mu1 < 0.
long long ell_hat(const BruhatGraph& g, long long m, Weight mu);

// DOT rendering; m = nullopt gives the untwisted orientation.
std::string to_dot(const BruhatGraph& g, std::optional<long long> m);

}  // namespace c2c
