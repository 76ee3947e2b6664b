#pragma once

// Preatomic and atomic decompositions of B(lam).
//
// Phi : B(lam) -> B(lam + 2*w1) shifts str2 by (0,+1,+1,+1); its image
// complement is the principal preatom P(lam) (all of B(lam) when lam1 <= 1).
// Psi : P(lam) -> P(lam + w2) shifts (a,b+1,c+1,d) when d in {0, lam1} and
// (a,b,c+1,d+1) otherwise; PsiBar is its s1-symmetrized version.
//
// at_raw is the literal PsiBar-tower depth.  The atom an element belongs to
// peels one w2 step per PsiBar when the preatom top has lam1 != 0 and two
// steps (PsiBar^2) when lam1 == 0, so the atom-consistent depth stored in
// AtomId::at is at_raw rounded down to even in the latter case.

#include "c2charge/crystal_strings.hpp"

#include <map>
#include <optional>

namespace c2c {

bool in_principal_preatom(Str4 s, Weight lam);

Element phi_string(const Element& el);                     // into B(lam + 2*w1)
std::optional<Element> phi_string_inverse(const Element& el);

Element psi(const Element& el);      // P(lam) -> P(lam + w2); throws if el not in P(lam)
Element psi_bar(const Element& el);
std::optional<Element> psi_inverse(const Element& el);
std::optional<Element> psi_bar_inverse(const Element& el);

// Max k with el in image(PsiBar^k); el must lie in its principal preatom.
long long at_raw(const Element& el);
// Closed form (wt1 <= 0 directly, s1-transport otherwise).
long long at_closed(const Element& el);

struct AtomId {
  Weight zeta;    // top weight of the atom
  long long at = 0;
  long long pat = 0;
  constexpr auto operator<=>(const AtomId&) const = default;
};

class Decomposition {
 public:
  explicit Decomposition(const Crystal& crystal);

  const Crystal& crystal() const { return *crystal_; }
  long long pat(size_t i) const { return pat_[i]; }
  long long at(size_t i) const { return at_[i]; }          // atom-consistent depth
  long long at_raw(size_t i) const { return at_raw_[i]; }
  Weight preatom_top(size_t i) const { return preatom_top_[i]; }
  AtomId atom(size_t i) const { return {zeta_[i], at_[i], pat_[i]}; }
  Weight zeta(size_t i) const { return zeta_[i]; }

  // The unique element of the given weight in the atom (pat, at).
  size_t element_of_weight_in_atom(long long pat, long long at, Weight mu) const;

  std::map<AtomId, long long> census() const;

  // Phi^-pat then PsiBar^-at; lands in the atom A(zeta) inside B(zeta).
  Element strip_to_principal_atom(size_t i) const;

  // Modified a21 operators transported through the embeddings.
  std::optional<size_t> e21_hat(size_t i) const;
  long long eps21_hat(size_t i) const;  // phi_hat_21(wt, zeta) - ell^21(wt)

 private:
  const Crystal* crystal_;
  std::vector<long long> pat_, at_raw_, at_;
  std::vector<Weight> preatom_top_, zeta_;
  std::map<std::tuple<long long, long long, Weight>, size_t> locator_;
};

// Ungraded characters: dominant-weight multiset of a W-stable subset.
std::map<Weight, long long> character_v1_crystal(const Crystal& crystal);
std::map<Weight, long long> character_v1_preatom(const Decomposition& dec, long long pat);
std::map<Weight, long long> character_v1_atom(const Decomposition& dec, long long pat,
                                              long long at);

}  // namespace c2c
