#include "c2charge/hecke.hpp"

#include "c2charge/kostka_oracle.hpp"

#include <stdexcept>

namespace c2c {

void he_accumulate(HeckeElement& acc, const HeckeElement& x, const Laurent& coeff) {
  for (const auto& [w, p] : x) {
    Laurent& slot = acc[w];
    slot += p * coeff;
    if (slot.is_zero()) acc.erase(w);
  }
}

bool he_equal(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement diff = a;
  he_accumulate(diff, b, Laurent::monomial(-1, 0));
  return diff.empty();
}

std::map<Weight, long long> specialize_v1(const HeckeElement& x) {
  std::map<Weight, long long> out;
  for (const auto& [w, p] : x) {
    long long v = p.eval_one();
    if (v != 0) out[w] = v;
  }
  return out;
}

std::string he_str(const HeckeElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [w, p] : x) {
    if (!out.empty()) out += "  +  ";
    out += "(" + p.str("v") + ")*H" + to_string(w);
  }
  return out;
}

HeckeElement standard_basis(Weight lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("standard_basis: lam must be dominant");
  return {{lam, Laurent::one()}};
}

HeckeElement kl_basis(Weight lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("kl_basis: lam must be dominant");
  HeckeElement out;
  for (Weight mu : dominant_weights_leq(lam))
    out[mu] = kostka_foulkes(lam, mu).with_doubled_exponents();
  return out;
}

HeckeElement kl_extended(Weight lam) {
  for (const WeylElement& w : weyl_group()) {
    Weight nu = w.apply(lam + rho) - rho;
    if (is_dominant(nu)) {
      // nu dominant <=> nu + rho strictly dominant; singular lam reach no such w
      HeckeElement out;
      he_accumulate(out, kl_basis(nu), Laurent::monomial(w.sign(), 0));
      return out;
    }
  }
  return {};  // lam + rho singular
}

HeckeElement precanonical(int i, Weight lam) {
  if (i < 1 || i > 4) throw std::invalid_argument("precanonical: i must be in 1..4");
  if (!is_dominant(lam)) throw std::invalid_argument("precanonical: lam must be dominant");
  // N^1 is the standard basis itself; the dot-extended subset sum over all
  // four positive roots does not collapse to it in C2, so it is taken as
  // the definition here.
  if (i == 1) return standard_basis(lam);
  // roots of height >= i:  heights a21 = 2, a12 = 3
  std::vector<Weight> tall;
  if (i <= 2) tall.push_back(root_vector(RootKind::A21));
  if (i <= 3) tall.push_back(root_vector(RootKind::A12));
  HeckeElement out;
  size_t subsets = size_t{1} << tall.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    Weight shift{0, 0};
    int bits = 0;
    for (size_t b = 0; b < tall.size(); ++b)
      if (mask & (size_t{1} << b)) {
        shift = shift + tall[b];
        ++bits;
      }
    long long sign = bits % 2 == 0 ? 1 : -1;
    he_accumulate(out, kl_extended(lam - shift), Laurent::monomial(sign, 2 * bits));
  }
  return out;
}

HeckeElement n2_direct(Weight lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("n2_direct: lam must be dominant");
  HeckeElement out;
  for (Weight mu : dominant_weights_leq(lam)) {
    long long exp2 = rho_pairing2(lam - mu);  // 2<rho^, lam-mu>, always even here
    if (exp2 % 2 != 0) throw std::logic_error("n2_direct: odd rho pairing");
    out[mu] = Laurent::monomial(1, exp2);
  }
  return out;
}

HeckeElement n3_tilde(Weight lam) {
  return lam.l1 != 0 ? precanonical(3, lam) : kl_basis(lam);
}

ConversionReport verify_conversions(long long bound) {
  for (Weight lam : dominant_weights_with_height_leq(bound)) {
    HeckeElement lhs1 = kl_basis(lam);
    HeckeElement rhs1;
    for (long long i = 0; 2 * i <= lam.l1; ++i)
      he_accumulate(rhs1, n3_tilde({lam.l1 - 2 * i, lam.l2}), Laurent::monomial(1, 2 * i));
    if (!he_equal(lhs1, rhs1))
      return {false, "Hbar-from-N3~ fails at " + to_string(lam)};

    HeckeElement lhs2 = n3_tilde(lam);
    HeckeElement rhs2;
    if (lam.l1 > 0) {
      for (long long i = 0; i <= lam.l2; ++i)
        he_accumulate(rhs2, precanonical(2, {lam.l1, lam.l2 - i}), Laurent::monomial(1, 2 * i));
    } else {
      for (long long i = 0; 2 * i <= lam.l2; ++i)
        he_accumulate(rhs2, precanonical(2, {0, lam.l2 - 2 * i}), Laurent::monomial(1, 4 * i));
    }
    if (!he_equal(lhs2, rhs2))
      return {false, "N3~-from-N2 fails at " + to_string(lam)};
  }
  return {};
}

}  // namespace c2c
