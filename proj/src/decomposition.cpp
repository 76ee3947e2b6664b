#include "c2charge/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace c2c {

bool in_principal_preatom(Str4 s, Weight lam) {
  return s.d == 0 || s.d == lam.l1 || s.b == lam.l1 - 2 * s.d + 2 * s.c;
}

Element phi_string(const Element& el) {
  Element r{el.lam + Weight{2, 0}, {el.s.a, el.s.b + 1, el.s.c + 1, el.s.d + 1}};
  assert(in_cone(r.s, r.lam));
  return r;
}

std::optional<Element> phi_string_inverse(const Element& el) {
  if (in_principal_preatom(el.s, el.lam)) return std::nullopt;
  Element r{el.lam - Weight{2, 0}, {el.s.a, el.s.b - 1, el.s.c - 1, el.s.d - 1}};
  assert(in_cone(r.s, r.lam));
  return r;
}

namespace {

void require_principal(const Element& el, const char* who) {
  if (!in_cone(el.s, el.lam) || !in_principal_preatom(el.s, el.lam))
    throw std::invalid_argument(std::string(who) + ": element not in P(lam)");
}

}  // namespace

Element psi(const Element& el) {
  require_principal(el, "psi");
  Str4 s = el.s;
  if (s.d == 0 || s.d == el.lam.l1)
    s = {s.a, s.b + 1, s.c + 1, s.d};
  else
    s = {s.a, s.b, s.c + 1, s.d + 1};
  Element r{el.lam + w2, s};
  assert(in_cone(r.s, r.lam) && in_principal_preatom(r.s, r.lam));
  return r;
}

Element psi_bar(const Element& el) {
  if (weight(el).l1 <= 0) return psi(el);
  return s1(psi(s1(el)));
}

std::optional<Element> psi_inverse(const Element& el) {
  require_principal(el, "psi_inverse");
  Weight src = el.lam - w2;
  if (!is_dominant(src)) return std::nullopt;
  auto [a, b, c, d] = el.s;
  std::optional<Element> found;
  if (d == 0 || d == el.lam.l1) {
    Str4 t{a, b - 1, c - 1, d};
    if (t.b >= 0 && t.c >= 0 && in_cone(t, src) && in_principal_preatom(t, src)) {
      Element cand{src, t};
      if (psi(cand).s == el.s) found = cand;
    }
  }
  if (d - 1 > 0 && d - 1 < el.lam.l1) {
    Str4 t{a, b, c - 1, d - 1};
    if (t.c >= 0 && in_cone(t, src) && in_principal_preatom(t, src)) {
      Element cand{src, t};
      if (psi(cand).s == el.s) {
        if (found) throw std::logic_error("psi_inverse: preimage not unique");
        found = cand;
      }
    }
  }
  return found;
}

std::optional<Element> psi_bar_inverse(const Element& el) {
  if (weight(el).l1 <= 0) return psi_inverse(el);
  auto pre = psi_inverse(s1(el));
  if (!pre) return std::nullopt;
  return s1(*pre);
}

long long at_raw(const Element& el) {
  require_principal(el, "at_raw");
  long long k = 0;
  Element cur = el;
  while (auto pre = psi_bar_inverse(cur)) {
    cur = *pre;
    ++k;
  }
  return k;
}

long long at_closed(const Element& el) {
  require_principal(el, "at_closed");
  Element t = weight(el).l1 <= 0 ? el : s1(el);  // atoms are s1-stable
  auto [a, b, c, d] = t.s;
  long long l1 = t.lam.l1, l2 = t.lam.l2;
  if (d == 0) return std::min(c, l1 + 2 * c - b);
  return l1 + 2 * c - 2 * d - b + std::min(l2 + d - c, d - 1);
}

Decomposition::Decomposition(const Crystal& crystal) : crystal_(&crystal) {
  size_t n = crystal.size();
  pat_.resize(n);
  at_raw_.resize(n);
  at_.resize(n);
  preatom_top_.resize(n);
  zeta_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    Element cur = crystal.element(i);
    long long p = 0;
    while (auto pre = phi_string_inverse(cur)) {
      cur = *pre;
      ++p;
    }
    pat_[i] = p;
    preatom_top_[i] = cur.lam;
    long long raw = c2c::at_raw(cur);
    long long depth = (cur.lam.l1 == 0) ? raw - raw % 2 : raw;
    at_raw_[i] = raw;
    at_[i] = depth;
    zeta_[i] = cur.lam - depth * w2;
    locator_[{p, depth, weight(crystal.element(i))}] = i;
  }
  if (locator_.size() != n) throw std::logic_error("Decomposition: atom weights collide");
}

size_t Decomposition::element_of_weight_in_atom(long long pat, long long at, Weight mu) const {
  auto it = locator_.find({pat, at, mu});
  if (it == locator_.end())
    throw std::invalid_argument("element_of_weight_in_atom: no element of weight " +
                                to_string(mu));
  return it->second;
}

std::map<AtomId, long long> Decomposition::census() const {
  std::map<AtomId, long long> out;
  for (size_t i = 0; i < crystal_->size(); ++i) ++out[atom(i)];
  return out;
}

Element Decomposition::strip_to_principal_atom(size_t i) const {
  Element cur = crystal_->element(i);
  for (long long k = 0; k < pat_[i]; ++k) cur = *phi_string_inverse(cur);
  for (long long k = 0; k < at_[i]; ++k) cur = *psi_bar_inverse(cur);
  assert(cur.lam == zeta_[i]);
  return cur;
}

std::optional<size_t> Decomposition::e21_hat(size_t i) const {
  Element base = strip_to_principal_atom(i);
  auto moved = e21_hat_principal(base);
  if (!moved) return std::nullopt;
  Element cur = *moved;
  for (long long k = 0; k < at_[i]; ++k) cur = psi_bar(cur);
  for (long long k = 0; k < pat_[i]; ++k) cur = phi_string(cur);
  return crystal_->index_of_required(cur.s);
}

long long Decomposition::eps21_hat(size_t i) const {
  Weight mu = weight(crystal_->element(i));
  return phi_hat(RootKind::A21, mu, zeta_[i]) - ell_line_count(mu, RootKind::A21);
}

namespace {

void add_if_dominant(std::map<Weight, long long>& acc, Weight mu) {
  if (is_dominant(mu)) ++acc[mu];
}

}  // namespace

std::map<Weight, long long> character_v1_crystal(const Crystal& crystal) {
  std::map<Weight, long long> out;
  for (size_t i = 0; i < crystal.size(); ++i) add_if_dominant(out, weight(crystal.element(i)));
  return out;
}

std::map<Weight, long long> character_v1_preatom(const Decomposition& dec, long long pat) {
  std::map<Weight, long long> out;
  const Crystal& cr = dec.crystal();
  for (size_t i = 0; i < cr.size(); ++i)
    if (dec.pat(i) == pat) add_if_dominant(out, weight(cr.element(i)));
  return out;
}

std::map<Weight, long long> character_v1_atom(const Decomposition& dec, long long pat,
                                              long long at) {
  std::map<Weight, long long> out;
  const Crystal& cr = dec.crystal();
  for (size_t i = 0; i < cr.size(); ++i)
    if (dec.pat(i) == pat && dec.at(i) == at) add_if_dominant(out, weight(cr.element(i)));
  return out;
}

}  // namespace c2c
