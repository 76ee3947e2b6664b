#include "c2charge/crystal_strings.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace c2c {

std::string to_string(Str4 s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," +
         std::to_string(s.c) + "," + std::to_string(s.d) + ")";
}

Str4 theta12(Str4 t) {
  auto [a, b, c, d] = t;
  return {std::max({d, c - b, b - a}),
          std::max({c, a - 2 * b + 2 * c, a + 2 * d}),
          std::min({b, 2 * b - c + d, a + d}),
          std::min({a, 2 * b - c, c - 2 * d})};
}

Str4 theta21(Str4 t) {
  auto [a, b, c, d] = t;
  return {std::max({d, 2 * c - b, b - 2 * a}),
          std::max({c, a + d, a + 2 * c - b}),
          std::min({b, 2 * b - 2 * c + d, d + 2 * a}),
          std::min({a, c - d, b - c})};
}

bool in_cone(Str4 s, Weight lam) {
  return s.a >= 0 && s.b >= s.c && s.c >= s.d && s.d >= 0 && s.d <= lam.l1 &&
         s.c <= lam.l2 + s.d && s.b <= lam.l1 - 2 * s.d + 2 * s.c &&
         s.a <= lam.l2 + s.d - 2 * s.c + s.b;
}

Weight weight(const Element& el) {
  // lam - (b+d)*a1 - (a+c)*a2
  return el.lam - (el.s.b + el.s.d) * root_vector(RootKind::A1) -
         (el.s.a + el.s.c) * root_vector(RootKind::A2);
}

long long eps2(const Element& el) { return el.s.a; }

long long phi2(const Element& el) {
  return el.lam.l2 + el.s.b + el.s.d - 2 * el.s.c - el.s.a;
}

long long eps1(const Element& el) {
  // first coordinate of str1
  return std::max({el.s.d, 2 * el.s.c - el.s.b, el.s.b - 2 * el.s.a});
}

long long phi1(const Element& el) { return eps1(el) + weight(el).l1; }

std::optional<Element> f2(const Element& el) {
  if (phi2(el) <= 0) return std::nullopt;
  Element r = el;
  ++r.s.a;
  assert(in_cone(r.s, r.lam));
  return r;
}

std::optional<Element> e2(const Element& el) {
  if (el.s.a <= 0) return std::nullopt;
  Element r = el;
  --r.s.a;
  return r;
}

std::optional<Element> f1(const Element& el) {
  if (phi1(el) <= 0) return std::nullopt;
  Str4 t = theta21(el.s);
  ++t.a;
  Element r{el.lam, theta12(t)};
  assert(in_cone(r.s, r.lam));
  return r;
}

std::optional<Element> e1(const Element& el) {
  if (eps1(el) <= 0) return std::nullopt;
  Str4 t = theta21(el.s);
  --t.a;
  Element r{el.lam, theta12(t)};
  assert(in_cone(r.s, r.lam));
  return r;
}

namespace {

Element string_reverse(const Element& el, long long eps, long long phi,
                       std::optional<Element> (*up)(const Element&),
                       std::optional<Element> (*down)(const Element&)) {
  Element cur = el;
  for (long long k = phi; k < eps; ++k) cur = *up(cur);
  for (long long k = eps; k < phi; ++k) cur = *down(cur);
  return cur;
}

}  // namespace

Element s1(const Element& el) { return string_reverse(el, eps1(el), phi1(el), e1, f1); }
Element s2(const Element& el) { return string_reverse(el, eps2(el), phi2(el), e2, f2); }

Element apply_word(const std::vector<int>& gens, Element el) {
  // words act left-to-right as s_{i1}(s_{i2}(... el)); apply rightmost first
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    el = (*it == 1) ? s1(el) : s2(el);
  return el;
}

Element weyl_act(const WeylElement& w, const Element& el) { return apply_word(w.word, el); }

long long eps12(const Element& el) { return eps2(s1(el)); }
long long phi12(const Element& el) { return phi2(s1(el)); }

long long z_function(const Element& el) { return phi1(el) + phi2(el) + phi12(el); }

std::optional<Element> e21_bar(const Element& el) {
  auto [a, b, c, d] = el.s;
  Str4 t;
  if (c == 0 && d == 0)
    t = {a - 1, b - 1, c, d};
  else if (c > 0 && d == 0)
    t = {a - 1, b - 2, c, d + 1};
  else
    t = {a, b, c - 1, d - 1};
  if (!in_cone(t, el.lam)) return std::nullopt;
  return Element{el.lam, t};
}

std::optional<Element> e21_hat_principal(const Element& el) {
  if (weight(el).l1 <= 0) return e21_bar(el);
  auto r = e21_bar(s1(el));
  if (!r) return std::nullopt;
  return s1(*r);
}

Crystal::Crystal(Weight lam) : lam_(lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("Crystal: lam must be dominant");
  for (long long d = 0; d <= lam.l1; ++d)
    for (long long c = d; c <= lam.l2 + d; ++c)
      for (long long b = c; b <= lam.l1 - 2 * d + 2 * c; ++b)
        for (long long a = 0; a <= lam.l2 + d - 2 * c + b; ++a)
          elems_.push_back({a, b, c, d});
  std::sort(elems_.begin(), elems_.end());
  for (size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
}

std::optional<size_t> Crystal::index_of(Str4 s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t Crystal::index_of_required(Str4 s) const {
  auto i = index_of(s);
  if (!i) throw std::logic_error("Crystal: string not in crystal: " + to_string(s));
  return *i;
}

size_t Crystal::highest_index() const { return index_of_required({0, 0, 0, 0}); }

}  // namespace c2c
