#include "c2charge/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace c2c {

std::string to_string(Weight w) {
  return "(" + std::to_string(w.l1) + "," + std::to_string(w.l2) + ")";
}

Weight root_vector(RootKind k) {
  switch (k) {
    case RootKind::A1: return {2, -1};
    case RootKind::A2: return {-2, 2};
    case RootKind::A12: return {2, 0};
    case RootKind::A21: return {0, 1};
  }
  std::abort();
}

long long pairing(Weight mu, RootKind coroot) {
  switch (coroot) {
    case RootKind::A1: return mu.l1;
    case RootKind::A2: return mu.l2;
    case RootKind::A12: return mu.l1 + mu.l2;
    case RootKind::A21: return mu.l1 + 2 * mu.l2;
  }
  std::abort();
}

std::string root_name(RootKind k) {
  switch (k) {
    case RootKind::A1: return "a1";
    case RootKind::A2: return "a2";
    case RootKind::A12: return "a12";
    case RootKind::A21: return "a21";
  }
  std::abort();
}

std::string to_string(AffineCoroot t) {
  return std::to_string(t.level) + "d-" + root_name(t.kind) + "v";
}

long long floordiv(long long a, long long b) {
  assert(b > 0);
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

long long ceildiv(long long a, long long b) { return floordiv(a + b - 1, b); }

Weight reflect(AffineCoroot t, Weight mu) {
  long long coeff = pairing(mu, t.kind) + t.level;
  return mu - coeff * root_vector(t.kind);
}

Order bruhat_reflection_order(Weight mu, AffineCoroot t) {
  long long p = pairing(mu, t.kind);
  if (p + t.level == 0) return Order::equal;  // fixed point
  bool less;
  if (t.level <= 0)
    less = p > -t.level;
  else
    less = p < -t.level;
  return less ? Order::less : Order::greater;
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  WeylElement r;
  r.m = {m[0] * rhs.m[0] + m[1] * rhs.m[2], m[0] * rhs.m[1] + m[1] * rhs.m[3],
         m[2] * rhs.m[0] + m[3] * rhs.m[2], m[2] * rhs.m[1] + m[3] * rhs.m[3]};
  r.word = word;
  r.word.insert(r.word.end(), rhs.word.begin(), rhs.word.end());
  return r;
}

WeylElement weyl_identity() { return WeylElement{}; }

WeylElement weyl_s1() {
  WeylElement w;
  w.m = {-1, 0, 1, 1};  // (l1,l2) -> (-l1, l1+l2)
  w.word = {1};
  return w;
}

WeylElement weyl_s2() {
  WeylElement w;
  w.m = {1, 2, 0, -1};  // (l1,l2) -> (l1+2*l2, -l2)
  w.word = {2};
  return w;
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = [] {
    std::vector<WeylElement> out{weyl_identity()};
    const WeylElement gens[2] = {weyl_s1(), weyl_s2()};
    // breadth-first closure; first discovery gives a reduced word
    for (size_t i = 0; i < out.size(); ++i) {
      for (const auto& g : gens) {
        WeylElement next = out[i].compose(g);
        bool seen = false;
        for (const auto& e : out)
          if (e == next) { seen = true; break; }
        if (!seen) out.push_back(next);
      }
    }
    if (out.size() != 8) throw std::logic_error("W should have 8 elements");
    std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
      return a.length() < b.length();
    });
    return out;
  }();
  return group;
}

Weight s1_weight(Weight mu) { return {-mu.l1, mu.l1 + mu.l2}; }
Weight s2_weight(Weight mu) { return {mu.l1 + 2 * mu.l2, -mu.l2}; }

Weight dominant_representative(Weight mu) {
  while (!is_dominant(mu)) {
    if (mu.l1 < 0) mu = s1_weight(mu);
    else mu = s2_weight(mu);
  }
  return mu;
}

bool dominance_leq(Weight mu, Weight lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("dominance_leq: lam must be dominant");
  if (((mu.l1 - lam.l1) % 2) != 0) return false;
  long long b1 = lam.l1 + 2 * lam.l2;  // bound for <.,a1^> and <.,a21^>
  long long b2 = lam.l1 + lam.l2;      // bound for <.,a2^> and <.,a12^>
  return -b1 <= mu.l1 && mu.l1 <= b1 && -b2 <= mu.l1 + mu.l2 && mu.l1 + mu.l2 <= b2 &&
         -b2 <= mu.l2 && mu.l2 <= b2 && -b1 <= mu.l1 + 2 * mu.l2 && mu.l1 + 2 * mu.l2 <= b1;
}

long long phi_hat(RootKind i, Weight mu, Weight lam) {
  if (!dominance_leq(mu, lam)) throw std::invalid_argument("phi_hat: mu must be <= lam");
  long long m1 = mu.l1, m2 = mu.l2, h1 = lam.l1, h2 = lam.l2;
  switch (i) {
    case RootKind::A21:
      return h2 + m2 + std::min({h1, (h1 + m1) / 2, h1 + m1});
    case RootKind::A12:
      return (h1 + m1) / 2 + std::min({h2 + m2, floordiv(h2 + m2, 2), h2});
    case RootKind::A2:
      return (h1 - m1) / 2 + std::min({h2 + m1 + m2, floordiv(h2 + m1 + m2, 2), h2});
    default:
      throw std::invalid_argument("phi_hat: i must be one of {A2, A12, A21}");
  }
}

std::vector<Weight> weights_leq(Weight lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("weights_leq: lam must be dominant");
  std::vector<Weight> out;
  long long b1 = lam.l1 + 2 * lam.l2;
  long long b2 = lam.l1 + lam.l2;
  for (long long x = -b1; x <= b1; ++x)
    for (long long y = -b2; y <= b2; ++y) {
      Weight mu{x, y};
      if (dominance_leq(mu, lam)) out.push_back(mu);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> dominant_weights_leq(Weight lam) {
  std::vector<Weight> out;
  for (Weight mu : weights_leq(lam))
    if (is_dominant(mu)) out.push_back(mu);
  return out;
}

std::vector<Weight> dominant_weights_with_height_leq(long long bound) {
  std::vector<Weight> out;
  for (long long a = 0; a <= bound; ++a)
    for (long long b = 0; a + b <= bound; ++b) out.push_back({a, b});
  return out;
}

long long ell_line_count(Weight mu, RootKind beta) {
  long long p = pairing(mu, beta);
  return p >= 0 ? p : -p - 1;
}

}  // namespace c2c
