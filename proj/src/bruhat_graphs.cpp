#include "c2charge/bruhat_graphs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace c2c {

namespace {

// The phi-hat closed forms of the wall-distance lemma, read as formulas
// (no mu <= lam requirement); used by ell_hat beyond the graph.
long long phi_hat_formula(RootKind i, Weight mu, Weight lam) {
  long long m1 = mu.l1, m2 = mu.l2, h1 = lam.l1, h2 = lam.l2;
  switch (i) {
    case RootKind::A21:
      return h2 + m2 + std::min({h1, floordiv(h1 + m1, 2), h1 + m1});
    case RootKind::A12:
      return floordiv(h1 + m1, 2) + std::min({h2 + m2, floordiv(h2 + m2, 2), h2});
    case RootKind::A2:
      return floordiv(h1 - m1, 2) + std::min({h2 + m1 + m2, floordiv(h2 + m1 + m2, 2), h2});
    default:
      throw std::invalid_argument("phi_hat_formula: bad direction");
  }
}

}  // namespace

AffineCoroot t_k(long long k) {
  if (k < 1) throw std::invalid_argument("t_k: k must be >= 1");
  switch (k % 4) {
    case 1: return {(k + 1) / 2, RootKind::A21};
    case 2: return {(k + 2) / 4, RootKind::A12};
    case 3: return {(k + 1) / 2, RootKind::A21};
    default: return {k / 4, RootKind::A2};
  }
}

std::optional<long long> order_index(AffineCoroot t) {
  if (t.level < 1) return std::nullopt;
  switch (t.kind) {
    case RootKind::A21: return 2 * t.level - 1;
    case RootKind::A12: return 4 * t.level - 2;
    case RootKind::A2: return 4 * t.level;
    default: return std::nullopt;
  }
}

std::optional<long long> order_index(const LabeledEdge& e) {
  return order_index(AffineCoroot{e.level, e.kind});
}

BruhatGraph::BruhatGraph(Weight lam) : lam_(lam) {
  vertices_ = weights_leq(lam);
  incident_.resize(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) {
    for (size_t j = i + 1; j < vertices_.size(); ++j) {
      Weight u = vertices_[i], v = vertices_[j];
      Weight diff = v - u;
      for (RootKind kind : all_root_kinds) {
        Weight vec = root_vector(kind);
        long long k;
        if (vec.l1 != 0) {
          if (diff.l1 % vec.l1 != 0) continue;
          k = diff.l1 / vec.l1;
          if (k * vec.l2 != diff.l2) continue;
        } else {
          if (diff.l1 != 0 || diff.l2 % vec.l2 != 0) continue;
          k = diff.l2 / vec.l2;
        }
        if (k == 0) continue;
        long long sum = pairing(u + v, kind);
        assert(sum % 2 == 0);
        AffineCoroot t{-sum / 2, kind};
        Order ord = bruhat_reflection_order(u, t);
        assert(ord != Order::equal);
        LabeledEdge e;
        e.level = t.level;
        e.kind = kind;
        if (ord == Order::less) {  // s_t(u) = v < u
          e.lower = v;
          e.upper = u;
        } else {
          e.lower = u;
          e.upper = v;
        }
        size_t idx = edges_.size();
        edges_.push_back(e);
        incident_[i].push_back(idx);
        incident_[j].push_back(idx);
        if (auto oi = order_index(e)) m_star_ = std::max(m_star_, *oi);
        break;  // a pair lies on at most one root line
      }
    }
  }
}

const std::vector<size_t>& BruhatGraph::incident(Weight mu) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), mu);
  if (it == vertices_.end() || *it != mu)
    throw std::invalid_argument("BruhatGraph: " + to_string(mu) + " not a vertex");
  return incident_[static_cast<size_t>(it - vertices_.begin())];
}

bool edge_reversed(const LabeledEdge& e, long long m) {
  auto idx = order_index(e);
  if (!idx) return false;
  return m == kInfinity || *idx <= m;
}

std::vector<LabeledEdge> arrows_m(const BruhatGraph& g, long long m, Weight mu) {
  std::vector<LabeledEdge> out;
  for (size_t idx : g.incident(mu)) {
    const LabeledEdge& e = g.edges()[idx];
    bool rev = edge_reversed(e, m);
    if ((e.upper == mu && !rev) || (e.lower == mu && rev)) out.push_back(e);
  }
  return out;
}

long long ell_m(const BruhatGraph& g, long long m, Weight mu) {
  return static_cast<long long>(arrows_m(g, m, mu).size());
}

long long ell_m_dir(const BruhatGraph& g, long long m, Weight mu, RootKind kind) {
  long long n = 0;
  for (const LabeledEdge& e : arrows_m(g, m, mu))
    if (e.kind == kind) ++n;
  return n;
}

bool is_swappable_bruteforce(const BruhatGraph& g, const LabeledEdge& e) {
  auto idx = order_index(e);
  if (!idx) throw std::invalid_argument("is_swappable_bruteforce: edge label not in the order");
  long long m = *idx - 1;
  return ell_m(g, m, e.lower) == ell_m(g, m, e.upper) - 1;
}

bool classify_swappable(const LabeledEdge& e, Weight lam) {
  if (!order_index(e))
    throw std::invalid_argument("classify_swappable: edge label not in the order");
  switch (e.kind) {
    case RootKind::A21:
      return true;
    case RootKind::A12: {
      LabeledEdge mirror{s1_weight(e.lower), s1_weight(e.upper), e.level, RootKind::A2};
      return classify_swappable(mirror, lam);
    }
    case RootKind::A2: {
      Weight mu = e.lower;
      long long M = e.level;
      if (mu.l1 <= 0) return true;
      if (mu.l1 >= lam.l1)
        return mu.l2 >= -lam.l2 + 1 && M <= ceildiv(lam.l2 - mu.l2, 2);
      // 0 < mu1 < lam1
      return M <= (lam.l1 - mu.l1) / 2 + std::max(-mu.l2, ceildiv(lam.l2 - mu.l2, 2));
    }
    default:
      throw std::invalid_argument("classify_swappable: a1 edges are never order-labeled");
  }
}

long long ns_count(const BruhatGraph& g, long long m, Weight mu) {
  if (!dominance_leq(mu, g.lam())) throw std::invalid_argument("ns_count: mu must be <= lam");
  long long cap = (m == kInfinity) ? g.m_star() : std::min(m, g.m_star());
  long long n = 0;
  for (long long k = 1; k <= cap; ++k) {
    AffineCoroot t = t_k(k);
    if (bruhat_reflection_order(mu, t) != Order::greater) continue;
    Weight tmu = reflect(t, mu);
    if (!dominance_leq(tmu, g.lam())) continue;
    LabeledEdge e{mu, tmu, t.level, t.kind};
    if (!is_swappable_bruteforce(g, e)) ++n;
  }
  return n;
}

long long ns_count_inf_formula(Weight mu, Weight lam) {
  if (mu.l1 < 0) return ns_count_inf_formula(s1_weight(mu), lam);
  long long base = phi_hat(RootKind::A2, mu, lam) - std::max(0LL, ceildiv(mu.l2 + lam.l2, 2));
  if (mu.l1 < lam.l1) base += (mu.l1 - lam.l1) / 2;
  return base;
}

long long ns_count_closed_inf(Weight mu, Weight lam) {
  // the raw expression is <= 0 exactly on the "no non-swappable edge"
  // region (mu1 = 0, mu2 >= lam2 or mu1+mu2 <= -lam2), so clamping at zero
  // subsumes the displayed zero branch
  return std::max(0LL, ns_count_inf_formula(mu, lam));
}

long long ns_count_closed_finite(long long m, Weight mu, Weight lam) {
  // mirrored a12-edges of level M sit at order index 4M-2, not 4M
  if (mu.l1 < 0) return ns_count_closed_finite(m + 2, s1_weight(mu), lam);
  if (mu.l1 == 0 || mu.l2 >= lam.l2 || mu.l1 + mu.l2 <= -lam.l2) return 0;
  long long mt = std::min(m / 4, -mu.l2 + phi_hat(RootKind::A2, mu, lam));
  long long v = mt + std::min(mu.l2, floordiv(mu.l2 - lam.l2, 2));
  if (mu.l1 < lam.l1) v += (mu.l1 - lam.l1) / 2;
  return std::max(0LL, v);
}

namespace {

long long edge_multiple(const LabeledEdge& e) {
  // k with upper = lower - k * root_vector(kind)
  Weight vec = root_vector(e.kind);
  Weight diff = e.lower - e.upper;
  long long k = (vec.l1 != 0) ? diff.l1 / vec.l1 : diff.l2 / vec.l2;
  assert(k * vec.l1 == diff.l1 && k * vec.l2 == diff.l2 && k > 0);
  return k;
}

// Validity + swappability of the candidate edge mu -> mu - k*beta in E(top).
enum class EdgeState { absent, swappable, nonswappable, unlabeled };

EdgeState edge_state(Weight mu, long long k, RootKind beta, Weight top) {
  if (!is_dominant(top) || k < 1) return EdgeState::absent;
  Weight nu = mu - k * root_vector(beta);
  if (!dominance_leq(mu, top) || !dominance_leq(nu, top)) return EdgeState::absent;
  long long sum = pairing(mu + nu, beta);
  AffineCoroot t{-sum / 2, beta};
  if (bruhat_reflection_order(mu, t) != Order::greater) return EdgeState::absent;
  LabeledEdge e{mu, nu, t.level, beta};
  if (!order_index(e)) return EdgeState::unlabeled;
  return classify_swappable(e, top) ? EdgeState::swappable : EdgeState::nonswappable;
}

}  // namespace

long long elevation(const LabeledEdge& e, Weight lam) {
  if (!order_index(e)) throw std::invalid_argument("elevation: edge label not in the order");
  long long k = edge_multiple(e);
  for (long long j = 0; j <= k && lam.l2 - j >= 0; ++j) {
    Weight top = lam - j * w2;
    if (j == k) {
      // the staircase bottomed out at n = 0; the empty reduction counts as
      // its swappable base
      if (dominance_leq(e.lower, top)) return j;
      break;
    }
    if (edge_state(e.lower, k - j, e.kind, top) == EdgeState::swappable) return j;
  }
  throw std::logic_error("elevation: no swappable reduction found");
}

long long staircase_hat(long long m, Weight mu, Weight lam) {
  if (!dominance_leq(mu, lam)) throw std::invalid_argument("staircase_hat: mu must be <= lam");
  long long best = 0;
  for (RootKind beta : {RootKind::A2, RootKind::A12}) {
    long long nmax = phi_hat(beta, mu, lam);
    for (long long n = 0; n <= nmax; ++n) {
      if (n > 0 && edge_state(mu, n, beta, lam) != EdgeState::swappable) continue;
      long long a = 0;
      const long long guard = 8 * (lam.l1 + lam.l2 + std::abs(mu.l1) + std::abs(mu.l2)) + 32;
      for (long long i = 1; i <= guard; ++i) {
        if (edge_state(mu, n + i, beta, lam + i * w2) != EdgeState::nonswappable) break;
        if (m != kInfinity) {
          Weight nu = mu - (n + i) * root_vector(beta);
          LabeledEdge e{mu, nu, -pairing(mu + nu, beta) / 2, beta};
          if (auto oi = order_index(e); !oi || *oi > m) break;
        }
        a = i;
      }
      best = std::max(best, a);
    }
  }
  return best;
}

long long staircase_closed_inf(Weight mu, Weight lam) {
  if (mu.l1 == 0) return 0;
  if (mu.l1 < 0) {
    // mirror of the mu1 > 0 case through s1
    long long p = mu.l1 + mu.l2;
    if (-lam.l2 <= p && p <= lam.l2 && ((p - lam.l2) % 2 != 0))
      return std::max(0LL, std::min(lam.l1, -mu.l1) - 1);
    if (p < -lam.l2) return std::max(0LL, std::min(-mu.l1, lam.l1) + lam.l2 + p);
    return 0;
  }
  if (-lam.l2 <= mu.l2 && mu.l2 <= lam.l2 && ((mu.l2 - lam.l2) % 2 != 0))
    return std::max(0LL, std::min(lam.l1, mu.l1) - 1);
  if (mu.l2 < -lam.l2) return std::max(0LL, std::min(mu.l1, lam.l1) + lam.l2 + mu.l2);
  return 0;
}

long long truncated_staircase(long long m, Weight mu, Weight lam, long long k) {
  if (k < 0) throw std::invalid_argument("truncated_staircase: k must be >= 0");
  return std::min(k, staircase_hat(m, mu, lam - k * w2));
}

long long ell_line_m_infinite(long long m, Weight nu, RootKind beta) {
  if (m < 0) throw std::invalid_argument("ell_line_m_infinite: m must be finite");
  long long p = pairing(nu, beta);
  long long bound = std::abs(p) + m + 8;
  long long n = 0;
  for (long long k = -bound; k <= bound; ++k) {
    if (k == 0) continue;
    AffineCoroot t{k - p, beta};
    bool lower_is_other = bruhat_reflection_order(nu, t) == Order::less;
    bool rev = order_index(t) && *order_index(t) <= m;
    // arrow points to nu iff nu is the head after the m-twist
    if (lower_is_other ? !rev : rev) ++n;
  }
  return n;
}

long long ell_hat(const BruhatGraph& g, long long m, Weight mu) {
  if (m < 0) throw std::invalid_argument("ell_hat: m must be finite");
  bool inside = dominance_leq(mu, g.lam());
  auto hat = [&](RootKind i) {
    return inside ? ell_m_dir(g, m, mu, i) : phi_hat_formula(i, mu, g.lam());
  };
  if (mu.l1 >= 0)
    return ell_line_count(mu, RootKind::A1) + ell_line_m_infinite(m, mu, RootKind::A2) +
           hat(RootKind::A21) + hat(RootKind::A12);
  return ell_line_count(mu, RootKind::A1) + ell_line_m_infinite(m, mu, RootKind::A12) +
         hat(RootKind::A21) + hat(RootKind::A2);
}

std::string to_dot(const BruhatGraph& g, std::optional<long long> m) {
  std::string out = "digraph bruhat {\n";
  for (const Weight& v : g.vertices())
    out += "  \"" + to_string(v) + "\";\n";
  std::vector<LabeledEdge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (const LabeledEdge& e : edges) {
    bool rev = m && edge_reversed(e, *m);
    Weight from = rev ? e.upper : e.lower;
    Weight to = rev ? e.lower : e.upper;
    std::string label = to_string(AffineCoroot{e.level, e.kind});
    if (order_index(e)) label += classify_swappable(e, g.lam()) ? " [S]" : " [N]";
    out += "  \"" + to_string(from) + "\" -> \"" + to_string(to) + "\" [label=\"" + label +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace c2c
