#pragma once

// The C2 root datum in the fundamental-weight basis.
//
// A weight is a pair (l1, l2) meaning l1*w1 + l2*w2 for the fundamental
// weights w1, w2.  Positive roots, written in this basis:
//
//   a1  = (2,-1)      a2  = (-2,2)     (simple; a2 long)
//   a12 = 2a1+a2 = (2,0)   a21 = a1+a2 = (0,1)
//
// Coroot pairings:  <mu,a1^> = mu1, <mu,a2^> = mu2,
//                   <mu,a12^> = mu1+mu2, <mu,a21^> = mu1+2*mu2.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace c2c {

struct Weight {
  long long l1 = 0;
  long long l2 = 0;
  constexpr auto operator<=>(const Weight&) const = default;
};

inline Weight operator+(Weight a, Weight b) { return {a.l1 + b.l1, a.l2 + b.l2}; }
inline Weight operator-(Weight a, Weight b) { return {a.l1 - b.l1, a.l2 - b.l2}; }
inline Weight operator*(long long k, Weight a) { return {k * a.l1, k * a.l2}; }
inline Weight operator-(Weight a) { return {-a.l1, -a.l2}; }

std::string to_string(Weight w);

enum class RootKind { A1, A2, A12, A21 };

constexpr std::array<RootKind, 4> all_root_kinds{RootKind::A1, RootKind::A2,
                                                 RootKind::A12, RootKind::A21};

Weight root_vector(RootKind k);
long long pairing(Weight mu, RootKind coroot);
std::string root_name(RootKind k);

inline bool is_dominant(Weight w) { return w.l1 >= 0 && w.l2 >= 0; }

// Fundamental weights and rho = w1 + w2.
inline constexpr Weight w1{1, 0};
inline constexpr Weight w2{0, 1};
inline constexpr Weight rho{1, 1};

// 2<mu, rho^> = 3*mu1 + 4*mu2 (kept doubled: the pairing itself can be
// half-integral).
inline long long rho_pairing2(Weight mu) { return 3 * mu.l1 + 4 * mu.l2; }

// Floor/ceil division with sign-correct behaviour for negative numerators.
long long floordiv(long long a, long long b);
long long ceildiv(long long a, long long b);

// An affine coroot written as level*delta - kind^.  Edge labels of Bruhat
// graphs and the reflections t_k all take this shape.
struct AffineCoroot {
  long long level = 0;
  RootKind kind = RootKind::A1;
  constexpr auto operator<=>(const AffineCoroot&) const = default;
};

std::string to_string(AffineCoroot t);

// s_{M*delta - b^}(mu) = mu - (<mu,b^> + M) * b
Weight reflect(AffineCoroot t, Weight mu);

enum class Order { less, greater, equal };

// Compares s_t(mu) against mu in the Bruhat order on X.
Order bruhat_reflection_order(Weight mu, AffineCoroot t);

// One of the 8 elements of W as a 2x2 integer matrix on weight coordinates,
// kept with a reduced word in the generators {1,2} and its length.
struct WeylElement {
  std::array<long long, 4> m{1, 0, 0, 1};  // row-major
  std::vector<int> word;                   // generator indices, reduced
  Weight apply(Weight w) const {
    return {m[0] * w.l1 + m[1] * w.l2, m[2] * w.l1 + m[3] * w.l2};
  }
  WeylElement compose(const WeylElement& rhs) const;  // this * rhs
  long long det() const { return m[0] * m[3] - m[1] * m[2]; }
  int length() const { return static_cast<int>(word.size()); }
  long long sign() const { return length() % 2 == 0 ? 1 : -1; }
  bool operator==(const WeylElement& o) const { return m == o.m; }
};

WeylElement weyl_identity();
WeylElement weyl_s1();
WeylElement weyl_s2();
const std::vector<WeylElement>& weyl_group();  // all 8, increasing length

Weight s1_weight(Weight mu);
Weight s2_weight(Weight mu);
Weight dominant_representative(Weight mu);

// mu <= lam in dominance order (lam must be dominant; throws otherwise).
bool dominance_leq(Weight mu, Weight lam);

// Max k with mu - k*a_i <= lam, for i in {A2, A12, A21}.  Requires mu <= lam.
long long phi_hat(RootKind i, Weight mu, Weight lam);

std::vector<Weight> weights_leq(Weight lam);           // sorted
std::vector<Weight> dominant_weights_leq(Weight lam);  // sorted
std::vector<Weight> dominant_weights_with_height_leq(long long bound);

// Number of in-arrows at mu along the beta-line of the untwisted Bruhat
// graph of X: p if p >= 0 else -p-1, where p = <mu, beta^>.
long long ell_line_count(Weight mu, RootKind beta);

}  // namespace c2c
