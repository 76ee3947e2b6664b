#pragma once

// Sparse Laurent polynomials with exact integer coefficients in a single
// variable.  The variable has no identity of its own here; callers track
// whether a value lives in v or in q = v^2.

#include <cstdint>
#include <map>
#include <string>

namespace c2c {

class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent{}; }
  static Laurent one() { return monomial(1, 0); }
  static Laurent monomial(long long coeff, long long exp);

  bool is_zero() const { return terms_.empty(); }
  long long coeff(long long exp) const;
  long long min_exp() const;  // requires non-zero
  long long max_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const = default;

  Laurent shifted(long long dexp) const;       // multiply by var^dexp
  Laurent scaled(long long c) const;
  Laurent with_doubled_exponents() const;      // q -> v^2 substitution
  Laurent with_halved_exponents() const;       // inverse; throws on odd exps
  long long eval_one() const;                  // value at var = 1
  bool all_coeffs_nonnegative() const;

  // "1*q^2 + 1*q^4" style rendering, terms sorted by exponent; "0" if zero.
  std::string str(const std::string& var) const;

  const std::map<long long, long long>& terms() const { return terms_; }

 private:
  std::map<long long, long long> terms_;  // exp -> coeff, never zero
};

}  // namespace c2c
