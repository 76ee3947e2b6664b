#include "c2charge/laurent.hpp"

#include <stdexcept>

namespace c2c {

Laurent Laurent::monomial(long long coeff, long long exp) {
  Laurent p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

long long Laurent::coeff(long long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

long long Laurent::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long long Laurent::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto [e, c] : o.terms_) {
    long long& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto [e, c] : o.terms_) {
    long long& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) {
      long long& slot = r.terms_[ea + eb];
      slot += ca * cb;
      if (slot == 0) r.terms_.erase(ea + eb);
    }
  return r;
}

Laurent Laurent::shifted(long long dexp) const {
  Laurent r;
  for (auto [e, c] : terms_) r.terms_[e + dexp] = c;
  return r;
}

Laurent Laurent::scaled(long long k) const {
  Laurent r;
  if (k == 0) return r;
  for (auto [e, c] : terms_) r.terms_[e] = c * k;
  return r;
}

Laurent Laurent::with_doubled_exponents() const {
  Laurent r;
  for (auto [e, c] : terms_) r.terms_[2 * e] = c;
  return r;
}

Laurent Laurent::with_halved_exponents() const {
  Laurent r;
  for (auto [e, c] : terms_) {
    if (e % 2 != 0) throw std::logic_error("with_halved_exponents: odd exponent");
    r.terms_[e / 2] = c;
  }
  return r;
}

long long Laurent::eval_one() const {
  long long s = 0;
  for (auto [e, c] : terms_) s += c;
  return s;
}

bool Laurent::all_coeffs_nonnegative() const {
  for (auto [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string Laurent::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : terms_) {
    if (!first) out += " + ";
    out += std::to_string(c) + "*" + var + "^" + std::to_string(e);
    first = false;
  }
  return out;
}

}  // namespace c2c
