#pragma once

// The crystal B(lam) realized on adapted strings.
//
// The canonical internal form is str2, the adapted string for the reduced
// word s2 s1 s2 s1:  T = f2^a f1^b f2^c f1^d (v_lam).  str1 (word s1 s2 s1 s2)
// appears only transiently inside the theta conversions used by f1/e1.

#include "c2charge/root_system.hpp"

#include <map>
#include <optional>
#include <vector>

namespace c2c {

struct Str4 {
  long long a = 0, b = 0, c = 0, d = 0;
  constexpr auto operator<=>(const Str4&) const = default;
};

std::string to_string(Str4 s);

// Littelmann's piecewise-linear bijections between the two string cones.
Str4 theta12(Str4 str1);  // word s1s2s1s2 -> word s2s1s2s1
Str4 theta21(Str4 str2);  // inverse

// The five str2 inequalities cutting out B(lam).
bool in_cone(Str4 str2, Weight lam);

struct Element {
  Weight lam;  // highest weight of the ambient crystal
  Str4 s;      // str2
  constexpr auto operator<=>(const Element&) const = default;
};

Weight weight(const Element& el);

long long eps1(const Element& el);
long long eps2(const Element& el);
long long phi1(const Element& el);
long long phi2(const Element& el);
long long eps12(const Element& el);
long long phi12(const Element& el);

std::optional<Element> f1(const Element& el);
std::optional<Element> e1(const Element& el);
std::optional<Element> f2(const Element& el);
std::optional<Element> e2(const Element& el);

// s_i acts by reversing the f_i-string.
Element s1(const Element& el);
Element s2(const Element& el);
Element apply_word(const std::vector<int>& gens, Element el);
Element weyl_act(const WeylElement& w, const Element& el);

// Z = phi1 + phi2 + phi12.
long long z_function(const Element& el);

// Case table for the modified lowering-by-a21 operator on the principal
// atom A(lam) inside B(lam); result is checked against the string cone.
std::optional<Element> e21_bar(const Element& el);
std::optional<Element> e21_hat_principal(const Element& el);

class Crystal {
 public:
  explicit Crystal(Weight lam);  // throws unless lam dominant

  Weight highest_weight() const { return lam_; }
  size_t size() const { return elems_.size(); }
  const Str4& str(size_t i) const { return elems_[i]; }
  Element element(size_t i) const { return {lam_, elems_[i]}; }
  std::optional<size_t> index_of(Str4 s) const;
  size_t index_of_required(Str4 s) const;
  size_t highest_index() const;  // index of (0,0,0,0)

 private:
  Weight lam_;
  std::vector<Str4> elems_;  // sorted lexicographically
  std::map<Str4, size_t> index_;
};

}  // namespace c2c
