#include "c2charge/kn_tableaux.hpp"

#include "c2charge/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace c2c {

Letter bar(Letter x) {
  switch (x) {
    case Letter::one: return Letter::onebar;
    case Letter::two: return Letter::twobar;
    case Letter::twobar: return Letter::two;
    case Letter::onebar: return Letter::one;
  }
  std::abort();
}

std::string letter_str(Letter x) {
  switch (x) {
    case Letter::one: return "1";
    case Letter::two: return "2";
    case Letter::twobar: return "-2";
    case Letter::onebar: return "-1";
  }
  std::abort();
}

Word word_of(const KNTableau& t) {
  Word w;
  for (size_t j = t.row1.size(); j-- > 0;) {
    w.push_back(t.row1[j]);
    if (j < t.row2.size()) w.push_back(t.row2[j]);
  }
  return w;
}

namespace {

// +1 / -1 / 0 marks for the i-signature.
int mark(int i, Letter x) {
  if (i == 1) {
    if (x == Letter::one || x == Letter::twobar) return +1;
    if (x == Letter::two || x == Letter::onebar) return -1;
    return 0;
  }
  if (x == Letter::two) return +1;
  if (x == Letter::twobar) return -1;
  return 0;
}

// f flips the letter at a surviving '+', e at a surviving '-'.
Letter flip_plus(int i, Letter x) {
  if (i == 2) return Letter::twobar;                       // 2 -> 2b
  return x == Letter::one ? Letter::two : Letter::onebar;  // 1 -> 2, 2b -> 1b
}

Letter flip_minus(int i, Letter x) {
  if (i == 2) return Letter::two;                          // 2b -> 2
  return x == Letter::two ? Letter::one : Letter::twobar;  // 2 -> 1, 1b -> 2b
}

}  // namespace

Signature signature(int i, const Word& w) {
  Signature sig;
  for (size_t p = 0; p < w.size(); ++p) {
    int m = mark(i, w[p]);
    if (m == +1) {
      sig.plus_pos.push_back(p);
    } else if (m == -1) {
      if (!sig.plus_pos.empty())
        sig.plus_pos.pop_back();  // bracket cancellation
      else
        sig.minus_pos.push_back(p);
    }
  }
  sig.r = static_cast<long long>(sig.minus_pos.size());
  sig.s = static_cast<long long>(sig.plus_pos.size());
  return sig;
}

std::optional<Word> f_word(int i, const Word& w) {
  Signature sig = signature(i, w);
  if (sig.s == 0) return std::nullopt;
  Word out = w;
  size_t p = sig.plus_pos.front();
  out[p] = flip_plus(i, out[p]);
  return out;
}

std::optional<Word> e_word(int i, const Word& w) {
  Signature sig = signature(i, w);
  if (sig.r == 0) return std::nullopt;
  Word out = w;
  size_t p = sig.minus_pos.back();
  out[p] = flip_minus(i, out[p]);
  return out;
}

namespace {

// Cell coordinates in word order, parallel to word_of.
std::vector<std::pair<int, size_t>> word_cells(const KNTableau& t) {
  std::vector<std::pair<int, size_t>> cells;
  for (size_t j = t.row1.size(); j-- > 0;) {
    cells.push_back({1, j});
    if (j < t.row2.size()) cells.push_back({2, j});
  }
  return cells;
}

std::optional<KNTableau> apply_at(const KNTableau& t, size_t word_pos, Letter value) {
  auto cells = word_cells(t);
  KNTableau out = t;
  auto [row, col] = cells[word_pos];
  (row == 1 ? out.row1 : out.row2)[col] = value;
  return out;
}

}  // namespace

std::optional<KNTableau> f_tab(int i, const KNTableau& t) {
  Word w = word_of(t);
  Signature sig = signature(i, w);
  if (sig.s == 0) return std::nullopt;
  size_t p = sig.plus_pos.front();
  return apply_at(t, p, flip_plus(i, w[p]));
}

std::optional<KNTableau> e_tab(int i, const KNTableau& t) {
  Word w = word_of(t);
  Signature sig = signature(i, w);
  if (sig.r == 0) return std::nullopt;
  size_t p = sig.minus_pos.back();
  return apply_at(t, p, flip_minus(i, w[p]));
}

bool is_admissible_column(Letter top, Letter bottom) {
  if (letter_rank(top) >= letter_rank(bottom)) return false;
  // only the 1/1b pair lacks a witness t1 < z1
  return !(top == Letter::one && bottom == Letter::onebar);
}

KNTableau split_tableau(const KNTableau& t) {
  KNTableau out;
  for (size_t j = 0; j < t.row1.size(); ++j) {
    if (j < t.row2.size() && t.row1[j] == Letter::two && t.row2[j] == Letter::twobar) {
      out.row1.push_back(Letter::one);
      out.row1.push_back(Letter::two);
      out.row2.push_back(Letter::twobar);
      out.row2.push_back(Letter::onebar);
    } else {
      out.row1.push_back(t.row1[j]);
      out.row1.push_back(t.row1[j]);
      if (j < t.row2.size()) {
        out.row2.push_back(t.row2[j]);
        out.row2.push_back(t.row2[j]);
      }
    }
  }
  return out;
}

bool is_semistandard(const KNTableau& t) {
  if (t.row2.size() > t.row1.size()) return false;
  auto weak = [](const std::vector<Letter>& row) {
    for (size_t j = 1; j < row.size(); ++j)
      if (letter_rank(row[j - 1]) > letter_rank(row[j])) return false;
    return true;
  };
  if (!weak(t.row1) || !weak(t.row2)) return false;
  for (size_t j = 0; j < t.row2.size(); ++j)
    if (letter_rank(t.row1[j]) >= letter_rank(t.row2[j])) return false;
  return true;
}

bool is_kn(const KNTableau& t) {
  if (!is_semistandard(t)) return false;
  for (size_t j = 0; j < t.row2.size(); ++j)
    if (!is_admissible_column(t.row1[j], t.row2[j])) return false;
  return is_semistandard(split_tableau(t));
}

Weight tableau_weight(const KNTableau& t) {
  long long n1 = 0, n1b = 0, n2 = 0, n2b = 0;
  auto count = [&](const std::vector<Letter>& row) {
    for (Letter x : row) {
      if (x == Letter::one) ++n1;
      if (x == Letter::onebar) ++n1b;
      if (x == Letter::two) ++n2;
      if (x == Letter::twobar) ++n2b;
    }
  };
  count(t.row1);
  count(t.row2);
  long long t1 = n1 - n1b, t2 = n2 - n2b;
  return {t1 - t2, t2};
}

KNTableau highest_tableau(Weight lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("highest_tableau: lam must be dominant");
  KNTableau t;
  t.row1.assign(static_cast<size_t>(lam.l1 + lam.l2), Letter::one);
  t.row2.assign(static_cast<size_t>(lam.l2), Letter::two);
  return t;
}

KNTableau phi_tableau(const KNTableau& t) {
  KNTableau out;
  out.row1.push_back(Letter::one);
  out.row1.insert(out.row1.end(), t.row1.begin(), t.row1.end());
  out.row1.push_back(Letter::onebar);
  out.row2 = t.row2;
  for (size_t j = 0; j < out.row2.size(); ++j) {
    if (out.row1[j] == Letter::one && out.row2[j] == Letter::onebar) {
      out.row1[j] = Letter::two;
      out.row2[j] = Letter::twobar;
      break;  // at most one such column can arise
    }
  }
  if (!is_kn(out)) throw std::logic_error("phi_tableau: result is not KN");
  return out;
}

Str4 str2_of_tableau(const KNTableau& t) {
  // peel e2^a e1^b e2^c e1^d back to the highest weight
  auto strip = [](int i, KNTableau cur, long long& n) {
    while (auto up = e_tab(i, cur)) {
      cur = *up;
      ++n;
    }
    return cur;
  };
  Str4 s;
  KNTableau cur = t;
  cur = strip(2, cur, s.a);
  cur = strip(1, cur, s.b);
  cur = strip(2, cur, s.c);
  cur = strip(1, cur, s.d);
  if (e_tab(1, cur) || e_tab(2, cur))
    throw std::logic_error("str2_of_tableau: residue after four strips");
  return s;
}

namespace {

void replace_rightmost(std::vector<Letter>& row, Letter from, Letter to) {
  for (size_t j = row.size(); j-- > 0;)
    if (row[j] == from) {
      row[j] = to;
      return;
    }
  throw std::logic_error("psi_tableau: expected letter not present");
}

bool has_letter(const std::vector<Letter>& row, Letter x) {
  return std::find(row.begin(), row.end(), x) != row.end();
}

}  // namespace

KNTableau psi_tableau(const KNTableau& t, Weight lam) {
  Str4 s = str2_of_tableau(t);
  if (!in_cone(s, lam) || !in_principal_preatom(s, lam))
    throw std::invalid_argument("psi_tableau: tableau not in P(lam)");
  long long dprime = static_cast<long long>(
      std::count(t.row1.begin(), t.row1.end(), Letter::onebar));
  KNTableau out;
  out.row1.push_back(Letter::one);
  out.row1.insert(out.row1.end(), t.row1.begin(), t.row1.end());
  out.row2.push_back(Letter::two);
  out.row2.insert(out.row2.end(), t.row2.begin(), t.row2.end());
  if (dprime == 0 || dprime == lam.l1) {
    bool replaced = false;
    for (size_t j = 0; j < out.row2.size(); ++j) {
      if (out.row1[j] == Letter::two && out.row2[j] == Letter::twobar) {
        out.row2[j] = Letter::onebar;
        replaced = true;
        break;
      }
    }
    if (!replaced) replace_rightmost(out.row1, Letter::one, Letter::two);
    replace_rightmost(out.row2, Letter::two, Letter::twobar);
  } else {
    if (has_letter(out.row1, Letter::two)) {
      replace_rightmost(out.row1, Letter::two, Letter::onebar);
    } else {
      replace_rightmost(out.row1, Letter::twobar, Letter::onebar);
      replace_rightmost(out.row2, Letter::two, Letter::twobar);
    }
  }
  std::sort(out.row1.begin(), out.row1.end());
  std::sort(out.row2.begin(), out.row2.end());
  if (!is_kn(out)) throw std::logic_error("psi_tableau: result is not KN");
  return out;
}

std::string render_row(const std::vector<Letter>& row) {
  std::string out;
  for (size_t j = 0; j < row.size(); ++j) {
    if (j) out += " ";
    out += letter_str(row[j]);
  }
  return out;
}

TableauCrystal::TableauCrystal(Weight lam) : lam_(lam) {
  std::vector<KNTableau> queue{highest_tableau(lam)};
  std::map<KNTableau, bool> seen{{queue[0], true}};
  while (!queue.empty()) {
    KNTableau cur = queue.back();
    queue.pop_back();
    elems_.push_back(cur);
    for (int i : {1, 2}) {
      if (auto nxt = f_tab(i, cur)) {
        if (!seen.count(*nxt)) {
          seen[*nxt] = true;
          queue.push_back(*nxt);
        }
      }
    }
  }
  std::sort(elems_.begin(), elems_.end());
}

std::optional<size_t> TableauCrystal::index_of(const KNTableau& t) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), t);
  if (it == elems_.end() || !(*it == t)) return std::nullopt;
  return static_cast<size_t>(it - elems_.begin());
}

std::vector<size_t> isomorphism(const TableauCrystal& tabs, const Crystal& strings) {
  if (tabs.size() != strings.size())
    throw std::logic_error("isomorphism: cardinalities differ");
  constexpr size_t unset = static_cast<size_t>(-1);
  std::vector<size_t> match(tabs.size(), unset);
  size_t t0 = *tabs.index_of(highest_tableau(tabs.highest_weight()));
  match[t0] = strings.highest_index();
  std::vector<size_t> queue{t0};
  while (!queue.empty()) {
    size_t ti = queue.back();
    queue.pop_back();
    Element sel = strings.element(match[ti]);
    if (tableau_weight(tabs.tableau(ti)) != weight(sel))
      throw std::logic_error("isomorphism: weights disagree");
    for (int i : {1, 2}) {
      auto tn = f_tab(i, tabs.tableau(ti));
      auto sn = (i == 1) ? f1(sel) : f2(sel);
      if (tn.has_value() != sn.has_value())
        throw std::logic_error("isomorphism: operator tables disagree");
      if (!tn) continue;
      size_t tj = *tabs.index_of(*tn);
      size_t sj = strings.index_of_required(sn->s);
      if (match[tj] == unset) {
        match[tj] = sj;
        queue.push_back(tj);
      } else if (match[tj] != sj) {
        throw std::logic_error("isomorphism: inconsistent matching");
      }
    }
  }
  for (size_t v : match)
    if (v == unset) throw std::logic_error("isomorphism: crystal not connected");
  return match;
}

}  // namespace c2c
