#pragma once

// Kashiwara-Nakashima tableaux for n = 2: two weakly increasing rows over
// the alphabet 1 < 2 < 2b < 1b with strict columns, admissible columns and
// semistandard splitting.  Serves as an independent cross-check of the
// adapted-string model.

#include "c2charge/crystal_strings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace c2c {

enum class Letter : int { one = 0, two = 1, twobar = 2, onebar = 3 };

inline int letter_rank(Letter x) { return static_cast<int>(x); }
Letter bar(Letter x);
std::string letter_str(Letter x);  // "1", "2", "-2", "-1"

using Word = std::vector<Letter>;

struct KNTableau {
  std::vector<Letter> row1, row2;  // row2.size() <= row1.size()
  auto operator<=>(const KNTableau&) const = default;
};

// Right-to-left column reading, each column top to bottom.
Word word_of(const KNTableau& t);

struct Signature {
  long long r = 0, s = 0;                       // reduced pattern (-)^r (+)^s
  std::vector<size_t> minus_pos, plus_pos;      // surviving label positions
};

Signature signature(int i, const Word& w);  // i in {1, 2}

std::optional<Word> f_word(int i, const Word& w);
std::optional<Word> e_word(int i, const Word& w);
std::optional<KNTableau> f_tab(int i, const KNTableau& t);
std::optional<KNTableau> e_tab(int i, const KNTableau& t);

bool is_admissible_column(Letter top, Letter bottom);
KNTableau split_tableau(const KNTableau& t);  // doubled-width split
bool is_semistandard(const KNTableau& t);
bool is_kn(const KNTableau& t);

Weight tableau_weight(const KNTableau& t);
KNTableau highest_tableau(Weight lam);  // shape (lam1+lam2, lam2)

// Crystal embedding B(lam) -> B(lam + 2*w1) on tableaux.
KNTableau phi_tableau(const KNTableau& t);

// The appendix algorithm for Psi on tableaux; t must lie in P(lam).
KNTableau psi_tableau(const KNTableau& t, Weight lam);

// Greedy string extraction along the word s2 s1 s2 s1.
Str4 str2_of_tableau(const KNTableau& t);

std::string render_row(const std::vector<Letter>& row);  // space-separated

class TableauCrystal {
 public:
  explicit TableauCrystal(Weight lam);  // closure of the highest tableau
  Weight highest_weight() const { return lam_; }
  size_t size() const { return elems_.size(); }
  const KNTableau& tableau(size_t i) const { return elems_[i]; }
  std::optional<size_t> index_of(const KNTableau& t) const;

 private:
  Weight lam_;
  std::vector<KNTableau> elems_;  // sorted
};

// The unique crystal isomorphism matching f-paths from the highest weight;
// throws if the operator tables disagree anywhere.
std::vector<size_t> isomorphism(const TableauCrystal& tabs, const Crystal& strings);

}  // namespace c2c
