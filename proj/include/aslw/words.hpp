#pragma once

// Words over the extended alphabet {0,...,n} under an arbitrary total order,
// with the Lyndon toolkit: comparison, Lyndon test, canonical (Chen-Fox-
// Lyndon) factorization, and the standard / costandard bisections.

#include <string>
#include <utility>
#include <vector>

#include "aslw/root_system.hpp"

namespace aslw {

struct LetterOrder {
  std::vector<int> by_rank;  // by_rank[r] = letter whose rank is r (0 = smallest)
  std::vector<int> rank_of;  // rank_of[letter]

  int n_letters() const { return static_cast<int>(by_rank.size()); }
  int smallest() const { return by_rank.front(); }
  static LetterOrder from_permutation(const std::vector<int>& perm);
  static LetterOrder from_string(const std::string& s, int n_letters);
  std::string to_string() const;  // "1,2,0"
  bool operator==(const LetterOrder&) const = default;
};

struct Word {
  std::vector<int> letters;
  const LetterOrder* order = nullptr;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Word prefix(size_t len) const { return {std::vector<int>(letters.begin(), letters.begin() + len), order}; }
  Word suffix(size_t start) const { return {std::vector<int>(letters.begin() + start, letters.end()), order}; }
};

// Lexicographic with proper prefixes smaller; words must share an order.
int compare(const Word& a, const Word& b);
inline bool operator<(const Word& a, const Word& b) { return compare(a, b) < 0; }
inline bool operator>(const Word& a, const Word& b) { return compare(a, b) > 0; }
inline bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
inline bool operator!=(const Word& a, const Word& b) { return a.letters != b.letters; }
inline bool operator<=(const Word& a, const Word& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Word& a, const Word& b) { return compare(a, b) >= 0; }

Word concat(const Word& a, const Word& b);

// Nonempty and strictly smaller than each of its proper suffixes.
bool is_lyndon(const Word& w);

bool is_prefix(const Word& p, const Word& w);
bool is_subword(const Word& p, const Word& w);  // contiguous occurrence

// Duval's algorithm: the unique non-increasing sequence of Lyndon factors.
std::vector<Word> canonical_factorization(const Word& w);

// For Lyndon w of length >= 2: right factor is the smallest proper suffix
// (equivalently the longest proper Lyndon suffix).
std::pair<Word, Word> costandard_factorization(const Word& w);

// For Lyndon w of length >= 2: left factor is the longest proper Lyndon prefix.
std::pair<Word, Word> standard_factorization(const Word& w);

AffineCoeffs degree(const Word& w, int n_letters);

std::string to_string_commas(const Word& w);
std::string to_string_compact(const Word& w);  // valid whenever all letters are single digits
Word word_from_string(const std::string& s, const LetterOrder* order);

}  // namespace aslw
