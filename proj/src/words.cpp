#include "aslw/words.hpp"

#include <algorithm>
#include <sstream>

#include "aslw/errors.hpp"

namespace aslw {

LetterOrder LetterOrder::from_permutation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  LetterOrder o;
  o.by_rank = perm;
  o.rank_of.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    int letter = perm[r];
    if (letter < 0 || letter >= n || o.rank_of[letter] != -1)
      throw usage_error("order must be a permutation of 0.." + std::to_string(n - 1));
    o.rank_of[letter] = r;
  }
  return o;
}

LetterOrder LetterOrder::from_string(const std::string& s, int n_letters) {
  std::vector<int> perm;
  if (s.find(',') == std::string::npos && static_cast<int>(s.size()) == n_letters) {
    for (char ch : s) {
      require(ch >= '0' && ch <= '9', "letter order has a non-digit letter: " + s);
      perm.push_back(ch - '0');
    }
  } else {
    AffineCoeffs vals = coords_from_string(s, n_letters);
    perm.assign(vals.begin(), vals.end());
  }
  return from_permutation(perm);
}

std::string LetterOrder::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < by_rank.size(); ++i) {
    if (i) os << ',';
    os << by_rank[i];
  }
  return os.str();
}

int compare(const Word& a, const Word& b) {
  require(a.order && a.order == b.order, "compared words must share one letter order");
  const auto& rank = a.order->rank_of;
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ra = rank[a.letters[i]], rb = rank[b.letters[i]];
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

Word concat(const Word& a, const Word& b) {
  require(a.order == b.order || a.empty() || b.empty(), "concatenated words must share one letter order");
  Word out;
  out.order = a.order ? a.order : b.order;
  out.letters.reserve(a.size() + b.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const auto& rank = w.order->rank_of;
  size_t n = w.size();
  for (size_t s = 1; s < n; ++s) {
    // compare w against its suffix starting at s
    size_t i = 0;
    while (s + i < n) {
      int rw = rank[w.letters[i]], rs = rank[w.letters[s + i]];
      if (rw != rs) break;
      ++i;
    }
    if (s + i == n) return false;  // suffix is a prefix of w, hence smaller
    if (rank[w.letters[i]] > rank[w.letters[s + i]]) return false;
  }
  return true;
}

bool is_prefix(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.letters.begin(), p.letters.end(), w.letters.begin());
}

bool is_subword(const Word& p, const Word& w) {
  if (p.empty()) return true;
  if (p.size() > w.size()) return false;
  auto it = std::search(w.letters.begin(), w.letters.end(), p.letters.begin(), p.letters.end());
  return it != w.letters.end();
}

std::vector<Word> canonical_factorization(const Word& w) {
  std::vector<Word> out;
  const auto& rank = w.order->rank_of;
  size_t n = w.size(), i = 0;
  while (i < n) {
    size_t j = i + 1, k = i;
    while (j < n && rank[w.letters[k]] <= rank[w.letters[j]]) {
      if (rank[w.letters[k]] < rank[w.letters[j]])
        k = i;
      else
        ++k;
      ++j;
    }
    size_t len = j - k;
    while (i <= k) {
      out.push_back(w.prefix(0));
      out.back().letters.assign(w.letters.begin() + i, w.letters.begin() + i + len);
      i += len;
    }
  }
  for (const Word& f : out) require(is_lyndon(f), "canonical factor must be Lyndon");
  return out;
}

std::pair<Word, Word> costandard_factorization(const Word& w) {
  require(w.size() >= 2 && is_lyndon(w), "costandard factorization needs a Lyndon word of length >= 2");
  size_t best = 1;
  for (size_t s = 2; s < w.size(); ++s)
    if (compare(w.suffix(s), w.suffix(best)) < 0) best = s;
  Word left = w.prefix(best), right = w.suffix(best);
  require(is_lyndon(left) && is_lyndon(right), "costandard factors must be Lyndon");
  return {left, right};
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  require(w.size() >= 2 && is_lyndon(w), "standard factorization needs a Lyndon word of length >= 2");
  for (size_t len = w.size() - 1; len >= 1; --len) {
    Word left = w.prefix(len);
    if (is_lyndon(left)) {
      Word right = w.suffix(len);
      require(is_lyndon(right), "standard right factor must be Lyndon");
      return {left, right};
    }
  }
  throw internal_error("standard factorization: no Lyndon prefix found");
}

AffineCoeffs degree(const Word& w, int n_letters) {
  AffineCoeffs deg(n_letters, 0);
  for (int letter : w.letters) {
    require(letter >= 0 && letter < n_letters, "letter outside the extended alphabet");
    deg[letter] += 1;
  }
  return deg;
}

std::string to_string_commas(const Word& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w.letters[i];
  }
  return os.str();
}

std::string to_string_compact(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (int letter : w.letters) {
    require(letter >= 0 && letter <= 9, "compact form needs single-digit letters");
    s.push_back(static_cast<char>('0' + letter));
  }
  return s;
}

Word word_from_string(const std::string& s, const LetterOrder* order) {
  Word w;
  w.order = order;
  if (s.empty()) return w;
  if (s.find(',') != std::string::npos) {
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      try {
        w.letters.push_back(std::stoi(piece));
      } catch (const std::exception&) {
        throw usage_error("bad letter: '" + piece + "'");
      }
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw usage_error(std::string("bad letter: '") + c + "'");
      w.letters.push_back(c - '0');
    }
  }
  if (order) {
    for (int letter : w.letters)
      if (letter < 0 || letter >= order->n_letters())
        throw usage_error("letter " + std::to_string(letter) + " outside the extended alphabet");
  }
  return w;
}

}  // namespace aslw
