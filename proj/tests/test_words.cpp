#include "doctest.h"

#include <algorithm>
#include <random>

#include "aslw/words.hpp"

using namespace aslw;

namespace {

Word W(const std::string& s, const LetterOrder& o) { return word_from_string(s, &o); }

// brute force: w is Lyndon iff nonempty and smaller than every proper suffix
bool lyndon_brute(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (compare(w, w.suffix(i)) >= 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("letter order construction and round trip") {
  LetterOrder o = LetterOrder::from_string("2,0,1", 3);
  CHECK(o.by_rank == std::vector<int>{2, 0, 1});
  CHECK(o.rank_of[2] == 0);
  CHECK(o.rank_of[0] == 1);
  CHECK(o.rank_of[1] == 2);
  CHECK(o.smallest() == 2);
  CHECK(o.to_string() == "2,0,1");
  CHECK(LetterOrder::from_string("201", 3) == o);
  CHECK(LetterOrder::from_permutation({2, 0, 1}) == o);
}

TEST_CASE("comparison: lexicographic with proper prefixes smaller") {
  LetterOrder nat = LetterOrder::from_string("0,1", 2);
  CHECK(W("0", nat) < W("01", nat));
  CHECK(W("01", nat) < W("011", nat));
  CHECK(W("0", nat) < W("1", nat));
  CHECK(W("10", nat) > W("011", nat));
  CHECK(compare(W("01", nat), W("01", nat)) == 0);

  LetterOrder rev = LetterOrder::from_string("1,2,0", 3);
  CHECK(W("1", rev) < W("0", rev));
  CHECK(W("2", rev) < W("0", rev));
  CHECK(W("1", rev) < W("10", rev));
  CHECK(W("120", rev) < W("102", rev));  // 2 < 0 at position 1
}

TEST_CASE("lyndon recognition under both orders") {
  LetterOrder nat = LetterOrder::from_string("0,1", 2);
  CHECK(is_lyndon(W("0", nat)));
  CHECK(is_lyndon(W("01", nat)));
  CHECK(is_lyndon(W("0011", nat)));
  CHECK(is_lyndon(W("01011", nat)));
  CHECK(!is_lyndon(W("00", nat)));
  CHECK(!is_lyndon(W("10", nat)));
  CHECK(!is_lyndon(W("0101", nat)));

  LetterOrder ba = LetterOrder::from_string("1,0", 2);
  CHECK(is_lyndon(W("10", ba)));
  CHECK(!is_lyndon(W("01", ba)));
}

TEST_CASE("canonical factorization is the non-increasing Lyndon split") {
  LetterOrder nat = LetterOrder::from_string("0,1", 2);
  auto f = canonical_factorization(W("0101100", nat));
  REQUIRE(f.size() == 3);
  CHECK(to_string_compact(f[0]) == "01011");
  CHECK(to_string_compact(f[1]) == "0");
  CHECK(to_string_compact(f[2]) == "0");

  f = canonical_factorization(W("11010", nat));
  REQUIRE(f.size() == 4);
  CHECK(to_string_compact(f[0]) == "1");
  CHECK(to_string_compact(f[1]) == "1");
  CHECK(to_string_compact(f[2]) == "01");
  CHECK(to_string_compact(f[3]) == "0");
}

TEST_CASE("standard and costandard bisections") {
  LetterOrder nat = LetterOrder::from_string("0,1", 2);
  auto [sl, sr] = standard_factorization(W("0011", nat));
  CHECK(to_string_compact(sl) == "001");
  CHECK(to_string_compact(sr) == "1");
  auto [cl, cr] = costandard_factorization(W("0011", nat));
  CHECK(to_string_compact(cl) == "0");
  CHECK(to_string_compact(cr) == "011");

  // order 2 < 1 < 0
  LetterOrder rev = LetterOrder::from_string("2,1,0", 3);
  auto [cl2, cr2] = costandard_factorization(W("221210", rev));
  CHECK(to_string_compact(cl2) == "2");
  CHECK(to_string_compact(cr2) == "21210");
  auto [sl2, sr2] = standard_factorization(W("221210", rev));
  CHECK(to_string_compact(sl2) == "22121");
  CHECK(to_string_compact(sr2) == "0");
}

TEST_CASE("degree counts letters per alphabet slot") {
  LetterOrder o = LetterOrder::from_string("0,1,2", 3);
  CHECK(degree(W("0121", o), 3) == AffineCoeffs{1, 2, 1});
  CHECK(degree(W("", o), 3) == AffineCoeffs{0, 0, 0});
  CHECK(degree(concat(W("01", o), W("22", o)), 3) == AffineCoeffs{1, 1, 2});
}

TEST_CASE("prefix and subword tests") {
  LetterOrder o = LetterOrder::from_string("0,1,2", 3);
  CHECK(is_prefix(W("01", o), W("012", o)));
  CHECK(is_prefix(W("", o), W("012", o)));
  CHECK(!is_prefix(W("02", o), W("012", o)));
  CHECK(!is_prefix(W("0122", o), W("012", o)));
  CHECK(is_subword(W("12", o), W("012", o)));
  CHECK(is_subword(W("2", o), W("012", o)));
  CHECK(!is_subword(W("20", o), W("012", o)));
}

TEST_CASE("string round trips") {
  LetterOrder o = LetterOrder::from_string("0,2,4,1,3", 5);
  Word w = W("233144", o);
  CHECK(to_string_compact(w) == "233144");
  CHECK(to_string_commas(w) == "2,3,3,1,4,4");
  CHECK(word_from_string(to_string_compact(w), &o) == w);
}

TEST_CASE("randomized agreement with brute-force definitions") {
  std::mt19937 rng(991);
  for (int n_letters : {2, 3}) {
    std::vector<int> perm(n_letters);
    for (int i = 0; i < n_letters; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    LetterOrder o = LetterOrder::from_permutation(perm);
    for (int trial = 0; trial < 3000; ++trial) {
      int len = 1 + static_cast<int>(rng() % 10);
      Word w{{}, &o};
      for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<int>(rng() % n_letters));

      CHECK(is_lyndon(w) == lyndon_brute(w));

      auto f = canonical_factorization(w);
      Word joined{{}, &o};
      for (const Word& p : f) {
        CHECK(is_lyndon(p));
        joined = concat(joined, p);
      }
      CHECK(joined == w);
      for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(compare(f[i], f[i + 1]) >= 0);

      if (is_lyndon(w) && w.size() >= 2) {
        auto [cl, cr] = costandard_factorization(w);
        CHECK(concat(cl, cr) == w);
        CHECK(is_lyndon(cl));
        CHECK(is_lyndon(cr));
        CHECK(cl < cr);
        for (size_t i = 1; i < w.size(); ++i)
          CHECK(compare(cr, w.suffix(i)) <= 0);  // smallest proper suffix

        auto [sl, sr] = standard_factorization(w);
        CHECK(concat(sl, sr) == w);
        CHECK(is_lyndon(sl));
        CHECK(is_lyndon(sr));
        CHECK(sl < sr);
        for (size_t len2 = sl.size() + 1; len2 < w.size(); ++len2)
          CHECK(!is_lyndon(w.prefix(len2)));  // longest proper Lyndon prefix
      }

      // Lyndon concatenation: u < v Lyndon implies uv Lyndon
      int len2 = 1 + static_cast<int>(rng() % 6);
      Word v{{}, &o};
      for (int i = 0; i < len2; ++i) v.letters.push_back(static_cast<int>(rng() % n_letters));
      if (is_lyndon(w) && is_lyndon(v)) {
        const Word& lo = w < v ? w : v;
        const Word& hi = w < v ? v : w;
        if (compare(lo, hi) != 0) CHECK(is_lyndon(concat(lo, hi)));
      }
    }
  }
}

}  // TEST_SUITE
