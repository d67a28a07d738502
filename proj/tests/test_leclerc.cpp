#include "doctest.h"

#include <set>

#include "aslw/errors.hpp"
#include "aslw/sl_table.hpp"

using namespace aslw;

namespace {

SLTable make(const std::string& name, const std::string& order_s, int depth) {
  FiniteRootSystem sys = build_system(name);
  LetterOrder order = LetterOrder::from_string(order_s, sys.n_letters());
  return generate_up_to_delta(sys, order, depth);
}

std::string rw(const SLTable& t, const AffineCoeffs& c) {
  return to_string_compact(t.real_word(c));
}

std::string iw(const SLTable& t, int k, int i) {
  return to_string_compact(t.imaginary_word(k, i));
}

}  // namespace

TEST_SUITE("leclerc") {

TEST_CASE("A1 order 0<1: all words to depth 3") {
  SLTable t = make("A1", "0,1", 3);
  CHECK(rw(t, {0, 1}) == "1");
  CHECK(rw(t, {1, 0}) == "0");
  CHECK(iw(t, 1, 1) == "01");
  CHECK(rw(t, {1, 2}) == "011");
  CHECK(rw(t, {2, 1}) == "001");
  CHECK(iw(t, 2, 1) == "0011");
  CHECK(rw(t, {2, 3}) == "01011");
  CHECK(rw(t, {3, 2}) == "00101");
  CHECK(iw(t, 3, 1) == "001011");
}

TEST_CASE("C2 order 0<1<2: level-one words and the increasing alpha_0 pattern") {
  SLTable t = make("C2", "0,1,2", 8);
  CHECK(rw(t, {0, 2, 1}) == "112");
  CHECK(rw(t, {1, 1, 1}) == "012");
  CHECK(rw(t, {1, 2, 0}) == "011");
  CHECK(iw(t, 1, 1) == "0121");
  CHECK(iw(t, 1, 2) == "0112");
  CHECK(rw(t, {2, 2, 1}) == "01012");  // alpha_0 + delta

  // SL(alpha_0 + k delta) = 011 (0121)^{k-2} 012012 for k >= 2
  for (int k = 2; k <= 6; ++k) {
    std::string want = "011";
    for (int j = 0; j < k - 2; ++j) want += "0121";
    want += "012012";
    AffineCoeffs deg{1 + static_cast<int64_t>(k), 2 * static_cast<int64_t>(k),
                     static_cast<int64_t>(k)};
    CHECK(rw(t, deg) == want);
  }
}

TEST_CASE("G2 order 1<2<0: deep word over eight deltas") {
  SLTable t = make("G2", "1,2,0", 9);
  AffineCoeffs deg{9, 16, 24};  // 8 delta + alpha_0
  CHECK(rw(t, deg) == "1222101222102122210101222101222102122210101222102");
  CHECK(t.real_word(deg).size() == 49);
}

TEST_CASE("F4 order 0<2<4<1<3: counterexample chain ground words") {
  SLTable t = make("F4", "0,2,4,1,3", 2);
  CHECK(rw(t, {0, 1, 1, 2, 2}) == "233144");
  CHECK(iw(t, 1, 1) == "012334423312");
  CHECK(rw(t, {1, 3, 4, 6, 4}) == "012334423312342314");  // alpha + delta
}

TEST_CASE("A-type spot words") {
  SLTable a3 = make("A3", "1,2,3,0", 2);
  CHECK(rw(a3, {2, 1, 1, 1}) == "10230");

  SLTable a2 = make("A2", "1,2,0", 2);
  CHECK(iw(a2, 1, 1) == "102");
  CHECK(rw(a2, {1, 2, 2}) == "12102");
}

TEST_CASE("D5 natural order: highest-root chain ground word") {
  SLTable t = make("D5", "0,1,2,3,4,5", 2);
  CHECK(rw(t, {0, 1, 2, 2, 1, 1}) == "1235432");
}

TEST_CASE("every real word is Lyndon with the right degree and reverse lookup") {
  SLTable t = make("B3", "0,2,1,3", 4);
  for (const auto& [deg, w] : t.real_words) {
    CHECK(is_lyndon(w));
    CHECK(degree(w, t.sys.n_letters()) == deg);
    auto back = t.lookup_word(w);
    REQUIRE(back.has_value());
    CHECK(back->coords == deg);
    CHECK(!back->imaginary_index.has_value());
  }
  for (int k = 1; k <= t.depth; ++k)
    for (int i = 1; i <= t.n(); ++i) {
      const Word& w = t.imaginary_word(k, i);
      CHECK(is_lyndon(w));
      CHECK(degree(w, t.sys.n_letters()) == add_delta(t.sys, AffineCoeffs(t.sys.n_letters(), 0), k));
      auto back = t.lookup_word(w);
      REQUIRE(back.has_value());
      CHECK(back->imaginary_index == i);
    }
}

TEST_CASE("imaginary layer words strictly decrease in the layer index") {
  SLTable t = make("D4", "0,1,2,3,4", 3);
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i < t.n(); ++i)
      CHECK(t.imaginary_word(k, i) > t.imaginary_word(k, i + 1));
}

TEST_CASE("generation is deterministic and ensure_depth preserves shallow words") {
  SLTable a = make("C3", "0,2,1,3", 2);
  SLTable b = make("C3", "0,2,1,3", 4);
  ensure_depth(a, 4);
  CHECK(a.depth == 4);
  CHECK(a.real_words == b.real_words);
  REQUIRE(a.imaginary_words.size() == b.imaginary_words.size());
  for (size_t k = 0; k < a.imaginary_words.size(); ++k)
    CHECK(a.imaginary_words[k] == b.imaginary_words[k]);
  CHECK(a.directions == b.directions);
}

TEST_CASE("depth cap is enforced") {
  SLTable t = make("A2", "0,1,2", 1);
  CHECK_THROWS_AS(ensure_depth(t, SLTable::depth_cap + 1), resource_error);
}

TEST_CASE("sl and sl_all agree with the stored table") {
  SLTable t = make("G2", "0,1,2", 3);
  AffineCoeffs theta{0, 2, 3};
  CHECK(sl(t, make_extended(t, theta)) == t.real_word(theta));
  auto layer = sl_all(t, delta_coords(t.sys));
  REQUIRE(layer.size() == 2);
  CHECK(layer[0] == t.imaginary_word(1, 1));
  CHECK(layer[1] == t.imaginary_word(1, 2));
  auto single = sl_all(t, theta);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == t.real_word(theta));
}

TEST_CASE("extended-root comparison orders by word and never ties") {
  SLTable t = make("C2", "0,1,2", 2);
  ExtendedRoot d1 = make_extended(t, delta_coords(t.sys), 1);
  ExtendedRoot d2 = make_extended(t, delta_coords(t.sys), 2);
  CHECK(compare_extended(t, d1, d2) > 0);  // SL_1 > SL_2
  CHECK(compare_extended(t, d1, d1) == 0);
  ExtendedRoot th = make_extended(t, AffineCoeffs{0, 2, 1});
  CHECK(compare_extended(t, th, d1) != 0);
}

TEST_CASE("standard bisection of a table word has nonzero bracket") {
  SLTable t = make("A2", "0,1,2", 2);
  Word th = t.real_word({0, 1, 1});
  auto [l, r] = standard_factorization(th);
  auto lr = t.lookup_word(l);
  auto rr = t.lookup_word(r);
  REQUIRE(lr.has_value());
  REQUIRE(rr.has_value());
  CHECK(bracket_nonzero(t, *lr, *rr));
}

TEST_CASE("cache round trip reproduces the table bit for bit") {
  SLTable t = make("B2", "0,2,1", 3);
  std::string js = cache_to_json(t);
  LetterOrder order = LetterOrder::from_string("0,2,1", 3);
  auto back = table_from_cache_json(js, t.sys, order);
  REQUIRE(back.has_value());
  CHECK(back->depth == t.depth);
  CHECK(back->real_words == t.real_words);
  REQUIRE(back->imaginary_words.size() == t.imaginary_words.size());
  for (size_t k = 0; k < t.imaginary_words.size(); ++k)
    CHECK(back->imaginary_words[k] == t.imaginary_words[k]);
  CHECK(back->directions == t.directions);
  CHECK(cache_to_json(*back) == js);

  // a cache for one order must not load for another
  LetterOrder other = LetterOrder::from_string("1,2,0", 3);
  CHECK(!table_from_cache_json(js, t.sys, other).has_value());
  CHECK(!table_from_cache_json("{", t.sys, order).has_value());
}

}  // TEST_SUITE
