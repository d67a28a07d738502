#include "doctest.h"

#include "aslw/chains.hpp"

using namespace aslw;

namespace {

SLTable make(const std::string& name, const std::string& order_s, int depth) {
  FiniteRootSystem sys = build_system(name);
  LetterOrder order = LetterOrder::from_string(order_s, sys.n_letters());
  return generate_up_to_delta(sys, order, depth);
}

}  // namespace

TEST_SUITE("chains") {

TEST_CASE("G2 order 1<2<0: indices, landmarks and statistics") {
  SLTable t = make("G2", "1,2,0", 9);

  AffineCoeffs a1{0, 1, 0};
  CHECK(monotonicity(t, a1) == Monotonicity::increasing);
  CHECK(M1_index(t, a1) == 1);
  CHECK(Mprime1_index(t, a1) == 1);
  CHECK(m1_index(t, a1) == 2);
  CHECK(chain_profile(t, a1).c_alpha == 2);

  CHECK(chain_profile(t, {1, 1, 3}).s == 5);  // delta - alpha_1
  CHECK(u_value(t, {1, 0, 0}) == AffineCoeffs{2, 2, 3});

  ChainInfo info = chain_info(t, add_delta(t.sys, a1, 5));
  CHECK(info.base == a1);
  CHECK(info.k == 5);
  CHECK(info.mono == Monotonicity::increasing);
}

TEST_CASE("G2 order 1<2<0: chunk format of the deep alpha_0 word") {
  SLTable t = make("G2", "1,2,0", 9);
  const Word& w = t.real_word({9, 16, 24});
  auto tokens = to_chunk_format(t, w);
  CHECK(chunk_format_to_string(tokens) ==
        "[[1, 2], '2', [1, 1], '10', [1, 2], '2', [1, 1], '10', [1, 1], '2']");
  CHECK(chunk_format_reassemble(t, tokens) == w);
}

TEST_CASE("G2 order 0<1<2: increasing statistics") {
  SLTable t = make("G2", "0,1,2", 8);
  CHECK(to_string_compact(y_word(t, 2)) == "01221");
  CHECK(chain_profile(t, {1, 0, 0}).c_alpha == 3);
  CHECK(monotonicity(t, {1, 0, 0}) == Monotonicity::increasing);
}

TEST_CASE("C2 order 0<1<2: increasing chain landmarks") {
  SLTable t = make("C2", "0,1,2", 8);
  CHECK(m1_index(t, {1, 0, 0}) == 2);
  CHECK(to_string_compact(y_word(t, 2)) == "011");
  CHECK(monotonicity(t, {1, 0, 0}) == Monotonicity::increasing);
  CHECK(l_value(t, {1, 0, 0}) == AffineCoeffs{3, 4, 2});  // alpha_0 + 2 delta
  const IrrChains& irr = irr_chains(t);
  CHECK(irr.beta[0] == AffineCoeffs{1, 1, 1});  // delta - alpha_1
  CHECK(irr.beta[1] == AffineCoeffs{1, 2, 0});  // delta - alpha_2
  CHECK(irr.M1_index[1] == 1);
}

TEST_CASE("F4 order 0<2<4<1<3: counterexample chain statistics") {
  SLTable t = make("F4", "0,2,4,1,3", 3);
  const IrrChains& irr = irr_chains(t);
  CHECK(irr.M1_index == std::vector<int>{1, 1, 1, 3});
  AffineCoeffs delta = delta_coords(t.sys);
  CHECK(irr.beta[0] == sub(delta, simple_root_affine(t.sys, 2)));
  CHECK(irr.beta[1] == sub(delta, simple_root_affine(t.sys, 1)));
  CHECK(irr.beta[2] == sub(delta, simple_root_affine(t.sys, 3)));
  CHECK(irr.beta[3] == sub(delta, simple_root_affine(t.sys, 4)));

  AffineCoeffs alpha{0, 1, 1, 2, 2};
  ChainProfile p = chain_profile(t, alpha);
  CHECK(p.info.mono == Monotonicity::decreasing);
  CHECK(p.s == 4);
  REQUIRE(p.u_degree.has_value());
  CHECK(*p.u_degree == alpha);
  CHECK(u_value(t, alpha) == alpha);
}

TEST_CASE("D5 natural order: irreducible chain table and listed chunks") {
  SLTable t = make("D5", "0,1,2,3,4,5", 7);
  const IrrChains& irr = irr_chains(t);
  CHECK(irr.M1_index == std::vector<int>{1, 1, 2, 3, 3});
  AffineCoeffs delta = delta_coords(t.sys);
  for (int i = 1; i <= 5; ++i)
    CHECK(irr.beta[i - 1] == sub(delta, simple_root_affine(t.sys, i)));

  AffineCoeffs theta{0, 1, 2, 2, 1, 1};  // delta - alpha_0
  const char* want[6] = {
      "['1235432']",
      "[[1, 1], '2354312']",
      "[[1, 1], '2341', [1, 1], '235']",
      "[[1, 1], '1', [1, 1], '23543', [1, 1], '2']",
      "[[1, 2], '23543', [1, 1], '1', [1, 1], '2']",
      "[[1, 2], '234', [1, 1], '1', [1, 2], '235']",
  };
  for (int k = 0; k <= 5; ++k) {
    const Word& w = t.real_word(add_delta(t.sys, theta, k));
    CHECK(chunk_format_to_string(to_chunk_format(t, w)) == want[k]);
  }
  CHECK(chain_profile(t, theta).s == 3);
}

TEST_CASE("chain_words walks the chain in degree steps") {
  SLTable t = make("A2", "0,1,2", 4);
  auto ws = chain_words(t, {0, 1, 0}, 4);
  REQUIRE(ws.size() == 4);
  for (int k = 0; k < 4; ++k)
    CHECK(ws[k] == t.real_word(add_delta(t.sys, {0, 1, 0}, k)));
}

TEST_CASE("monotone word chains move strictly in one direction") {
  SLTable t = make("B3", "0,1,2,3", 4);
  for (const Coeffs& r : t.sys.positive_roots) {
    AffineCoeffs base(t.sys.n_letters(), 0);
    for (int i = 0; i < t.sys.rank; ++i) base[i + 1] = r[i];
    auto ws = chain_words(t, base, 4);
    bool inc = monotonicity(t, base) == Monotonicity::increasing;
    for (int k = 0; k + 1 < 4; ++k)
      CHECK((inc ? ws[k] < ws[k + 1] : ws[k] > ws[k + 1]));
  }
}

TEST_CASE("v_bound follows the increasing periodicity table") {
  CHECK(v_bound(build_system("A2")) == 1);
  CHECK(v_bound(build_system("A5")) == 1);
  CHECK(v_bound(build_system("D4")) == 1);
  CHECK(v_bound(build_system("B3")) == 2);
  CHECK(v_bound(build_system("C4")) == 2);
  CHECK(v_bound(build_system("E6")) == 2);
  CHECK(v_bound(build_system("E7")) == 2);
  CHECK(v_bound(build_system("F4")) == 2);
  CHECK(v_bound(build_system("E8")) == 3);
  CHECK(v_bound(build_system("G2")) == 3);
}

TEST_CASE("chunk round trip on every table word of a mixed-order cell") {
  SLTable t = make("C3", "0,2,1,3", 5);
  for (const auto& [deg, w] : t.real_words) {
    auto tokens = to_chunk_format(t, w);
    CHECK(chunk_format_reassemble(t, tokens) == w);
  }
  for (int k = 1; k <= t.depth; ++k)
    for (int i = 1; i <= t.n(); ++i) {
      const Word& w = t.imaginary_word(k, i);
      CHECK(chunk_format_reassemble(t, to_chunk_format(t, w)) == w);
    }
}

TEST_CASE("profile fields are mutually consistent") {
  SLTable t = make("D4", "0,2,1,3,4", 5);
  for (const Coeffs& r : t.sys.positive_roots) {
    for (AffineCoeffs base : {[&] {
           AffineCoeffs b(t.sys.n_letters(), 0);
           for (int i = 0; i < t.sys.rank; ++i) b[i + 1] = r[i];
           return b;
         }(),
                              [&] {
                                AffineCoeffs b = delta_coords(t.sys);
                                for (int i = 0; i < t.sys.rank; ++i) b[i + 1] -= r[i];
                                return b;
                              }()}) {
      if (classify(t.sys, base).kind != RootKind::real) continue;
      ChainProfile p = chain_profile(t, base);
      CHECK(p.info.base == base);
      CHECK(p.m1_index >= 1);
      CHECK(p.m1_index <= t.n());
      CHECK(p.M1_index <= p.m1_index);  // M1 word is larger, index is smaller or equal
      CHECK(p.Mprime1_index <= p.M1_index);
      CHECK(p.c_alpha >= 1);
      int64_t relh = 0;
      for (int64_t c : p.coeffs) relh += c < 0 ? -c : c;
      CHECK(p.relative_height == relh);
      if (p.info.mono == Monotonicity::decreasing) {
        CHECK(p.s >= 1);
        CHECK(p.s <= p.f);
        CHECK(p.u_degree.has_value());
        CHECK(!p.l_degree.has_value());
      } else {
        CHECK(p.s == 0);
        CHECK(p.l_degree.has_value());
        CHECK(!p.u_degree.has_value());
      }
    }
  }
}

TEST_CASE("delta subsystem of the full direction set matches the finite system") {
  SLTable t = make("A3", "0,1,2,3", 3);
  DeltaSubsystem full = delta_subsystem(t, t.n());
  CHECK(full.positive_roots.size() == t.sys.positive_roots.size());
  DeltaSubsystem first = delta_subsystem(t, 1);
  CHECK(first.positive_roots.size() == 1);
}

}  // TEST_SUITE
