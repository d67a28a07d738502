#include "aslw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "aslw/errors.hpp"
#include "aslw/words.hpp"

namespace aslw {

namespace {

constexpr int kMaxStoredViolations = 50;

std::string wstr(const Word& w) { return to_string_compact(w); }
std::string dstr(const AffineCoeffs& v) { return coords_to_string(v); }

int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

// Largest k >= 0 with deg + k*delta still inside the generated depth.
int64_t kmax_for(const SLTable& t, const AffineCoeffs& deg) {
  int64_t D = t.sys.delta_height;
  return (static_cast<int64_t>(t.depth) * D - affine_height(deg)) / D;
}

const Word& rw(const SLTable& t, const AffineCoeffs& deg) { return t.real_word(deg); }

Word word_at(SLTable& t, const AffineCoeffs& base, int64_t k) {
  AffineCoeffs deg = add_delta(t.sys, base, k);
  ensure_depth(t, static_cast<int>(ceil_div(affine_height(deg), t.sys.delta_height)));
  return t.real_word(deg);
}

// Lexicographic compare of w against the infinite word head tail tail ...
// Returns <0, 0 never (the bound is infinite), >0 like compare().
int compare_vs_periodic(const Word& w, const Word& head, const Word& tail) {
  const LetterOrder* ord = w.order;
  for (size_t i = 0; i < w.size(); ++i) {
    int bound_letter = i < head.size()
                           ? head.letters[i]
                           : tail.letters[(i - head.size()) % tail.size()];
    int a = ord->rank_of[w.letters[i]], b = ord->rank_of[bound_letter];
    if (a != b) return a < b ? -1 : 1;
  }
  return -1;  // proper prefix of the infinite bound
}

bool starts_with_at(const Word& w, const Word& p, size_t pos) {
  if (pos + p.size() > w.size()) return false;
  for (size_t i = 0; i < p.size(); ++i)
    if (w.letters[pos + i] != p.letters[i]) return false;
  return true;
}

// Greedy alternation of maximal L-runs and L-free literals. The word equals
// L^{runs[0]} lits[0] L^{runs[1]} lits[1] ...; runs[0] may be 0, later runs
// are >= 1, and only the final literal may be empty.
struct RunParse {
  std::vector<int64_t> runs;
  std::vector<Word> lits;
};

RunParse parse_runs(const Word& w, const Word& L) {
  RunParse out;
  size_t pos = 0;
  while (pos < w.size() || out.runs.empty()) {
    int64_t m = 0;
    while (starts_with_at(w, L, pos)) {
      pos += L.size();
      ++m;
    }
    Word lit{{}, w.order};
    while (pos < w.size() && !starts_with_at(w, L, pos)) lit.letters.push_back(w.letters[pos++]);
    out.runs.push_back(m);
    out.lits.push_back(std::move(lit));
    if (pos >= w.size()) break;
  }
  return out;
}

// Segments y L^{q} lit, repeated; nullopt when the word does not start each
// segment with y. Literals stop at the next y occurrence.
struct IncSeg {
  int64_t q = 0;
  Word lit;
};

std::optional<std::vector<IncSeg>> parse_inc(const Word& w, const Word& y, const Word& L) {
  std::vector<IncSeg> out;
  size_t pos = 0;
  while (pos < w.size()) {
    if (!starts_with_at(w, y, pos)) return std::nullopt;
    pos += y.size();
    IncSeg seg;
    while (starts_with_at(w, L, pos)) {
      pos += L.size();
      ++seg.q;
    }
    seg.lit.order = w.order;
    size_t lit_start = pos;
    while (pos < w.size() && !starts_with_at(w, y, pos)) ++pos;
    seg.lit.letters.assign(w.letters.begin() + lit_start, w.letters.begin() + pos);
    out.push_back(std::move(seg));
  }
  if (out.empty()) return std::nullopt;
  return out;
}

Word append_copies(Word acc, const Word& part, int64_t copies) {
  for (int64_t i = 0; i < copies; ++i)
    acc.letters.insert(acc.letters.end(), part.letters.begin(), part.letters.end());
  return acc;
}

// Per-chain summary used across the suites.
struct BaseInfo {
  AffineCoeffs base;
  Coeffs pr;
  Monotonicity mono = Monotonicity::increasing;
  Vec coeffs;
  int m1 = 0, M1 = 0, Mp1 = 0;
  int64_t c_alpha = 0, s = 0, f = 0, relh = 0;
};

struct CellData {
  SLTable table;
  std::string label;
  std::string replay;
  std::vector<BaseInfo> bases;
  std::map<Coeffs, int> base_by_pr;

  bool inc(const BaseInfo& b) const { return b.mono == Monotonicity::increasing; }
};

BaseInfo make_base_info(SLTable& t, const AffineCoeffs& base) {
  const IrrChains& irr = irr_chains(t);
  BaseInfo b;
  b.base = base;
  b.pr = projection(t.sys, base);
  b.mono = monotonicity(t, base);
  b.coeffs = beta_coeffs(t, base);
  b.m1 = m1_index(t, base);
  b.M1 = M1_index(t, base);
  b.Mp1 = Mprime1_index(t, base);
  for (int64_t c : b.coeffs) b.relh += c < 0 ? -c : c;
  b.c_alpha = std::abs(b.coeffs[b.m1 - 1]);
  if (b.mono == Monotonicity::decreasing) {
    for (int j = 0; j < t.sys.rank; ++j)
      if (irr.M1_index[j] == b.Mp1) b.s += -b.coeffs[j];
    for (int k = 0; k < t.sys.rank; ++k) {
      int64_t acc = 0;
      for (int j = 0; j < t.sys.rank; ++j)
        if (irr.beta_pairing[k][j] != 0) acc += -b.coeffs[j];
      b.f = std::max(b.f, acc);
    }
  }
  return b;
}

CellData make_cell(const CellSpec& spec) {
  CellData cd;
  FiniteRootSystem sys = build_system(spec.system);
  LetterOrder order = LetterOrder::from_string(spec.order, sys.n_letters());
  int depth = spec.depth > 0 ? spec.depth : 8;
  cd.table = generate_up_to_delta(sys, order, depth);
  cd.label = sys.name() + " order=" + order.to_string() + " depth=" + std::to_string(depth);
  cd.replay = "aslw verify --type " + sys.name() + " --order " + order.to_string() +
              " --depth " + std::to_string(depth);
  AffineCoeffs dl = delta_coords(cd.table.sys);
  for (const Coeffs& g : cd.table.sys.positive_roots) {
    AffineCoeffs low(cd.table.sys.rank + 1, 0);
    for (int i = 0; i < cd.table.sys.rank; ++i) low[i + 1] = g[i];
    for (const AffineCoeffs& base : {low, sub(dl, low)}) {
      BaseInfo b = make_base_info(cd.table, base);
      cd.base_by_pr[b.pr] = static_cast<int>(cd.bases.size());
      cd.bases.push_back(std::move(b));
    }
  }
  return cd;
}

const BaseInfo& info_of(CellData& cd, const AffineCoeffs& deg) {
  Coeffs pr = projection(cd.table.sys, deg);
  auto it = cd.base_by_pr.find(pr);
  require(it != cd.base_by_pr.end(), "no chain for " + dstr(deg));
  return cd.bases[it->second];
}

// ---------------------------------------------------------------------------
// convexity

void suite_convexity(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  const FiniteRootSystem& sys = t.sys;
  std::vector<AffineCoeffs> reals;
  for (const auto& [deg, w] : t.real_words) reals.push_back(deg);

  for (const AffineCoeffs& g : reals) {
    const Word& wg = rw(t, g);
    const BaseInfo& G = info_of(cd, g);
    for (const auto& [a, b] : decompositions(sys, g)) {
      if (classify(sys, a).kind != RootKind::real || classify(sys, b).kind != RootKind::real)
        continue;
      const Word &wa = rw(t, a), &wb = rw(t, b);
      const BaseInfo &A = info_of(cd, a), &B = info_of(cd, b);
      std::string at = dstr(a) + "+" + dstr(b) + "=" + dstr(g);

      const Word& lo = wa < wb ? wa : wb;
      const Word& hi = wa < wb ? wb : wa;
      rec.check(lo < wg && wg < hi, "real sum not between summands: " + at);

      if (A.mono == B.mono) {
        rec.check(G.mono == A.mono, "sum monotonicity differs from summands: " + at);
        if (A.mono == Monotonicity::increasing) {
          rec.check(G.m1 == std::max(A.m1, B.m1), "m_1 of increasing sum: " + at);
          // every element of the sum chain stays below both m_k landmarks
          Word deep = word_at(t, G.base, kmax_for(t, G.base));
          rec.check(deep < t.imaginary_word(t.depth, std::max(A.m1, B.m1)),
                    "increasing pair: sum chain not below m_k: " + at);
        } else {
          rec.check(G.Mp1 == std::min(A.Mp1, B.Mp1), "M'_1 of decreasing sum: " + at);
          Word deep = word_at(t, G.base, kmax_for(t, G.base));
          rec.check(deep > t.imaginary_word(1, std::min(A.M1, B.M1)),
                    "decreasing pair: sum chain not above M_k: " + at);
        }
      }
      if (A.M1 != B.M1) {
        int big = std::min(A.M1, B.M1);  // smaller index = larger imaginary word
        rec.check(G.M1 == big, "M_k of sum must follow the larger summand: " + at);
      } else {
        rec.check(G.M1 >= A.M1, "M_k of sum above equal summands: " + at);
      }
      if (A.m1 != B.m1) {
        int small = std::max(A.m1, B.m1);
        rec.check(G.m1 == small, "m_k of sum must follow the smaller summand: " + at);
      } else {
        rec.check(G.m1 <= A.m1, "m_k of sum below equal summands: " + at);
      }
      if (A.mono != B.mono) {
        const Word& wi = A.mono == Monotonicity::increasing ? wa : wb;
        const Word& wd = A.mono == Monotonicity::increasing ? wb : wa;
        rec.check(wi < wg && wg < wd, "mixed pair ordering: " + at);
      }
      for (const BaseInfo* x : {&A, &B, &G})
        for (const BaseInfo* y : {&A, &B, &G})
          rec.check(x->m1 >= y->Mp1, "m_1 below an M'_1 on summable triple: " + at);
    }
  }

  // interleaving with the chain steps themselves
  for (const BaseInfo& b : cd.bases) {
    int64_t km = kmax_for(t, b.base);
    for (int64_t k = 1; k <= std::min<int64_t>(2, km); ++k) {
      Word w0 = rw(t, b.base), wk = word_at(t, b.base, k);
      if (b.mono == Monotonicity::increasing) {
        rec.check(w0 < wk && wk < t.imaginary_word(static_cast<int>(k), b.m1),
                  "chain step below m_k: " + dstr(b.base) + " k=" + std::to_string(k));
      } else {
        rec.check(t.imaginary_word(static_cast<int>(k), b.M1) < wk && wk < w0,
                  "chain step above M_k: " + dstr(b.base) + " k=" + std::to_string(k));
      }
    }
  }

  // real pairs with an imaginary sum
  for (int k = 1; k <= t.depth; ++k) {
    AffineCoeffs kd = add_delta(sys, AffineCoeffs(sys.rank + 1, 0), k);
    for (const auto& [a, b] : decompositions(sys, kd)) {
      if (classify(sys, a).kind != RootKind::real || classify(sys, b).kind != RootKind::real)
        continue;
      const Word &wa = rw(t, a), &wb = rw(t, b);
      const BaseInfo &A = info_of(cd, a), &B = info_of(cd, b);
      std::string at = dstr(a) + "+" + dstr(b) + "=" + std::to_string(k) + "delta";
      const Word& lo = wa < wb ? wa : wb;
      const Word& hi = wa < wb ? wb : wa;
      rec.check(A.m1 == B.m1 && A.M1 == B.M1, "imaginary sum: m/M landmarks differ: " + at);
      rec.check(A.m1 >= A.M1, "imaginary sum: m_k above M_k: " + at);
      rec.check(lo < t.imaginary_word(t.depth, A.m1), "imaginary sum: low side under m_k: " + at);
      rec.check(t.imaginary_word(1, A.M1) < hi, "imaginary sum: high side over M_k: " + at);
    }
  }

  // splitting lemmas, searched directly in small rank
  if (sys.rank <= 4) {
    for (const BaseInfo& b : cd.bases) {
      bool dec = b.mono == Monotonicity::decreasing;
      if ((dec && b.s <= 1) || (!dec && b.c_alpha <= 1)) continue;
      bool found = false;
      for (const BaseInfo& p : cd.bases) {
        if (p.mono != b.mono) continue;
        Coeffs rest(sys.rank);
        for (int i = 0; i < sys.rank; ++i) rest[i] = b.pr[i] - p.pr[i];
        auto it = cd.base_by_pr.find(rest);
        if (it == cd.base_by_pr.end()) continue;
        const BaseInfo& q = cd.bases[it->second];
        if (q.mono != b.mono) continue;
        if (dec ? (p.Mp1 == b.Mp1 && q.Mp1 == b.Mp1) : (p.m1 == b.m1 && q.m1 == b.m1)) {
          found = true;
          break;
        }
      }
      rec.check(found, std::string(dec ? "s" : "c") +
                           "-splitting: no landmark-preserving split of " + dstr(b.base));
    }
  }
}

// ---------------------------------------------------------------------------
// monotonicity

void suite_monotonicity(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  for (const BaseInfo& b : cd.bases) {
    int64_t km = kmax_for(t, b.base);
    bool monotone = true;
    Word prev = rw(t, b.base);
    for (int64_t k = 1; k <= km; ++k) {
      Word cur = word_at(t, b.base, k);
      bool step_ok = b.mono == Monotonicity::increasing ? prev < cur : cur < prev;
      monotone = monotone && step_ok;
      prev = cur;
    }
    rec.check(monotone, "chain not monotone: " + dstr(b.base));

    bool below_M1 = rw(t, b.base) < t.imaginary_word(1, b.M1);
    rec.check(below_M1 == (b.mono == Monotonicity::increasing),
              "monotonicity equivalence via M_1 fails: " + dstr(b.base));
    Word deep = word_at(t, b.base, km);
    if (b.mono == Monotonicity::increasing)
      rec.check(deep < t.imaginary_word(t.depth, b.m1),
                "increasing chain reaches m_k: " + dstr(b.base));
    else
      rec.check(deep > t.imaginary_word(1, b.M1),
                "decreasing chain reaches M_k: " + dstr(b.base));
  }

  AffineCoeffs dl = delta_coords(t.sys);
  for (const Coeffs& g : t.sys.positive_roots) {
    AffineCoeffs low(t.sys.rank + 1, 0);
    for (int i = 0; i < t.sys.rank; ++i) low[i + 1] = g[i];
    rec.check(info_of(cd, low).mono != info_of(cd, sub(dl, low)).mono,
              "mirror chains share monotonicity: " + dstr(low));
  }
}

// ---------------------------------------------------------------------------
// flags

void suite_flags(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  const IrrChains& irr = irr_chains(t);
  int n = t.sys.rank;

  for (int k = 1; k < t.depth; ++k)
    for (int i = 1; i <= n; ++i) {
      std::vector<Coeffs> both;
      for (int j = 0; j < i; ++j) {
        both.push_back(t.direction(k, j + 1));
        both.push_back(t.direction(k + 1, j + 1));
      }
      rec.check(linalg::rank(both) == i,
                "flag spans differ between levels " + std::to_string(k) + "," +
                    std::to_string(k + 1) + " at i=" + std::to_string(i));
    }

  for (const BaseInfo& b : cd.bases) {
    for (int k = 2; k <= std::min(t.depth, 4); ++k) {
      rec.check(m_k_index(t, b.base, k) == b.m1, "m_k index drifts: " + dstr(b.base));
      rec.check(M_k_index(t, b.base, k) == b.M1, "M_k index drifts: " + dstr(b.base));
    }
    int top = 0;
    for (int j = 0; j < n; ++j)
      if (b.coeffs[j] != 0) top = j + 1;
    rec.check(b.m1 == top, "m_1 is not the top support index: " + dstr(b.base));
    int low = 0;
    for (int j = n - 1; j >= 0; --j)
      if (b.coeffs[j] != 0) low = j + 1;
    rec.check(b.Mp1 <= b.M1 && b.Mp1 <= low,
              "M'_1 must dominate M_1 and the lowest support: " + dstr(b.base));
    int first_pair = 0;
    for (int j = 0; j < n && first_pair == 0; ++j)
      if (pairing(t.sys, b.pr, irr.pr_beta[j]) != 0) first_pair = j + 1;
    rec.check(first_pair == b.M1, "M_1 is not the first nonorthogonal flag step: " + dstr(b.base));
    if (b.mono == Monotonicity::decreasing) {
      if (b.Mp1 != b.M1)
        rec.check(b.s > 1, "M'_1 != M_1 forces s > 1: " + dstr(b.base));
      Word deep = word_at(t, b.base, kmax_for(t, b.base));
      rec.check(t.imaginary_word(1, b.Mp1) < deep,
                "decreasing chain crosses its M'_1 lower bound: " + dstr(b.base));
      rec.check(b.s >= 1 && b.s <= b.f, "s outside [1, f]: " + dstr(b.base));
      rec.check(b.f <= irr.f_theta_prime,
                "f exceeds the highest-short-root bound: " + dstr(b.base));
    } else {
      rec.check(b.c_alpha >= 1 && b.c_alpha <= v_bound(t.sys),
                "c outside [1, v]: " + dstr(b.base));
    }
  }

  for (int k = 1; k <= t.depth; ++k)
    for (int i = 1; i <= n; ++i) {
      const Word& w = t.imaginary_word(k, i);
      std::string at = "SL_" + std::to_string(i) + "(" + std::to_string(k) + "delta)";
      if (k < t.depth)
        rec.check(w > t.imaginary_word(k + 1, i), "imaginary words must decrease in k: " + at);
      auto [ls, rs] = standard_factorization(w);
      if (i < n)
        rec.check(t.imaginary_word(k, i + 1) < ls,
                  "SL_{i+1} must sit below the standard-left factor: " + at);
      rec.check(static_cast<int64_t>(ls.size()) > (k - 1) * t.sys.delta_height,
                "standard-left factor of imaginary word too short: " + at);
      AffineCoeffs lsdeg = degree(ls, t.sys.n_letters());
      rec.check(classify(t.sys, lsdeg).kind == RootKind::real &&
                    m_k_index(t, lsdeg, k) == i && info_of(cd, lsdeg).c_alpha == 1,
                "standard-left factor of imaginary word: wrong m_k or c: " + at);
      // splittings into two table words pin m_k on both sides
      for (size_t cut = 1; cut < w.size(); ++cut) {
        Word u = w.prefix(cut), v = w.suffix(cut);
        auto ru = t.lookup_word(u), rvv = t.lookup_word(v);
        if (!ru || !rvv) continue;
        for (const auto& part : {u, v}) {
          AffineCoeffs d = degree(part, t.sys.n_letters());
          if (classify(t.sys, d).kind != RootKind::real) continue;
          rec.check(m_k_index(t, d, k) == i, "imaginary-word splitting breaks m_k: " + at +
                                                 " part " + wstr(part));
        }
      }
    }

  // imaginary halves of real-word splittings identify M_1
  std::vector<AffineCoeffs> reals;
  for (const auto& [deg, w] : t.real_words) reals.push_back(deg);
  for (const AffineCoeffs& deg : reals) {
    const Word& w = rw(t, deg);
    int64_t D = t.sys.delta_height;
    const BaseInfo& b = info_of(cd, deg);
    for (int64_t len = D; len < static_cast<int64_t>(w.size()); len += D) {
      for (bool from_left : {true, false}) {
        size_t cut = from_left ? len : w.size() - len;
        Word u = w.prefix(cut), v = w.suffix(cut);
        auto ru = t.lookup_word(u), rvv = t.lookup_word(v);
        if (!ru || !rvv) continue;
        const Word& im_part = from_left ? u : v;
        if (classify(t.sys, degree(im_part, t.sys.n_letters())).kind != RootKind::imaginary)
          continue;
        rec.check(im_part == t.imaginary_word(1, b.M1),
                  "imaginary half of a splitting is not SL(M_1): " + dstr(deg));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// factorization

void suite_factorization(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  const FiniteRootSystem& sys = t.sys;
  int64_t D = sys.delta_height;
  std::vector<AffineCoeffs> reals;
  for (const auto& [deg, w] : t.real_words) reals.push_back(deg);

  for (const AffineCoeffs& deg : reals) {
    const Word& w = rw(t, deg);
    std::string at = dstr(deg);
    const BaseInfo& b = info_of(cd, deg);
    rec.check(is_lyndon(w), "table word is not Lyndon: " + at);
    if (w.size() < 2) continue;

    auto [sl, sr] = standard_factorization(w);
    auto [cl, cr] = costandard_factorization(w);
    const std::pair<const Word*, const char*> four[] = {{&sl, "standard-left"},
                                                        {&sr, "standard-right"},
                                                        {&cl, "costandard-left"},
                                                        {&cr, "costandard-right"}};
    for (const auto& [pw, side] : four) {
      const Word& part = *pw;
      AffineCoeffs pd = degree(part, sys.n_letters());
      rec.check(classify(sys, pd).kind != RootKind::not_a_root,
                std::string(side) + " factor degree is not a root: " + at);
      rec.check(t.lookup_word(part).has_value(),
                std::string(side) + " factor is not a table word: " + at);
    }
    auto ra = t.lookup_word(sl), rb = t.lookup_word(sr);
    if (ra && rb)
      rec.check(bracket_nonzero(t, *ra, *rb), "standard factors bracket to zero: " + at);

    // every table word is (ls)^{m} f x with f a proper prefix of ls
    {
      size_t pos = 0;
      int64_t m = 0;
      while (starts_with_at(w, sl, pos)) {
        pos += sl.size();
        ++m;
      }
      bool shape = m >= 1 && pos < w.size() && w.size() - pos <= sl.size();
      if (shape)
        for (size_t i = 0; i + 1 < w.size() - pos; ++i)
          shape = shape && w.letters[pos + i] == sl.letters[i];
      rec.check(shape, "word is not (left)^m prefix letter: " + at);
    }

    // along increasing chains Lyndon prefixes stay increasing, along
    // decreasing chains Lyndon suffixes stay decreasing
    if (affine_height(deg) <= 6 * D) {
      if (b.mono == Monotonicity::increasing) {
        AffineCoeffs acc(sys.n_letters(), 0);
        for (size_t len = 1; len < w.size(); ++len) {
          acc[w.letters[len - 1]] += 1;
          Classified c = classify(sys, acc);
          if (c.kind == RootKind::real && c.positive && is_lyndon(w.prefix(len)))
            rec.check(info_of(cd, acc).mono == Monotonicity::increasing,
                      "Lyndon prefix of an increasing word heads a decreasing chain: " + at +
                          " prefix " + wstr(w.prefix(len)));
        }
      } else {
        AffineCoeffs accs(sys.n_letters(), 0);
        for (size_t len = 1; len < w.size(); ++len) {
          accs[w.letters[w.size() - len]] += 1;
          Classified c = classify(sys, accs);
          if (c.kind == RootKind::real && c.positive && is_lyndon(w.suffix(w.size() - len)))
            rec.check(info_of(cd, accs).mono == Monotonicity::decreasing,
                      "Lyndon suffix of a decreasing word heads an increasing chain: " + at +
                          " suffix " + wstr(w.suffix(w.size() - len)));
        }
      }
    }

    // an imaginary level-1 subword forces the M'_1 landmark and prefix position
    if (b.mono == Monotonicity::decreasing) {
      for (int i = 1; i <= sys.rank; ++i) {
        const Word& li = t.imaginary_word(1, i);
        if (!is_subword(li, w)) continue;
        rec.check(b.Mp1 == i && is_prefix(li, w),
                  "imaginary subword without matching M'_1 prefix: " + at);
      }
    }

    // independent re-selection of the word from its decompositions
    if (affine_height(deg) <= 2 * D) {
      std::optional<Word> best;
      for (const auto& [x, yv] : decompositions(sys, deg)) {
        Classified cx = classify(sys, x), cy = classify(sys, yv);
        std::vector<Word> xs = cx.kind == RootKind::real
                                   ? std::vector<Word>{rw(t, x)}
                                   : sl_all(t, x);
        std::vector<Word> ys = cy.kind == RootKind::real
                                   ? std::vector<Word>{rw(t, yv)}
                                   : sl_all(t, yv);
        for (size_t xi = 0; xi < xs.size(); ++xi)
          for (size_t yi = 0; yi < ys.size(); ++yi) {
            ExtendedRoot ex = make_extended(t, x, cx.kind == RootKind::imaginary
                                                      ? std::optional<int>(static_cast<int>(xi) + 1)
                                                      : std::nullopt);
            ExtendedRoot ey = make_extended(t, yv, cy.kind == RootKind::imaginary
                                                       ? std::optional<int>(static_cast<int>(yi) + 1)
                                                       : std::nullopt);
            if (!bracket_nonzero(t, ex, ey)) continue;
            const Word& wx = xs[xi];
            const Word& wy = ys[yi];
            Word cat = wx < wy ? concat(wx, wy) : concat(wy, wx);
            if (!best || cat > *best) best = cat;
          }
      }
      rec.check(best.has_value() && *best == w, "word differs from bracket-max selection: " + at);
    }
  }

  // proper Lyndon prefixes of imaginary words head increasing chains, proper
  // Lyndon suffixes decreasing ones
  for (int k = 1; k <= std::min(t.depth, 6); ++k)
    for (int i = 1; i <= sys.rank; ++i) {
      const Word& w = t.imaginary_word(k, i);
      std::string at = "SL_" + std::to_string(i) + "(" + std::to_string(k) + "delta)";
      AffineCoeffs acc(sys.n_letters(), 0);
      for (size_t len = 1; len < w.size(); ++len) {
        acc[w.letters[len - 1]] += 1;
        Classified c = classify(sys, acc);
        if (c.kind == RootKind::real && c.positive && is_lyndon(w.prefix(len)))
          rec.check(info_of(cd, acc).mono == Monotonicity::increasing,
                    "Lyndon prefix of an imaginary word heads a decreasing chain: " + at);
      }
      AffineCoeffs accs(sys.n_letters(), 0);
      for (size_t len = 1; len < w.size(); ++len) {
        accs[w.letters[w.size() - len]] += 1;
        Classified c = classify(sys, accs);
        if (c.kind == RootKind::real && c.positive && is_lyndon(w.suffix(w.size() - len)))
          rec.check(info_of(cd, accs).mono == Monotonicity::decreasing,
                    "Lyndon suffix of an imaginary word heads an increasing chain: " + at);
      }
    }
}

// ---------------------------------------------------------------------------
// dec periodicity helpers

struct DecFormChecks {
  bool starts_with_run = true;
  bool literal_suffixes_high = true;
  bool interior_literals_nonempty = true;
};

DecFormChecks check_dec_form(const RunParse& p, const Word& L) {
  DecFormChecks r;
  r.starts_with_run = !p.runs.empty() && p.runs[0] >= 1;
  for (size_t i = 0; i < p.lits.size(); ++i) {
    const Word& lit = p.lits[i];
    if (lit.empty()) {
      if (i + 1 < p.lits.size()) r.interior_literals_nonempty = false;
      continue;
    }
    for (size_t s = 0; s < lit.size(); ++s)
      if (!(lit.suffix(s) > L)) r.literal_suffixes_high = false;
  }
  return r;
}

}  // namespace

void check_dec_periodicity(SLTable& t, const AffineCoeffs& base, Recorder& rec) {
  const FiniteRootSystem& sys = t.sys;
  int64_t D = sys.delta_height;
  require(monotonicity(t, base) == Monotonicity::decreasing,
          "dec periodicity needs a decreasing chain");
  BaseInfo b = make_base_info(t, base);
  Word L = t.imaginary_word(1, b.Mp1);
  std::string at = dstr(base);

  if (b.relh == 1) {
    rec.check(b.Mp1 == b.M1, "irreducible chain with split landmarks: " + at);
    Word w0 = rw(t, base);
    for (int64_t k = 1; k <= kmax_for(t, base); ++k) {
      Word expect = append_copies(Word{{}, w0.order}, L, k);
      expect.letters.insert(expect.letters.end(), w0.letters.begin(), w0.letters.end());
      Word got = word_at(t, base, k);
      rec.check(got == expect, "irreducible decreasing word breaks the L^k pattern: " + at +
                                   " k=" + std::to_string(k));
      rec.check(standard_factorization(got).first == L,
                "irreducible decreasing standard-left is not SL(M_1): " + at);
    }
    rec.check(u_value(t, base) == base, "u of an irreducible chain is not its base: " + at);
    return;
  }

  AffineCoeffs u;
  try {
    u = u_value(t, base);
  } catch (const resource_error&) {
    rec.warn("u scan exceeded the depth cap for " + at);
    return;
  }
  double ratio = static_cast<double>(affine_height(u)) / static_cast<double>(D);
  rec.note_u_ratio(ratio, t.sys.name() + " " + at);
  if (ratio >= 10.0) rec.warn("|u|/|delta| reached " + std::to_string(ratio) + " at " + at);

  int64_t k_u = (affine_height(u) - affine_height(base)) / D;
  for (int64_t j = 0; j <= k_u; ++j)
    rec.check(!is_prefix(L, word_at(t, base, j)),
              "element at or below u already carries the imaginary prefix: " + at);

  try {
    ensure_depth(t, static_cast<int>(ceil_div(affine_height(u), D) + 2 * b.s + 2));
  } catch (const resource_error&) {
    rec.warn("depth cap keeps " + at + " below two s-periods");
  }
  int64_t kmu = kmax_for(t, u);
  if (kmu < 2 * b.s - 1)
    rec.warn("coverage: only " + std::to_string(kmu) + " levels above u for " + at);

  for (int64_t k = 1; k <= kmu; ++k) {
    Word w = word_at(t, u, k);
    RunParse p = parse_runs(w, L);
    std::string atk = at + " k=" + std::to_string(k);
    DecFormChecks f = check_dec_form(p, L);
    rec.check(f.starts_with_run, "word above u lacks the imaginary prefix: " + atk);
    rec.check(f.literal_suffixes_high, "connector suffix not above SL_i(delta): " + atk);
    rec.check(f.interior_literals_nonempty, "adjacent chunks merged: " + atk);
    rec.check(static_cast<int64_t>(p.runs.size()) <= b.s,
              "more than s chunks: " + atk);
    rec.check(p.runs[0] >= ceil_div(k, b.s), "first chunk below ceil(k/s): " + atk);
    int64_t total = 0;
    for (int64_t m : p.runs) total += m;
    rec.check(total >= k, "fewer than k imaginary copies: " + atk);
  }

  for (int64_t k = b.s; k < 2 * b.s && k <= kmu; ++k) {
    Word w = word_at(t, u, k);
    RunParse p = parse_runs(w, L);
    std::string atk = at + " k=" + std::to_string(k);
    rec.check(static_cast<int64_t>(p.runs.size()) == b.s, "base pattern chunk count != s: " + atk);
    if (static_cast<int64_t>(p.runs.size()) != b.s) continue;
    rec.check(p.runs[0] == (k == b.s ? 1 : 2), "base pattern first multiplicity rule: " + atk);
    for (size_t j = 1; j < p.runs.size(); ++j)
      rec.check(p.runs[j] == 1 || p.runs[j] == 2, "base pattern interior multiplicity: " + atk);

    for (int64_t q = 1; k + q * b.s <= kmu; ++q) {
      Word expect{{}, w.order};
      for (size_t j = 0; j < p.runs.size(); ++j) {
        expect = append_copies(std::move(expect), L, p.runs[j] + q);
        expect.letters.insert(expect.letters.end(), p.lits[j].letters.begin(),
                              p.lits[j].letters.end());
      }
      rec.check(word_at(t, u, k + q * b.s) == expect,
                "period-s reconstruction mismatch: " + atk + " q=" + std::to_string(q));
    }

    Word ls = standard_factorization(w).first;
    AffineCoeffs beta = degree(ls, sys.n_letters());
    Classified cb = classify(sys, beta);
    if (cb.kind == RootKind::imaginary) {
      for (int64_t q = 1; k + q * b.s <= kmu; ++q)
        rec.check(degree(standard_factorization(word_at(t, u, k + q * b.s)).first,
                         sys.n_letters()) == beta,
                  "imaginary standard-left drifts: " + atk);
    } else {
      BaseInfo bb = make_base_info(t, beta);
      rec.check(bb.mono == Monotonicity::decreasing,
                "standard-left of a deep decreasing word heads an increasing chain: " + atk);
      if (bb.mono == Monotonicity::decreasing)
        for (int64_t q = 1; k + q * b.s <= kmu; ++q) {
          AffineCoeffs want = add_delta(sys, beta, q * bb.s);
          rec.check(degree(standard_factorization(word_at(t, u, k + q * b.s)).first,
                           sys.n_letters()) == want,
                    "real standard-left misses the q*s_beta shift: " + atk);
        }
    }

    // whole connectors head decreasing chains that share M'_1, have s = 1,
    // and sit at their own u landmark
    for (size_t j = 0; j < p.lits.size(); ++j) {
      if (p.lits[j].empty()) continue;
      AffineCoeffs wd = degree(p.lits[j], sys.n_letters());
      std::string atw = atk + " connector " + std::to_string(j + 1);
      Classified cw = classify(sys, wd);
      rec.check(cw.kind == RootKind::real && cw.positive,
                "connector degree is not a real root: " + atw);
      if (cw.kind != RootKind::real || !cw.positive) continue;
      BaseInfo wb = make_base_info(t, chain_info(t, wd).base);
      rec.check(wb.mono == Monotonicity::decreasing,
                "connector chain not decreasing: " + atw);
      if (wb.mono != Monotonicity::decreasing) continue;
      rec.check(wb.Mp1 == b.Mp1, "connector M'_1 differs from the parent: " + atw);
      rec.check(wb.s == 1, "connector periodicity is not 1: " + atw);
      try {
        rec.check(u_value(t, wd, std::nullopt) == wd, "connector moved by u: " + atw);
      } catch (const resource_error&) {
        rec.warn("u scan hit the depth cap at " + atw);
      }
    }

    // connectors decompose into decreasing C_i words fixed by u_i
    for (size_t j = 0; j < p.lits.size(); ++j) {
      if (p.lits[j].empty()) continue;
      std::vector<Word> vs = canonical_factorization(p.lits[j]);
      for (size_t m = 0; m < vs.size(); ++m) {
        AffineCoeffs vd = degree(vs[m], sys.n_letters());
        std::string atv = atk + " connector " + std::to_string(j + 1) + " factor " +
                          std::to_string(m + 1);
        Classified cv = classify(sys, vd);
        rec.check(cv.kind == RootKind::real && cv.positive,
                  "connector factor degree is not a real root: " + atv);
        if (cv.kind != RootKind::real || !cv.positive) continue;
        BaseInfo vb = make_base_info(t, chain_info(t, vd).base);
        rec.check(vb.mono == Monotonicity::decreasing, "connector factor not decreasing: " + atv);
        if (vb.mono != Monotonicity::decreasing) continue;
        bool in_ci = vb.Mp1 >= b.Mp1 && rw(t, vb.base) > L;
        rec.check(in_ci, "connector factor outside C_i: " + atv);
        rec.check((vb.Mp1 == b.Mp1) == (m == 0),
                  "only the first connector factor may share M'_1: " + atv);
        if (in_ci) {
          try {
            rec.check(u_value(t, vd, b.Mp1) == vd, "connector factor moved by u_i: " + atv);
          } catch (const resource_error&) {
            rec.warn("u_i scan hit the depth cap at " + atv);
          }
        }
      }
    }
  }

  // the i < j nesting of the u_i landmarks
  if (sys.rank <= 4) {
    int64_t prev = -1;
    for (int i = 1; i <= b.Mp1; ++i) {
      if (!(rw(t, base) > t.imaginary_word(1, i))) continue;  // outside C_i
      AffineCoeffs ui;
      try {
        ui = u_value(t, base, i);
      } catch (const resource_error&) {
        continue;
      }
      int64_t h = affine_height(ui);
      if (prev >= 0)
        rec.check(prev >= h, "u_i heights increase along nested C_i: " + at +
                                 " i=" + std::to_string(i));
      prev = h;
    }
  }
}

namespace {

// Recursive characterization of u_i: the longest element reachable as a sum
// of u_i values over C_i splittings, or the chain base itself.
void check_alt_u_oracle(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  if (t.sys.rank > 4) return;
  for (int i = 1; i <= t.sys.rank; ++i) {
    Word L = t.imaginary_word(1, i);
    std::vector<int> members;
    for (size_t bi = 0; bi < cd.bases.size(); ++bi) {
      const BaseInfo& b = cd.bases[bi];
      if (b.mono == Monotonicity::decreasing && b.Mp1 >= i && rw(t, b.base) > L)
        members.push_back(static_cast<int>(bi));
    }
    std::map<int, AffineCoeffs> uval;
    std::vector<int> by_height = members;
    std::sort(by_height.begin(), by_height.end(), [&](int x, int y) {
      return cd.bases[x].relh < cd.bases[y].relh;
    });
    for (int bi : by_height) {
      const BaseInfo& b = cd.bases[bi];
      AffineCoeffs best = b.base;
      for (int pj : members) {
        const BaseInfo& p = cd.bases[pj];
        if (p.relh >= b.relh) continue;
        Coeffs rest(t.sys.rank);
        for (int x = 0; x < t.sys.rank; ++x) rest[x] = b.pr[x] - p.pr[x];
        auto it = cd.base_by_pr.find(rest);
        if (it == cd.base_by_pr.end()) continue;
        int qj = it->second;
        if (std::find(members.begin(), members.end(), qj) == members.end()) continue;
        require(uval.count(pj) && uval.count(qj), "u oracle order broken");
        AffineCoeffs cand = add(uval[pj], uval[qj]);
        if (affine_height(cand) > affine_height(best)) best = cand;
      }
      uval[bi] = best;
      AffineCoeffs direct;
      try {
        direct = u_value(t, b.base, i);
      } catch (const resource_error&) {
        rec.warn("u oracle: depth cap at " + dstr(b.base) + " i=" + std::to_string(i));
        continue;
      }
      rec.check(direct == best, "u_i differs from its splitting recursion: " + dstr(b.base) +
                                    " i=" + std::to_string(i));
    }
  }
}

void suite_dec_periodicity(CellData& cd, Recorder& rec) {
  for (const BaseInfo& b : cd.bases)
    if (b.mono == Monotonicity::decreasing) check_dec_periodicity(cd.table, b.base, rec);
  check_alt_u_oracle(cd, rec);
}

}  // namespace

// ---------------------------------------------------------------------------
// inc periodicity

void check_inc_periodicity(SLTable& t, const AffineCoeffs& base, Recorder& rec) {
  const FiniteRootSystem& sys = t.sys;
  int64_t D = sys.delta_height;
  require(monotonicity(t, base) == Monotonicity::increasing,
          "inc periodicity needs an increasing chain");
  const IrrChains& irr = irr_chains(t);
  BaseInfo b = make_base_info(t, base);
  int i = b.m1, j = irr.M1_index[i - 1];
  Word y = y_word(t, i);
  Word L = t.imaginary_word(1, j);
  std::string at = dstr(base);

  if (b.relh == 1) {
    AffineCoeffs ydeg = degree(y, sys.n_letters());
    rec.check(projection(sys, ydeg) == irr.pr_beta[i - 1],
              "deg(y_i) escapes the irreducible chain: " + at);
    rec.check(l_value(t, base) == ydeg, "l of the irreducible chain is not deg(y): " + at);
    int64_t km = kmax_for(t, ydeg);
    Word prev = rw(t, ydeg);
    rec.check(prev == y, "word at deg(y) differs from y: " + at);
    for (int64_t k = 1; k <= km; ++k) {
      Word expect = append_copies(y, L, k);
      Word got = word_at(t, ydeg, k);
      rec.check(got == expect, "irreducible increasing word breaks y L^k: " + at +
                                   " k=" + std::to_string(k));
      auto [cl, cr] = costandard_factorization(got);
      rec.check(cl == prev && cr == L,
                "irreducible costandard step is not (previous, SL_j(delta)): " + at +
                    " k=" + std::to_string(k));
      prev = got;
    }
    return;
  }

  AffineCoeffs l;
  try {
    l = l_value(t, base);
  } catch (const resource_error&) {
    rec.warn("l scan exceeded the depth cap for " + at);
    return;
  }
  rec.check(affine_height(l) > D, "l of a reducible increasing chain within one delta: " + at);
  for (int64_t hj = 0; affine_height(base) + hj * D < affine_height(l); ++hj)
    rec.check(word_at(t, base, hj) < y, "element below l already reaches y: " + at);

  try {
    ensure_depth(t, static_cast<int>(ceil_div(affine_height(l), D) + 2 * b.c_alpha + 2));
  } catch (const resource_error&) {
    rec.warn("depth cap keeps " + at + " below two c-periods");
  }
  int64_t kml = kmax_for(t, l);
  if (kml < 2 * b.c_alpha - 1)
    rec.warn("coverage: only " + std::to_string(kml) + " levels above l for " + at);

  std::vector<std::vector<IncSeg>> base_parse(b.c_alpha);
  std::map<AffineCoeffs, AffineCoeffs> l_cache;
  for (int64_t k = 0; k <= kml; ++k) {
    Word w = word_at(t, l, k);
    std::string atk = at + " k=" + std::to_string(k);
    auto parsed = parse_inc(w, y, L);
    rec.check(parsed.has_value(), "word above l does not split into y-led segments: " + atk);
    if (!parsed) continue;
    const auto& segs = *parsed;
    rec.check(static_cast<int64_t>(segs.size()) == b.c_alpha,
              "segment count differs from c: " + atk);
    int64_t total = 0;
    for (const IncSeg& s : segs) {
      total += s.q;
      rec.check(s.lit < L, "segment literal not below SL_j(delta): " + atk);
      rec.check(s.q >= k / b.c_alpha && s.q <= ceil_div(k, b.c_alpha),
                "segment multiplicity outside floor/ceil of k/c: " + atk);
    }
    rec.check(total <= k, "imaginary copies exceed k: " + atk);
    if (k < b.c_alpha && static_cast<int64_t>(segs.size()) == b.c_alpha) {
      rec.check(segs[0].q == 0, "base pattern first multiplicity nonzero: " + atk);
      for (size_t m = 1; m < segs.size(); ++m)
        rec.check(segs[m].q == 0 || segs[m].q == 1, "base pattern multiplicity above 1: " + atk);
      base_parse[k] = segs;
    }

    // costandard structure of every element at or above l
    auto [cl, cr] = costandard_factorization(w);
    AffineCoeffs bl = degree(cl, sys.n_letters());
    AffineCoeffs br = degree(cr, sys.n_letters());
    Classified cbl = classify(sys, bl), cbr = classify(sys, br);
    if (cbl.kind == RootKind::real)
      rec.check(monotonicity(t, bl) == Monotonicity::increasing &&
                    m1_index(t, bl) == i,
                "costandard-left must head an increasing chain at m_1=(delta,i): " + atk);
    if (cbr.kind == RootKind::real)
      rec.check(monotonicity(t, br) == Monotonicity::increasing,
                "costandard-right must head an increasing chain: " + atk);
    Word v = w.suffix(y.size());
    if (!v.empty()) {
      std::vector<Word> vs = canonical_factorization(v);
      rec.check(cr == vs.back(), "costandard-right differs from the last factor: " + atk);
      bool seen_real = false;
      for (const Word& f : vs) {
        bool im = classify(sys, degree(f, sys.n_letters())).kind == RootKind::imaginary;
        if (im) {
          rec.check(!seen_real && f == L,
                    "imaginary factors must be leading copies of SL_j(delta): " + atk);
        } else {
          seen_real = true;
        }
      }
      if (b.c_alpha > 1) {
        const Word& last = vs.back();
        AffineCoeffs ld = degree(last, sys.n_letters());
        rec.check(is_prefix(y, last) && m1_index(t, ld) == i,
                  "last factor must restart a (delta,i) segment when c > 1: " + atk);
        if (!l_cache.count(ld)) l_cache[ld] = l_value(t, chain_info(t, ld).base);
        rec.check(last.size() >= rw(t, l_cache[ld]).size(),
                  "last factor shorter than its own l: " + atk);
      }
    }
  }

  for (int64_t k = 0; k < b.c_alpha && k <= kml; ++k) {
    if (base_parse[k].empty()) continue;
    std::string atk = at + " k=" + std::to_string(k);
    for (int64_t q = 1; k + q * b.c_alpha <= kml; ++q) {
      Word expect{{}, y.order};
      for (size_t m = 0; m < base_parse[k].size(); ++m) {
        expect.letters.insert(expect.letters.end(), y.letters.begin(), y.letters.end());
        expect = append_copies(std::move(expect), L,
                               (m == 0 ? 0 : base_parse[k][m].q) + q);
        const Word& lit = base_parse[k][m].lit;
        expect.letters.insert(expect.letters.end(), lit.letters.begin(), lit.letters.end());
      }
      rec.check(word_at(t, l, k + q * b.c_alpha) == expect,
                "period-c reconstruction mismatch: " + atk + " q=" + std::to_string(q));
    }
    Word cl = costandard_factorization(word_at(t, l, k)).first;
    AffineCoeffs beta = degree(cl, sys.n_letters());
    if (classify(sys, beta).kind == RootKind::real) {
      BaseInfo bb = make_base_info(t, chain_info(t, beta).base);
      for (int64_t q = 1; k + q * b.c_alpha <= kml; ++q) {
        AffineCoeffs want = add_delta(sys, beta, q * bb.c_alpha);
        rec.check(degree(costandard_factorization(word_at(t, l, k + q * b.c_alpha)).first,
                         sys.n_letters()) == want,
                  "costandard-left misses the q*c_beta shift: " + atk);
      }
    }
  }

  // the whole chain stays under y_i SL_j(delta)^infinity
  for (int64_t k = 0; k <= kmax_for(t, base); ++k)
    rec.check(compare_vs_periodic(word_at(t, base, k), y, L) < 0,
              "chain element reaches the y L^inf bound: " + at + " k=" + std::to_string(k));
}

namespace {

void check_recursive_l_oracle(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  if (t.sys.rank > 4) return;
  // first element of a chain whose word exceeds y, scanning from the base
  auto first_above = [&](const AffineCoeffs& base, const Word& y) -> std::optional<AffineCoeffs> {
    for (int64_t k = 0; k <= SLTable::depth_cap - 2; ++k) {
      Word w;
      try {
        w = word_at(t, base, k);
      } catch (const resource_error&) {
        return std::nullopt;
      }
      if (w > y) return add_delta(t.sys, base, k);
    }
    return std::nullopt;
  };
  for (const BaseInfo& b : cd.bases) {
    if (b.mono != Monotonicity::increasing || b.relh <= 1) continue;
    Word y = y_word(t, b.m1);
    AffineCoeffs l;
    try {
      l = l_value(t, b.base);
    } catch (const resource_error&) {
      continue;
    }
    std::optional<int64_t> best, best_same_m1;
    bool l_attained = false, l_attained_same = false;
    for (const BaseInfo& p : cd.bases) {
      if (p.mono != Monotonicity::increasing || p.relh >= b.relh) continue;
      Coeffs rest(t.sys.rank);
      for (int x = 0; x < t.sys.rank; ++x) rest[x] = b.pr[x] - p.pr[x];
      auto it = cd.base_by_pr.find(rest);
      if (it == cd.base_by_pr.end()) continue;
      const BaseInfo& q = cd.bases[it->second];
      if (q.mono != Monotonicity::increasing) continue;
      auto lp = first_above(p.base, y), lq = first_above(q.base, y);
      if (!lp || !lq) continue;
      AffineCoeffs sum = add(*lp, *lq);
      int64_t h = affine_height(sum);
      if (!best || h < *best) {
        best = h;
        l_attained = sum == l;
      } else if (h == *best && sum == l) {
        l_attained = true;
      }
      if (b.c_alpha > 1 && p.m1 == b.m1 && q.m1 == b.m1) {
        if (!best_same_m1 || h < *best_same_m1) {
          best_same_m1 = h;
          l_attained_same = sum == l;
        } else if (h == *best_same_m1 && sum == l) {
          l_attained_same = true;
        }
      }
    }
    rec.check(best && *best == affine_height(l) && l_attained,
              "l differs from its splitting recursion: " + dstr(b.base));
    if (b.c_alpha > 1)
      rec.check(best_same_m1 && *best_same_m1 == affine_height(l) && l_attained_same,
                "restricted l recursion (equal m_1) fails: " + dstr(b.base));
  }
}

void suite_inc_periodicity(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  const IrrChains& irr = irr_chains(t);
  for (const BaseInfo& b : cd.bases)
    if (b.mono == Monotonicity::increasing) check_inc_periodicity(cd.table, b.base, rec);
  check_recursive_l_oracle(cd, rec);

  // standard-left factors of the imaginary layers repeat with period SL_j
  for (int i = 1; i <= t.sys.rank; ++i) {
    Word y = y_word(t, i);
    Word L = t.imaginary_word(1, irr.M1_index[i - 1]);
    int64_t D = t.sys.delta_height;
    int64_t k0 = static_cast<int64_t>(y.size()) / D + 1;
    if (k0 > t.depth) {
      rec.warn("coverage: y_" + std::to_string(i) + " too long for the generated depth");
      continue;
    }
    Word w0 = standard_factorization(t.imaginary_word(static_cast<int>(k0), i)).first;
    std::string at = "i=" + std::to_string(i);
    rec.check(is_prefix(y, w0) && w0.size() > y.size(),
              "first long standard-left does not extend y: " + at);
    if (!is_prefix(y, w0)) continue;
    Word tail = w0.suffix(y.size());
    rec.check(is_prefix(tail, L), "standard-left tail not a prefix of SL_j(delta): " + at);
    for (int64_t k = k0 + 1; k <= t.depth; ++k) {
      Word expect = append_copies(y, L, k - k0);
      expect.letters.insert(expect.letters.end(), tail.letters.begin(), tail.letters.end());
      rec.check(standard_factorization(t.imaginary_word(static_cast<int>(k), i)).first == expect,
                "imaginary standard-left periodicity breaks: " + at +
                    " k=" + std::to_string(k));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// connectivity

ConnectivityOutcome check_connectivity(SLTable& t, Recorder& rec) {
  ensure_depth(t, 1);
  const IrrChains& irr = irr_chains(t);
  ConnectivityOutcome out{true, true};
  for (int i = 2; i <= t.sys.rank; ++i) {
    const Word& w = t.imaginary_word(1, i);
    if (costandard_factorization(w).first == standard_factorization(w).first)
      out.criterion = false;
    bool linked = false;
    for (int j = 1; j < i; ++j) linked = linked || irr.beta_pairing[i - 1][j - 1] != 0;
    if (!linked) out.direct = false;
    DeltaSubsystem ds = delta_subsystem(t, i);
    rec.check(ds.irreducible == linked || i == 1,
              "subsystem irreducibility disagrees with the pairing chain at i=" +
                  std::to_string(i));
  }
  rec.check(out.direct, "flag subsystem disconnects: some beta_i is orthogonal to all earlier");
  rec.check(!out.criterion || out.direct, "word criterion held but the direct check failed");
  if (!out.criterion && out.direct)
    rec.warn("sufficient word criterion failed while the direct check passed");
  return out;
}

namespace {

void suite_connectivity(CellData& cd, Recorder& rec) { check_connectivity(cd.table, rec); }

// ---------------------------------------------------------------------------
// special orders

void suite_special_orders(CellData& cd, Recorder& rec) {
  SLTable& t = cd.table;
  const FiniteRootSystem& sys = t.sys;
  int eps = t.order->smallest();
  if (sys.marks[eps] != 1) {
    rec.warn("not a special order (smallest letter has mark > 1); suite skipped");
    return;
  }
  const IrrChains& irr = irr_chains(t);

  for (const BaseInfo& b : cd.bases)
    rec.check((b.base[eps] > 0) == (b.mono == Monotonicity::increasing),
              "monotonicity must match containment of the smallest letter: " + dstr(b.base));

  std::set<int> last_letters;
  for (int i = 1; i <= sys.rank; ++i) {
    const Word& w = t.imaginary_word(1, i);
    rec.check(standard_factorization(w).second.size() == 1,
              "standard-right factor of SL_i(delta) is not a single letter: i=" +
                  std::to_string(i));
    last_letters.insert(w.letters.back());
  }
  rec.check(static_cast<int>(last_letters.size()) == sys.rank,
            "imaginary level-1 words share a last letter");

  std::set<AffineCoeffs> mirrors, simples;
  AffineCoeffs dl = delta_coords(sys);
  for (int i = 0; i < sys.rank; ++i) mirrors.insert(sub(dl, irr.beta[i]));
  for (int ltr = 0; ltr <= sys.rank; ++ltr)
    if (ltr != eps) simples.insert(simple_root_affine(sys, ltr));
  rec.check(mirrors == simples, "delta - beta_i does not enumerate the other simple roots");

  if (eps == 0) {
    int second = t.order->by_rank[1];
    Word crr = costandard_factorization(t.imaginary_word(1, 1)).second;
    rec.check(crr.size() == 1 && crr.letters[0] == second,
              "costandard-right of SL_1(delta) is not the second letter");
    rec.check(chain_info(t, sub(dl, irr.beta[0])).base == simple_root_affine(sys, second),
              "chain(delta - beta_1) differs from chain(alpha_second)");
    std::set<Coeffs> dec_pr, positives(sys.positive_roots.begin(), sys.positive_roots.end());
    for (const BaseInfo& b : cd.bases)
      if (b.mono == Monotonicity::decreasing) dec_pr.insert(b.pr);
    rec.check(dec_pr == positives,
              "projections of decreasing chains differ from the positive roots");
  }
}

// ---------------------------------------------------------------------------
// synthetic word lemmas

Word random_word(std::mt19937_64& rng, const LetterOrder& ord, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_d(min_len, max_len);
  std::uniform_int_distribution<int> ltr(0, ord.n_letters() - 1);
  Word w{{}, &ord};
  int len = len_d(rng);
  for (int i = 0; i < len; ++i) w.letters.push_back(ltr(rng));
  return w;
}

Word random_lyndon(std::mt19937_64& rng, const LetterOrder& ord, int max_len) {
  for (int tries = 0; tries < 200; ++tries) {
    Word w = random_word(rng, ord, 1, max_len);
    if (is_lyndon(w)) return w;
  }
  return Word{{ord.by_rank[0]}, &ord};
}

void suite_word_lemmas(long long cases, unsigned long long seed, Recorder& rec) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nl(2, 6);

  for (long long it = 0; it < cases; ++it) {
    int n = nl(rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    LetterOrder ord = LetterOrder::from_permutation(perm);

    {  // canonical factorizations order words factor-by-factor
      Word w = random_word(rng, ord, 1, 12), w2 = random_word(rng, ord, 1, 12);
      if (!is_prefix(w, w2)) {
        auto f = canonical_factorization(w), g = canonical_factorization(w2);
        bool rhs = false;
        for (size_t a = 0; a < std::min(f.size(), g.size()); ++a) {
          if (f[a] == g[a]) continue;
          rhs = f[a] < g[a];
          break;
        }
        rec.check((w < w2) == rhs, "factor-wise comparison: " + wstr(w) + " vs " + wstr(w2));
      }
    }
    {  // ordered Lyndon words concatenate to a Lyndon word
      Word a = random_lyndon(rng, ord, 8), b2 = random_lyndon(rng, ord, 8);
      if (a != b2) {
        const Word& lo = a < b2 ? a : b2;
        const Word& hi = a < b2 ? b2 : a;
        rec.check(is_lyndon(concat(lo, hi)) && concat(lo, hi) < concat(hi, lo),
                  "Lyndon concatenation: " + wstr(lo) + "+" + wstr(hi));
      }
    }
    {  // a Lyndon substring never straddles a factor boundary
      Word w = random_word(rng, ord, 2, 12);
      Word l = random_lyndon(rng, ord, 4);
      auto factors = canonical_factorization(w);
      std::vector<size_t> cuts{0};
      for (const Word& f : factors) cuts.push_back(cuts.back() + f.size());
      for (size_t pos = 0; pos + l.size() <= w.size(); ++pos) {
        if (!starts_with_at(w, l, pos)) continue;
        bool inside = false;
        for (size_t c = 0; c + 1 < cuts.size(); ++c)
          inside = inside || (pos >= cuts[c] && pos + l.size() <= cuts[c + 1]);
        rec.check(inside, "Lyndon substring straddles factors: " + wstr(l) + " in " + wstr(w));
      }
    }
    {  // run increments preserve comparisons
      std::uniform_int_distribution<int> seg_d(1, 3), p_d(0, 3), len_d(1, 4), l_len(1, 3);
      LetterOrder nat = LetterOrder::from_permutation({0, 1, 2, 3, 4, 5});
      Word l{{}, &nat};
      int ll = l_len(rng);
      std::uniform_int_distribution<int> low(0, 2), high(3, 5);
      for (int x = 0; x < ll; ++x) l.letters.push_back(low(rng));
      if (!is_lyndon(l)) l = Word{{0}, &nat};
      auto build = [&](int segs, std::vector<int64_t>& ps) {
        Word w{{}, &nat};
        for (int s2 = 0; s2 < segs; ++s2) {
          int64_t p = s2 == 0 ? p_d(rng) : std::max(1, p_d(rng));
          ps.push_back(p);
          w = append_copies(std::move(w), l, p);
          int sl2 = len_d(rng);
          for (int x = 0; x < sl2; ++x) w.letters.push_back(high(rng));
        }
        return w;
      };
      std::vector<int64_t> ps, qs;
      Word w = build(seg_d(rng), ps), v = build(seg_d(rng), qs);
      auto lift = [&](const Word& src, const std::vector<int64_t>& counts) {
        RunParse p = parse_runs(src, l);
        Word out{{}, &nat};
        for (size_t s2 = 0; s2 < p.runs.size(); ++s2) {
          out = append_copies(std::move(out), l, p.runs[s2] + 1);
          out.letters.insert(out.letters.end(), p.lits[s2].letters.begin(),
                             p.lits[s2].letters.end());
        }
        (void)counts;
        return out;
      };
      Word w2 = lift(w, ps), v2 = lift(v, qs);
      rec.check((w > v) == (w2 > v2), "run increment flips a comparison: " + wstr(w) +
                                          " vs " + wstr(v));
    }
  }
}

std::string table_order_for_dec(const FiniteRootSystem& sys) {
  // the second letter maximizes the closed-neighborhood mark sum, ties to the
  // largest index
  int best = 1;
  int64_t best_sum = -1;
  for (int i = 1; i <= sys.rank; ++i) {
    int64_t sum = sys.marks[i];
    for (int j = 1; j <= sys.rank; ++j)
      if (j != i && sys.cartan[i - 1][j - 1] != 0) sum += sys.marks[j];
    if (sum >= best_sum) {
      best_sum = sum;
      best = i;
    }
  }
  std::vector<int> perm{0, best};
  for (int i = 1; i <= sys.rank; ++i)
    if (i != best) perm.push_back(i);
  LetterOrder ord = LetterOrder::from_permutation(perm);
  return ord.to_string();
}

std::string table_order_for_inc(const FiniteRootSystem& sys) {
  std::vector<int> perm;
  switch (sys.family) {
    case Family::C:
      perm.push_back(0);
      perm.push_back(sys.rank);
      for (int i = 1; i < sys.rank; ++i) perm.push_back(i);
      break;
    case Family::E:
      if (sys.rank == 6) perm = {0, 1, 4, 2, 5, 3, 6};
      else if (sys.rank == 7) perm = {0, 1, 5, 2, 6, 4, 3, 7};
      else perm = {0, 1, 6, 2, 3, 4, 7, 5, 8};
      break;
    case Family::F:
      perm = {0, 1, 4, 2, 3};
      break;
    default:
      for (int i = 0; i <= sys.rank; ++i) perm.push_back(i);
      break;
  }
  return LetterOrder::from_permutation(perm).to_string();
}

int64_t table_s_value(const FiniteRootSystem& sys) {
  switch (sys.family) {
    case Family::A:
      return sys.rank == 1 ? 1 : sys.rank == 2 ? 2 : 3;
    case Family::B:
    case Family::C:
      return sys.rank == 2 ? 3 : sys.rank == 3 ? 5 : 6;
    case Family::D:
      return sys.rank == 4 ? 5 : 6;
    case Family::E:
      return sys.rank == 6 ? 9 : sys.rank == 7 ? 12 : 18;
    case Family::F:
      return 9;
    case Family::G:
      return 5;
  }
  return 0;
}

int64_t table_c_value(const FiniteRootSystem& sys) {
  switch (sys.family) {
    case Family::A:
    case Family::D:
      return 1;
    case Family::B:
    case Family::C:
      return 2;
    case Family::E:
      return sys.rank == 8 ? 3 : 2;
    case Family::F:
      return 2;
    case Family::G:
      return 3;
  }
  return 0;
}

}  // namespace

void check_tables(const std::vector<std::string>& systems, Recorder& rec) {
  for (const std::string& name : systems) {
    FiniteRootSystem sys = build_system(name);

    {  // decreasing side: the s statistic is tight at chain(theta)
      CellSpec spec{name, table_order_for_dec(sys), 2};
      CellData cd = make_cell(spec);
      int64_t want = table_s_value(sys);
      std::set<int64_t> seen;
      int64_t smax = 0, s_theta = -1;
      AffineCoeffs theta(sys.rank + 1, 0);
      for (int i = 0; i < sys.rank; ++i) theta[i + 1] = sys.highest_root[i];
      for (const BaseInfo& b : cd.bases) {
        if (b.mono != Monotonicity::decreasing) continue;
        seen.insert(b.s);
        smax = std::max(smax, b.s);
        rec.note_s(b.s, name + " " + dstr(b.base));
        if (b.base == theta) s_theta = b.s;
      }
      rec.check(s_theta == want, name + ": s(chain(theta)) = " + std::to_string(s_theta) +
                                     ", table says " + std::to_string(want));
      rec.check(smax == want, name + ": max s = " + std::to_string(smax) +
                                  " differs from the table bound");
      bool all_attained = true;
      for (int64_t p = 1; p <= want; ++p) all_attained = all_attained && seen.count(p);
      rec.check(all_attained, name + ": some s value in 1..bound is not attained");
    }

    {  // increasing side: c at chain(alpha_0) matches, bounded by the
      // subdiagram recursion everywhere
      CellSpec spec{name, table_order_for_inc(sys), 2};
      CellData cd = make_cell(spec);
      int64_t want = table_c_value(sys);
      int64_t vb = v_bound(sys);
      rec.check(vb == want, name + ": subdiagram recursion gives " + std::to_string(vb) +
                                ", table says " + std::to_string(want));
      AffineCoeffs a0(sys.rank + 1, 0);
      a0[0] = 1;
      int64_t c0 = -1, cmax = 0;
      for (const BaseInfo& b : cd.bases) {
        if (b.mono != Monotonicity::increasing) continue;
        cmax = std::max(cmax, b.c_alpha);
        rec.note_c(b.c_alpha, name + " " + dstr(b.base));
        if (b.base == a0) c0 = b.c_alpha;
      }
      rec.check(c0 == want, name + ": c(chain(alpha_0)) = " + std::to_string(c0) +
                                ", table says " + std::to_string(want));
      rec.check(cmax <= vb, name + ": some c exceeds the subdiagram bound");
    }
  }
}

// ---------------------------------------------------------------------------
// harness

bool VerifyReport::ok() const { return total_violations() == 0; }

long long VerifyReport::total_checks() const {
  long long acc = 0;
  for (const SuiteResult& s : suites) acc += s.checks;
  return acc;
}

long long VerifyReport::total_violations() const {
  long long acc = 0;
  for (const SuiteResult& s : suites) acc += static_cast<long long>(s.violations.size());
  return acc;
}

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names{
      "convexity",     "monotonicity",     "flags",        "factorization",
      "dec_periodicity", "inc_periodicity", "connectivity", "special_orders",
      "tables",        "word_lemmas"};
  return names;
}

std::vector<CellSpec> all_order_cells(const std::string& system, int depth) {
  FiniteRootSystem sys = build_system(system);
  std::vector<int> perm;
  for (int i = 0; i <= sys.rank; ++i) perm.push_back(i);
  std::vector<CellSpec> cells;
  do {
    cells.push_back({system, LetterOrder::from_permutation(perm).to_string(), depth});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cells;
}

Recorder::Recorder(SuiteResult* out, std::string cell, std::string replay,
                   RunStatistics* stats, std::mutex* stats_mu)
    : out_(out), cell_(std::move(cell)), replay_(std::move(replay)), stats_(stats),
      stats_mu_(stats_mu) {}

void Recorder::check(bool ok, const std::string& instance) {
  ++out_->checks;
  if (ok) return;
  if (static_cast<int>(out_->violations.size()) == kMaxStoredViolations) {
    warn("further violations suppressed after " + std::to_string(kMaxStoredViolations));
  }
  if (static_cast<int>(out_->violations.size()) <= kMaxStoredViolations)
    out_->violations.push_back({out_->name, cell_, instance, replay_});
}

void Recorder::warn(const std::string& message) {
  out_->warnings.push_back({out_->name, cell_, message});
}

void Recorder::note_s(int64_t s, const std::string& where) {
  if (!stats_) return;
  std::lock_guard<std::mutex> lk(*stats_mu_);
  if (s > stats_->max_s) {
    stats_->max_s = s;
    stats_->max_s_where = where;
  }
}

void Recorder::note_c(int64_t c, const std::string& where) {
  if (!stats_) return;
  std::lock_guard<std::mutex> lk(*stats_mu_);
  if (c > stats_->max_c) {
    stats_->max_c = c;
    stats_->max_c_where = where;
  }
}

void Recorder::note_u_ratio(double ratio, const std::string& where) {
  if (!stats_) return;
  std::lock_guard<std::mutex> lk(*stats_mu_);
  if (ratio > stats_->max_u_ratio) {
    stats_->max_u_ratio = ratio;
    stats_->max_u_where = where;
  }
}

namespace {

void record_stats_pass(CellData& cd, Recorder& rec) {
  for (const BaseInfo& b : cd.bases) {
    if (b.mono == Monotonicity::decreasing)
      rec.note_s(b.s, cd.table.sys.name() + " " + dstr(b.base));
    else
      rec.note_c(b.c_alpha, cd.table.sys.name() + " " + dstr(b.base));
  }
}

using SuiteFn = void (*)(CellData&, Recorder&);

SuiteFn cell_suite_fn(const std::string& name) {
  if (name == "convexity") return &suite_convexity;
  if (name == "monotonicity") return &suite_monotonicity;
  if (name == "flags") return &suite_flags;
  if (name == "factorization") return &suite_factorization;
  if (name == "dec_periodicity") return &suite_dec_periodicity;
  if (name == "inc_periodicity") return &suite_inc_periodicity;
  if (name == "connectivity") return &suite_connectivity;
  if (name == "special_orders") return &suite_special_orders;
  return nullptr;
}

}  // namespace

VerifyReport run_suite(const VerifyConfig& config) {
  std::vector<std::string> suites = config.suites.empty() ? all_suite_names() : config.suites;
  for (const std::string& s : suites) {
    const auto& all = all_suite_names();
    if (std::find(all.begin(), all.end(), s) == all.end())
      throw usage_error("unknown suite: " + s);
  }

  VerifyReport report;
  std::mutex stats_mu;

  struct Task {
    std::optional<CellSpec> cell;  // nullopt for the global suites
    std::vector<std::string> suites;
  };
  std::vector<Task> tasks;
  std::vector<std::string> cell_suites, global_suites;
  for (const std::string& s : suites)
    (s == "tables" || s == "word_lemmas" ? global_suites : cell_suites).push_back(s);
  for (const CellSpec& c : config.cells)
    if (!cell_suites.empty()) tasks.push_back({c, cell_suites});
  if (!global_suites.empty()) tasks.push_back({std::nullopt, global_suites});

  std::vector<std::vector<SuiteResult>> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t idx = next.fetch_add(1); idx < tasks.size(); idx = next.fetch_add(1)) {
      const Task& task = tasks[idx];
      std::vector<SuiteResult>& out = results[idx];
      if (task.cell) {
        std::optional<CellData> cd;
        std::string label = task.cell->system + " order=" + task.cell->order;
        for (const std::string& sname : task.suites) {
          out.push_back({sname, label, 0, {}, {}, 0.0});
          SuiteResult& sr = out.back();
          auto t0 = std::chrono::steady_clock::now();
          try {
            if (!cd) {
              cd = make_cell(*task.cell);
              sr.cell = cd->label;
            } else {
              sr.cell = cd->label;
            }
            Recorder rec(&sr, cd->label, cd->replay, &report.stats, &stats_mu);
            cell_suite_fn(sname)(*cd, rec);
            if (sname == task.suites.front()) record_stats_pass(*cd, rec);
          } catch (const std::exception& e) {
            sr.violations.push_back({sname, sr.cell, std::string("error: ") + e.what(),
                                     task.cell->system});
          }
          sr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                           .count();
        }
      } else {
        for (const std::string& sname : task.suites) {
          out.push_back({sname, "global", 0, {}, {}, 0.0});
          SuiteResult& sr = out.back();
          auto t0 = std::chrono::steady_clock::now();
          try {
            Recorder rec(&sr, "global", "aslw verify --suites " + sname, &report.stats,
                         &stats_mu);
            if (sname == "tables") {
              std::vector<std::string> names{"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                             "C2", "C3", "C4", "D4", "D5", "F4", "G2"};
              if (config.long_running)
                for (const char* e : {"E6", "E7", "E8"}) names.push_back(e);
              check_tables(names, rec);
            } else {
              suite_word_lemmas(config.word_lemma_cases, config.seed, rec);
            }
          } catch (const std::exception& e) {
            sr.violations.push_back({sname, "global", std::string("error: ") + e.what(), ""});
          }
          sr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                           .count();
        }
      }
    }
  };

  unsigned nthreads = config.threads > 0
                          ? static_cast<unsigned>(config.threads)
                          : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, std::max<size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  for (auto& group : results)
    for (SuiteResult& sr : group) report.suites.push_back(std::move(sr));
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["ok"] = report.ok();
  j["total_checks"] = report.total_checks();
  j["total_violations"] = report.total_violations();
  j["stats"] = {{"max_s", report.stats.max_s},
                {"max_s_where", report.stats.max_s_where},
                {"max_c", report.stats.max_c},
                {"max_c_where", report.stats.max_c_where},
                {"max_u_ratio", report.stats.max_u_ratio},
                {"max_u_where", report.stats.max_u_where}};
  j["suites"] = nlohmann::json::array();
  for (const SuiteResult& s : report.suites) {
    nlohmann::json js{{"name", s.name},
                      {"cell", s.cell},
                      {"checks", s.checks},
                      {"seconds", s.seconds}};
    js["violations"] = nlohmann::json::array();
    for (const Violation& v : s.violations)
      js["violations"].push_back({{"instance", v.instance}, {"replay", v.replay}});
    js["warnings"] = nlohmann::json::array();
    for (const VerifyWarning& w : s.warnings) js["warnings"].push_back(w.message);
    j["suites"].push_back(std::move(js));
  }
  return j.dump(2);
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const SuiteResult& s : report.suites) {
    out << s.name << " [" << s.cell << "]: " << s.checks << " checks, "
        << s.violations.size() << " violations";
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", s.seconds);
    out << buf << "\n";
    for (const Violation& v : s.violations) {
      out << "  VIOLATION: " << v.instance << "\n";
      if (!v.replay.empty()) out << "    replay: " << v.replay << "\n";
    }
    for (const VerifyWarning& w : s.warnings) out << "  warning: " << w.message << "\n";
  }
  out << "stats: max s = " << report.stats.max_s;
  if (!report.stats.max_s_where.empty()) out << " at " << report.stats.max_s_where;
  out << "; max c = " << report.stats.max_c;
  if (!report.stats.max_c_where.empty()) out << " at " << report.stats.max_c_where;
  char ub[64];
  std::snprintf(ub, sizeof ub, "; max |u|/|delta| = %.2f", report.stats.max_u_ratio);
  out << ub;
  if (!report.stats.max_u_where.empty()) out << " at " << report.stats.max_u_where;
  out << "\n" << (report.ok() ? "OK" : "FAIL") << ": " << report.total_checks() << " checks, "
      << report.total_violations() << " violations\n";
  return out.str();
}

}  // namespace aslw
