#include "aslw/chains.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "aslw/errors.hpp"

namespace aslw {

namespace {

AffineCoeffs element(const SLTable& t, const ChainInfo& info, int64_t k) {
  return add_delta(t.sys, info.base, k);
}

const Word& element_word(SLTable& t, const ChainInfo& info, int64_t k) {
  ensure_depth(t, static_cast<int>(k) + 1);
  return t.real_word(element(t, info, k));
}

int needed_levels(const SLTable& t, const AffineCoeffs& coords) {
  int64_t h = affine_height(coords);
  return static_cast<int>((h + t.sys.delta_height - 1) / t.sys.delta_height);
}

std::vector<AffineCoeffs> all_chain_bases(const FiniteRootSystem& sys) {
  std::vector<AffineCoeffs> out;
  for (const Coeffs& g : sys.positive_roots) {
    AffineCoeffs low(sys.rank + 1, 0), high(sys.rank + 1, 0);
    high[0] = 1;
    for (int i = 0; i < sys.rank; ++i) {
      low[i + 1] = g[i];
      high[i + 1] = sys.highest_root[i] - g[i];
    }
    out.push_back(low);   // gamma
    out.push_back(high);  // delta - gamma
  }
  return out;
}

}  // namespace

ChainInfo chain_info(const SLTable& t, const AffineCoeffs& degree) {
  Classified c = classify(t.sys, degree);
  if (c.kind != RootKind::real || !c.positive)
    throw usage_error("chains are indexed by positive real roots; got " + coords_to_string(degree));
  ChainInfo info;
  info.k = affine_height(degree) / t.sys.delta_height;
  info.base = add_delta(t.sys, degree, -info.k);
  info.pr = c.finite;
  return info;
}

Monotonicity monotonicity(SLTable& t, const AffineCoeffs& degree) {
  ChainInfo info = chain_info(t, degree);
  const Word w0 = element_word(t, info, 0);
  const Word w1 = element_word(t, info, 1);
  int cmp = compare(w0, w1);
  require(cmp != 0, "consecutive chain words are distinct");
  return cmp < 0 ? Monotonicity::increasing : Monotonicity::decreasing;
}

std::vector<Word> chain_words(SLTable& t, const AffineCoeffs& degree, int count) {
  if (count < 1) throw usage_error("chain depth must be >= 1");
  ChainInfo info = chain_info(t, degree);
  std::vector<Word> out;
  for (int64_t k = 0; k < count; ++k) out.push_back(element_word(t, info, k));
  return out;
}

const IrrChains& irr_chains(SLTable& t) {
  if (t.irr_cache) return *t.irr_cache;
  ensure_depth(t, 1);
  auto data = std::make_shared<IrrChains>();
  int n = t.sys.rank;
  // Projections of the increasing chains form the positive side of the
  // polarization; its simple elements are the irreducible increasing chains.
  std::set<Coeffs> inc_pr;
  std::map<Coeffs, AffineCoeffs> base_of;
  for (const AffineCoeffs& b : all_chain_bases(t.sys)) {
    ChainInfo info = chain_info(t, b);
    info.mono = monotonicity(t, b);
    if (info.mono == Monotonicity::increasing) {
      inc_pr.insert(info.pr);
      base_of[info.pr] = b;
    }
  }
  require(inc_pr.size() == t.sys.positive_roots.size(),
          "the increasing side of the polarization has one chain per finite positive root");
  std::vector<std::pair<int, Coeffs>> simples;  // (span index, projection)
  for (const Coeffs& p : inc_pr) {
    bool simple = true;
    for (const Coeffs& q : inc_pr) {
      Coeffs r(p.size());
      for (size_t j = 0; j < p.size(); ++j) r[j] = p[j] - q[j];
      if (inc_pr.count(r)) { simple = false; break; }
    }
    if (!simple) continue;
    auto idx = span_index(t.directions[0], p);
    require(idx.has_value(), "irreducible chain projection lies in the direction span");
    simples.push_back({*idx, p});
  }
  require(static_cast<int>(simples.size()) == n, "expected rank many irreducible increasing chains");
  std::sort(simples.begin(), simples.end());
  for (int i = 0; i < n; ++i)
    require(simples[i].first == i + 1,
            "irreducible chains are indexed bijectively by level-1 span indices");
  for (auto& [idx, p] : simples) {
    data->pr_beta.push_back(p);
    data->beta.push_back(base_of.at(p));
  }
  for (int i = 0; i < n; ++i) {
    int m = 0;
    for (int j = 0; j < n; ++j)
      if (pairing(t.sys, t.directions[0][j], data->pr_beta[i]) != 0) { m = j + 1; break; }
    require(m >= 1, "every chain pairs with some direction");
    data->M1_index.push_back(m);
  }
  data->beta_pairing.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      data->beta_pairing[i][j] = pairing(t.sys, data->pr_beta[i], data->pr_beta[j]);
  // Highest root of the increasing side, and the order-independent f bound.
  std::optional<Coeffs> best;
  Vec best_c;
  int64_t best_h = -1;
  for (const Coeffs& p : inc_pr) {
    auto c = linalg::solve_integer(data->pr_beta, p);
    require(c.has_value(), "polarization roots expand integrally over the simple ones");
    int64_t h = 0;
    for (int64_t x : *c) {
      require(x >= 0, "expansion of an increasing projection is nonnegative");
      h += x;
    }
    if (h > best_h) {
      best_h = h;
      best = p;
      best_c = *c;
    } else {
      require(h < best_h || !(p == *best), "highest polarized root is unique");
    }
  }
  data->theta_p = *best;
  int64_t f = 0;
  for (int k = 0; k < n; ++k) {
    int64_t acc = 0;
    for (int j = 0; j < n; ++j)
      if (data->beta_pairing[k][j] != 0) acc += best_c[j];
    f = std::max(f, acc);
  }
  data->f_theta_prime = f;
  t.irr_cache = data;
  return *t.irr_cache;
}

Vec beta_coeffs(SLTable& t, const AffineCoeffs& degree) {
  const IrrChains& irr = irr_chains(t);
  ChainInfo info = chain_info(t, degree);
  auto c = linalg::solve_integer(irr.pr_beta, info.pr);
  require(c.has_value(), "chain projections expand integrally over the irreducible chains");
  return *c;
}

int m_k_index(SLTable& t, const AffineCoeffs& degree, int k) {
  if (k < 1) throw usage_error("flag level must be >= 1");
  ensure_depth(t, k);
  ChainInfo info = chain_info(t, degree);
  auto idx = span_index(t.directions[k - 1], info.pr);
  require(idx.has_value(), "projection lies in the full direction span");
  return *idx;
}

int M_k_index(SLTable& t, const AffineCoeffs& degree, int k) {
  if (k < 1) throw usage_error("flag level must be >= 1");
  ensure_depth(t, k);
  ChainInfo info = chain_info(t, degree);
  for (int j = 0; j < t.sys.rank; ++j)
    if (pairing(t.sys, t.directions[k - 1][j], info.pr) != 0) return j + 1;
  throw internal_error("projection pairs with no direction");
}

int m1_index(SLTable& t, const AffineCoeffs& degree) { return m_k_index(t, degree, 1); }
int M1_index(SLTable& t, const AffineCoeffs& degree) { return M_k_index(t, degree, 1); }

int Mprime1_index(SLTable& t, const AffineCoeffs& degree) {
  const IrrChains& irr = irr_chains(t);
  Vec c = beta_coeffs(t, degree);
  int best = t.sys.rank + 1;
  for (int j = 0; j < t.sys.rank; ++j)
    if (c[j] != 0) best = std::min(best, irr.M1_index[j]);
  require(best <= t.sys.rank, "expansion has a nonzero coefficient");
  return best;
}

AffineCoeffs u_value(SLTable& t, const AffineCoeffs& degree, std::optional<int> i) {
  ChainInfo info = chain_info(t, degree);
  if (monotonicity(t, degree) != Monotonicity::decreasing)
    throw usage_error("u is defined for decreasing chains");
  int idx = i.value_or(Mprime1_index(t, degree));
  if (idx < 1 || idx > t.sys.rank) throw usage_error("u index must be in 1..rank");
  ensure_depth(t, 1);
  const Word& L = t.imaginary_word(1, idx);
  if (i.has_value()) {
    if (Mprime1_index(t, degree) < idx)
      throw usage_error("u_i needs M'_1 at or below (delta,i) in the extended order");
    if (!(element_word(t, info, 0) > L))
      throw usage_error("u_i needs the chain to start above SL_i(delta)");
  }
  std::optional<int64_t> last_good;
  for (int64_t k = 0;; ++k) {
    if (k + 1 > SLTable::depth_cap)
      throw resource_error("u scan exceeded the generation depth cap");
    const Word& w = element_word(t, info, k);
    if (is_prefix(L, w) || w < L) break;
    last_good = k;
  }
  require(last_good.has_value(), "the chain base itself satisfies the u conditions");
  return element(t, info, *last_good);
}

Word y_word(SLTable& t, int i) {
  ensure_depth(t, 1);
  if (i < 1 || i > t.sys.rank) throw usage_error("y index must be in 1..rank");
  std::vector<std::pair<AffineCoeffs, Word>> dec_bases;
  for (const AffineCoeffs& b : all_chain_bases(t.sys))
    if (monotonicity(t, b) == Monotonicity::decreasing)
      dec_bases.push_back({b, t.real_word(b)});
  Word u = standard_factorization(t.imaginary_word(1, i)).first;
  std::optional<Word> prev_append;
  for (int step = 0;; ++step) {
    require(step <= 16 * t.sys.rank * static_cast<int>(t.sys.delta_height),
            "y recursion exceeded its iteration bound");
    AffineCoeffs deg_u = degree(u, t.sys.n_letters());
    {
      Classified cu = classify(t.sys, deg_u);
      require(cu.kind == RootKind::real && cu.positive, "y recursion stays on real degrees");
      ensure_depth(t, needed_levels(t, deg_u));
      require(t.real_word(deg_u) == u, "y recursion stays inside the standard Lyndon words");
    }
    Word best = t.imaginary_word(1, M1_index(t, deg_u));
    bool best_imaginary = true;
    for (const auto& [b, wb] : dec_bases) {
      if (!(wb > best)) continue;
      AffineCoeffs sum = add(deg_u, b);
      Classified cs = classify(t.sys, sum);
      if (cs.kind != RootKind::real) continue;
      if (monotonicity(t, sum) != Monotonicity::increasing) continue;
      if (m1_index(t, sum) != i) continue;
      best = wb;
      best_imaginary = false;
    }
    if (best_imaginary) return u;
    require(!prev_append || !(best > *prev_append), "appended words never increase");
    prev_append = best;
    u = concat(u, best);
  }
}

AffineCoeffs l_value(SLTable& t, const AffineCoeffs& degree) {
  ChainInfo info = chain_info(t, degree);
  if (monotonicity(t, degree) != Monotonicity::increasing)
    throw usage_error("l is defined for increasing chains");
  Word y = y_word(t, m1_index(t, degree));
  for (int64_t k = 0;; ++k) {
    if (k + 1 > SLTable::depth_cap)
      throw resource_error("l scan exceeded the generation depth cap");
    if (element_word(t, info, k) >= y) return element(t, info, k);
  }
}

ChainProfile chain_profile(SLTable& t, const AffineCoeffs& degree) {
  const IrrChains& irr = irr_chains(t);
  ChainProfile p;
  p.degree = degree;
  p.info = chain_info(t, degree);
  p.info.mono = monotonicity(t, degree);
  p.coeffs = beta_coeffs(t, degree);
  p.m1_index = m1_index(t, degree);
  p.M1_index = M1_index(t, degree);
  p.Mprime1_index = Mprime1_index(t, degree);
  for (int64_t c : p.coeffs) p.relative_height += c < 0 ? -c : c;
  p.c_alpha = std::abs(p.coeffs[p.m1_index - 1]);
  if (p.info.mono == Monotonicity::decreasing) {
    for (int j = 0; j < t.sys.rank; ++j)
      if (irr.M1_index[j] == p.Mprime1_index) p.s += -p.coeffs[j];
    for (int k = 0; k < t.sys.rank; ++k) {
      int64_t acc = 0;
      for (int j = 0; j < t.sys.rank; ++j)
        if (irr.beta_pairing[k][j] != 0) acc += -p.coeffs[j];
      p.f = std::max(p.f, acc);
    }
    p.u_degree = u_value(t, degree);
  } else {
    p.l_degree = l_value(t, degree);
  }
  return p;
}

std::vector<ChunkToken> to_chunk_format(SLTable& t, const Word& w) {
  ensure_depth(t, 1);
  int n = t.sys.rank;
  size_t D = static_cast<size_t>(t.sys.delta_height);
  std::vector<ChunkToken> out;
  auto push_letter = [&](int letter) {
    if (out.empty() || out.back().is_run) {
      ChunkToken tok;
      tok.literal.order = w.order;
      out.push_back(tok);
    }
    out.back().literal.letters.push_back(letter);
  };
  size_t pos = 0;
  while (pos < w.size()) {
    int match = 0;
    if (pos + D <= w.size()) {
      for (int i = 1; i <= n; ++i) {
        const Word& L = t.imaginary_word(1, i);
        if (std::equal(L.letters.begin(), L.letters.end(), w.letters.begin() + pos)) {
          match = i;
          break;
        }
      }
    }
    if (match == 0) {
      push_letter(w.letters[pos]);
      ++pos;
      continue;
    }
    const Word& L = t.imaginary_word(1, match);
    int64_t count = 0;
    while (pos + D <= w.size() &&
           std::equal(L.letters.begin(), L.letters.end(), w.letters.begin() + pos)) {
      ++count;
      pos += D;
    }
    ChunkToken tok;
    tok.is_run = true;
    tok.index = match;
    tok.count = count;
    out.push_back(tok);
  }
  return out;
}

std::string chunk_format_to_string(const std::vector<ChunkToken>& tokens) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) os << ", ";
    if (tokens[i].is_run)
      os << '[' << tokens[i].index << ", " << tokens[i].count << ']';
    else
      os << '\'' << to_string_compact(tokens[i].literal) << '\'';
  }
  os << ']';
  return os.str();
}

Word chunk_format_reassemble(const SLTable& t, const std::vector<ChunkToken>& tokens) {
  Word out;
  out.order = t.order.get();
  for (const ChunkToken& tok : tokens) {
    if (tok.is_run) {
      const Word& L = t.imaginary_word(1, tok.index);
      for (int64_t c = 0; c < tok.count; ++c)
        out.letters.insert(out.letters.end(), L.letters.begin(), L.letters.end());
    } else {
      out.letters.insert(out.letters.end(), tok.literal.letters.begin(), tok.literal.letters.end());
    }
  }
  return out;
}

namespace {

struct SubdiagramScratch {
  const FiniteRootSystem* sys;
  std::map<uint32_t, int64_t> memo;

  bool connected(uint32_t mask) const {
    int n = sys->rank;
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) { start = i; break; }
    if (start < 0) return false;
    uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j)) || (seen & (1u << j)) || sys->cartan[v][j] == 0 || v == j) continue;
        seen |= 1u << j;
        stack.push_back(j);
      }
    }
    return seen == mask;
  }

  int64_t leaf_mark(uint32_t mask) const {
    // Highest root of the induced subdiagram; maximum coefficient at a leaf.
    std::vector<int> nodes;
    int n = sys->rank;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    int m = static_cast<int>(nodes.size());
    Mat sub(m, Vec(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) sub[a][b] = sys->cartan[nodes[a]][nodes[b]];
    // Closure enumeration on the sub-Cartan matrix.
    std::set<Coeffs> roots;
    std::vector<Coeffs> frontier;
    for (int i = 0; i < m; ++i) {
      Coeffs e(m, 0);
      e[i] = 1;
      roots.insert(e);
      frontier.push_back(e);
    }
    Coeffs top;
    int64_t top_h = 0;
    while (!frontier.empty()) {
      std::vector<Coeffs> next;
      for (const Coeffs& c : frontier) {
        for (int i = 0; i < m; ++i) {
          int64_t p = 0;
          Coeffs down = c;
          while (true) {
            down[i] -= 1;
            if (down[i] < 0 || !roots.count(down)) break;
            ++p;
          }
          int64_t ci = 0;
          for (int j = 0; j < m; ++j) ci += sub[i][j] * c[j];
          if (p - ci > 0) {
            Coeffs up = c;
            up[i] += 1;
            if (roots.insert(up).second) next.push_back(up);
          }
        }
      }
      frontier = std::move(next);
    }
    for (const Coeffs& c : roots) {
      int64_t h = 0;
      for (int64_t x : c) h += x;
      if (h > top_h) { top_h = h; top = c; }
    }
    int64_t best = 0;
    for (int a = 0; a < m; ++a) {
      int deg = 0;
      for (int b = 0; b < m; ++b)
        if (a != b && sub[a][b] != 0) ++deg;
      if (deg <= 1) best = std::max(best, top[a]);
    }
    return best;
  }

  int64_t v(uint32_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int64_t result;
    if (__builtin_popcount(mask) == 1) {
      result = 1;
    } else {
      result = leaf_mark(mask);
      for (uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
        if (connected(sub)) result = std::max(result, v(sub));
    }
    memo[mask] = result;
    return result;
  }
};

}  // namespace

int64_t v_bound(const FiniteRootSystem& sys) {
  SubdiagramScratch s;
  s.sys = &sys;
  return s.v((1u << sys.rank) - 1);
}

DeltaSubsystem delta_subsystem(SLTable& t, int i) {
  ensure_depth(t, 1);
  if (i < 1 || i > t.sys.rank) throw usage_error("subsystem index must be in 1..rank");
  std::vector<Coeffs> span(t.directions[0].begin(), t.directions[0].begin() + i);
  DeltaSubsystem out;
  for (const Coeffs& g : t.sys.positive_roots)
    if (linalg::in_span(span, g)) out.positive_roots.push_back(g);
  // Irreducible iff the non-orthogonality graph on its positive roots is connected.
  int m = static_cast<int>(out.positive_roots.size());
  if (m == 0) {
    out.irreducible = false;
    return out;
  }
  std::vector<bool> seen(m, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < m; ++j) {
      if (seen[j] || pairing(t.sys, out.positive_roots[v], out.positive_roots[j]) == 0) continue;
      seen[j] = true;
      stack.push_back(j);
    }
  }
  out.irreducible = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  return out;
}

}  // namespace aslw
