#include "aslw/sl_table.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "aslw/errors.hpp"
#include "json.hpp"

namespace aslw {

namespace {

int needed_depth(const FiniteRootSystem& sys, int64_t height) {
  return static_cast<int>((height + sys.delta_height - 1) / sys.delta_height);
}

[[noreturn]] void too_shallow(const SLTable& t, const AffineCoeffs& coords) {
  int need = needed_depth(t.sys, affine_height(coords));
  throw depth_error("table generated to depth " + std::to_string(t.depth) + "*|delta| but degree " +
                        coords_to_string(coords) + " needs depth " + std::to_string(need) +
                        "; regenerate deeper",
                    need);
}

// The bracketing of an imaginary word lands in the Cartan slice spanned by
// the coroot of its standard left factor's projection.
Coeffs word_direction(const SLTable& t, const Word& w) {
  auto [left, right] = standard_factorization(w);
  Classified cl = classify(t.sys, degree(left, t.sys.n_letters()));
  require(cl.kind == RootKind::real,
          "standard left factor of an imaginary word must have real degree");
  return cl.finite;
}

// One affine height step of generation; h is the absolute height being filled.
void generate_height(SLTable& t, int64_t h) {
  const FiniteRootSystem& sys = t.sys;
  const int64_t D = sys.delta_height;
  if (h == 1) {
    for (int letter = 0; letter <= sys.rank; ++letter) {
      AffineCoeffs v = simple_root_affine(sys, letter);
      Word w{{letter}, t.order.get()};
      t.real_words.emplace(v, w);
      t.reverse.emplace(w.letters, ExtendedRoot{v, std::nullopt});
    }
    return;
  }
  if (h % D == 0) {
    // Imaginary layer k: candidates are concatenations over the splittings
    // k*delta = (g + j*delta) + ((k-j)*delta - g) with g a finite positive root.
    int k = static_cast<int>(h / D);
    std::set<std::vector<int>> seen;
    std::vector<Word> candidates;
    for (const Coeffs& g : sys.positive_roots) {
      for (int j = 0; j < k; ++j) {
        AffineCoeffs a(sys.rank + 1), b(sys.rank + 1);
        a[0] = j;
        b[0] = k - j;
        for (int i = 0; i < sys.rank; ++i) {
          a[i + 1] = j * sys.highest_root[i] + g[i];
          b[i + 1] = (k - j) * sys.highest_root[i] - g[i];
        }
        const Word& wa = t.real_words.at(a);
        const Word& wb = t.real_words.at(b);
        int cmp = compare(wa, wb);
        require(cmp != 0, "paired real roots of an imaginary splitting have distinct words");
        Word w = cmp < 0 ? concat(wa, wb) : concat(wb, wa);
        if (seen.insert(w.letters).second) candidates.push_back(std::move(w));
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Word& x, const Word& y) { return compare(x, y) > 0; });
    std::vector<Word> accepted;
    std::vector<Coeffs> dirs;
    for (const Word& w : candidates) {
      Coeffs dir = word_direction(t, w);
      if (!linalg::in_span(dirs, dir)) {
        dirs.push_back(dir);
        accepted.push_back(w);
      }
    }
    require(static_cast<int>(accepted.size()) == sys.rank,
            "imaginary layer must yield exactly rank words");
    for (size_t i = 0; i + 1 < accepted.size(); ++i)
      require(compare(accepted[i], accepted[i + 1]) > 0, "imaginary layer words must strictly decrease");
    AffineCoeffs kdelta = add_delta(sys, AffineCoeffs(sys.rank + 1, 0), k);
    for (size_t i = 0; i < accepted.size(); ++i)
      t.reverse.emplace(accepted[i].letters,
                        ExtendedRoot{kdelta, static_cast<int>(i) + 1});
    t.imaginary_words.push_back(std::move(accepted));
    t.directions.push_back(std::move(dirs));
    return;
  }
  // Real roots at height h: bases are gamma and delta - gamma, lifted by levels.
  std::vector<AffineCoeffs> todo;
  for (const Coeffs& g : sys.positive_roots) {
    int64_t hg = 0;
    for (int64_t c : g) hg += c;
    // both lifts stay distinct even when hg == D - hg
    const std::pair<int64_t, int> lifts[] = {{hg, 1}, {D - hg, -1}};
    for (const auto& [base_h, sign] : lifts) {
      if (h < base_h || (h - base_h) % D != 0) continue;
      int64_t j = (h - base_h) / D;
      if (sign < 0) j += 1;  // delta - g + (j') delta has level j' + 1
      AffineCoeffs v(sys.rank + 1);
      v[0] = j;
      for (int i = 0; i < sys.rank; ++i) v[i + 1] = j * sys.highest_root[i] + sign * g[i];
      todo.push_back(std::move(v));
    }
  }
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  for (const AffineCoeffs& v : todo) {
    std::optional<Word> best;
    auto offer = [&](const Word& w1, const Word& w2) {
      int cmp = compare(w1, w2);
      if (cmp == 0) return;
      Word cand = cmp < 0 ? concat(w1, w2) : concat(w2, w1);
      if (!best || compare(cand, *best) > 0) best = std::move(cand);
    };
    for (const auto& [a, b] : decompositions(sys, v)) {
      Classified ca = classify(sys, a), cb = classify(sys, b);
      require(!(ca.kind == RootKind::imaginary && cb.kind == RootKind::imaginary),
              "a real root cannot split into two imaginary ones");
      if (ca.kind == RootKind::real && cb.kind == RootKind::real) {
        offer(t.real_words.at(a), t.real_words.at(b));
      } else {
        const AffineCoeffs& real_part = ca.kind == RootKind::real ? a : b;
        const AffineCoeffs& im_part = ca.kind == RootKind::real ? b : a;
        int k = static_cast<int>(im_part[0]);
        Coeffs pr = projection(sys, real_part);
        const Word& wre = t.real_words.at(real_part);
        for (int i = 1; i <= sys.rank; ++i) {
          if (pairing(sys, t.directions[k - 1][i - 1], pr) != 0)
            offer(wre, t.imaginary_words[k - 1][i - 1]);
        }
      }
    }
    require(best.has_value(), "every non-simple real root admits a bracketing splitting");
    require(is_lyndon(*best), "standard Lyndon word of a real root must be Lyndon");
    t.real_words.emplace(v, *best);
    t.reverse.emplace(best->letters, ExtendedRoot{v, std::nullopt});
  }
}

}  // namespace

const Word& SLTable::real_word(const AffineCoeffs& coords) const {
  auto it = real_words.find(coords);
  if (it == real_words.end()) {
    Classified c = classify(sys, coords);
    if (c.kind != RootKind::real || !c.positive)
      throw usage_error("degree " + coords_to_string(coords) + " is not a positive real root");
    too_shallow(*this, coords);
  }
  return it->second;
}

const Word& SLTable::imaginary_word(int k, int i) const {
  if (i < 1 || i > sys.rank) throw usage_error("imaginary layer index must be in 1..rank");
  if (k < 1) throw usage_error("imaginary level must be >= 1");
  if (k > depth) too_shallow(*this, add_delta(sys, AffineCoeffs(sys.rank + 1, 0), k));
  return imaginary_words[k - 1][i - 1];
}

const Coeffs& SLTable::direction(int k, int i) const {
  if (i < 1 || i > sys.rank || k < 1 || k > depth)
    throw usage_error("direction index out of range");
  return directions[k - 1][i - 1];
}

std::optional<ExtendedRoot> SLTable::lookup_word(const Word& w) const {
  auto it = reverse.find(w.letters);
  if (it == reverse.end()) return std::nullopt;
  return it->second;
}

SLTable generate_up_to_delta(const FiniteRootSystem& sys, const LetterOrder& order, int k) {
  if (order.n_letters() != sys.rank + 1)
    throw usage_error("order must permute all " + std::to_string(sys.rank + 1) + " letters");
  SLTable t;
  t.sys = sys;
  t.order = std::make_shared<LetterOrder>(order);
  ensure_depth(t, k);
  return t;
}

void ensure_depth(SLTable& t, int k) {
  if (k <= t.depth) return;
  if (k > SLTable::depth_cap)
    throw resource_error("requested depth " + std::to_string(k) + " exceeds the cap of " +
                         std::to_string(SLTable::depth_cap) + " delta levels");
  for (int64_t h = t.depth * t.sys.delta_height + 1; h <= int64_t(k) * t.sys.delta_height; ++h)
    generate_height(t, h);
  t.depth = k;
}

const Word& sl(const SLTable& t, const ExtendedRoot& root) {
  Classified c = classify(t.sys, root.coords);
  if (!c.positive || c.kind == RootKind::not_a_root)
    throw usage_error("degree " + coords_to_string(root.coords) + " is not a positive root");
  if (c.kind == RootKind::real) return t.real_word(root.coords);
  if (!root.imaginary_index)
    throw usage_error("imaginary degree needs a layer index in 1..rank");
  return t.imaginary_word(static_cast<int>(c.level), *root.imaginary_index);
}

std::vector<Word> sl_all(const SLTable& t, const AffineCoeffs& coords) {
  Classified c = classify(t.sys, coords);
  if (!c.positive || c.kind == RootKind::not_a_root)
    throw usage_error("degree " + coords_to_string(coords) + " is not a positive root");
  if (c.kind == RootKind::real) return {t.real_word(coords)};
  std::vector<Word> out;
  for (int i = 1; i <= t.sys.rank; ++i) out.push_back(t.imaginary_word(static_cast<int>(c.level), i));
  return out;
}

bool bracket_nonzero(const SLTable& t, const ExtendedRoot& a, const ExtendedRoot& b) {
  Classified ca = classify(t.sys, a.coords), cb = classify(t.sys, b.coords);
  require(ca.kind != RootKind::not_a_root && cb.kind != RootKind::not_a_root,
          "bracket arguments must be roots");
  if (ca.kind == RootKind::imaginary && cb.kind == RootKind::imaginary) return false;
  if (ca.kind == RootKind::real && cb.kind == RootKind::real) {
    Coeffs sum(t.sys.rank);
    for (int i = 0; i < t.sys.rank; ++i) sum[i] = ca.finite[i] + cb.finite[i];
    bool zero = std::all_of(sum.begin(), sum.end(), [](int64_t x) { return x == 0; });
    return zero || t.sys.is_root(sum);
  }
  const Classified& im = ca.kind == RootKind::imaginary ? ca : cb;
  const Classified& re = ca.kind == RootKind::imaginary ? cb : ca;
  const ExtendedRoot& imr = ca.kind == RootKind::imaginary ? a : b;
  if (!imr.imaginary_index)
    throw usage_error("imaginary bracket argument needs a layer index");
  const Coeffs& dir = t.direction(static_cast<int>(im.level), *imr.imaginary_index);
  return pairing(t.sys, dir, re.finite) != 0;
}

int compare_extended(const SLTable& t, const ExtendedRoot& a, const ExtendedRoot& b) {
  int cmp = compare(sl(t, a), sl(t, b));
  if (cmp == 0) require(a == b, "distinct extended roots must have distinct words");
  return cmp;
}

ExtendedRoot make_extended(const SLTable& t, const AffineCoeffs& coords,
                           std::optional<int> imaginary_index) {
  Classified c = classify(t.sys, coords);
  if (!c.positive || c.kind == RootKind::not_a_root)
    throw usage_error("degree " + coords_to_string(coords) + " is not a positive root");
  if (c.kind == RootKind::imaginary) {
    if (!imaginary_index) throw usage_error("imaginary degree needs a layer index in 1..rank");
    if (*imaginary_index < 1 || *imaginary_index > t.sys.rank)
      throw usage_error("imaginary layer index must be in 1..rank");
    return {coords, imaginary_index};
  }
  if (imaginary_index) throw usage_error("a real degree takes no layer index");
  return {coords, std::nullopt};
}

namespace {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_payload(const SLTable& t, const nlohmann::json& real_rows,
                          const nlohmann::json& im_rows) {
  std::ostringstream os;
  os << t.sys.name() << '|' << t.order->to_string() << '|' << t.depth << '|' << real_rows.dump()
     << '|' << im_rows.dump();
  return os.str();
}

}  // namespace

std::string cache_to_json(const SLTable& t) {
  nlohmann::json real_rows = nlohmann::json::array();
  for (const auto& [coords, w] : t.real_words)
    real_rows.push_back({coords_to_string(coords), to_string_compact(w)});
  nlohmann::json im_rows = nlohmann::json::array();
  for (int k = 1; k <= t.depth; ++k)
    for (int i = 1; i <= t.sys.rank; ++i)
      im_rows.push_back({k, i, to_string_compact(t.imaginary_words[k - 1][i - 1])});
  nlohmann::json j;
  j["schema_version"] = 1;
  j["family"] = std::string(1, static_cast<char>(t.sys.family));
  j["rank"] = t.sys.rank;
  j["order"] = t.order->to_string();
  j["depth"] = t.depth;
  j["real"] = real_rows;
  j["imaginary"] = im_rows;
  char buf[32];
  snprintf(buf, sizeof buf, "%016llx",
           static_cast<unsigned long long>(fnv1a64(cache_payload(t, real_rows, im_rows))));
  j["hash"] = buf;
  return j.dump();
}

std::optional<SLTable> table_from_cache_json(const std::string& json_text,
                                             const FiniteRootSystem& sys,
                                             const LetterOrder& order) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    if (j.at("schema_version").get<int>() != 1) return std::nullopt;
    if (j.at("family").get<std::string>() != std::string(1, static_cast<char>(sys.family)))
      return std::nullopt;
    if (j.at("rank").get<int>() != sys.rank) return std::nullopt;
    if (j.at("order").get<std::string>() != order.to_string()) return std::nullopt;
    SLTable t;
    t.sys = sys;
    t.order = std::make_shared<LetterOrder>(order);
    t.depth = j.at("depth").get<int>();
    if (t.depth < 1 || t.depth > SLTable::depth_cap) return std::nullopt;
    nlohmann::json real_rows = j.at("real"), im_rows = j.at("imaginary");
    std::string expect = j.at("hash").get<std::string>();
    char buf[32];
    snprintf(buf, sizeof buf, "%016llx",
             static_cast<unsigned long long>(fnv1a64(cache_payload(t, real_rows, im_rows))));
    if (expect != buf) return std::nullopt;
    for (const auto& row : real_rows) {
      AffineCoeffs coords = coords_from_string(row.at(0).get<std::string>(), sys.rank + 1);
      Word w = word_from_string(row.at(1).get<std::string>(), t.order.get());
      t.real_words.emplace(coords, w);
      t.reverse.emplace(w.letters, ExtendedRoot{coords, std::nullopt});
    }
    t.imaginary_words.assign(t.depth, {});
    t.directions.assign(t.depth, {});
    for (const auto& row : im_rows) {
      int k = row.at(0).get<int>(), i = row.at(1).get<int>();
      if (k < 1 || k > t.depth || i < 1 || i > sys.rank) return std::nullopt;
      Word w = word_from_string(row.at(2).get<std::string>(), t.order.get());
      t.imaginary_words[k - 1].resize(sys.rank);
      t.imaginary_words[k - 1][i - 1] = w;
      AffineCoeffs kdelta = add_delta(sys, AffineCoeffs(sys.rank + 1, 0), k);
      t.reverse.emplace(w.letters, ExtendedRoot{kdelta, i});
    }
    for (int k = 1; k <= t.depth; ++k) {
      if (static_cast<int>(t.imaginary_words[k - 1].size()) != sys.rank) return std::nullopt;
      for (int i = 1; i <= sys.rank; ++i) {
        if (t.imaginary_words[k - 1][i - 1].empty()) return std::nullopt;
        t.directions[k - 1].push_back(word_direction(t, t.imaginary_words[k - 1][i - 1]));
      }
    }
    return t;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const usage_error&) {
    return std::nullopt;
  }
}

}  // namespace aslw
