// Command line front end: table generation, single-word queries, chain
// inspection, chunk rendering, and the verification suites.
//
// Exit codes: 0 success, 1 verification violations, 2 usage errors,
// 3 depth or resource limits.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aslw/chains.hpp"
#include "aslw/errors.hpp"
#include "aslw/root_system.hpp"
#include "aslw/sl_table.hpp"
#include "aslw/verify.hpp"
#include "aslw/words.hpp"

namespace {

using nlohmann::json;
using namespace aslw;

struct TableOpts {
  std::string type = "A2";
  int rank = 0;  // 0 = rank already part of --type
  std::string order;  // empty = natural order 0,1,...,n
  int depth = 6;
  std::string format = "text";
  std::string cache_dir;  // empty = ASLW_CACHE_DIR environment variable
};

int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

void add_table_opts(CLI::App* cmd, TableOpts* o, bool with_depth = true) {
  cmd->add_option("--type", o->type, "system name, e.g. A2, C3, E8")->capture_default_str();
  cmd->add_option("--rank", o->rank, "rank, if --type gives only the family letter");
  cmd->add_option("--order", o->order, "letter order, smallest first, e.g. 2,0,1");
  if (with_depth)
    cmd->add_option("--depth", o->depth, "generate through this multiple of delta")
        ->capture_default_str();
  cmd->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--cache-dir", o->cache_dir,
                  "table cache directory (default: ASLW_CACHE_DIR)");
}

std::string default_order(int n_letters) {
  std::string s;
  for (int i = 0; i < n_letters; ++i) s += (i ? "," : "") + std::to_string(i);
  return s;
}

std::string cache_path(const std::string& dir, const FiniteRootSystem& sys,
                       const LetterOrder& order, int depth) {
  std::string key = order.to_string();
  for (char& c : key)
    if (c == ',') c = '-';
  return dir + "/" + sys.name() + "_" + key + "_d" + std::to_string(depth) + ".json";
}

SLTable load_table(const TableOpts& o) {
  std::string name = o.type;
  if (o.rank > 0) name += std::to_string(o.rank);
  FiniteRootSystem sys = build_system(name);
  std::string order_s = o.order.empty() ? default_order(sys.n_letters()) : o.order;
  LetterOrder order = LetterOrder::from_string(order_s, sys.n_letters());
  if (o.depth < 1) throw usage_error("--depth must be at least 1");

  const char* env = std::getenv("ASLW_CACHE_DIR");
  std::string dir = !o.cache_dir.empty() ? o.cache_dir : (env && *env ? env : "");
  std::string path;
  if (!dir.empty()) {
    path = cache_path(dir, sys, order, o.depth);
    std::ifstream in(path);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      if (auto t = table_from_cache_json(buf.str(), sys, order)) return std::move(*t);
    }
  }
  SLTable t = generate_up_to_delta(sys, order, o.depth);
  if (!path.empty()) {
    std::filesystem::create_directories(dir);
    std::ofstream out(path);
    out << cache_to_json(t);
  }
  return t;
}

json word_json(const Word& w) {
  return json{{"letters", w.letters}, {"word", to_string_compact(w)}};
}

json coords_json(const AffineCoeffs& v) { return json(v); }

AffineCoeffs parse_degree(const SLTable& t, const std::string& s) {
  return coords_from_string(s, t.sys.n_letters());
}

// --- gen ---------------------------------------------------------------

int run_gen(const TableOpts& o) {
  SLTable t = load_table(o);
  if (o.format == "json") {
    json j{{"system", t.sys.name()},
           {"order", t.order->to_string()},
           {"depth", t.depth}};
    j["real"] = json::array();
    for (const auto& [deg, w] : t.real_words)
      j["real"].push_back({{"degree", coords_json(deg)}, {"sl", word_json(w)}});
    j["imaginary"] = json::array();
    for (int k = 1; k <= t.depth; ++k)
      for (int i = 1; i <= t.n(); ++i)
        j["imaginary"].push_back({{"k", k},
                                  {"i", i},
                                  {"sl", word_json(t.imaginary_word(k, i))},
                                  {"direction", json(t.direction(k, i))}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << t.sys.name() << " order " << t.order->to_string() << " depth "
            << t.depth << "\n";
  for (const auto& [deg, w] : t.real_words)
    std::cout << "SL(" << coords_to_string(deg) << ") = " << to_string_compact(w) << "\n";
  for (int k = 1; k <= t.depth; ++k)
    for (int i = 1; i <= t.n(); ++i)
      std::cout << "SL_" << i << "(" << k << "delta) = "
                << to_string_compact(t.imaginary_word(k, i)) << "  direction "
                << coords_to_string(AffineCoeffs(t.direction(k, i).begin(),
                                                 t.direction(k, i).end()))
                << "\n";
  return 0;
}

// --- sl ----------------------------------------------------------------

int run_sl(const TableOpts& o, const std::string& degree_s, const std::string& mod_delta) {
  SLTable t = load_table(o);
  AffineCoeffs deg;
  if (!mod_delta.empty()) {
    if (!degree_s.empty()) throw usage_error("give either --degree or --mod-delta");
    auto colon = mod_delta.rfind(':');
    if (colon == std::string::npos) throw usage_error("--mod-delta takes BASE:K");
    AffineCoeffs base = coords_from_string(mod_delta.substr(0, colon), t.sys.n_letters());
    int64_t k = std::stoll(mod_delta.substr(colon + 1));
    if (k < 0) throw usage_error("--mod-delta needs K >= 0");
    deg = add_delta(t.sys, base, k);
  } else {
    if (degree_s.empty()) throw usage_error("sl needs --degree or --mod-delta");
    deg = parse_degree(t, degree_s);
  }
  Classified c = classify(t.sys, deg);
  int levels = static_cast<int>(ceil_div(affine_height(deg), t.sys.delta_height));
  if (levels > SLTable::depth_cap) throw resource_error("degree beyond the depth cap");
  ensure_depth(t, std::max(levels, 1));

  if (c.kind == RootKind::real && c.positive) {
    const Word& w = t.real_word(deg);
    ChainInfo info = chain_info(t, deg);
    if (o.format == "json") {
      json j{{"degree", coords_json(deg)},
             {"kind", "real"},
             {"sl", word_json(w)},
             {"base", coords_json(info.base)},
             {"k", info.k}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "SL(" << coords_to_string(deg) << ") = " << to_string_compact(w) << "\n";
      std::cout << "mod delta: base " << coords_to_string(info.base) << ", k = " << info.k
                << "\n";
    }
    return 0;
  }
  if (c.kind == RootKind::imaginary && c.positive) {
    int k = static_cast<int>(c.level);
    if (o.format == "json") {
      json j{{"degree", coords_json(deg)}, {"kind", "imaginary"}, {"k", k}};
      j["sl"] = json::array();
      for (int i = 1; i <= t.n(); ++i) j["sl"].push_back(word_json(t.imaginary_word(k, i)));
      std::cout << j.dump(2) << "\n";
    } else {
      for (int i = 1; i <= t.n(); ++i)
        std::cout << "SL_" << i << "(" << k << "delta) = "
                  << to_string_compact(t.imaginary_word(k, i)) << "\n";
    }
    return 0;
  }
  throw usage_error(coords_to_string(deg) + " is not a positive root");
}

// --- chain -------------------------------------------------------------

int run_chain(const TableOpts& o, const std::string& degree_s, int count) {
  SLTable t = load_table(o);
  AffineCoeffs deg = parse_degree(t, degree_s);
  std::vector<Word> ws = chain_words(t, deg, count);
  ChainInfo info = chain_info(t, deg);
  const char* mono = info.mono == Monotonicity::increasing ? "increasing" : "decreasing";
  if (o.format == "json") {
    json j{{"degree", coords_json(deg)},
           {"base", coords_json(info.base)},
           {"monotonicity", mono}};
    j["elements"] = json::array();
    for (size_t k = 0; k < ws.size(); ++k)
      j["elements"].push_back({{"degree", coords_json(add_delta(t.sys, info.base,
                                                                static_cast<int64_t>(k)))},
                               {"sl", word_json(ws[k])}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chain(" << coords_to_string(deg) << "): base "
              << coords_to_string(info.base) << ", " << mono << "\n";
    for (size_t k = 0; k < ws.size(); ++k)
      std::cout << "  +" << k << "delta: " << to_string_compact(ws[k]) << "\n";
  }
  return 0;
}

// --- chunks ------------------------------------------------------------

json tokens_json(const std::vector<ChunkToken>& tokens) {
  json arr = json::array();
  for (const ChunkToken& tok : tokens) {
    if (tok.is_run)
      arr.push_back(json::array({tok.index, tok.count}));
    else
      arr.push_back(to_string_compact(tok.literal));
  }
  return arr;
}

int run_chunks(const TableOpts& o, const std::string& degree_s) {
  SLTable t = load_table(o);
  AffineCoeffs deg = parse_degree(t, degree_s);
  Classified c = classify(t.sys, deg);
  int levels = static_cast<int>(ceil_div(affine_height(deg), t.sys.delta_height));
  if (levels > SLTable::depth_cap) throw resource_error("degree beyond the depth cap");
  ensure_depth(t, std::max(levels, 1));

  std::vector<std::pair<std::string, Word>> words;
  if (c.kind == RootKind::real && c.positive) {
    words.emplace_back("SL(" + coords_to_string(deg) + ")", t.real_word(deg));
  } else if (c.kind == RootKind::imaginary && c.positive) {
    for (int i = 1; i <= t.n(); ++i)
      words.emplace_back("SL_" + std::to_string(i) + "(" + std::to_string(c.level) + "delta)",
                         t.imaginary_word(static_cast<int>(c.level), i));
  } else {
    throw usage_error(coords_to_string(deg) + " is not a positive root");
  }
  json out = json::array();
  for (auto& [label, w] : words) {
    std::vector<ChunkToken> toks = to_chunk_format(t, w);
    require(chunk_format_reassemble(t, toks) == w, "chunk round trip");
    if (o.format == "json")
      out.push_back({{"label", label}, {"sl", word_json(w)}, {"chunks", tokens_json(toks)}});
    else
      std::cout << label << " = " << chunk_format_to_string(toks) << "\n";
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

// --- profile -----------------------------------------------------------

int run_profile(const TableOpts& o, const std::string& degree_s) {
  SLTable t = load_table(o);
  AffineCoeffs deg = parse_degree(t, degree_s);
  ChainProfile p = chain_profile(t, deg);
  const char* mono =
      p.info.mono == Monotonicity::increasing ? "increasing" : "decreasing";
  if (o.format == "json") {
    json j{{"degree", coords_json(deg)},
           {"base", coords_json(p.info.base)},
           {"k", p.info.k},
           {"monotonicity", mono},
           {"projection", json(p.info.pr)},
           {"coeffs", json(p.coeffs)},
           {"m1", p.m1_index},
           {"M1", p.M1_index},
           {"Mprime1", p.Mprime1_index},
           {"relative_height", p.relative_height},
           {"c", p.c_alpha},
           {"s", p.s},
           {"f", p.f}};
    if (p.u_degree) j["u"] = coords_json(*p.u_degree);
    if (p.l_degree) j["l"] = coords_json(*p.l_degree);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chain(" << coords_to_string(deg) << "): base "
              << coords_to_string(p.info.base) << " + " << p.info.k << "delta, " << mono
              << "\n";
    std::cout << "  coeffs " << coords_to_string(AffineCoeffs(p.coeffs.begin(), p.coeffs.end()))
              << ", relative height " << p.relative_height << "\n";
    std::cout << "  m_1 = (delta," << p.m1_index << "), M_1 = (delta," << p.M1_index
              << "), M'_1 = (delta," << p.Mprime1_index << ")\n";
    std::cout << "  c = " << p.c_alpha << ", s = " << p.s << ", f = " << p.f << "\n";
    if (p.u_degree) std::cout << "  u = " << coords_to_string(*p.u_degree) << "\n";
    if (p.l_degree) std::cout << "  l = " << coords_to_string(*p.l_degree) << "\n";
  }
  return 0;
}

// --- irr-chains / y ----------------------------------------------------

int run_irr(const TableOpts& o) {
  SLTable t = load_table(o);
  const IrrChains& irr = irr_chains(t);
  if (o.format == "json") {
    json j;
    j["beta"] = json::array();
    for (int i = 0; i < t.n(); ++i)
      j["beta"].push_back({{"i", i + 1},
                           {"degree", coords_json(irr.beta[i])},
                           {"sl", word_json(t.real_word(irr.beta[i]))},
                           {"M1", irr.M1_index[i]}});
    j["pairing"] = json(irr.beta_pairing);
    j["theta_p"] = json(irr.theta_p);
    j["f_theta_p"] = irr.f_theta_prime;
    std::cout << j.dump(2) << "\n";
  } else {
    for (int i = 0; i < t.n(); ++i)
      std::cout << "beta_" << i + 1 << " = " << coords_to_string(irr.beta[i]) << "  SL = "
                << to_string_compact(t.real_word(irr.beta[i])) << "  M_1 = (delta,"
                << irr.M1_index[i] << ")\n";
  }
  return 0;
}

int run_y(const TableOpts& o, int i) {
  SLTable t = load_table(o);
  if (i < 1 || i > t.n()) throw usage_error("y index out of range");
  Word y = y_word(t, i);
  if (o.format == "json") {
    json j{{"i", i}, {"y", word_json(y)}, {"degree", coords_json(degree(y, t.sys.n_letters()))}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "y_" << i << " = " << to_string_compact(y) << "  degree "
              << coords_to_string(degree(y, t.sys.n_letters())) << "\n";
  }
  return 0;
}

// --- decomp ------------------------------------------------------------

int run_decomp(const TableOpts& o, const std::string& degree_s) {
  SLTable t = load_table(o);
  AffineCoeffs deg = parse_degree(t, degree_s);
  auto pairs = decompositions(t.sys, deg);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [a, b] : pairs)
      arr.push_back(json::array({coords_json(a), coords_json(b)}));
    std::cout << json{{"degree", coords_json(deg)}, {"pairs", arr}}.dump(2) << "\n";
  } else {
    for (const auto& [a, b] : pairs)
      std::cout << coords_to_string(a) << " + " << coords_to_string(b) << "\n";
  }
  return 0;
}

// --- verify / table-check ----------------------------------------------

int run_verify(const TableOpts& o, const std::string& suites_s, bool all_orders,
               bool long_running, int threads, long long cases, unsigned long long seed) {
  VerifyConfig cfg;
  if (!suites_s.empty()) {
    std::stringstream ss(suites_s);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) cfg.suites.push_back(item);
  }
  if (all_orders) {
    cfg.cells = all_order_cells(o.type, o.depth);
  } else {
    FiniteRootSystem sys = build_system(o.type);
    std::string order_s = o.order.empty() ? default_order(sys.n_letters()) : o.order;
    cfg.cells.push_back({o.type, order_s, o.depth});
  }
  cfg.long_running = long_running;
  cfg.threads = threads;
  cfg.word_lemma_cases = cases;
  cfg.seed = seed;
  VerifyReport report = run_suite(cfg);
  std::cout << (o.format == "json" ? report_to_json(report) : report_to_text(report));
  if (o.format == "json") std::cout << "\n";
  return report.ok() ? 0 : 1;
}

int run_table_check(const std::string& systems_s, bool long_running,
                    const std::string& format) {
  std::vector<std::string> systems;
  if (!systems_s.empty()) {
    std::stringstream ss(systems_s);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) systems.push_back(item);
  } else {
    systems = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
               "F4", "G2"};
    if (long_running)
      for (const char* e : {"E6", "E7", "E8"}) systems.push_back(e);
  }
  VerifyReport report;
  std::mutex mu;
  report.suites.push_back({"tables", "global", 0, {}, {}, 0.0});
  Recorder rec(&report.suites.back(), "global", "aslw table-check", &report.stats, &mu);
  check_tables(systems, rec);
  std::cout << (format == "json" ? report_to_json(report) : report_to_text(report));
  if (format == "json") std::cout << "\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"standard Lyndon words for untwisted affine root systems"};
  app.require_subcommand(1);

  TableOpts gen_o;
  auto* gen = app.add_subcommand("gen", "generate and print the word table");
  add_table_opts(gen, &gen_o);

  TableOpts sl_o;
  std::string sl_degree, sl_mod;
  auto* slc = app.add_subcommand("sl", "word(s) of one degree");
  add_table_opts(slc, &sl_o);
  slc->add_option("--degree", sl_degree, "affine coordinates, e.g. 1,0,1");
  slc->add_option("--mod-delta", sl_mod, "BASE:K for base + K*delta");

  TableOpts chain_o;
  std::string chain_degree;
  int chain_count = 8;
  auto* chainc = app.add_subcommand("chain", "elements of the chain through a degree");
  add_table_opts(chainc, &chain_o);
  chainc->add_option("--degree", chain_degree)->required();
  chainc->add_option("--count", chain_count, "number of elements")->capture_default_str();

  TableOpts chunks_o;
  std::string chunks_degree;
  auto* chunksc = app.add_subcommand("chunks", "chunk decomposition of a word");
  add_table_opts(chunksc, &chunks_o);
  chunksc->add_option("--degree", chunks_degree)->required();

  TableOpts prof_o;
  std::string prof_degree;
  auto* profc = app.add_subcommand("profile", "chain invariants of a degree");
  add_table_opts(profc, &prof_o);
  profc->add_option("--degree", prof_degree)->required();

  TableOpts irr_o;
  auto* irrc = app.add_subcommand("irr-chains", "irreducible increasing chains");
  add_table_opts(irrc, &irr_o);

  TableOpts y_o;
  int y_i = 1;
  auto* yc = app.add_subcommand("y", "the y_i word");
  add_table_opts(yc, &y_o);
  yc->add_option("i", y_i, "flag index, 1-based")->required();

  TableOpts dec_o;
  std::string dec_degree;
  auto* decc = app.add_subcommand("decomp", "two-part decompositions of a degree");
  add_table_opts(decc, &dec_o, false);
  decc->add_option("--degree", dec_degree)->required();

  TableOpts ver_o;
  ver_o.depth = 8;
  std::string ver_suites;
  bool ver_all_orders = false, ver_long = false;
  int ver_threads = 0;
  long long ver_cases = 10000;
  unsigned long long ver_seed = 20260816ull;
  auto* verc = app.add_subcommand("verify", "run verification suites");
  add_table_opts(verc, &ver_o);
  verc->add_option("--suites", ver_suites, "comma list; default all");
  verc->add_flag("--all-orders", ver_all_orders, "sweep every letter order");
  verc->add_flag("--long-running", ver_long, "include the E-family table checks");
  verc->add_option("--threads", ver_threads, "worker threads, 0 = hardware");
  verc->add_option("--cases", ver_cases, "synthetic word lemma cases")->capture_default_str();
  verc->add_option("--seed", ver_seed, "word lemma rng seed")->capture_default_str();

  std::string tc_systems, tc_format = "text";
  bool tc_long = false;
  auto* tcc = app.add_subcommand("table-check", "statistics against the published tables");
  tcc->add_option("--systems", tc_systems, "comma list of system names");
  tcc->add_flag("--long-running", tc_long, "include E6, E7, E8");
  tcc->add_option("--format", tc_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const depth_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen) return run_gen(gen_o);
    if (*slc) return run_sl(sl_o, sl_degree, sl_mod);
    if (*chainc) return run_chain(chain_o, chain_degree, chain_count);
    if (*chunksc) return run_chunks(chunks_o, chunks_degree);
    if (*profc) return run_profile(prof_o, prof_degree);
    if (*irrc) return run_irr(irr_o);
    if (*yc) return run_y(y_o, y_i);
    if (*decc) return run_decomp(dec_o, dec_degree);
    if (*verc)
      return run_verify(ver_o, ver_suites, ver_all_orders, ver_long, ver_threads, ver_cases,
                        ver_seed);
    if (*tcc) return run_table_check(tc_systems, tc_long, tc_format);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const depth_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
