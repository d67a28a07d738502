#pragma once

// Standard Lyndon words for an affine root system under a chosen order of the
// extended alphabet. Real roots carry one word each; the k-th imaginary layer
// carries n = rank words SL_1(k delta) > ... > SL_n(k delta), selected from
// bracketing candidates by greedy span growth of their direction vectors.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aslw/root_system.hpp"
#include "aslw/words.hpp"

namespace aslw {

struct ExtendedRoot {
  AffineCoeffs coords;
  std::optional<int> imaginary_index;  // 1-based layer position, set iff coords = k*delta

  bool operator==(const ExtendedRoot&) const = default;
};

struct IrrChains;  // computed on demand by the chains module

struct SLTable {
  FiniteRootSystem sys;
  std::shared_ptr<const LetterOrder> order;  // stable address: words point at this
  int depth = 0;  // every positive root of height <= depth * |delta| has its word

  static constexpr int depth_cap = 64;

  std::map<AffineCoeffs, Word> real_words;
  std::vector<std::vector<Word>> imaginary_words;  // [k-1][i-1] = SL_i(k delta)
  std::vector<std::vector<Coeffs>> directions;     // [k-1][i-1] = direction of SL_i(k delta)
  std::map<std::vector<int>, ExtendedRoot> reverse;

  mutable std::shared_ptr<const IrrChains> irr_cache;

  int n() const { return sys.rank; }
  const Word& real_word(const AffineCoeffs& coords) const;
  const Word& imaginary_word(int k, int i) const;  // 1-based k and i
  const Coeffs& direction(int k, int i) const;
  bool has_real(const AffineCoeffs& coords) const { return real_words.count(coords) != 0; }
  std::optional<ExtendedRoot> lookup_word(const Word& w) const;
};

SLTable generate_up_to_delta(const FiniteRootSystem& sys, const LetterOrder& order, int k);

// Extends the table in place; no-op when already deep enough.
void ensure_depth(SLTable& t, int k);

// Word of a positive root; imaginary roots need their layer index.
const Word& sl(const SLTable& t, const ExtendedRoot& root);

// All words of a positive-root degree: one for real, the full layer for imaginary.
std::vector<Word> sl_all(const SLTable& t, const AffineCoeffs& coords);

bool bracket_nonzero(const SLTable& t, const ExtendedRoot& a, const ExtendedRoot& b);

// Word order on extended roots; distinct extended roots never tie.
int compare_extended(const SLTable& t, const ExtendedRoot& a, const ExtendedRoot& b);

ExtendedRoot make_extended(const SLTable& t, const AffineCoeffs& coords,
                           std::optional<int> imaginary_index = std::nullopt);

std::string cache_to_json(const SLTable& t);
std::optional<SLTable> table_from_cache_json(const std::string& json_text,
                                             const FiniteRootSystem& sys,
                                             const LetterOrder& order);

}  // namespace aslw
