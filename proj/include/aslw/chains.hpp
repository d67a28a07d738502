#pragma once

// Chain invariants: monotonicity, the m/M/M' indices, expansions against the
// irreducible increasing chains, the s/f/c statistics, the u and l landmark
// roots, the y_i words, and chunk-format rendering of periodic word shapes.

#include <optional>
#include <string>
#include <vector>

#include "aslw/sl_table.hpp"

namespace aslw {

enum class Monotonicity { increasing, decreasing };

struct ChainInfo {
  AffineCoeffs base;  // height < |delta|
  int64_t k = 0;      // queried degree = base + k*delta
  Monotonicity mono = Monotonicity::increasing;
  Coeffs pr;  // projection, constant along the chain
};

struct IrrChains {
  // i-th entry (0-based storage, 1-based index i+1): the increasing
  // irreducible chain whose level-1 span index is i+1.
  std::vector<AffineCoeffs> beta;
  std::vector<Coeffs> pr_beta;
  std::vector<int> M1_index;  // 1-based
  Mat beta_pairing;
  Coeffs theta_p;  // highest root of the increasing side of the polarization
  int64_t f_theta_prime = 0;
};

struct ChainProfile {
  AffineCoeffs degree;
  ChainInfo info;
  Vec coeffs;  // expansion of the projection against the irreducible chains
  int m1_index = 0, M1_index = 0, Mprime1_index = 0;  // 1-based
  int64_t relative_height = 0;
  int64_t c_alpha = 0;  // |coefficient| at the m1 index
  int64_t s = 0, f = 0;  // decreasing chains only, else 0
  std::optional<AffineCoeffs> u_degree;  // decreasing chains
  std::optional<AffineCoeffs> l_degree;  // increasing chains
};

ChainInfo chain_info(const SLTable& t, const AffineCoeffs& degree);
Monotonicity monotonicity(SLTable& t, const AffineCoeffs& degree);
std::vector<Word> chain_words(SLTable& t, const AffineCoeffs& degree, int count);

const IrrChains& irr_chains(SLTable& t);

Vec beta_coeffs(SLTable& t, const AffineCoeffs& degree);

// Indices i of (k delta, i); level-1 wrappers given below.
int m_k_index(SLTable& t, const AffineCoeffs& degree, int k);
int M_k_index(SLTable& t, const AffineCoeffs& degree, int k);
int m1_index(SLTable& t, const AffineCoeffs& degree);
int M1_index(SLTable& t, const AffineCoeffs& degree);
int Mprime1_index(SLTable& t, const AffineCoeffs& degree);

ChainProfile chain_profile(SLTable& t, const AffineCoeffs& degree);

// Longest chain element whose word lacks SL_i(delta) as a prefix (and exceeds
// SL_i(delta) when i is given explicitly); decreasing chains only.
AffineCoeffs u_value(SLTable& t, const AffineCoeffs& degree, std::optional<int> i = std::nullopt);

// Shortest chain element whose word is >= y_{m1 index}; increasing chains only.
AffineCoeffs l_value(SLTable& t, const AffineCoeffs& degree);

Word y_word(SLTable& t, int i);

struct ChunkToken {
  bool is_run = false;
  int index = 0;      // which level-1 imaginary word, 1-based
  int64_t count = 0;  // repetitions
  Word literal;
};

std::vector<ChunkToken> to_chunk_format(SLTable& t, const Word& w);
std::string chunk_format_to_string(const std::vector<ChunkToken>& tokens);
Word chunk_format_reassemble(const SLTable& t, const std::vector<ChunkToken>& tokens);

int64_t v_bound(const FiniteRootSystem& sys);

struct DeltaSubsystem {
  std::vector<Coeffs> positive_roots;  // finite roots in the span of the first i directions
  bool irreducible = false;
};

DeltaSubsystem delta_subsystem(SLTable& t, int i);

}  // namespace aslw
