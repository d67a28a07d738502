#pragma once

// Finite root-system data for the untwisted affine families: Cartan matrix,
// minimal symmetrizer, positive roots, highest root, and the affine-level
// arithmetic (projection to the finite system, classification of affine
// vectors, decomposition into positive-root pairs).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aslw/linalg.hpp"

namespace aslw {

// Finite coordinates: coefficients against the finite simple roots, size = rank.
using Coeffs = std::vector<int64_t>;
// Affine coordinates: (c_0, c_1, ..., c_n) against the extended simple roots.
using AffineCoeffs = std::vector<int64_t>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct FiniteRootSystem {
  Family family;
  int rank;
  Mat cartan;  // cartan[i][j] = pairing of alpha_j with the coroot of alpha_i
  Vec sym;     // minimal d with diag(d) * cartan symmetric
  std::vector<Coeffs> positive_roots;  // ordered by height, then lexicographically
  std::set<Coeffs> positive_set;
  Coeffs highest_root;
  Vec marks;             // size rank+1, marks[0] = 1; coordinates of delta
  int64_t delta_height;  // sum of marks

  int n_letters() const { return rank + 1; }
  bool is_positive_root(const Coeffs& c) const { return positive_set.count(c) != 0; }
  bool is_root(const Coeffs& c) const;
  std::string name() const;
};

FiniteRootSystem build_system(Family family, int rank);
FiniteRootSystem build_system(const std::string& name);  // e.g. "G2", "D5"

// Symmetrized invariant form on finite coordinates; integer valued.
int64_t pairing(const FiniteRootSystem& sys, const Coeffs& x, const Coeffs& y);

enum class RootKind { real, imaginary, not_a_root };

struct Classified {
  RootKind kind = RootKind::not_a_root;
  bool positive = false;
  Coeffs finite;  // the projection (finite part minus level * highest_root)
  int64_t level = 0;
};

// Finite part of an affine vector: sum_{i>=1} c_i alpha_i - c_0 * theta.
Coeffs projection(const FiniteRootSystem& sys, const AffineCoeffs& v);

Classified classify(const FiniteRootSystem& sys, const AffineCoeffs& v);

int64_t affine_height(const AffineCoeffs& v);

AffineCoeffs delta_coords(const FiniteRootSystem& sys);
AffineCoeffs simple_root_affine(const FiniteRootSystem& sys, int letter);
AffineCoeffs add(const AffineCoeffs& a, const AffineCoeffs& b);
AffineCoeffs sub(const AffineCoeffs& a, const AffineCoeffs& b);
AffineCoeffs add_delta(const FiniteRootSystem& sys, const AffineCoeffs& a, int64_t k);

// All ways to write v as a sum of two positive affine roots (real or
// imaginary), as unordered pairs with the lexicographically smaller first.
std::vector<std::pair<AffineCoeffs, AffineCoeffs>> decompositions(
    const FiniteRootSystem& sys, const AffineCoeffs& v);

// Smallest i >= 1 such that target lies in the rational span of the first i
// vectors; nullopt if it is outside the span of all of them.
std::optional<int> span_index(const std::vector<Coeffs>& vectors, const Coeffs& target);

std::string coords_to_string(const AffineCoeffs& v);
AffineCoeffs coords_from_string(const std::string& s, int expected_size);

}  // namespace aslw
