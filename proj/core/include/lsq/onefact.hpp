#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsq/canonical.hpp"
#include "lsq/latin.hpp"

namespace lsq {

// A 1-factorisation of K_v (v even): v-1 perfect matchings partitioning the
// edge set. Factor order matters only as labelling input, not for class
// identity.
struct FactorSet {
  int v = 0;
  std::vector<std::vector<std::pair<int, int>>> factors;  // edges a < b

  bool operator==(const FactorSet& other) const = default;
};

// Throws not_one_factorisation when the factors are not edge-disjoint
// perfect matchings covering K_v exactly.
FactorSet of_validate(int v, std::vector<std::vector<std::pair<int, int>>> factors);

// x o x = 1 and x o y = k+1 for {x,y} in factor k. The result is unipotent
// and symmetric, with symbol 1 exactly on the diagonal.
LatinSquare of_to_unipotent(const FactorSet& F);
// Inverse direction; throws not_unipotent / not_symmetric /
// not_one_factorisation.
FactorSet unipotent_to_of(const LatinSquare& U);

bool is_unipotent_symmetric(const LatinSquare& L);

struct OfCanonicalResult {
  PartialPermutation alpha;  // rows and columns share this permutation
  PartialPermutation gamma;
  LatinSquare form;
  SearchStats stats;
};

// Canonical (alpha, alpha, gamma) labelling over all ordered pairs in
// R_max. The form is unipotent symmetric in factor standard form and
// identical for every member of the rrs-isotopism class, i.e. for every
// vertex relabelling plus factor renaming of the encoded factorisation.
// Throws not_unipotent / not_symmetric.
OfCanonicalResult canonical_1f(const LatinSquare& U, int jobs = 1);

// Throws order_mismatch on unequal vertex counts.
bool same_class_1f(const FactorSet& F1, const FactorSet& F2);

// Rooted (idempotent, order v-1) encoding: drop the root vertex and set
// x o y = the root's partner in the factor containing {x,y}, x o x = x.
// Vertices keep their labels, with the root's slot taken by vertex v when
// root != v.
LatinSquare of_to_idempotent(const FactorSet& F, int root);

// Canonical representative for factorisations with a distinguished root:
// general canonical labelling of the idempotent encoding, with gamma
// applied as an isomorphism. Invariant under root-fixing relabellings.
LatinSquare rooted_1f_canonical(const FactorSet& F, int root, int jobs = 1);

// Factor file format: first line v, then one factor per line as v/2
// space-separated pairs "a-b".
FactorSet parse_factors(const std::string& text);
std::string serialize_factors(const FactorSet& F);

}  // namespace lsq
