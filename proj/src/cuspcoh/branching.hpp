#pragma once

#include "cuspcoh/multiset.hpp"
#include "cuspcoh/weights.hpp"

namespace cuspcoh {

inline constexpr Int kDefaultDimCap = 10'000'000;

// Exact dimension of the irreducible GL_n representation of highest weight b
// (Weyl dimension formula, exact rational arithmetic).
Int weyl_dimension(const LocalWeight& highest);

enum class WeightOracle { GelfandTsetlin, Freudenthal };

// Full multiset of torus weights of the irreducible with the given dominant
// highest weight. The default backend enumerates interlacing triangular
// patterns top row down, each row in descending lexicographic order; the
// Freudenthal backend is an independent cross-check. The square of the
// dimension is held under `cap`.
CharacterMultiset gl_weight_multiset(const LocalWeight& highest, Int cap = kDefaultDimCap,
                                     int jobs = 1,
                                     WeightOracle oracle = WeightOracle::GelfandTsetlin);

// Number of patterns with the given top row and row-sum differences mu.
Int weight_multiplicity(const LocalWeight& highest, const std::vector<Int>& mu,
                        Int cap = kDefaultDimCap, int jobs = 1);

// A local pair (lambda, lambda^*) with purity weight w:
// lambda^*_j + lambda_{n-j+1} = w for all j.
struct PureWeightPair {
  LocalWeight lambda;
  LocalWeight lambda_star;
  Int w = 0;

  int rank() const { return static_cast<int>(lambda.size()); }
  void validate() const;  // throws validation_error

  static PureWeightPair from_lambda(LocalWeight lambda, Int w);
};

// Compact-torus characters of the tensor product of the two irreducibles,
// with the second factor acting through complex conjugation: a weight mu of
// the first and nu of the second contribute restrict(p = mu, q = nu).
CharacterMultiset pair_compact_characters(const PureWeightPair& pair, Int cap = kDefaultDimCap,
                                          int jobs = 1);

// The pair characters translated by the induced unitary torus character of
// the pair (the chi shift).
CharacterMultiset chi_tensor_characters(const PureWeightPair& pair, Int cap = kDefaultDimCap,
                                        int jobs = 1);

}  // namespace cuspcoh
