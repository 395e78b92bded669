#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspcoh/field_datum.hpp"
#include "cuspcoh/numeric.hpp"

namespace cuspcoh {

// One embedding's weight in b-coordinates, length n.
using LocalWeight = std::vector<Int>;

bool is_dominant(const LocalWeight& b);

// Action of the longest Weyl element: coordinate reversal.
LocalWeight apply_longest_weyl(const LocalWeight& b);
// Highest weight of the contragredient: the negated reversal.
LocalWeight contragredient_weight(const LocalWeight& b);
// Partner under purity with weight w: negated reversal plus w * (1, ..., 1).
LocalWeight purity_partner(const LocalWeight& b, Int w);

// Coefficients of a weight over the fundamental weights extended by the
// determinant character: lambda = sum (a_i - 1) gamma_i + d * delta_n.
struct FundamentalCoords {
  std::vector<Rat> a;  // length n - 1
  Rat d;
};

FundamentalCoords fundamental_from_b(const LocalWeight& b);
// Inverse map; rejects inputs whose b-coordinates would not be integral,
// naming the violated integrality condition.
LocalWeight b_from_fundamental(const FundamentalCoords& coords, int n);

// A weight: one LocalWeight per embedding label, all of the same length.
class Weight {
 public:
  Weight(int n, std::map<std::string, LocalWeight> per_embedding);

  int rank() const { return n_; }
  const std::map<std::string, LocalWeight>& per_embedding() const { return per_embedding_; }
  const LocalWeight& at(const std::string& label) const;
  bool dominant() const;

  // The weight must cover exactly the datum's embeddings.
  void check_compatible(const FieldDatum& datum) const;

  Rat determinant_coefficient(const std::string& label) const;  // d for one embedding

 private:
  int n_;
  std::map<std::string, LocalWeight> per_embedding_;
};

// Integer w with d^eta = w at a real place, or d^eta + d^{c(eta)} = w when
// totally imaginary; empty when no such integer exists.
std::optional<Int> algebraicity_weight(const Weight& weight, const FieldDatum& datum);

// Integer w with b^eta_i + b^{c(eta)}_{n-i+1} = w for all eta, i.
std::optional<Int> purity_weight(const Weight& weight, const FieldDatum& datum);

// Purity of every group twist, all with the same w.
std::optional<Int> strong_purity_weight(const Weight& weight, const FieldDatum& datum,
                                        Int cap = FieldDatum::kDefaultGroupCap);

struct BaseChangeFactorization {
  std::vector<std::vector<int>> blocks;    // f1 partition of embedding indices
  std::vector<LocalWeight> block_weights;  // the common local weight per block
  Int w = 0;
};

// Factors a strongly-pure weight through the f1 partition: verifies the
// weight is constant on every block and returns one local weight per block.
// Throws validation_error when the weight is not strongly pure, and
// contract_error if a strongly-pure weight fails block constancy (impossible
// unless there is a bug).
BaseChangeFactorization base_change_factor(const Weight& weight, const FieldDatum& datum,
                                           Int cap = FieldDatum::kDefaultGroupCap);

}  // namespace cuspcoh
