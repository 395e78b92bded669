#pragma once

#include <map>
#include <string>
#include <vector>

#include "cuspcoh/branching.hpp"
#include "cuspcoh/field_datum.hpp"
#include "cuspcoh/lie.hpp"

namespace cuspcoh {

// alpha_j = -b_{n-j+1} + (n-2j+1)/2, beta_j = -b*_j - (n-2j+1)/2;
// half-integers, with alpha_j + beta_j = -w identically.
struct CuspidalParameters {
  std::vector<Rat> alpha;
  std::vector<Rat> beta;
};

CuspidalParameters cuspidal_parameters(const PureWeightPair& pair);

// The induced unitary character of the compact torus attached to a pair:
// m_j = 2 (b_1 - b_{n-j+1} + n - j).
TorusChar chi_lambda_restricted(const PureWeightPair& pair);

// The canonical character 2*rho in compact form.
TorusChar canonical_character(int n);

struct UniqueCharacterReport {
  bool ok = false;
  TorusChar character;     // the unique common character (2*rho)
  int degree = 0;          // the unique wedge degree, n(n-1)/2
  Int mult_in_wedge_u = 0;
  Int mult_in_chi_m = 0;
  std::string mismatch;    // nonempty iff !ok
};

// Brute-force intersection of the wedge-u spectra (all degrees) with the
// spectrum of the shifted pair characters. Succeeds iff the intersection is
// exactly {2*rho}, only in degree n(n-1)/2, with multiplicity one on both
// sides.
UniqueCharacterReport verify_unique_character(const PureWeightPair& pair,
                                              Int cap = kDefaultDimCap, int jobs = 1);

// Closed form: C(n-1, q - n(n-1)/2).
Int coh_dimension(int n, int q);

// Independent route: sum over s + t = q of C(n-1, s) times the dimension of
// the torus-equivariant Hom from wedge-u degree t into the shifted pair
// characters. Guarded to n <= 4.
Int coh_dimension_bruteforce(const PureWeightPair& pair, int q, Int cap = kDefaultDimCap,
                             int jobs = 1);

// coefficient * c^symbol_power with c a formal nonzero scalar.
struct LefschetzValue {
  Int coefficient = 0;
  int symbol_power = 0;

  bool nonzero() const { return coefficient != 0; }
  bool operator==(const LefschetzValue&) const = default;
};

struct LefschetzTable {
  std::map<int, LefschetzValue> traces;  // degree -> (-1)^q C(n-1, q - n(n-1)/2) c
  LefschetzValue total;                  // 2^{n-1} c
};

LefschetzTable lefschetz_local(int n);

// True iff for every eta the difference between the contragredient weight at
// the conjugate embedding and the weight at eta is a multiple of (1, ..., 1),
// i.e. the two have equal restrictions to the trace-zero torus.
bool theta_selfdual_check(const Weight& weight, const FieldDatum& datum);

class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;

  void set(int degree, Int value);
  Int coefficient(int degree) const;
  const std::map<int, Int>& coefficients() const { return coeff_; }
  bool zero() const { return coeff_.empty(); }
  int min_degree() const;
  int max_degree() const;
  Int value_at_one() const;

  PoincarePolynomial operator*(const PoincarePolynomial& rhs) const;
  bool operator==(const PoincarePolynomial&) const = default;

  static PoincarePolynomial one();

 private:
  std::map<int, Int> coeff_;  // nonzero entries only
};

// Local Poincare table: dim H^q = C(n-1, q - n(n-1)/2).
PoincarePolynomial sl_local_poincare(int n);

// Product over the archimedean places; the entry count must match.
PoincarePolynomial kunneth_assemble(const std::vector<PoincarePolynomial>& locals,
                                    int expected_places);
LefschetzValue lefschetz_infinity(const std::vector<LefschetzValue>& locals, int expected_places);

// Total degree shift contributed by the finite places.
Int steinberg_shift(const std::vector<Int>& finite_place_ranks);

// Poincare polynomial transfer from the trace-zero group to the full group:
// multiply by (1 + T)^{r2 - 1}, the exterior algebra on the noncompact
// central directions modulo the split ray.
PoincarePolynomial gl_sl_poincare(const PoincarePolynomial& sl_poly, int r2);

}  // namespace cuspcoh
