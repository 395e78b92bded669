#include "cuspcoh/cohomology.hpp"

#include <algorithm>

#include "cuspcoh/exterior.hpp"

namespace cuspcoh {

CuspidalParameters cuspidal_parameters(const PureWeightPair& pair) {
  pair.validate();
  const int n = pair.rank();
  CuspidalParameters params;
  params.alpha.reserve(static_cast<std::size_t>(n));
  params.beta.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    Rat half(n - 2 * j + 1, 2);
    params.alpha.push_back(Rat(-pair.lambda[static_cast<std::size_t>(n - j)]) + half);
    params.beta.push_back(Rat(-pair.lambda_star[static_cast<std::size_t>(j - 1)]) - half);
  }
  for (int j = 0; j < n; ++j)
    if (params.alpha[static_cast<std::size_t>(j)] + params.beta[static_cast<std::size_t>(j)] !=
        Rat(-pair.w))
      throw contract_error("cuspidal parameters must satisfy alpha_j + beta_j = -w");
  return params;
}

TorusChar chi_lambda_restricted(const PureWeightPair& pair) {
  pair.validate();
  const int n = pair.rank();
  TorusChar out(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j)
    out[static_cast<std::size_t>(j - 1)] =
        2 * (pair.lambda[0] - pair.lambda[static_cast<std::size_t>(n - j)] + n - j);
  return out;
}

TorusChar canonical_character(int n) { return two_rho_compact(n); }

UniqueCharacterReport verify_unique_character(const PureWeightPair& pair, Int cap, int jobs) {
  const int n = pair.rank();
  const int expected_degree = n * (n - 1) / 2;
  const TorusChar chi0 = canonical_character(n);
  const CharacterMultiset chi_m = chi_tensor_characters(pair, cap, jobs);

  UniqueCharacterReport report;
  report.character = chi0;
  report.degree = expected_degree;
  for (int t = 0; t <= n * (n - 1); ++t) {
    const CharacterMultiset wedge = wedge_u_characters(n, t);
    for (const auto& [gamma, mult_u] : wedge.entries()) {
      Int mult_m = chi_m.multiplicity(gamma);
      if (mult_m == 0) continue;
      if (t != expected_degree || gamma != chi0 || mult_u != 1 || mult_m != 1) {
        report.mismatch = "unexpected common character at degree " + std::to_string(t) +
                          " with multiplicities " + std::to_string(mult_u) + "/" +
                          std::to_string(mult_m);
        return report;
      }
      report.mult_in_wedge_u = mult_u;
      report.mult_in_chi_m = mult_m;
    }
  }
  if (report.mult_in_wedge_u != 1) {
    report.mismatch = "the canonical character never occurred";
    return report;
  }
  report.ok = true;
  return report;
}

Int coh_dimension(int n, int q) {
  if (n < 1) throw validation_error("rank must be at least 1");
  return binomial(n - 1, q - n * (n - 1) / 2);
}

Int coh_dimension_bruteforce(const PureWeightPair& pair, int q, Int cap, int jobs) {
  const int n = pair.rank();
  if (n > 4) throw resource_error("brute-force cohomology dimension is guarded to n <= 4");
  if (q < 0) return 0;
  const CharacterMultiset chi_m = chi_tensor_characters(pair, cap, jobs);
  Int dim = 0;
  for (int s = 0; s <= n - 1; ++s) {
    const int t = q - s;
    if (t < 0 || t > n * (n - 1)) continue;
    dim += binomial(n - 1, s) * wedge_u_characters(n, t).dot(chi_m);
  }
  return dim;
}

LefschetzTable lefschetz_local(int n) {
  if (n < 1) throw validation_error("rank must be at least 1");
  const int base = n * (n - 1) / 2;
  LefschetzTable table;
  for (int q = base; q <= base + n - 1; ++q) {
    Int sign = (q % 2 == 0) ? 1 : -1;
    table.traces[q] = LefschetzValue{sign * binomial(n - 1, q - base), 1};
  }
  Int total = 0;
  for (const auto& [q, value] : table.traces)
    total += ((q % 2 == 0) ? 1 : -1) * value.coefficient;
  table.total = LefschetzValue{total, 1};
  if (table.total.coefficient != (Int{1} << (n - 1)))
    throw contract_error("local Lefschetz total must be 2^{n-1}");
  return table;
}

bool theta_selfdual_check(const Weight& weight, const FieldDatum& datum) {
  weight.check_compatible(datum);
  const int n = weight.rank();
  for (int e = 0; e < datum.degree(); ++e) {
    const LocalWeight dual = contragredient_weight(weight.at(datum.label(datum.conjugation()(e))));
    const LocalWeight& own = weight.at(datum.label(e));
    const Int shift = dual[0] - own[0];
    for (int i = 1; i < n; ++i)
      if (dual[static_cast<std::size_t>(i)] - own[static_cast<std::size_t>(i)] != shift)
        return false;
  }
  return true;
}

void PoincarePolynomial::set(int degree, Int value) {
  if (value < 0) throw validation_error("Poincare coefficients must be nonnegative");
  if (value == 0)
    coeff_.erase(degree);
  else
    coeff_[degree] = value;
}

Int PoincarePolynomial::coefficient(int degree) const {
  auto it = coeff_.find(degree);
  return it == coeff_.end() ? 0 : it->second;
}

int PoincarePolynomial::min_degree() const {
  if (coeff_.empty()) throw validation_error("zero polynomial has no degree window");
  return coeff_.begin()->first;
}

int PoincarePolynomial::max_degree() const {
  if (coeff_.empty()) throw validation_error("zero polynomial has no degree window");
  return coeff_.rbegin()->first;
}

Int PoincarePolynomial::value_at_one() const {
  Int sum = 0;
  for (const auto& [degree, value] : coeff_) sum += value;
  return sum;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& rhs) const {
  PoincarePolynomial out;
  for (const auto& [d1, v1] : coeff_)
    for (const auto& [d2, v2] : rhs.coeff_)
      out.set(d1 + d2, out.coefficient(d1 + d2) + checked_mul(v1, v2));
  return out;
}

PoincarePolynomial PoincarePolynomial::one() {
  PoincarePolynomial out;
  out.set(0, 1);
  return out;
}

PoincarePolynomial sl_local_poincare(int n) {
  if (n < 1) throw validation_error("rank must be at least 1");
  const int base = n * (n - 1) / 2;
  PoincarePolynomial poly;
  for (int q = base; q <= base + n - 1; ++q) poly.set(q, binomial(n - 1, q - base));
  return poly;
}

PoincarePolynomial kunneth_assemble(const std::vector<PoincarePolynomial>& locals,
                                    int expected_places) {
  if (static_cast<int>(locals.size()) != expected_places)
    throw validation_error("place count mismatch: got " + std::to_string(locals.size()) +
                           " local factors, expected " + std::to_string(expected_places));
  PoincarePolynomial out = PoincarePolynomial::one();
  for (const PoincarePolynomial& local : locals) out = out * local;
  return out;
}

LefschetzValue lefschetz_infinity(const std::vector<LefschetzValue>& locals, int expected_places) {
  if (static_cast<int>(locals.size()) != expected_places)
    throw validation_error("place count mismatch: got " + std::to_string(locals.size()) +
                           " local factors, expected " + std::to_string(expected_places));
  LefschetzValue out{1, 0};
  for (const LefschetzValue& local : locals) {
    out.coefficient = checked_mul(out.coefficient, local.coefficient);
    out.symbol_power += local.symbol_power;
  }
  return out;
}

Int steinberg_shift(const std::vector<Int>& finite_place_ranks) {
  Int total = 0;
  for (Int rank : finite_place_ranks) {
    if (rank < 0) throw validation_error("finite place ranks must be nonnegative");
    total += rank;
  }
  return total;
}

PoincarePolynomial gl_sl_poincare(const PoincarePolynomial& sl_poly, int r2) {
  if (r2 < 1) throw validation_error("need at least one complex place");
  PoincarePolynomial binomial_factor;
  for (int k = 0; k <= r2 - 1; ++k) binomial_factor.set(k, binomial(r2 - 1, k));
  return sl_poly * binomial_factor;
}

}  // namespace cuspcoh
