#include "cuspcoh/weights.hpp"

#include <algorithm>
#include <numeric>

#include "cuspcoh/errors.hpp"

namespace cuspcoh {

bool is_dominant(const LocalWeight& b) {
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i - 1] < b[i]) return false;
  return true;
}

LocalWeight apply_longest_weyl(const LocalWeight& b) {
  return LocalWeight(b.rbegin(), b.rend());
}

LocalWeight contragredient_weight(const LocalWeight& b) {
  LocalWeight out(b.rbegin(), b.rend());
  for (Int& v : out) v = -v;
  return out;
}

LocalWeight purity_partner(const LocalWeight& b, Int w) {
  LocalWeight out = contragredient_weight(b);
  for (Int& v : out) v += w;
  return out;
}

FundamentalCoords fundamental_from_b(const LocalWeight& b) {
  const int n = static_cast<int>(b.size());
  if (n == 0) throw validation_error("weight vector must be nonempty");
  FundamentalCoords coords;
  coords.a.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) coords.a.emplace_back(b[i] - b[i + 1] + 1);
  Int sum = std::accumulate(b.begin(), b.end(), Int{0});
  coords.d = Rat(sum, n);
  return coords;
}

LocalWeight b_from_fundamental(const FundamentalCoords& coords, int n) {
  if (n < 1 || static_cast<int>(coords.a.size()) != n - 1)
    throw validation_error("fundamental coordinates must have length n - 1");
  for (std::size_t i = 0; i < coords.a.size(); ++i)
    if (coords.a[i].denominator() != 1)
      throw validation_error("a_" + std::to_string(i + 1) + " = " + rat_string(coords.a[i]) +
                             " violates a_i in Z");
  Rat nd = coords.d * n;
  if (nd.denominator() != 1)
    throw validation_error("n*d = " + rat_string(nd) + " violates n*d in Z");
  Int weighted = 0;  // sum of i * (a_i - 1)
  for (int i = 1; i < n; ++i) weighted += i * (coords.a[static_cast<std::size_t>(i - 1)].numerator() - 1);
  Int diff = nd.numerator() - weighted;
  if (((diff % n) + n) % n != 0)
    throw validation_error("congruence n*d == sum_i i*(a_i - 1) (mod n) violated: n*d = " +
                           std::to_string(nd.numerator()) + ", sum = " + std::to_string(weighted) +
                           ", n = " + std::to_string(n));
  Int r = diff / n;
  LocalWeight b(static_cast<std::size_t>(n));
  b[static_cast<std::size_t>(n - 1)] = r;
  for (int i = n - 2; i >= 0; --i)
    b[static_cast<std::size_t>(i)] =
        b[static_cast<std::size_t>(i + 1)] + coords.a[static_cast<std::size_t>(i)].numerator() - 1;
  return b;
}

Weight::Weight(int n, std::map<std::string, LocalWeight> per_embedding)
    : n_(n), per_embedding_(std::move(per_embedding)) {
  if (n_ < 1) throw validation_error("weight rank must be at least 1");
  if (per_embedding_.empty()) throw validation_error("weight must cover at least one embedding");
  for (const auto& [label, b] : per_embedding_)
    if (static_cast<int>(b.size()) != n_)
      throw validation_error("weight at embedding '" + label + "' must have length " +
                             std::to_string(n_));
}

const LocalWeight& Weight::at(const std::string& label) const {
  auto it = per_embedding_.find(label);
  if (it == per_embedding_.end())
    throw validation_error("weight has no component at embedding '" + label + "'");
  return it->second;
}

bool Weight::dominant() const {
  for (const auto& [label, b] : per_embedding_)
    if (!is_dominant(b)) return false;
  return true;
}

void Weight::check_compatible(const FieldDatum& datum) const {
  if (static_cast<int>(per_embedding_.size()) != datum.degree())
    throw validation_error("weight must have exactly one component per embedding");
  for (const std::string& label : datum.labels())
    if (!per_embedding_.count(label))
      throw validation_error("weight is missing embedding '" + label + "'");
}

Rat Weight::determinant_coefficient(const std::string& label) const {
  const LocalWeight& b = at(label);
  Int sum = std::accumulate(b.begin(), b.end(), Int{0});
  return Rat(sum, n_);
}

std::optional<Int> algebraicity_weight(const Weight& weight, const FieldDatum& datum) {
  weight.check_compatible(datum);
  const bool has_real_place = datum.conjugation().has_fixed_point();
  std::optional<Rat> common;
  for (int i = 0; i < datum.degree(); ++i) {
    const std::string& label = datum.label(i);
    Rat value = weight.determinant_coefficient(label);
    if (!has_real_place) value += weight.determinant_coefficient(datum.label(datum.conjugation()(i)));
    if (!common) {
      common = value;
    } else if (*common != value) {
      return std::nullopt;
    }
  }
  if (common->denominator() != 1) return std::nullopt;
  return common->numerator();
}

namespace {

// Weight components indexed by embedding position, for the group loops.
std::vector<const LocalWeight*> components_by_index(const Weight& weight, const FieldDatum& datum) {
  std::vector<const LocalWeight*> by_index(static_cast<std::size_t>(datum.degree()));
  for (int e = 0; e < datum.degree(); ++e) by_index[static_cast<std::size_t>(e)] = &weight.at(datum.label(e));
  return by_index;
}

// Purity of the weight twisted by g: b^{g.eta}_i + b^{g.c(eta)}_{n-i+1} = w.
bool twist_is_pure(const std::vector<const LocalWeight*>& by_index, const Perm& conjugation,
                   const Perm& g, int n, Int w) {
  for (std::size_t e = 0; e < by_index.size(); ++e) {
    const LocalWeight& left = *by_index[static_cast<std::size_t>(g(static_cast<int>(e)))];
    const LocalWeight& right = *by_index[static_cast<std::size_t>(g(conjugation(static_cast<int>(e))))];
    for (int i = 0; i < n; ++i)
      if (left[static_cast<std::size_t>(i)] + right[static_cast<std::size_t>(n - 1 - i)] != w)
        return false;
  }
  return true;
}

}  // namespace

std::optional<Int> purity_weight(const Weight& weight, const FieldDatum& datum) {
  weight.check_compatible(datum);
  auto by_index = components_by_index(weight, datum);
  Int w = by_index[0]->front() + by_index[static_cast<std::size_t>(datum.conjugation()(0))]->back();
  if (!twist_is_pure(by_index, datum.conjugation(), Perm::identity(datum.degree()), weight.rank(), w))
    return std::nullopt;
  return w;
}

std::optional<Int> strong_purity_weight(const Weight& weight, const FieldDatum& datum, Int cap) {
  std::optional<Int> w = purity_weight(weight, datum);
  if (!w) return std::nullopt;
  auto by_index = components_by_index(weight, datum);
  for (const Perm& g : datum.group_elements(cap))
    if (!twist_is_pure(by_index, datum.conjugation(), g, weight.rank(), *w)) return std::nullopt;
  return w;
}

BaseChangeFactorization base_change_factor(const Weight& weight, const FieldDatum& datum, Int cap) {
  std::optional<Int> w = strong_purity_weight(weight, datum, cap);
  if (!w) throw validation_error("base_change_factor requires a strongly pure weight");
  BaseChangeFactorization out;
  out.w = *w;
  out.blocks = datum.f1_partition(cap);
  out.block_weights.reserve(out.blocks.size());
  for (const std::vector<int>& block : out.blocks) {
    const LocalWeight& common = weight.at(datum.label(block.front()));
    for (int member : block)
      if (weight.at(datum.label(member)) != common)
        throw contract_error(
            "strongly pure weight is not constant on a block of the f1 partition");
    out.block_weights.push_back(common);
  }
  return out;
}

}  // namespace cuspcoh
