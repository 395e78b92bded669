#include "cuspcoh/branching.hpp"

#include <algorithm>
#include <numeric>

#include "cuspcoh/cohomology.hpp"
#include "cuspcoh/lie.hpp"
#include "cuspcoh/parallel.hpp"

namespace cuspcoh {

Int weyl_dimension(const LocalWeight& highest) {
  if (!is_dominant(highest)) throw validation_error("highest weight must be dominant");
  const int n = static_cast<int>(highest.size());
  Rat dim(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dim *= Rat(highest[static_cast<std::size_t>(i)] - highest[static_cast<std::size_t>(j)] + j - i,
                 j - i);
  if (dim.denominator() != 1) throw contract_error("Weyl dimension must be an integer");
  return dim.numerator();
}

namespace {

void check_dim_cap(Int dim1, Int dim2, Int cap) {
  if (checked_mul(dim1, dim2) > cap)
    throw resource_error("weight enumeration size " + std::to_string(dim1) + "*" +
                         std::to_string(dim2) + " exceeds the cap of " + std::to_string(cap));
}

// Rows below `prev`, each interlacing the one above, visited in descending
// lexicographic order. `sums` carries the row sums of the rows fixed so far
// (top first); at a full pattern the weight is the vector of consecutive
// row-sum differences.
void enumerate_patterns(const std::vector<Int>& prev, std::vector<Int>& sums,
                        CharacterMultiset& out) {
  if (prev.size() == 1) {
    // sums[i] is the sum of the row of length n - i, so the k-th weight
    // coordinate (1-based) is sums[n - k] - sums[n - k + 1].
    const std::size_t n = sums.size();
    std::vector<Int> mu(n);
    for (std::size_t k = 0; k < n; ++k)
      mu[k] = sums[n - 1 - k] - (k >= 1 ? sums[n - k] : 0);
    out.add(mu);
    return;
  }
  std::vector<Int> row(prev.size() - 1);
  // Recursive descent over the entries of the next row.
  auto fill = [&](auto&& self, std::size_t pos, Int partial) -> void {
    if (pos == row.size()) {
      sums.push_back(partial);
      enumerate_patterns(row, sums, out);
      sums.pop_back();
      return;
    }
    for (Int v = prev[pos]; v >= prev[pos + 1]; --v) {
      row[pos] = v;
      self(self, pos + 1, partial + v);
    }
  };
  fill(fill, 0, 0);
}

CharacterMultiset weights_by_patterns(const LocalWeight& highest, int jobs) {
  const std::size_t n = highest.size();
  Int top_sum = std::accumulate(highest.begin(), highest.end(), Int{0});
  if (n == 1) {
    CharacterMultiset out;
    out.add({top_sum});
    return out;
  }

  // Top-row prefix parallelism: branch on the second row, merge in order.
  std::vector<std::vector<Int>> second_rows;
  {
    std::vector<Int> row(n - 1);
    auto fill = [&](auto&& self, std::size_t pos) -> void {
      if (pos == row.size()) {
        second_rows.push_back(row);
        return;
      }
      for (Int v = highest[pos]; v >= highest[pos + 1]; --v) {
        row[pos] = v;
        self(self, pos + 1);
      }
    };
    fill(fill, 0);
  }

  auto worker = [&](std::size_t begin, std::size_t end) {
    CharacterMultiset local;
    for (std::size_t i = begin; i < end; ++i) {
      std::vector<Int> sums{top_sum,
                            std::accumulate(second_rows[i].begin(), second_rows[i].end(), Int{0})};
      enumerate_patterns(second_rows[i], sums, local);
    }
    return local;
  };
  return chunked_reduce<CharacterMultiset>(
      second_rows.size(), jobs, CharacterMultiset{}, worker,
      [](CharacterMultiset& acc, CharacterMultiset&& part) { acc.merge(std::move(part)); });
}

// Freudenthal recursion, entirely in integers after shifting rho to
// (n-1, n-2, ..., 0); valid because all weights share the coordinate sum.
CharacterMultiset weights_by_freudenthal(const LocalWeight& highest) {
  const int n = static_cast<int>(highest.size());
  const Int total = std::accumulate(highest.begin(), highest.end(), Int{0});

  // Dominant candidates below the highest weight: non-increasing vectors with
  // the same sum and partial sums bounded by those of the highest weight.
  std::vector<std::vector<Int>> dominants;
  std::vector<Int> partial(highest.size());
  std::partial_sum(highest.begin(), highest.end(), partial.begin());
  std::vector<Int> cur(highest.size());
  auto enumerate = [&](auto&& self, int pos, Int used) -> void {
    if (pos == n) {
      if (used == total) dominants.push_back(cur);
      return;
    }
    Int remaining = total - used;
    Int slots = n - pos;
    Int hi = partial[static_cast<std::size_t>(pos)] - used;
    if (pos > 0) hi = std::min(hi, cur[static_cast<std::size_t>(pos - 1)]);
    // Feasibility: later entries cannot exceed this one.
    for (Int v = hi; v * slots >= remaining; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, used + v);
    }
  };
  enumerate(enumerate, 0, 0);

  std::vector<Int> rho(highest.size());
  for (int j = 0; j < n; ++j) rho[static_cast<std::size_t>(j)] = n - 1 - j;
  auto norm_shifted = [&](const std::vector<Int>& v) {
    Int s = 0;
    for (int j = 0; j < n; ++j) {
      Int t = v[static_cast<std::size_t>(j)] + rho[static_cast<std::size_t>(j)];
      s += t * t;
    }
    return s;
  };

  // Level above the highest weight: sum of the cone coefficients.
  auto level = [&](const std::vector<Int>& v) {
    Int acc = 0, run = 0;
    for (int j = 0; j < n; ++j) {
      run += highest[static_cast<std::size_t>(j)] - v[static_cast<std::size_t>(j)];
      acc += run;
    }
    return acc;
  };
  std::sort(dominants.begin(), dominants.end(), [&](const auto& a, const auto& b) {
    Int la = level(a), lb = level(b);
    if (la != lb) return la < lb;
    return a > b;
  });

  const Int top_norm = norm_shifted(highest);
  std::map<std::vector<Int>, Int> mult;
  for (const auto& mu : dominants) {
    if (mu == highest) {
      mult[mu] = 1;
      continue;
    }
    Int rhs = 0;
    for (auto [i, j] : positive_roots(n)) {
      std::vector<Int> nu = mu;
      for (Int k = 1;; ++k) {
        nu[static_cast<std::size_t>(i)] += 1;
        nu[static_cast<std::size_t>(j)] -= 1;
        std::vector<Int> rep = nu;
        std::sort(rep.begin(), rep.end(), std::greater<>());
        auto it = mult.find(rep);
        if (it == mult.end() || it->second == 0) break;  // contiguous root string
        rhs += it->second * (nu[static_cast<std::size_t>(i)] - nu[static_cast<std::size_t>(j)]);
      }
    }
    Int denom = top_norm - norm_shifted(mu);
    if (denom <= 0 || (2 * rhs) % denom != 0)
      throw contract_error("Freudenthal recursion produced a non-integral multiplicity");
    Int m = 2 * rhs / denom;
    if (m > 0) mult[mu] = m;
  }

  CharacterMultiset out;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    std::vector<Int> perm = mu;
    std::sort(perm.begin(), perm.end());
    do {
      out.add(perm, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

CharacterMultiset gl_weight_multiset(const LocalWeight& highest, Int cap, int jobs,
                                     WeightOracle oracle) {
  if (!is_dominant(highest)) throw validation_error("highest weight must be dominant");
  Int dim = weyl_dimension(highest);
  check_dim_cap(dim, dim, cap);
  CharacterMultiset out = oracle == WeightOracle::GelfandTsetlin ? weights_by_patterns(highest, jobs)
                                                                 : weights_by_freudenthal(highest);
  if (out.total() != dim)
    throw contract_error("weight multiset total disagrees with the Weyl dimension");
  return out;
}

Int weight_multiplicity(const LocalWeight& highest, const std::vector<Int>& mu, Int cap, int jobs) {
  if (mu.size() != highest.size())
    throw validation_error("weight and highest weight must have the same length");
  return gl_weight_multiset(highest, cap, jobs).multiplicity(mu);
}

void PureWeightPair::validate() const {
  if (lambda.size() != lambda_star.size() || lambda.empty())
    throw validation_error("pair components must be nonempty and of equal length");
  if (!is_dominant(lambda) || !is_dominant(lambda_star))
    throw validation_error("pair components must be dominant");
  const int n = rank();
  for (int j = 0; j < n; ++j)
    if (lambda_star[static_cast<std::size_t>(j)] + lambda[static_cast<std::size_t>(n - 1 - j)] != w)
      throw validation_error("pair violates the purity pairing at index " + std::to_string(j + 1));
}

PureWeightPair PureWeightPair::from_lambda(LocalWeight lambda, Int w) {
  PureWeightPair pair{lambda, purity_partner(lambda, w), w};
  pair.validate();
  return pair;
}

CharacterMultiset pair_compact_characters(const PureWeightPair& pair, Int cap, int jobs) {
  pair.validate();
  check_dim_cap(weyl_dimension(pair.lambda), weyl_dimension(pair.lambda_star), cap);
  CharacterMultiset left = gl_weight_multiset(pair.lambda, cap, jobs);
  CharacterMultiset right = gl_weight_multiset(pair.lambda_star, cap, jobs);
  CharacterMultiset out;
  for (const auto& [mu, m1] : left.entries())
    for (const auto& [nu, m2] : right.entries())
      out.add(compact_torus_restrict(mu, nu), checked_mul(m1, m2));
  return out;
}

CharacterMultiset chi_tensor_characters(const PureWeightPair& pair, Int cap, int jobs) {
  return pair_compact_characters(pair, cap, jobs).shifted(chi_lambda_restricted(pair));
}

}  // namespace cuspcoh
