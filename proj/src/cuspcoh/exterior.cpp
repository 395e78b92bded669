#include "cuspcoh/exterior.hpp"

#include <bit>

#include "cuspcoh/lie.hpp"
#include "cuspcoh/parallel.hpp"

namespace cuspcoh {
namespace {

void check_wedge_args(int n, int q, int top) {
  if (n < 1) throw validation_error("rank must be at least 1");
  if (q < 0 || q > top)
    throw validation_error("wedge degree " + std::to_string(q) + " outside [0, " +
                           std::to_string(top) + "]");
}

// Character of each subset of the positive roots, indexed by bitmask.
std::vector<TorusChar> subset_sums(int n) {
  const auto roots = positive_roots(n);
  std::vector<TorusChar> compact;
  compact.reserve(roots.size());
  for (auto [i, j] : roots) compact.push_back(root_compact(n, i, j));

  std::vector<TorusChar> sums(std::size_t{1} << roots.size(),
                              TorusChar(static_cast<std::size_t>(n - 1), 0));
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    std::size_t low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)];
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k)
      sums[mask][k] += compact[low][k];
  }
  return sums;
}

}  // namespace

CharacterMultiset wedge_p_characters(int n, int q) {
  check_wedge_args(n, q, n * n - 1);
  const auto sums = subset_sums(n);
  const std::size_t masks = sums.size();
  CharacterMultiset out;
  for (std::size_t a = 0; a < masks; ++a) {
    const int ca = std::popcount(a);
    if (ca > q) continue;
    for (std::size_t b = 0; b < masks; ++b) {
      const int r = q - ca - std::popcount(b);
      if (r < 0 || r > n - 1) continue;
      TorusChar gamma = sums[a];
      for (std::size_t k = 0; k < gamma.size(); ++k) gamma[k] -= sums[b][k];
      out.add(gamma, binomial(n - 1, r));
    }
  }
  return out;
}

CharacterMultiset wedge_u_characters(int n, int t) {
  check_wedge_args(n, t, n * (n - 1));
  const auto sums = subset_sums(n);
  const std::size_t masks = sums.size();
  CharacterMultiset out;
  for (std::size_t a = 0; a < masks; ++a) {
    const int ca = std::popcount(a);
    if (ca > t) continue;
    for (std::size_t b = 0; b < masks; ++b) {
      if (ca + std::popcount(b) != t) continue;
      TorusChar gamma = sums[a];
      for (std::size_t k = 0; k < gamma.size(); ++k) gamma[k] -= sums[b][k];
      out.add(gamma);
    }
  }
  return out;
}

namespace {

// All size-q subsets of basis[from..), accumulated into a local multiset.
void enumerate_subsets(const std::vector<TorusChar>& basis, std::size_t from, int q,
                       TorusChar& running, CharacterMultiset& out) {
  if (q == 0) {
    out.add(running);
    return;
  }
  // Not enough elements left.
  if (basis.size() - from < static_cast<std::size_t>(q)) return;
  for (std::size_t i = from; i + static_cast<std::size_t>(q) <= basis.size(); ++i) {
    for (std::size_t k = 0; k < running.size(); ++k) running[k] += basis[i][k];
    enumerate_subsets(basis, i + 1, q - 1, running, out);
    for (std::size_t k = 0; k < running.size(); ++k) running[k] -= basis[i][k];
  }
}

}  // namespace

CharacterMultiset adjoint_wedge_oracle(int n, int q, bool allow_large, int jobs) {
  check_wedge_args(n, q, n * n - 1);
  if (n > 5 && !allow_large)
    throw resource_error("adjoint wedge oracle refuses n > 5 without the override flag");

  std::vector<TorusChar> basis;
  basis.reserve(static_cast<std::size_t>(n) * n - 1);
  for (int k = 0; k < n - 1; ++k) basis.emplace_back(static_cast<std::size_t>(n - 1), 0);
  for (auto [i, j] : positive_roots(n)) basis.push_back(root_compact(n, i, j));
  for (auto [i, j] : positive_roots(n)) {
    TorusChar neg = root_compact(n, i, j);
    for (Int& v : neg) v = -v;
    basis.push_back(neg);
  }

  if (q == 0) {
    CharacterMultiset out;
    out.add(TorusChar(static_cast<std::size_t>(n - 1), 0));
    return out;
  }

  // Parallel over the smallest chosen index; merged in index order.
  auto worker = [&](std::size_t begin, std::size_t end) {
    CharacterMultiset local;
    TorusChar running(static_cast<std::size_t>(n - 1), 0);
    for (std::size_t first = begin; first < end; ++first) {
      for (std::size_t k = 0; k < running.size(); ++k) running[k] += basis[first][k];
      enumerate_subsets(basis, first + 1, q - 1, running, local);
      for (std::size_t k = 0; k < running.size(); ++k) running[k] -= basis[first][k];
    }
    return local;
  };
  return chunked_reduce<CharacterMultiset>(
      basis.size(), jobs, CharacterMultiset{}, worker,
      [](CharacterMultiset& acc, CharacterMultiset&& part) { acc.merge(std::move(part)); });
}

}  // namespace cuspcoh
