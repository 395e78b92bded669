#include "cuspcoh/lie.hpp"

#include <numeric>

#include "cuspcoh/errors.hpp"

namespace cuspcoh {

std::vector<std::pair<int, int>> positive_roots(int n) {
  std::vector<std::pair<int, int>> roots;
  roots.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);
  return roots;
}

std::vector<Int> two_rho_ambient(int n) {
  std::vector<Int> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = n - 1 - 2 * j;
  return out;
}

TorusChar two_rho_compact(int n) {
  TorusChar out(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) out[static_cast<std::size_t>(j - 1)] = 2 * (n - j);
  return out;
}

TorusChar compact_torus_restrict(const std::vector<Int>& p, const std::vector<Int>& q) {
  if (p.size() != q.size() || p.empty())
    throw validation_error("exponent vectors must be nonempty and of equal length");
  const std::size_t n = p.size();
  const Int r_last = p[n - 1] - q[n - 1];
  TorusChar out(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) out[j] = (p[j] - q[j]) - r_last;
  return out;
}

TorusChar root_compact(int n, int i, int j) {
  std::vector<Int> p(static_cast<std::size_t>(n), 0);
  p[static_cast<std::size_t>(i)] = 1;
  p[static_cast<std::size_t>(j)] = -1;
  return compact_torus_restrict(p, std::vector<Int>(static_cast<std::size_t>(n), 0));
}

bool in_root_lattice(const TorusChar& gamma, int n) {
  if (static_cast<int>(gamma.size()) != n - 1)
    throw validation_error("compact character must have length n - 1");
  Int sum = std::accumulate(gamma.begin(), gamma.end(), Int{0});
  return ((sum % n) + n) % n == 0;
}

bool dominance_interval_check(const TorusChar& gamma, int n) {
  if (!in_root_lattice(gamma, n))
    throw validation_error("character is not in the root lattice");
  // n times the sum-zero ambient lift of gamma.
  Int sum = std::accumulate(gamma.begin(), gamma.end(), Int{0});
  std::vector<Int> lift(static_cast<std::size_t>(n));
  for (int j = 0; j + 1 < n; ++j) lift[static_cast<std::size_t>(j)] = n * gamma[static_cast<std::size_t>(j)] - sum;
  lift[static_cast<std::size_t>(n - 1)] = -sum;

  const std::vector<Int> top = two_rho_ambient(n);  // already sum-zero
  Int upper = 0, lower = 0;
  for (int j = 0; j < n; ++j) {
    upper += n * top[static_cast<std::size_t>(j)] - lift[static_cast<std::size_t>(j)];
    lower += n * top[static_cast<std::size_t>(j)] + lift[static_cast<std::size_t>(j)];
    if (upper < 0 || lower < 0) return false;
  }
  return true;
}

}  // namespace cuspcoh
