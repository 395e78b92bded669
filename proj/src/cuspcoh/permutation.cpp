#include "cuspcoh/permutation.hpp"

#include <numeric>

#include "cuspcoh/errors.hpp"

namespace cuspcoh {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v])
      throw validation_error("permutation images must form a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (size() != rhs.size())
    throw validation_error("cannot compose permutations of different degree");
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[i] = images_[rhs.images_[i]];
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[images_[i]] = i;
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if (images_[images_[i]] != i) return false;
  return true;
}

bool Perm::has_fixed_point() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] == i) return true;
  return false;
}

}  // namespace cuspcoh
