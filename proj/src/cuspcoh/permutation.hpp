#pragma once

#include <compare>
#include <vector>

namespace cuspcoh {

// Permutation of {0, ..., n-1} stored as the total map i -> images[i].
// Composition applies the right factor first: (f * g)(i) = f(g(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;
  bool is_involution() const;
  bool has_fixed_point() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace cuspcoh
