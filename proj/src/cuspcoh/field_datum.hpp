#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cuspcoh/numeric.hpp"
#include "cuspcoh/permutation.hpp"

namespace cuspcoh {

// A finite set of embedding labels carrying a conjugation involution and a
// permutation action given by a list of generators. The group generated by
// the generators together with conjugation acts on the labels; its orbit
// structure drives the base-change factorization of weights.
class FieldDatum {
 public:
  static constexpr Int kDefaultGroupCap = 1'000'000;

  FieldDatum(std::vector<std::string> labels, Perm conjugation, std::vector<Perm> generators);

  int degree() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int index) const { return labels_[static_cast<std::size_t>(index)]; }
  int index_of(const std::string& label) const;

  const Perm& conjugation() const { return conjugation_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool totally_imaginary() const { return !conjugation_.has_fixed_point(); }
  bool totally_real() const { return conjugation_.is_identity(); }

  // Full group generated by the generators together with conjugation.
  // Deterministic lexicographic element order.
  std::vector<Perm> group_elements(Int cap = kDefaultGroupCap) const;

  // Normal closure of { g * c * g^-1 * c : g in the group }, c = conjugation.
  std::vector<Perm> commutator_normal_closure(Int cap = kDefaultGroupCap) const;

  // Orbit partition of the labels under the commutator normal closure; blocks
  // are sorted by smallest member. Models the fibers of restriction to the
  // subfield cut out by that subgroup.
  std::vector<std::vector<int>> f1_partition(Int cap = kDefaultGroupCap) const;

  bool transitive(Int cap = kDefaultGroupCap) const;

 private:
  // The datum is immutable, so the derived group data is computed once and
  // shared between copies; the mutex keeps concurrent first calls safe.
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Perm>> group;
    std::optional<std::vector<Perm>> closure;
    std::optional<std::vector<std::vector<int>>> partition;
  };

  std::vector<std::string> labels_;
  Perm conjugation_;
  std::vector<Perm> generators_;
  std::shared_ptr<Cache> cache_;
};

// Orbits of {0, ..., degree-1} under a set of permutations; blocks sorted by
// smallest member, members ascending.
std::vector<std::vector<int>> orbit_partition(int degree, const std::vector<Perm>& elements);

}  // namespace cuspcoh
