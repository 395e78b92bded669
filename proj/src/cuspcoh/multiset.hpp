#pragma once

#include <map>
#include <vector>

#include "cuspcoh/errors.hpp"
#include "cuspcoh/numeric.hpp"

namespace cuspcoh {

// Finite multiset of integer vectors (torus characters or ambient weights)
// with exact multiplicities. Map-backed, so iteration order is canonical.
class CharacterMultiset {
 public:
  using Key = std::vector<Int>;
  using Map = std::map<Key, Int>;

  void add(const Key& key, Int mult = 1) {
    if (mult <= 0) throw contract_error("multiset multiplicities must be positive");
    entries_[key] += mult;
    total_ += mult;
  }

  Int multiplicity(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
  }

  Int total() const { return total_; }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  void merge(CharacterMultiset&& other) {
    for (auto& [key, mult] : other.entries_) entries_[key] += mult;
    total_ += other.total_;
  }

  CharacterMultiset negated() const {
    CharacterMultiset out;
    for (const auto& [key, mult] : entries_) {
      Key neg = key;
      for (Int& v : neg) v = -v;
      out.add(neg, mult);
    }
    return out;
  }

  CharacterMultiset shifted(const Key& delta) const {
    CharacterMultiset out;
    for (const auto& [key, mult] : entries_) {
      if (key.size() != delta.size())
        throw validation_error("shift vector length must match the multiset keys");
      Key moved = key;
      for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += delta[i];
      out.add(moved, mult);
    }
    return out;
  }

  // Sum over common keys of the product of multiplicities: the dimension of
  // the torus-equivariant Hom between the two underlying modules.
  Int dot(const CharacterMultiset& other) const {
    const CharacterMultiset& small = entries_.size() <= other.entries_.size() ? *this : other;
    const CharacterMultiset& large = entries_.size() <= other.entries_.size() ? other : *this;
    Int sum = 0;
    for (const auto& [key, mult] : small.entries_) sum += mult * large.multiplicity(key);
    return sum;
  }

  bool operator==(const CharacterMultiset&) const = default;

 private:
  Map entries_;
  Int total_ = 0;
};

}  // namespace cuspcoh
