#include "cuspcoh/field_datum.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cuspcoh/errors.hpp"

namespace cuspcoh {
namespace {

// Subgroup generated by `gens`, by breadth-first closure under left
// multiplication. Throws once the element count passes `cap`.
std::set<Perm> generate_subgroup(int degree, const std::vector<Perm>& gens, Int cap) {
  std::set<Perm> seen;
  std::deque<Perm> work;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Perm cur = work.front();
    work.pop_front();
    for (const Perm& g : gens) {
      Perm next = g * cur;
      if (seen.insert(next).second) {
        if (static_cast<Int>(seen.size()) > cap)
          throw resource_error("permutation group exceeds the element cap of " + std::to_string(cap));
        work.push_back(next);
      }
    }
  }
  return seen;
}

void enforce_cap(std::size_t size, Int cap) {
  if (static_cast<Int>(size) > cap)
    throw resource_error("permutation group exceeds the element cap of " + std::to_string(cap));
}

}  // namespace

FieldDatum::FieldDatum(std::vector<std::string> labels, Perm conjugation,
                       std::vector<Perm> generators)
    : labels_(std::move(labels)),
      conjugation_(std::move(conjugation)),
      generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (labels_.empty()) throw validation_error("embedding set must be nonempty");
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size())
    throw validation_error("embedding labels must be distinct");
  if (conjugation_.size() != degree())
    throw validation_error("conjugation must act on all embeddings");
  if (!conjugation_.is_involution())
    throw validation_error("conjugation must be an involution");
  for (const Perm& g : generators_)
    if (g.size() != degree())
      throw validation_error("every generator must act on all embeddings");
}

int FieldDatum::index_of(const std::string& label) const {
  for (int i = 0; i < degree(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  throw validation_error("unknown embedding label: " + label);
}

std::vector<Perm> FieldDatum::group_elements(Int cap) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->group) {
      enforce_cap(cache_->group->size(), cap);
      return *cache_->group;
    }
  }
  std::vector<Perm> gens = generators_;
  gens.push_back(conjugation_);
  std::set<Perm> elements = generate_subgroup(degree(), gens, cap);
  std::vector<Perm> out(elements.begin(), elements.end());
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->group) cache_->group = out;
  return out;
}

std::vector<Perm> FieldDatum::commutator_normal_closure(Int cap) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->closure) {
      enforce_cap(cache_->closure->size(), cap);
      return *cache_->closure;
    }
  }
  const std::vector<Perm> gamma = group_elements(cap);
  const Perm& c = conjugation_;

  // Grow an effective generating set: a candidate enlarges it only when it
  // falls outside the subgroup built so far, so closure rebuilds stay cheap
  // (the subgroup chain has logarithmic length).
  std::vector<Perm> gens;
  std::set<Perm> closure{Perm::identity(degree())};
  auto absorb = [&](const Perm& candidate) {
    if (closure.count(candidate)) return false;
    gens.push_back(candidate);
    closure = generate_subgroup(degree(), gens, cap);
    return true;
  };
  for (const Perm& g : gamma) absorb(g * c * g.inverse() * c);

  // Saturate under conjugation by the ambient generators.
  std::vector<Perm> conjugators = generators_;
  conjugators.push_back(c);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(closure.begin(), closure.end());
    for (const Perm& element : snapshot)
      for (const Perm& g : conjugators)
        if (absorb(g * element * g.inverse())) grew = true;
  }

  std::vector<Perm> out(closure.begin(), closure.end());
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->closure) cache_->closure = out;
  return out;
}

std::vector<std::vector<int>> FieldDatum::f1_partition(Int cap) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->partition && cache_->closure) {
      enforce_cap(cache_->closure->size(), cap);
      return *cache_->partition;
    }
  }
  std::vector<std::vector<int>> out = orbit_partition(degree(), commutator_normal_closure(cap));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->partition) cache_->partition = out;
  return out;
}

bool FieldDatum::transitive(Int cap) const {
  return orbit_partition(degree(), group_elements(cap)).size() == 1;
}

std::vector<std::vector<int>> orbit_partition(int degree, const std::vector<Perm>& elements) {
  std::vector<char> placed(static_cast<std::size_t>(degree), 0);
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < degree; ++start) {
    if (placed[static_cast<std::size_t>(start)]) continue;
    std::set<int> orbit;
    std::deque<int> work{start};
    orbit.insert(start);
    while (!work.empty()) {
      int cur = work.front();
      work.pop_front();
      for (const Perm& g : elements) {
        int next = g(cur);
        if (orbit.insert(next).second) work.push_back(next);
      }
    }
    std::vector<int> block(orbit.begin(), orbit.end());
    for (int i : block) placed[static_cast<std::size_t>(i)] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace cuspcoh
