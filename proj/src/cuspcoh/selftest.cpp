#include "cuspcoh/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cuspcoh/cohomology.hpp"
#include "cuspcoh/exterior.hpp"

namespace cuspcoh {
namespace {

constexpr std::uint64_t kSeedBase = 0x5eed5eedULL;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.messages.size() < 8) result_.messages.push_back(what);
    }
  }

  template <typename Fn>
  void check_throws(Fn&& fn, const std::string& what) {
    ++result_.checks;
    try {
      fn();
    } catch (const std::exception&) {
      return;
    }
    ++result_.failures;
    if (result_.messages.size() < 8) result_.messages.push_back(what + " (nothing was thrown)");
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

Perm random_perm(int degree, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(std::move(images));
}

Perm random_involution(int degree, bool fixed_point_free, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(degree));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::size_t pos = 0;
  // Pair consecutive entries of the shuffle; optionally leave a tail fixed.
  std::size_t pairs = static_cast<std::size_t>(degree) / 2;
  if (!fixed_point_free && degree >= 2) pairs = std::uniform_int_distribution<std::size_t>(0, pairs - 1)(rng);
  for (std::size_t k = 0; k < pairs; ++k, pos += 2) {
    images[static_cast<std::size_t>(order[pos])] = order[pos + 1];
    images[static_cast<std::size_t>(order[pos + 1])] = order[pos];
  }
  return Perm(std::move(images));
}

std::vector<std::string> numbered_labels(int degree) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

// Image of a block under a permutation, as its smallest member's block index.
int block_image(const std::vector<std::vector<int>>& blocks, const Perm& g, int block_index) {
  int moved = g(blocks[static_cast<std::size_t>(block_index)].front());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].begin(), blocks[b].end(), moved) != blocks[b].end())
      return static_cast<int>(b);
  throw contract_error("permutation image left the partition");
}

Weight twist_weight(const Weight& weight, const FieldDatum& datum, const Perm& g) {
  // (^g lambda)^eta = lambda^{g^{-1} eta}.
  Perm inv = g.inverse();
  std::map<std::string, LocalWeight> components;
  for (int e = 0; e < datum.degree(); ++e)
    components[datum.label(e)] = weight.at(datum.label(inv(e)));
  return Weight(weight.rank(), std::move(components));
}

}  // namespace

FieldDatum imaginary_quadratic_datum() {
  return FieldDatum({"eta", "eta_bar"}, Perm({1, 0}), {});
}

FieldDatum totally_real_datum(int degree) {
  return FieldDatum(numbered_labels(degree), Perm::identity(degree), {});
}

FieldDatum s3_sextic_datum() {
  // Labels are the six group elements; conjugation is left translation by a
  // transposition, the generator left translation by a 3-cycle.
  std::vector<std::string> labels{"e", "a", "a2", "b", "ab", "a2b"};
  Perm conj({3, 5, 4, 0, 2, 1});
  Perm rotate({1, 2, 0, 4, 5, 3});
  return FieldDatum(std::move(labels), std::move(conj), {std::move(rotate)});
}

FieldDatum random_field_datum(Rng& rng, bool force_totally_imaginary) {
  int degree;
  if (force_totally_imaginary) {
    const int choices[] = {2, 4, 6};
    degree = choices[std::uniform_int_distribution<int>(0, 2)(rng)];
  } else {
    degree = std::uniform_int_distribution<int>(1, 6)(rng);
  }
  Perm conj = random_involution(degree, force_totally_imaginary, rng);
  std::vector<Perm> generators;
  int count = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < count; ++i) generators.push_back(random_perm(degree, rng));
  return FieldDatum(numbered_labels(degree), std::move(conj), std::move(generators));
}

LocalWeight random_dominant(int n, Int lo, Int hi, Rng& rng) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  LocalWeight b(static_cast<std::size_t>(n));
  for (Int& v : b) v = dist(rng);
  std::sort(b.begin(), b.end(), std::greater<>());
  return b;
}

namespace {

// Dominant vector with a prescribed coordinate sum: random gaps, the first
// one adjusted so the base entry comes out integral.
LocalWeight random_dominant_with_sum(int n, Int target, Rng& rng) {
  std::uniform_int_distribution<Int> gap(0, 3);
  std::vector<Int> gaps(static_cast<std::size_t>(n - 1));
  for (Int& g : gaps) g = gap(rng);
  Int weighted = 0;
  for (int k = 1; k < n; ++k) weighted += k * gaps[static_cast<std::size_t>(k - 1)];
  if (n > 1) {
    Int defect = ((target - weighted) % n + n) % n;
    gaps[0] += defect;
    weighted += defect;
  }
  Int base = (target - weighted) / n;
  LocalWeight b(static_cast<std::size_t>(n), base);
  for (int j = n - 2; j >= 0; --j)
    b[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j + 1)] + gaps[static_cast<std::size_t>(j)];
  return b;
}

}  // namespace

Weight random_strongly_pure_weight(const FieldDatum& datum, int n, Int w, Rng& rng) {
  if (w % 2 != 0) throw validation_error("the constructive generator needs an even w");
  const auto blocks = datum.f1_partition();
  const Perm& c = datum.conjugation();

  std::vector<LocalWeight> assigned(blocks.size());
  std::vector<char> done(blocks.size(), 0);
  std::uniform_int_distribution<Int> bump(0, 3);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (done[b]) continue;
    int partner = block_image(blocks, c, static_cast<int>(b));
    if (partner == static_cast<int>(b)) {
      // Self-paired block: the vector must satisfy x_i + x_{n-i+1} = w.
      LocalWeight x(static_cast<std::size_t>(n));
      Int floor = w / 2;
      Int prev = floor + 4;
      for (int i = 0; i < n / 2; ++i) {
        Int v = std::min(prev, floor + bump(rng));
        x[static_cast<std::size_t>(i)] = v;
        x[static_cast<std::size_t>(n - 1 - i)] = w - v;
        prev = v;
      }
      if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = floor;
      assigned[b] = std::move(x);
      done[b] = 1;
    } else {
      // Coordinate sum n*w/2, so every determinant coefficient is w/2 and
      // the conjugate block inherits the same sum.
      LocalWeight x = random_dominant_with_sum(n, n * (w / 2), rng);
      assigned[static_cast<std::size_t>(partner)] = purity_partner(x, w);
      assigned[b] = std::move(x);
      done[b] = done[static_cast<std::size_t>(partner)] = 1;
    }
  }

  std::map<std::string, LocalWeight> components;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int member : blocks[b]) components[datum.label(member)] = assigned[b];
  return Weight(n, std::move(components));
}

namespace {

void suite_galois(Suite& suite) {
  std::vector<FieldDatum> datums{imaginary_quadratic_datum(), totally_real_datum(3),
                                 s3_sextic_datum()};
  {
    // Cyclic cubic model: identity conjugation, one 3-cycle.
    datums.push_back(FieldDatum(numbered_labels(3), Perm::identity(3), {Perm({1, 2, 0})}));
  }
  Rng rng(kSeedBase + 1);
  for (int i = 0; i < 12; ++i) datums.push_back(random_field_datum(rng, i % 2 == 0));

  suite.check(datums[0].group_elements().size() == 2, "imaginary quadratic group order");
  suite.check(datums[0].commutator_normal_closure().size() == 1,
              "imaginary quadratic trivial closure");
  suite.check(datums[1].f1_partition().size() == 3, "totally real singleton partition");
  suite.check(datums[3].group_elements().size() == 3, "cyclic cubic group order");
  suite.check(datums[2].group_elements().size() == 6, "sextic group order");
  suite.check(datums[2].commutator_normal_closure().size() == 3, "sextic closure order");
  suite.check(datums[2].f1_partition() ==
                  std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}},
              "sextic partition blocks");

  for (const FieldDatum& datum : datums) {
    auto group = datum.group_elements();
    std::set<Perm> set(group.begin(), group.end());
    suite.check(set.count(datum.conjugation()) == 1, "group contains conjugation");
    bool closed = true;
    for (const Perm& g : group)
      if (!set.count(g.inverse())) closed = false;
    for (std::size_t i = 0; i < std::min<std::size_t>(group.size(), 12); ++i)
      for (std::size_t j = 0; j < std::min<std::size_t>(group.size(), 12); ++j)
        if (!set.count(group[i] * group[j])) closed = false;
    suite.check(closed, "group closed under composition and inverse");

    auto closure = datum.commutator_normal_closure();
    std::set<Perm> nset(closure.begin(), closure.end());
    bool normal = true;
    for (const Perm& nu : closure) {
      for (const Perm& g : datum.generators())
        if (!nset.count(g * nu * g.inverse())) normal = false;
      if (!nset.count(datum.conjugation() * nu * datum.conjugation().inverse())) normal = false;
    }
    suite.check(normal, "closure is normal under the generators");

    auto blocks = datum.f1_partition();
    std::size_t covered = 0;
    for (const auto& block : blocks) covered += block.size();
    suite.check(covered == static_cast<std::size_t>(datum.degree()), "partition covers embeddings");
    if (datum.transitive()) {
      bool equal_sizes = true;
      for (const auto& block : blocks)
        if (block.size() != blocks.front().size()) equal_sizes = false;
      suite.check(equal_sizes, "transitive datum has equal block sizes");
    }

    // Central conjugation forces a trivial closure.
    bool central = true;
    for (const Perm& g : group)
      if (g * datum.conjugation() != datum.conjugation() * g) central = false;
    if (central) {
      suite.check(closure.size() == 1, "central conjugation gives trivial closure");
      suite.check(blocks.size() == static_cast<std::size_t>(datum.degree()),
                  "central conjugation gives singleton blocks");
    }
  }

  suite.check_throws([&] { s3_sextic_datum().group_elements(3); },
                     "group cap must raise a resource error");
}

void suite_weight_coordinates(Suite& suite, const Options& options) {
  Rng rng(kSeedBase + 2);
  std::uniform_int_distribution<Int> entry(-20, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    LocalWeight b(static_cast<std::size_t>(n));
    for (Int& v : b) v = entry(rng);
    std::sort(b.begin(), b.end(), std::greater<>());
    if (b_from_fundamental(fundamental_from_b(b), n) != b) {
      suite.check(false, "coordinate roundtrip failed");
    } else {
      suite.check(true, "");
    }
  }
  suite.check_throws([] { b_from_fundamental(FundamentalCoords{{Rat(2)}, Rat(0)}, 2); },
                     "coordinate congruence violation must throw");

  // Purity forces d = w/2, exactly.
  for (int trial = 0; trial < 200; ++trial) {
    FieldDatum datum = random_field_datum(rng, true);
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    Int w = 2 * std::uniform_int_distribution<Int>(-3, 3)(rng);
    Weight weight = random_strongly_pure_weight(datum, n, w, rng);
    auto pw = purity_weight(weight, datum);
    suite.check(pw.has_value() && *pw == w, "constructed weight is pure");
    bool halves = true;
    for (const std::string& label : datum.labels())
      if (weight.determinant_coefficient(label) != Rat(w, 2)) halves = false;
    suite.check(halves, "purity forces d = w/2");

    auto sw = strong_purity_weight(weight, datum, options.group_cap);
    suite.check(sw.has_value() && *sw == w, "constructed weight is strongly pure");

    // Strong purity is stable under every group twist.
    auto group = datum.group_elements(options.group_cap);
    const Perm& g = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
    auto tw = strong_purity_weight(twist_weight(weight, datum, g), datum, options.group_cap);
    suite.check(tw.has_value() && *tw == w, "strong purity is twist-stable");
  }
}

void suite_base_change(Suite& suite, const Options& options) {
  Rng rng(kSeedBase + 3);
  std::vector<FieldDatum> datums{s3_sextic_datum(), imaginary_quadratic_datum()};
  for (int i = 0; i < 60; ++i) datums.push_back(random_field_datum(rng, i % 3 != 0));

  for (const FieldDatum& datum : datums) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    Int w = 2 * std::uniform_int_distribution<Int>(-2, 2)(rng);
    Weight weight = random_strongly_pure_weight(datum, n, w, rng);
    auto sw = strong_purity_weight(weight, datum, options.group_cap);
    suite.check(sw.has_value(), "constructive weight is strongly pure");
    if (!sw) continue;

    BaseChangeFactorization factorization = base_change_factor(weight, datum, options.group_cap);
    suite.check(factorization.blocks == datum.f1_partition(options.group_cap),
                "factorization blocks are the orbit partition");
    bool lifts = true;
    for (std::size_t b = 0; b < factorization.blocks.size(); ++b)
      for (int member : factorization.blocks[b])
        if (weight.at(datum.label(member)) != factorization.block_weights[b]) lifts = false;
    suite.check(lifts, "block weights lift back to the weight");

    // Break block constancy: the weight must stop being strongly pure.
    auto big = std::find_if(factorization.blocks.begin(), factorization.blocks.end(),
                            [](const auto& block) { return block.size() >= 2; });
    if (big != factorization.blocks.end()) {
      std::map<std::string, LocalWeight> components = weight.per_embedding();
      components[datum.label((*big)[1])][0] += 2;
      Weight broken(weight.rank(), std::move(components));
      suite.check(!strong_purity_weight(broken, datum, options.group_cap).has_value(),
                  "block violation must break strong purity");
    }
  }
}

void suite_lie(Suite& suite, int max_n) {
  for (int n = 1; n <= std::max(max_n, 3); ++n) {
    TorusChar sum(static_cast<std::size_t>(n - 1), 0);
    for (auto [i, j] : positive_roots(n)) {
      TorusChar root = root_compact(n, i, j);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += root[k];
    }
    suite.check(sum == two_rho_compact(n), "2rho equals the root sum");
    suite.check(dominance_interval_check(two_rho_compact(n), n), "2rho inside the interval");
    suite.check(dominance_interval_check(TorusChar(static_cast<std::size_t>(n - 1), 0), n),
                "zero inside the interval");
  }

  Rng rng(kSeedBase + 4);
  std::uniform_int_distribution<Int> entry(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(2, std::max(max_n, 2) + 1)(rng);
    std::vector<Int> p(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n));
    for (Int& v : p) v = entry(rng);
    for (Int& v : q) v = entry(rng);
    LocalWeight rev(p.rbegin(), p.rend());
    suite.check(apply_longest_weyl(apply_longest_weyl(p)) == p, "longest element is an involution");
    suite.check(apply_longest_weyl(p) == rev, "longest element reverses");

    // Additivity and invariance under constant shifts of p - q.
    std::vector<Int> p2 = p, shift = p;
    Int t = entry(rng);
    for (Int& v : p2) v += t;
    suite.check(compact_torus_restrict(p2, q) == compact_torus_restrict(p, q),
                "restriction kills constant shifts");
    std::vector<Int> psum(static_cast<std::size_t>(n)), qsum(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      psum[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] + q[static_cast<std::size_t>(i)];
      qsum[static_cast<std::size_t>(i)] = 0;
    }
    TorusChar lhs = compact_torus_restrict(psum, qsum);
    TorusChar a = compact_torus_restrict(p, std::vector<Int>(static_cast<std::size_t>(n), 0));
    TorusChar b = compact_torus_restrict(q, std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    suite.check(lhs == a, "restriction is additive");
  }
}

void suite_wedge(Suite& suite, int max_n, const Options& options) {
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    const int dim = n * n - 1;
    for (int q = 0; q <= dim; ++q) {
      CharacterMultiset lemma = wedge_p_characters(n, q);
      suite.check(lemma.total() == binomial(dim, q), "wedge total is the binomial");
      CharacterMultiset oracle = adjoint_wedge_oracle(n, q, false, options.jobs);
      suite.check(lemma == oracle, "wedge parametrization matches the adjoint oracle");
      bool inside = true;
      for (const auto& [gamma, mult] : lemma.entries())
        if (!dominance_interval_check(gamma, n)) inside = false;
      suite.check(inside, "wedge characters lie in [-2rho, 2rho]");
      suite.check(lemma.negated() == wedge_p_characters(n, dim - q), "wedge duality");
    }
  }
}

void suite_branching(Suite& suite, int max_n, const Options& options) {
  Rng rng(kSeedBase + 5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(1, std::min(max_n, 4))(rng);
    LocalWeight lambda = random_dominant(n, 0, 6, rng);
    CharacterMultiset weights = gl_weight_multiset(lambda, options.dim_cap, options.jobs);
    suite.check(weights.total() == weyl_dimension(lambda), "pattern count equals the dimension");

    CharacterMultiset freudenthal = gl_weight_multiset(lambda, options.dim_cap, options.jobs,
                                                       WeightOracle::Freudenthal);
    suite.check(weights == freudenthal, "pattern and Freudenthal multisets agree");

    // Multiplicities are symmetric under coordinate permutations.
    if (!weights.empty()) {
      auto it = weights.entries().begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(
                           0, weights.entries().size() - 1)(rng));
      std::vector<Int> mu = it->first;
      std::shuffle(mu.begin(), mu.end(), rng);
      suite.check(weights.multiplicity(mu) == it->second, "weight multiplicity is symmetric");
    }
  }

  for (int trial = 0; trial < 12; ++trial) {
    int n = std::uniform_int_distribution<int>(1, std::min(max_n, 3))(rng);
    Int w = 2 * std::uniform_int_distribution<Int>(-2, 2)(rng);
    PureWeightPair pair = PureWeightPair::from_lambda(random_dominant(n, -3, 3, rng), w);
    CharacterMultiset chars = pair_compact_characters(pair, options.dim_cap, options.jobs);
    suite.check(chars.total() ==
                    checked_mul(weyl_dimension(pair.lambda), weyl_dimension(pair.lambda_star)),
                "pair character total is the dimension product");
  }
}

void suite_cohomology(Suite& suite, int max_n, const Options& options) {
  auto check_pair = [&](const PureWeightPair& pair) {
    const int n = pair.rank();
    for (int q = 0; q <= n * n - 1; ++q) {
      if (coh_dimension_bruteforce(pair, q, options.dim_cap, options.jobs) !=
          coh_dimension(n, q)) {
        suite.check(false, "brute-force dimension disagrees with the closed form");
        return;
      }
    }
    suite.check(true, "");

    UniqueCharacterReport unique = verify_unique_character(pair, options.dim_cap, options.jobs);
    suite.check(unique.ok && unique.character == canonical_character(n) &&
                    unique.degree == n * (n - 1) / 2,
                "canonical character certificate");
  };

  // Exhaustive at small rank, sampled at rank four.
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    std::vector<LocalWeight> all;
    LocalWeight cur(static_cast<std::size_t>(n));
    auto enumerate = [&](auto&& self, int pos, Int hi) -> void {
      if (pos == n) {
        all.push_back(cur);
        return;
      }
      for (Int v = hi; v >= -3; --v) {
        cur[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, v);
      }
    };
    enumerate(enumerate, 0, 3);
    for (const LocalWeight& lambda : all) {
      for (Int w = lambda.front() - 3; w <= lambda.back() + 3; ++w) {
        PureWeightPair pair = PureWeightPair::from_lambda(lambda, w);
        bool in_range = true;
        for (Int v : pair.lambda_star)
          if (v < -3 || v > 3) in_range = false;
        if (!in_range) continue;
        check_pair(pair);
      }
    }
  }
  if (max_n >= 4) {
    Rng rng(kSeedBase + 6);
    for (int trial = 0; trial < 8; ++trial) {
      LocalWeight lambda = random_dominant(4, -3, 3, rng);
      Int w = std::uniform_int_distribution<Int>(lambda.front() - 3, lambda.back() + 3)(rng);
      check_pair(PureWeightPair::from_lambda(lambda, w));
    }
  }

  for (int n = 1; n <= std::max(max_n, 3); ++n) {
    PureWeightPair trivial{LocalWeight(static_cast<std::size_t>(n), 0),
                           LocalWeight(static_cast<std::size_t>(n), 0), 0};
    suite.check(chi_lambda_restricted(trivial) == canonical_character(n),
                "trivial pair chi equals the canonical character");
  }
}

void suite_lefschetz(Suite& suite) {
  for (int n = 1; n <= 8; ++n) {
    LefschetzTable table = lefschetz_local(n);
    suite.check(table.total.coefficient == (Int{1} << (n - 1)) && table.total.symbol_power == 1,
                "total Lefschetz is 2^{n-1} c");
    const int base = n * (n - 1) / 2;
    bool traces_ok = true;
    Int alt = 0;
    for (const auto& [q, value] : table.traces) {
      Int expected = ((q % 2 == 0) ? 1 : -1) * binomial(n - 1, q - base);
      if (value.coefficient != expected || value.symbol_power != 1) traces_ok = false;
      alt += ((q % 2 == 0) ? 1 : -1) * value.coefficient;
    }
    suite.check(traces_ok, "per-degree traces match the closed form");
    suite.check(alt == table.total.coefficient, "alternating sum collapses to the total");
    suite.check(table.total.nonzero(), "total Lefschetz is nonzero");
  }
}

void suite_pipeline(Suite& suite, int max_n, const Options& options) {
  Rng rng(kSeedBase + 7);

  for (Int k : {Int{0}, Int{1}, Int{5}}) {
    FieldDatum datum = imaginary_quadratic_datum();
    Weight weight(2, {{"eta", {k, 0}}, {"eta_bar", {k, 0}}});
    Report report = nonvanishing_report(weight, datum, options);
    suite.check(report.passed && !report.out_of_scope, "imaginary quadratic pipeline passes");
    bool window_ok = false, lefschetz_ok = false;
    for (const Stage& stage : report.stages) {
      if (stage.name == "sl-window")
        window_ok = stage.certificate["window"] == Json::array({1, 2});
      if (stage.name == "lefschetz-infinity")
        lefschetz_ok = stage.certificate["coeff"] == 2;
    }
    suite.check(window_ok, "degree window is [1, 2]");
    suite.check(lefschetz_ok, "Lefschetz coefficient at infinity is 2");
  }

  {
    FieldDatum datum = imaginary_quadratic_datum();
    Weight impure(2, {{"eta", {2, 0}}, {"eta_bar", {1, 1}}});
    Report report = nonvanishing_report(impure, datum, options);
    suite.check(!report.passed && report.failed_stage == "purity", "impure weight halts at purity");
    Weight lopsided(2, {{"eta", {1, 0}}, {"eta_bar", {0, 0}}});
    suite.check(theta_selfdual_check(lopsided, datum) == false, "impure weight is not self-dual");
  }

  {
    FieldDatum datum = totally_real_datum(2);
    Weight weight(2, {{"e0", {2, 0}}, {"e1", {2, 0}}});
    Report report = nonvanishing_report(weight, datum, options);
    suite.check(report.passed && report.out_of_scope, "totally real datum stops after purity");
  }

  // Cuspidal parameters and self-duality across random pairs.
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(1, std::max(max_n, 2))(rng);
    Int w = std::uniform_int_distribution<Int>(-4, 4)(rng);
    PureWeightPair pair = PureWeightPair::from_lambda(random_dominant(n, -4, 4, rng), w);
    CuspidalParameters params = cuspidal_parameters(pair);
    bool sums = true;
    for (int j = 0; j < n; ++j)
      if (params.alpha[static_cast<std::size_t>(j)] + params.beta[static_cast<std::size_t>(j)] !=
          Rat(-w))
        sums = false;
    suite.check(sums, "cuspidal parameters sum to -w");

    FieldDatum datum = imaginary_quadratic_datum();
    Weight weight(n, {{"eta", pair.lambda}, {"eta_bar", pair.lambda_star}});
    suite.check(theta_selfdual_check(weight, datum), "pure weights are theta self-dual");
  }

  // Degree windows of the assembled polynomial.
  for (int r2 = 1; r2 <= 3; ++r2) {
    for (int n = 1; n <= std::max(max_n, 2); ++n) {
      PoincarePolynomial poly = kunneth_assemble(
          std::vector<PoincarePolynomial>(static_cast<std::size_t>(r2), sl_local_poincare(n)), r2);
      suite.check(poly.min_degree() == r2 * n * (n - 1) / 2 &&
                      poly.max_degree() == r2 * (n * (n - 1) / 2 + n - 1),
                  "assembled window endpoints");
      PoincarePolynomial gl = gl_sl_poincare(poly, r2);
      suite.check(gl.value_at_one() == poly.value_at_one() * (Int{1} << (r2 - 1)),
                  "total dimension ratio is 2^{r2-1}");
    }
  }

  suite.check(steinberg_shift({}) == 0, "empty shift");
  suite.check(steinberg_shift({2}) == 2, "single finite place");
  suite.check(steinberg_shift({2, 2}) == 4, "two finite places");
}

}  // namespace

std::vector<SuiteResult> run_selftest(int max_n, const Options& options) {
  if (max_n < 1 || max_n > 5)
    throw validation_error("selftest rank bound must be between 1 and 5");
  std::vector<SuiteResult> results;
  auto run = [&](const std::string& name, auto&& body) {
    Suite suite(name);
    body(suite);
    results.push_back(suite.take());
  };
  run("galois-orbits", [&](Suite& s) { suite_galois(s); });
  run("weight-coordinates", [&](Suite& s) { suite_weight_coordinates(s, options); });
  run("purity-base-change", [&](Suite& s) { suite_base_change(s, options); });
  run("lie-torus", [&](Suite& s) { suite_lie(s, max_n); });
  run("wedge-characters", [&](Suite& s) { suite_wedge(s, max_n, options); });
  run("gt-branching", [&](Suite& s) { suite_branching(s, max_n, options); });
  run("cohomology-dimensions", [&](Suite& s) { suite_cohomology(s, max_n, options); });
  run("lefschetz", [&](Suite& s) { suite_lefschetz(s); });
  run("pipeline", [&](Suite& s) { suite_pipeline(s, max_n, options); });
  return results;
}

Json selftest_to_json(const std::vector<SuiteResult>& suites) {
  Json out;
  out["version"] = kVersion;
  Json list = Json::array();
  Int checks = 0, failures = 0;
  for (const SuiteResult& suite : suites) {
    Json entry;
    entry["suite"] = suite.name;
    entry["checks"] = suite.checks;
    entry["failures"] = suite.failures;
    if (!suite.messages.empty()) entry["messages"] = suite.messages;
    list.push_back(std::move(entry));
    checks += suite.checks;
    failures += suite.failures;
  }
  out["suites"] = std::move(list);
  out["checks"] = checks;
  out["failures"] = failures;
  out["result"] = failures == 0 ? "pass" : "fail";
  return out;
}

bool selftest_passed(const std::vector<SuiteResult>& suites) {
  for (const SuiteResult& suite : suites)
    if (suite.failures != 0) return false;
  return true;
}

}  // namespace cuspcoh
