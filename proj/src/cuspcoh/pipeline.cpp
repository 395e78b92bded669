#include "cuspcoh/pipeline.hpp"

#include "cuspcoh/cohomology.hpp"
#include "cuspcoh/parallel.hpp"

namespace cuspcoh {
namespace {

Json lefschetz_to_json(const LefschetzValue& value) {
  Json out;
  out["coeff"] = value.coefficient;
  out["c_power"] = value.symbol_power;
  return out;
}

Json poincare_to_json(const PoincarePolynomial& poly) {
  Json out = Json::object();
  for (const auto& [degree, value] : poly.coefficients()) out[std::to_string(degree)] = value;
  return out;
}

struct PlacePair {
  int eta;
  int eta_bar;
  PureWeightPair pair;
};

}  // namespace

Report nonvanishing_report(const Weight& weight, const FieldDatum& datum, const Options& options) {
  Report report;
  auto pass = [&](const std::string& name, Json certificate) {
    report.stages.push_back(Stage{name, "pass", std::move(certificate)});
  };
  auto fail = [&](const std::string& name, Json witness) {
    report.stages.push_back(Stage{name, "fail", std::move(witness)});
    report.passed = false;
    report.failed_stage = name;
  };

  weight.check_compatible(datum);
  const int n = weight.rank();
  if (!datum.transitive(options.group_cap))
    report.warnings.push_back("galois action is not transitive on the embeddings");

  // Dominance.
  for (int e = 0; e < datum.degree(); ++e) {
    const LocalWeight& b = weight.at(datum.label(e));
    if (!is_dominant(b)) {
      Json witness;
      witness["eta"] = datum.label(e);
      witness["b"] = b;
      fail("dominance", std::move(witness));
      return report;
    }
  }
  pass("dominance", Json::object());

  // Algebraicity.
  std::optional<Int> alg = algebraicity_weight(weight, datum);
  if (!alg) {
    Json witness;
    witness["reason"] = datum.conjugation().has_fixed_point()
                            ? "determinant coefficients are not a single integer"
                            : "conjugate determinant sums are not a single integer";
    fail("algebraicity", std::move(witness));
    return report;
  }
  {
    Json cert;
    cert["w"] = *alg;
    cert["case"] = datum.conjugation().has_fixed_point() ? "real-place" : "totally-imaginary";
    pass("algebraicity", std::move(cert));
  }

  // Purity.
  std::optional<Int> w = purity_weight(weight, datum);
  if (!w) {
    // Locate a witness (eta, i) with an inconsistent sum.
    Json witness;
    const LocalWeight& first = weight.at(datum.label(0));
    const LocalWeight& conj0 = weight.at(datum.label(datum.conjugation()(0)));
    Int expected = first.front() + conj0.back();
    for (int e = 0; e < datum.degree() && !witness.contains("eta"); ++e) {
      const LocalWeight& left = weight.at(datum.label(e));
      const LocalWeight& right = weight.at(datum.label(datum.conjugation()(e)));
      for (int i = 0; i < n; ++i) {
        Int sum = left[static_cast<std::size_t>(i)] + right[static_cast<std::size_t>(n - 1 - i)];
        if (sum != expected) {
          witness["eta"] = datum.label(e);
          witness["i"] = i + 1;
          witness["sum"] = sum;
          witness["expected"] = expected;
          break;
        }
      }
    }
    fail("purity", std::move(witness));
    return report;
  }
  {
    Json cert;
    cert["w"] = *w;
    Json dets = Json::object();
    bool halves = true;
    for (const std::string& label : datum.labels()) {
      Rat d = weight.determinant_coefficient(label);
      dets[label] = rat_string(d);
      if (d != Rat(*w, 2)) halves = false;
    }
    cert["d"] = std::move(dets);
    cert["d_equals_w_over_2"] = halves;
    pass("purity", std::move(cert));
  }

  // Strong purity.
  std::vector<Perm> group = datum.group_elements(options.group_cap);
  std::optional<Int> sw = strong_purity_weight(weight, datum, options.group_cap);
  if (!sw) {
    Json witness;
    witness["w"] = *w;
    witness["reason"] = "some group twist is not pure with the same w";
    fail("strong-purity", std::move(witness));
    return report;
  }
  {
    Json cert;
    cert["w"] = *sw;
    cert["group_order"] = static_cast<Int>(group.size());
    pass("strong-purity", std::move(cert));
  }

  // Base change through the f1 partition.
  BaseChangeFactorization factorization = base_change_factor(weight, datum, options.group_cap);
  {
    Json cert;
    cert["blocks"] = blocks_to_json(datum, factorization.blocks);
    Json kappa = Json::array();
    for (const LocalWeight& b : factorization.block_weights) kappa.push_back(b);
    cert["kappa"] = std::move(kappa);
    pass("base-change", std::move(cert));
  }

  if (!datum.totally_imaginary()) {
    Json note;
    note["note"] = "pipeline out of scope beyond purity: datum is not totally imaginary";
    report.stages.push_back(Stage{"scope", "skipped", std::move(note)});
    report.passed = true;
    report.out_of_scope = true;
    return report;
  }

  // Per-place pure pairs; the representative embedding is the first of each
  // conjugate pair in label order.
  std::vector<PlacePair> places;
  {
    Json cert = Json::array();
    for (int e = 0; e < datum.degree(); ++e) {
      int bar = datum.conjugation()(e);
      if (bar < e) continue;
      PureWeightPair pair{weight.at(datum.label(e)), weight.at(datum.label(bar)), *sw};
      if (pair.lambda_star != purity_partner(pair.lambda, *sw))
        throw contract_error("pure pair assembly disagrees with the purity partner");
      pair.validate();
      Json entry;
      entry["eta"] = datum.label(e);
      entry["eta_bar"] = datum.label(bar);
      entry["lambda"] = pair.lambda;
      entry["lambda_star"] = pair.lambda_star;
      cert.push_back(std::move(entry));
      places.push_back(PlacePair{e, bar, std::move(pair)});
    }
    Json wrapped;
    wrapped["places"] = std::move(cert);
    pass("places", std::move(wrapped));
  }
  const int r2 = static_cast<int>(places.size());

  // Duality of the coefficient system under the twisted transpose.
  if (!theta_selfdual_check(weight, datum)) {
    fail("theta-selfdual", Json{{"reason", "restrictions to the trace-zero torus differ"}});
    return report;
  }
  pass("theta-selfdual", Json::object());

  // Canonical character per place, within the dimension cap. The places are
  // independent; they run concurrently and are folded back in place order.
  {
    struct PlaceOutcome {
      Json entry;
      bool ok = true;
    };
    auto examine = [&](std::size_t begin, std::size_t end) {
      std::vector<PlaceOutcome> part;
      part.reserve(end - begin);
      for (std::size_t p = begin; p < end; ++p) {
        const PlacePair& place = places[p];
        PlaceOutcome outcome;
        outcome.entry["eta"] = datum.label(place.eta);
        Int dim = weyl_dimension(place.pair.lambda);
        Int dim_star = weyl_dimension(place.pair.lambda_star);
        if (checked_mul(dim, dim_star) > options.dim_cap) {
          outcome.entry["status"] = "skipped";
          outcome.entry["reason"] = "dimension product exceeds the cap";
          part.push_back(std::move(outcome));
          continue;
        }
        UniqueCharacterReport unique = verify_unique_character(place.pair, options.dim_cap, 1);
        outcome.entry["chi0"] = unique.character;
        outcome.entry["degree"] = unique.degree;
        outcome.entry["mult_wedge_u"] = unique.mult_in_wedge_u;
        outcome.entry["mult_chi_m"] = unique.mult_in_chi_m;
        if (!unique.ok) {
          outcome.entry["mismatch"] = unique.mismatch;
          outcome.ok = false;
        }
        part.push_back(std::move(outcome));
      }
      return part;
    };
    std::vector<PlaceOutcome> outcomes = chunked_reduce<std::vector<PlaceOutcome>>(
        places.size(), options.jobs, {}, examine,
        [](std::vector<PlaceOutcome>& acc, std::vector<PlaceOutcome>&& part) {
          for (PlaceOutcome& outcome : part) acc.push_back(std::move(outcome));
        });

    Json cert = Json::array();
    bool all_ok = true;
    for (PlaceOutcome& outcome : outcomes) {
      all_ok = all_ok && outcome.ok;
      cert.push_back(std::move(outcome.entry));
    }
    Json wrapped;
    wrapped["per_place"] = std::move(cert);
    if (!all_ok) {
      fail("unique-character", std::move(wrapped));
      return report;
    }
    pass("unique-character", std::move(wrapped));
  }

  // Local Lefschetz numbers (identical across the complex places).
  LefschetzTable local = lefschetz_local(n);
  {
    Json traces = Json::object();
    for (const auto& [q, value] : local.traces) traces[std::to_string(q)] = lefschetz_to_json(value);
    Json cert;
    cert["places"] = r2;
    cert["traces"] = std::move(traces);
    cert["total"] = lefschetz_to_json(local.total);
    pass("lefschetz-local", std::move(cert));
  }

  LefschetzValue at_infinity =
      lefschetz_infinity(std::vector<LefschetzValue>(static_cast<std::size_t>(r2), local.total), r2);
  {
    Json cert = lefschetz_to_json(at_infinity);
    cert["nonzero"] = at_infinity.nonzero();
    if (!at_infinity.nonzero()) {
      fail("lefschetz-infinity", std::move(cert));
      return report;
    }
    pass("lefschetz-infinity", std::move(cert));
  }

  // Degree window over the trace-zero group.
  PoincarePolynomial sl_poly = kunneth_assemble(
      std::vector<PoincarePolynomial>(static_cast<std::size_t>(r2), sl_local_poincare(n)), r2);
  {
    Json cert;
    cert["window"] = Json::array({sl_poly.min_degree(), sl_poly.max_degree()});
    cert["poincare"] = poincare_to_json(sl_poly);
    pass("sl-window", std::move(cert));
  }

  // Finite-place degree shift; one finite place of rank n-1.
  {
    std::vector<Int> ranks{n - 1};
    Int shift = steinberg_shift(ranks);
    Json cert;
    cert["finite_place_ranks"] = ranks;
    cert["shift"] = shift;
    cert["note"] = "[-" + std::to_string(shift) + "]";
    pass("steinberg-shift", std::move(cert));
  }

  // Transfer to the full group: central factor (1+T)^{r2-1} and the
  // determinant twist by -w/2.
  {
    PoincarePolynomial gl_poly = gl_sl_poincare(sl_poly, r2);
    Json cert;
    cert["r2"] = r2;
    cert["central_rank"] = r2 - 1;
    cert["central_rank_derived"] = true;
    cert["window"] = Json::array({gl_poly.min_degree(), gl_poly.max_degree()});
    cert["poincare"] = poincare_to_json(gl_poly);
    cert["twist"] = "pi(" + rat_string(Rat(-*sw, 2)) + ")";
    pass("gl-window", std::move(cert));
  }

  report.passed = true;
  return report;
}

Json report_to_json(const Report& report) {
  Json out;
  out["version"] = kVersion;
  out["result"] = report.passed ? "pass" : "fail";
  if (!report.failed_stage.empty()) out["failed_stage"] = report.failed_stage;
  if (report.out_of_scope) out["scope"] = "out-of-scope beyond purity";
  if (!report.warnings.empty()) out["warnings"] = report.warnings;
  Json stages = Json::array();
  for (const Stage& stage : report.stages) {
    Json entry;
    entry["stage"] = stage.name;
    entry["status"] = stage.status;
    entry["certificate"] = stage.certificate;
    stages.push_back(std::move(entry));
  }
  out["stages"] = std::move(stages);
  return out;
}

}  // namespace cuspcoh
