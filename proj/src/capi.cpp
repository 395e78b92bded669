#include "cuspcoh.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cuspcoh/cohomology.hpp"
#include "cuspcoh/exterior.hpp"
#include "cuspcoh/json_io.hpp"
#include "cuspcoh/pipeline.hpp"
#include "cuspcoh/selftest.hpp"

using namespace cuspcoh;

struct cusp_field {
  FieldDatum datum;
};

struct cusp_weight {
  Weight weight;
};

namespace {

thread_local std::string g_last_error;

char *dup_string(const std::string& text) {
  char *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

Int effective_cap(int64_t cap, Int fallback) { return cap > 0 ? cap : fallback; }

cusp_status failure(cusp_status status, const char *what) {
  g_last_error = what;
  return status;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
cusp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const validation_error& e) {
    return failure(CUSP_E_INVALID, e.what());
  } catch (const resource_error& e) {
    return failure(CUSP_E_RESOURCE, e.what());
  } catch (const contract_error& e) {
    return failure(CUSP_E_CONTRACT, e.what());
  } catch (const std::exception& e) {
    return failure(CUSP_E_INTERNAL, e.what());
  } catch (...) {
    return failure(CUSP_E_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char *cusp_version(void) { return kVersion; }

const char *cusp_last_error(void) { return g_last_error.c_str(); }

void cusp_string_free(char *text) { std::free(text); }

cusp_status cusp_field_parse(const char *json, cusp_field **out) {
  return guarded([&]() -> cusp_status {
    if (!json || !out) return failure(CUSP_E_INVALID, "null argument");
    *out = new cusp_field{field_datum_from_json(parse_json_text(json))};
    return CUSP_OK;
  });
}

void cusp_field_free(cusp_field *field) { delete field; }

int cusp_field_degree(const cusp_field *field) { return field ? field->datum.degree() : -1; }

int cusp_field_totally_imaginary(const cusp_field *field) {
  return field ? (field->datum.totally_imaginary() ? 1 : 0) : -1;
}

int cusp_field_totally_real(const cusp_field *field) {
  return field ? (field->datum.totally_real() ? 1 : 0) : -1;
}

cusp_status cusp_field_group_order(const cusp_field *field, int64_t cap, int64_t *order_out) {
  return guarded([&]() -> cusp_status {
    if (!field || !order_out) return failure(CUSP_E_INVALID, "null argument");
    *order_out = static_cast<int64_t>(
        field->datum.group_elements(effective_cap(cap, FieldDatum::kDefaultGroupCap)).size());
    return CUSP_OK;
  });
}

cusp_status cusp_field_f1_partition(const cusp_field *field, int64_t cap, char **json_out) {
  return guarded([&]() -> cusp_status {
    if (!field || !json_out) return failure(CUSP_E_INVALID, "null argument");
    Json out;
    out["blocks"] = blocks_to_json(
        field->datum,
        field->datum.f1_partition(effective_cap(cap, FieldDatum::kDefaultGroupCap)));
    *json_out = dup_string(out.dump(2) + "\n");
    return CUSP_OK;
  });
}

cusp_status cusp_weight_parse(const char *json, cusp_weight **out) {
  return guarded([&]() -> cusp_status {
    if (!json || !out) return failure(CUSP_E_INVALID, "null argument");
    *out = new cusp_weight{weight_from_json(parse_json_text(json))};
    return CUSP_OK;
  });
}

void cusp_weight_free(cusp_weight *weight) { delete weight; }

cusp_status cusp_weight_purity(const cusp_field *field, const cusp_weight *weight, int *is_pure,
                               int64_t *w_out) {
  return guarded([&]() -> cusp_status {
    if (!field || !weight || !is_pure) return failure(CUSP_E_INVALID, "null argument");
    auto w = purity_weight(weight->weight, field->datum);
    *is_pure = w.has_value() ? 1 : 0;
    if (w && w_out) *w_out = *w;
    return CUSP_OK;
  });
}

cusp_status cusp_weight_strong_purity(const cusp_field *field, const cusp_weight *weight,
                                      int64_t cap, int *is_pure, int64_t *w_out) {
  return guarded([&]() -> cusp_status {
    if (!field || !weight || !is_pure) return failure(CUSP_E_INVALID, "null argument");
    auto w = strong_purity_weight(weight->weight, field->datum,
                                  effective_cap(cap, FieldDatum::kDefaultGroupCap));
    *is_pure = w.has_value() ? 1 : 0;
    if (w && w_out) *w_out = *w;
    return CUSP_OK;
  });
}

cusp_status cusp_weight_base_change(const cusp_field *field, const cusp_weight *weight,
                                    int64_t cap, char **json_out) {
  return guarded([&]() -> cusp_status {
    if (!field || !weight || !json_out) return failure(CUSP_E_INVALID, "null argument");
    Int group_cap = effective_cap(cap, FieldDatum::kDefaultGroupCap);
    if (!strong_purity_weight(weight->weight, field->datum, group_cap))
      return failure(CUSP_E_STAGE, "weight is not strongly pure");
    BaseChangeFactorization factorization =
        base_change_factor(weight->weight, field->datum, group_cap);
    Json out;
    out["w"] = factorization.w;
    out["blocks"] = blocks_to_json(field->datum, factorization.blocks);
    Json kappa = Json::array();
    for (const LocalWeight& b : factorization.block_weights) kappa.push_back(b);
    out["kappa"] = std::move(kappa);
    *json_out = dup_string(out.dump(2) + "\n");
    return CUSP_OK;
  });
}

cusp_status cusp_check(const char *scenario_json, int64_t cap, int jobs,
                       char **report_json_out) {
  return guarded([&]() -> cusp_status {
    if (!scenario_json || !report_json_out) return failure(CUSP_E_INVALID, "null argument");
    Scenario scenario = scenario_from_string(scenario_json);
    if (cap > 0) {
      scenario.options.group_cap = cap;
      scenario.options.dim_cap = cap;
    }
    if (jobs > 0) scenario.options.jobs = jobs;
    Report report = nonvanishing_report(scenario.weight, scenario.datum, scenario.options);
    *report_json_out = dup_string(report_to_json(report).dump(2) + "\n");
    if (!report.passed)
      return failure(CUSP_E_STAGE, ("pipeline failed at stage: " + report.failed_stage).c_str());
    return CUSP_OK;
  });
}

cusp_status cusp_selftest(int max_n, int64_t cap, int jobs, char **summary_json_out) {
  return guarded([&]() -> cusp_status {
    if (!summary_json_out) return failure(CUSP_E_INVALID, "null argument");
    Options options;
    if (cap > 0) {
      options.group_cap = cap;
      options.dim_cap = cap;
    }
    if (jobs > 0) options.jobs = jobs;
    std::vector<SuiteResult> suites = run_selftest(max_n, options);
    *summary_json_out = dup_string(selftest_to_json(suites).dump(2) + "\n");
    if (!selftest_passed(suites)) return failure(CUSP_E_STAGE, "selftest found failing properties");
    return CUSP_OK;
  });
}

cusp_status cusp_dump(const char *kind, int n, int q, int t, char **json_out) {
  return guarded([&]() -> cusp_status {
    if (!kind || !json_out) return failure(CUSP_E_INVALID, "null argument");
    if (n < 1) return failure(CUSP_E_INVALID, "dump requires n >= 1");
    const std::string name = kind;
    Json out;
    if (name == "wedge-p") {
      if (q < 0) return failure(CUSP_E_INVALID, "wedge-p requires q >= 0");
      out = multiset_to_json(wedge_p_characters(n, q));
    } else if (name == "wedge-u") {
      if (t < 0) return failure(CUSP_E_INVALID, "wedge-u requires t >= 0");
      out = multiset_to_json(wedge_u_characters(n, t));
    } else if (name == "chi-m") {
      PureWeightPair trivial{LocalWeight(static_cast<std::size_t>(n), 0),
                             LocalWeight(static_cast<std::size_t>(n), 0), 0};
      out = multiset_to_json(chi_tensor_characters(trivial));
    } else if (name == "dims") {
      out = Json::object();
      PoincarePolynomial poly = sl_local_poincare(n);
      for (const auto& [degree, value] : poly.coefficients()) out[std::to_string(degree)] = value;
    } else if (name == "lefschetz") {
      LefschetzTable table = lefschetz_local(n);
      Json traces = Json::object();
      for (const auto& [degree, value] : table.traces) {
        traces[std::to_string(degree)] =
            Json{{"coeff", value.coefficient}, {"c_power", value.symbol_power}};
      }
      out["traces"] = std::move(traces);
      out["total"] = Json{{"coeff", table.total.coefficient}, {"c_power", table.total.symbol_power}};
    } else {
      return failure(CUSP_E_INVALID, "unknown dump kind");
    }
    *json_out = dup_string(out.dump(2) + "\n");
    return CUSP_OK;
  });
}

}  // extern "C"
