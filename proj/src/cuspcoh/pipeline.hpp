#pragma once

#include <string>
#include <vector>

#include "cuspcoh/json_io.hpp"

namespace cuspcoh {

struct Stage {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  Json certificate;
};

struct Report {
  std::vector<Stage> stages;
  std::vector<std::string> warnings;
  bool passed = false;
  std::string failed_stage;  // empty when passed
  bool out_of_scope = false;
};

// Runs the staged nonvanishing analysis: coordinate checks, purity theory,
// base change, per-place pair assembly, character and Lefschetz certificates,
// degree windows. Halts at the first failing stage. Requires a totally
// imaginary datum to go past base change; otherwise the report stops there
// and says so.
Report nonvanishing_report(const Weight& weight, const FieldDatum& datum,
                           const Options& options = {});

Json report_to_json(const Report& report);

}  // namespace cuspcoh
