#pragma once

#include <random>
#include <string>
#include <vector>

#include "cuspcoh/json_io.hpp"
#include "cuspcoh/pipeline.hpp"

namespace cuspcoh {

struct SuiteResult {
  std::string name;
  Int checks = 0;
  Int failures = 0;
  std::vector<std::string> messages;  // first few failure details
};

// Runs every property suite scaled to ranks 1..max_n (1 <= max_n <= 5).
std::vector<SuiteResult> run_selftest(int max_n, const Options& options = {});

Json selftest_to_json(const std::vector<SuiteResult>& suites);
bool selftest_passed(const std::vector<SuiteResult>& suites);

// Deterministic generators shared by the property suites and the test
// binaries.

using Rng = std::mt19937_64;

// Arbitrary synthetic datum: random involution (fixed-point-free when
// `force_totally_imaginary`) plus up to two random generators.
FieldDatum random_field_datum(Rng& rng, bool force_totally_imaginary);

// The six-label left-translation model of the symmetric group on three
// letters, with conjugation a fixed transposition. Its commutator closure has
// two orbit blocks of size three.
FieldDatum s3_sextic_datum();
FieldDatum imaginary_quadratic_datum();
FieldDatum totally_real_datum(int degree);

// Strongly pure by construction: one dominant vector per block of the f1
// partition, conjugate blocks paired to sum to w (w even).
Weight random_strongly_pure_weight(const FieldDatum& datum, int n, Int w, Rng& rng);

LocalWeight random_dominant(int n, Int lo, Int hi, Rng& rng);

}  // namespace cuspcoh
