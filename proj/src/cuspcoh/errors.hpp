#pragma once

#include <stdexcept>
#include <string>

namespace cuspcoh {

// Malformed or inconsistent user-supplied data (schema violations, broken
// preconditions the caller is responsible for).
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-backed internal invariant failed; always indicates a bug.
struct contract_error : std::logic_error {
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cuspcoh
