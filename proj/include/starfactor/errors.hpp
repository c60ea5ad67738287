#pragma once

#include <stdexcept>
#include <string>

namespace starfactor {

// A documented resource guard tripped (search budget, enumeration cap, ...).
// The guards are explicit constants or parameters; callers that want more
// raise the corresponding limit.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what_) : std::runtime_error(what_) {}
};

}  // namespace starfactor
