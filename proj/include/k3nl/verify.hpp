#pragma once

// The reproduction checks as data: each criterion recomputes its values from
// the library and compares them exactly against the expected ones.

#include <string>
#include <vector>

#include "k3nl/chern.hpp"
#include "k3nl/siegel.hpp"

namespace k3nl {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerifyInputs {
  UnigonalTable unigonal = UnigonalTable::standard();
  HalfIntegralTable c_table = HalfIntegralTable::standard();
};

constexpr int kCriterionCount = 9;

/// Runs criterion `id` in 1..9. DomainError for other ids. Errors raised by
/// the computation itself are reported as a failed criterion.
CriterionResult verify_criterion(int id, const VerifyInputs& inputs = {});

std::vector<CriterionResult> verify_all(const VerifyInputs& inputs = {});

}  // namespace k3nl
