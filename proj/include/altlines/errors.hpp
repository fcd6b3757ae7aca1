#pragma once

#include <stdexcept>

namespace altlines {

/// A bounded search ran out of budget. Not a mathematical failure.
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by theory failed in exact arithmetic.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace altlines
