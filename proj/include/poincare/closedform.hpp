#pragma once

// Explicit Poincare series for n copies of the linear form and n copies of
// the binary quadratic.

#include "poincare/genfun.hpp"
#include "poincare/ratfun.hpp"

#include <optional>

namespace poincare {

enum class ClosedFormFamily { all_ones, all_twos };

struct ClosedFormRequest {
  unsigned n;  // number of forms, >= 1
  ClosedFormFamily family;
  SeriesKind kind;
};

RatFun all_ones(unsigned n, SeriesKind kind);
RatFun all_twos(unsigned n, SeriesKind kind);
RatFun evaluate(const ClosedFormRequest& request);

/// The closed-form request matching d, if d is (1,...,1) or (2,...,2).
std::optional<ClosedFormRequest> closed_form_for(const DegreeVector& d, SeriesKind kind);

}  // namespace poincare
