#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ccoa/csp.hpp"
#include "ccoa/geometry.hpp"

namespace ccoa {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelSearchOptions {
  // Candidate point placements tried before giving up with ResourceLimitError.
  std::uint64_t budget = 100'000'000;
};

/// Exhaustive search for an assignment of points from [-radius, radius]^2
/// satisfying every binary and ternary cell. Variables are placed in index
/// order and each cell is checked as soon as all its variables are placed.
///
/// A returned assignment is a model. std::nullopt only means the bounded
/// grid holds no model; it does not prove inconsistency over the plane.
std::optional<PointAssignment> model_search(const CcoaCsp& csp, int radius, const ModelSearchOptions& opts = {});

/// First cell (as text) violated by `model`, or nullopt if it is a model.
std::optional<std::string> first_violation(const CcoaCsp& csp, const PointAssignment& model);

inline bool satisfies(const CcoaCsp& csp, const PointAssignment& model) { return !first_violation(csp, model); }

}  // namespace ccoa
