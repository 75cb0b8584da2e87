#pragma once

#include <string>
#include <vector>

#include "ccoa/propagation.hpp"

namespace ccoa {

/// JSON summary of a propagation run: status, culprit, the refined cells
/// (B as an n x n matrix, T for every i < j < k) and counters. Output is
/// byte-deterministic for a given network and outcome. `conflicts` lists
/// facts that emptied a cell before propagation started.
std::string check_report_json(const CcoaCsp& csp, const PropagationOutcome& outcome,
                              const std::vector<std::string>& conflicts = {});

}  // namespace ccoa
