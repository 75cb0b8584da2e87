#pragma once

#include <cstdint>
#include <optional>

#include "ccoa/oracle.hpp"
#include "ccoa/propagation.hpp"

namespace ccoa {

/// Which cells the search splits into atoms.
enum class SearchScope : std::uint8_t { combined, cda, roa };

class BudgetExceeded : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000;
  SearchScope scope = SearchScope::combined;
  PropagationOptions propagation{};
};

enum class SearchOutcome : std::uint8_t { scenario_found, exhausted };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<CcoaCsp> scenario;
  std::uint64_t nodes_explored = 0;
};

/// Depth-first search for an atomic refinement closed under propagation.
/// The next cell to split is the non-atomic one of smallest size, pairs
/// before triples, ties broken by index order; atoms are tried in their
/// stable order. Throws BudgetExceeded when more than `node_budget` nodes
/// would be explored.
SearchResult find_scenario(const CcoaCsp& csp, const Algebra& algebra = Algebra::builtin(),
                           const SearchOptions& opts = {});

/// Decides a pure CDA network: scenario search over the pair cells with path
/// consistency as the only filter. Throws BudgetExceeded.
bool cda_consistency(const BinaryMatrix& b, const Algebra& algebra = Algebra::builtin(),
                     std::uint64_t node_budget = 1'000'000);

}  // namespace ccoa
