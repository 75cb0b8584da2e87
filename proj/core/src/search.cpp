#include "ccoa/search.hpp"

namespace ccoa {
namespace {

class ScenarioSearch {
 public:
  ScenarioSearch(const Algebra& alg, const SearchOptions& opts) : alg_(alg), opts_(opts) {}

  std::optional<CcoaCsp> solve(CcoaCsp csp) {
    count_node();
    if (!pcs4c_plus(csp, alg_, opts_.propagation).consistent()) return std::nullopt;
    return descend(std::move(csp));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void count_node() {
    if (++nodes_ > opts_.node_budget)
      throw BudgetExceeded("scenario search exceeded its budget of " + std::to_string(opts_.node_budget) + " nodes");
  }

  // `csp` is already a propagation fixpoint.
  std::optional<CcoaCsp> descend(CcoaCsp csp) {
    const auto cell = pick(csp);
    if (!cell) return csp;
    const auto [i, j, k] = cell->idx;
    if (!cell->is_triple) {
      for (CdaAtom a : csp.binary().at(i, j)) {
        count_node();
        CcoaCsp next = csp;
        next.assert_cda(i, j, CdaRelation{a});
        if (!propagate_from(next, {*cell}, alg_, opts_.propagation).consistent()) continue;
        if (auto found = descend(std::move(next))) return found;
      }
    } else {
      for (RoaAtom a : csp.ternary().at(i, j, k)) {
        count_node();
        CcoaCsp next = csp;
        next.assert_roa(i, j, k, RoaRelation{a});
        if (!propagate_from(next, {*cell}, alg_, opts_.propagation).consistent()) continue;
        if (auto found = descend(std::move(next))) return found;
      }
    }
    return std::nullopt;
  }

  std::optional<WorkItem> pick(const CcoaCsp& csp) const {
    const std::size_t n = csp.size();
    std::optional<WorkItem> best;
    std::size_t best_size = 0;
    auto consider = [&](const WorkItem& w, std::size_t size) {
      if (size > 1 && (!best || size < best_size)) {
        best = w;
        best_size = size;
      }
    };
    if (opts_.scope != SearchScope::roa) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) consider(WorkItem::pair(i, j), csp.binary().at(i, j).size());
      if (best) return best;
    }
    if (opts_.scope != SearchScope::cda) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          for (std::size_t k = j; k < n; ++k) {
            if (i == k) continue;
            consider(WorkItem::triple(i, j, k), csp.ternary().at(i, j, k).size());
          }
    }
    return best;
  }

  const Algebra& alg_;
  const SearchOptions& opts_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult find_scenario(const CcoaCsp& csp, const Algebra& algebra, const SearchOptions& opts) {
  ScenarioSearch s(algebra, opts);
  SearchResult r;
  r.scenario = s.solve(csp);
  r.outcome = r.scenario ? SearchOutcome::scenario_found : SearchOutcome::exhausted;
  r.nodes_explored = s.nodes();
  return r;
}

bool cda_consistency(const BinaryMatrix& b, const Algebra& algebra, std::uint64_t node_budget) {
  const std::size_t n = b.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  CcoaCsp csp(std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) csp.assert_cda(i, j, b.at(i, j));
  if (csp.has_empty_cell()) return false;
  SearchOptions opts;
  opts.node_budget = node_budget;
  opts.scope = SearchScope::cda;
  opts.propagation = PropagationOptions::cda_only();
  return find_scenario(csp, algebra, opts).outcome == SearchOutcome::scenario_found;
}

}  // namespace ccoa
