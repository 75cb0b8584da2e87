#include "doctest.h"

#include "ccoa/generator.hpp"
#include "ccoa/kb.hpp"
#include "ccoa/search.hpp"

using namespace ccoa;
using enum CdaAtom;
using enum RoaAtom;

namespace {

const char* kExample = R"(point Berlin
point Hamburg
point London
point Paris
roa Hamburg Paris Berlin lr
roa Hamburg London Paris lr
roa Hamburg London Berlin lr
roa London Paris Berlin lr
cda Hamburg No Paris
cda Hamburg NW Berlin
cda Paris So London
)";

CcoaCsp example(KbPart part = KbPart::all) { return build_csp(project_kb(parse_kb(kExample), part)).csp; }

bool atomic_on_distinct_cells(const CcoaCsp& csp, bool pairs, bool triples) {
  const std::size_t n = csp.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pairs && !csp.binary().at(i, j).is_atomic()) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (triples && !csp.ternary().at(i, j, k).is_atomic()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("combined example has no scenario") {
  const auto r = find_scenario(example());
  CHECK(r.outcome == SearchOutcome::exhausted);
  CHECK_FALSE(r.scenario.has_value());
  CHECK(r.nodes_explored >= 1);
}

TEST_CASE("cardinal component has a realizable scenario") {
  const CcoaCsp input = example(KbPart::cda);
  SearchOptions opts;
  opts.scope = SearchScope::cda;
  opts.propagation = PropagationOptions::cda_only();
  const auto r = find_scenario(input, Algebra::builtin(), opts);
  REQUIRE(r.outcome == SearchOutcome::scenario_found);
  const CcoaCsp& s = *r.scenario;
  CHECK(s.refines(input));
  CHECK(atomic_on_distinct_cells(s, true, false));
  CcoaCsp again = s;
  CHECK(pcs4c_plus(again, Algebra::builtin(), PropagationOptions::cda_only()).stats.refinements == 0);
  const auto m = model_search(s, 4);
  REQUIRE(m.has_value());
  CHECK(satisfies(input, *m));
}

TEST_CASE("orientation component has a scenario with a grid model") {
  SearchOptions opts;
  opts.scope = SearchScope::roa;
  opts.propagation = PropagationOptions::roa_only();
  const auto r = find_scenario(example(KbPart::roa), Algebra::builtin(), opts);
  REQUIRE(r.scenario.has_value());
  CHECK(atomic_on_distinct_cells(*r.scenario, false, true));
  CHECK(model_search(*r.scenario, 3).has_value());
}

TEST_CASE("an atomic consistent network needs no branching") {
  CcoaCsp csp({"a", "b", "c"});
  csp.assert_cda(0, 1, CdaRelation{No});
  csp.assert_cda(1, 2, CdaRelation{Ea});
  csp.assert_cda(0, 2, CdaRelation{NE});
  csp.assert_roa(0, 1, 2, RoaRelation{rr});
  const auto r = find_scenario(csp);
  REQUIRE(r.outcome == SearchOutcome::scenario_found);
  CHECK(r.nodes_explored == 1);
}

TEST_CASE("search is deterministic and respects its budget") {
  const CcoaCsp input = random_csp(6, 0.3, 42);
  const auto a = find_scenario(input);
  const auto b = find_scenario(input);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.scenario == b.scenario);
  SearchOptions tight;
  tight.node_budget = 2;
  CHECK_THROWS_AS(find_scenario(CcoaCsp(default_names(4)), Algebra::builtin(), tight), BudgetExceeded);
}

TEST_CASE("pure cardinal decisions") {
  CHECK(cda_consistency(example(KbPart::cda).binary()));

  BinaryMatrix b(3);
  b.set(0, 1, CdaRelation{No});
  b.set(1, 2, CdaRelation{No});
  b.set(0, 2, CdaRelation{So});
  CHECK_FALSE(cda_consistency(b));

  for (CdaAtom a : all_atoms<CdaAtom>()) {
    BinaryMatrix two(2);
    two.set(0, 1, CdaRelation{a});
    CHECK(cda_consistency(two));
  }
}
