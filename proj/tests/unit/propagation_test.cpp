#include "doctest.h"

#include "ccoa/generator.hpp"
#include "ccoa/kb.hpp"
#include "ccoa/oracle.hpp"
#include "ccoa/propagation.hpp"

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

const Algebra& alg() { return Algebra::builtin(); }

}  // namespace

TEST_CASE("work items are canonical and deduplicated") {
  CHECK(WorkItem::pair(3, 1) == WorkItem::pair(1, 3));
  CHECK(WorkItem::triple(2, 0, 1).idx == std::array<std::uint32_t, 3>{0, 1, 2});
  WorkQueue q(4);
  CHECK(q.push(WorkItem::pair(2, 1)));
  CHECK_FALSE(q.push(WorkItem::pair(1, 2)));
  CHECK(q.push(WorkItem::triple(3, 1, 2)));
  CHECK(q.contains(WorkItem::triple(1, 2, 3)));
  CHECK(q.pop() == WorkItem::pair(1, 2));
  CHECK(q.push(WorkItem::pair(1, 2)));
  CHECK(q.size() == 2);

  WorkQueue all(3);
  all.fill_all();
  CHECK(all.size() == 6 + 10);
  CHECK(all.pop() == WorkItem::pair(0, 0));
}

TEST_CASE("four-city example") {
  SUBCASE("combined knowledge is refuted on (Hamburg, Paris, London)") {
    CcoaCsp csp = example();
    const auto out = pcs4c_plus(csp);
    REQUIRE_FALSE(out.consistent());
    REQUIRE(out.culprit.has_value());
    const Culprit& c = *out.culprit;
    CHECK(c.channel == Channel::cda_to_roa);
    CHECK(c.cell.is_triple);
    const auto& names = csp.names();
    CHECK(names[c.cell.idx[0]] == "Hamburg");
    CHECK(names[c.cell.idx[1]] == "Paris");
    CHECK(names[c.cell.idx[2]] == "London");
    CHECK(RoaRelation::from_mask(c.existing) == RoaRelation{rr});
    CHECK(RoaRelation::from_mask(c.inferred) == RoaRelation{bp, cp, bw});
    CHECK(describe(csp, c) == "[cda_to_roa] T(Hamburg,Paris,London): {rr} & {bp,cp,bw} = {}");
  }
  SUBCASE("cardinal component alone reaches a fixpoint") {
    CcoaCsp csp = example(KbPart::cda);
    CHECK(pcs4c_plus(csp).consistent());
    CHECK_FALSE(csp.has_empty_cell());
  }
  SUBCASE("each single-calculus closure leaves every cell nonempty") {
    CcoaCsp pc = example();
    CHECK(pcs4c_plus(pc, alg(), PropagationOptions::cda_only()).consistent());
    CHECK_FALSE(pc.has_empty_cell());
    CcoaCsp s4 = example();
    CHECK(pcs4c_plus(s4, alg(), PropagationOptions::roa_only()).consistent());
    CHECK_FALSE(s4.has_empty_cell());
  }
}

TEST_CASE("universal network needs no refinement") {
  CcoaCsp csp(default_names(4));
  const CcoaCsp before = csp;
  const auto out = pcs4c_plus(csp);
  CHECK(out.consistent());
  CHECK(out.stats.refinements == 0);
  CHECK(csp == before);
}

TEST_CASE("pair propagation") {
  CcoaCsp csp({"h", "p", "l"});
  csp.assert_cda(0, 1, CdaRelation{No});
  csp.assert_cda(1, 2, CdaRelation{So});
  WorkQueue q(3);
  Propagator prop(csp, alg(), PropagationOptions::cda_only());
  CHECK(prop.pair_propagation(q, 0, 1, 2));
  CHECK(csp.binary().at(0, 2) == CdaRelation{So, Eq, No});
  CHECK(q.contains(WorkItem::pair(0, 2)));

  const CcoaCsp snapshot = csp;
  CHECK(prop.pair_propagation(q, 0, 0, 2));
  CHECK(csp == snapshot);

  csp.assert_cda(0, 2, CdaRelation{We});
  CHECK_FALSE(prop.pair_propagation(q, 0, 1, 2));
  CHECK_FALSE(prop.outcome().consistent());
  CHECK(prop.outcome().culprit->channel == Channel::path);
}

TEST_CASE("triple propagation") {
  CcoaCsp csp({"i", "j", "k", "m"});
  csp.assert_roa(0, 1, 2, RoaRelation{lr});
  csp.assert_roa(0, 2, 3, RoaRelation{lr});
  csp.assert_roa(0, 1, 3, RoaRelation{rr, cp, de});
  WorkQueue q(4);
  Propagator prop(csp, alg(), PropagationOptions::roa_only());
  CHECK(prop.triple_propagation(q, 0, 1, 2, 3));
  CHECK(csp.ternary().at(0, 1, 3) == RoaRelation{rr});
  CHECK(q.contains(WorkItem::triple(0, 1, 3)));

  CcoaCsp u(default_names(4));
  const CcoaCsp before = u;
  WorkQueue q2(4);
  Propagator p2(u, alg());
  CHECK(p2.triple_propagation(q2, 0, 1, 2, 3));
  CHECK(u == before);
}

TEST_CASE("cardinal to orientation channel") {
  CcoaCsp csp({"i", "j", "k"});
  csp.assert_cda(0, 1, CdaRelation{No});
  csp.assert_cda(1, 2, CdaRelation{So});
  WorkQueue q(3);
  Propagator prop(csp, alg());
  CHECK(prop.cda_to_roa(q, 0, 1, 2));
  CHECK(csp.ternary().at(0, 1, 2) == RoaRelation{bp, cp, bw});

  CcoaCsp free(default_names(3));
  Propagator p2(free, alg());
  WorkQueue q2(3);
  CHECK(p2.cda_to_roa(q2, 0, 1, 2));
  CHECK(free.ternary().at(0, 1, 2).is_universal());
}

TEST_CASE("orientation to cardinal channel") {
  SUBCASE("lr with a south-east reference") {
    CcoaCsp csp({"b", "h", "p"});
    csp.assert_roa(0, 1, 2, RoaRelation{lr});
    csp.assert_cda(0, 1, CdaRelation{SE});
    WorkQueue q(3);
    Propagator prop(csp, alg());
    CHECK(prop.roa_to_cda(q, 0, 1, 2));
    CHECK(csp.binary().at(0, 2) == CdaRelation{SE, Ea, NE, No, NW});
  }
  SUBCASE("de forces equality") {
    CcoaCsp csp({"a", "b", "c"});
    csp.assert_roa(0, 1, 2, RoaRelation{de});
    WorkQueue q(3);
    Propagator prop(csp, alg());
    CHECK(prop.roa_to_cda(q, 0, 1, 2));
    CHECK(csp.binary().at(0, 1) == kCdaEq);
    CHECK(csp.binary().at(0, 2) == kCdaEq);
    CHECK(csp.binary().at(1, 2) == kCdaEq);
  }
  SUBCASE("universal relation implies nothing") {
    CcoaCsp csp(default_names(3));
    const CcoaCsp before = csp;
    WorkQueue q(3);
    Propagator prop(csp, alg());
    CHECK(prop.roa_to_cda(q, 0, 1, 2));
    CHECK(csp == before);
  }
}

TEST_CASE("update writes all six permutations") {
  CcoaCsp csp(default_names(3));
  Propagator prop(csp, alg());
  prop.update(0, 1, 2, RoaRelation{lr});
  CHECK(csp.ternary().at(0, 2, 1) == RoaRelation{rr});
  CHECK(csp.ternary().at(1, 2, 0) == RoaRelation{lr});
  CHECK_FALSE(csp.check_invariants().has_value());
  prop.update(0, 1, 2, RoaRelation{de});
  for (auto [a, b, c] : {std::array{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}})
    CHECK(csp.ternary().at(a, b, c) == RoaRelation{de});
  prop.update(0, 1, 2, RoaRelation{});
  CHECK(csp.ternary().at(2, 1, 0).empty());
}

TEST_CASE("trace lists every refinement") {
  CcoaCsp csp = example(KbPart::cda);
  std::vector<std::string> lines;
  PropagationOptions opts;
  opts.trace = [&](const Refinement& r) { lines.push_back(describe(csp, r)); };
  const auto out = pcs4c_plus(csp, alg(), opts);
  CHECK(lines.size() == out.stats.refinements);
  REQUIRE_FALSE(lines.empty());
  CHECK(lines[0].find(" -> ") != std::string::npos);
}

TEST_CASE("fixpoint properties on random networks") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 3 + seed % 5;
    CcoaCsp csp = random_csp(n, 0.3, seed);
    const CcoaCsp input = csp;
    PropagationOptions opts;
    opts.check_invariants = true;
    const auto first = pcs4c_plus(csp, alg(), opts);
    CHECK(csp.refines(input));
    CHECK(first.stats.dequeues <= 9 * (n * n + n * n * n));
    if (!first.consistent()) continue;
    const auto second = pcs4c_plus(csp, alg(), opts);
    CHECK(second.consistent());
    CHECK(second.stats.refinements == 0);
  }
}

TEST_CASE("planted models survive propagation") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng.below(4);
    auto inst = planted_csp(n, static_cast<int>(2 * n), 0.6, rng);
    const auto out = pcs4c_plus(inst.csp);
    CHECK(out.consistent());
    CHECK_FALSE(first_violation(inst.csp, inst.model).has_value());
  }
}

TEST_CASE("propagation from seeds matches a full run on a fixpoint plus one assert") {
  CcoaCsp base = example(KbPart::cda);
  REQUIRE(pcs4c_plus(base).consistent());
  CcoaCsp a = base, b = base;
  a.assert_cda(0, 3, CdaRelation{NE, Ea});
  b.assert_cda(0, 3, CdaRelation{NE, Ea});
  const auto ra = propagate_from(a, {WorkItem::pair(0, 3)});
  const auto rb = pcs4c_plus(b);
  CHECK(ra.consistent() == rb.consistent());
  CHECK(a == b);
}
