#include "doctest.h"

#include <set>

#include "ccoa/geometry.hpp"
#include "ccoa/tables.hpp"
#include "reference_geometry.hpp"

using namespace ccoa;
using enum CdaAtom;
using enum RoaAtom;

namespace {

const AlgebraTables& tables() { return Algebra::builtin().tables(); }
const Algebra& alg() { return Algebra::builtin(); }

CdaRelation comp(CdaAtom a, CdaAtom b) { return tables().cda_comp[index(a)][index(b)]; }
RoaRelation otimes(CdaAtom a, CdaAtom b) { return tables().cda_otimes[index(a)][index(b)]; }

}  // namespace

TEST_CASE("CDA composition and cross operation agree with an independent enumeration") {
  for (CdaAtom a : all_atoms<CdaAtom>())
    for (CdaAtom b : all_atoms<CdaAtom>()) {
      CAPTURE(name(a));
      CAPTURE(name(b));
      const auto w = testing::chain(a, b, 2);
      CHECK(comp(a, b) == w.comp);
      CHECK(otimes(a, b) == w.otimes);
    }
}

TEST_CASE("ROA composition agrees with an independent enumeration") {
  for (RoaAtom a : all_atoms<RoaAtom>())
    for (RoaAtom b : all_atoms<RoaAtom>()) {
      CAPTURE(name(a));
      CAPTURE(name(b));
      CHECK(tables().roa_comp[index(a)][index(b)] == testing::roa_chain(a, b, 3));
    }
}

TEST_CASE("Lir and Rir agree with an independent enumeration") {
  for (CdaAtom r : all_atoms<CdaAtom>()) {
    CAPTURE(name(r));
    CHECK(tables().lir[index(r)] == testing::inferred_direction(r, lr, 3));
    CHECK(tables().rir[index(r)] == testing::inferred_direction(r, rr, 3));
  }
}

TEST_CASE("cells as printed") {
  CHECK(comp(No, Ea) == CdaRelation{NE});
  CHECK(alg().cda_compose(CdaRelation{No}, CdaRelation{So}) == CdaRelation{So, Eq, No});
  CHECK(alg().cda_compose(kCdaEq, CdaRelation{NW}) == CdaRelation{NW});
  CHECK(alg().cda_otimes(CdaRelation{SE}, CdaRelation{No}) == RoaRelation{lr});
  CHECK(alg().cda_otimes(CdaRelation{No}, CdaRelation{So}) == RoaRelation{bp, cp, bw});
  CHECK(alg().cda_otimes(CdaRelation{No}, CdaRelation{No}) == RoaRelation{br});
  CHECK(alg().roa_compose(RoaRelation{lr}, RoaRelation{lr}, RoaCase::shared_distinct) == RoaRelation{lr, bp, rr});
  CHECK(alg().roa_compose(RoaRelation{dd}, RoaRelation{cp}, RoaCase::shared_distinct) == RoaRelation{de});
  CHECK(alg().roa_compose(RoaRelation{cp}, RoaRelation{dd}, RoaCase::shared_equal) ==
        RoaRelation{lr, bp, bw, cr, br, rr});
  CHECK(alg().roa_compose(RoaRelation{cp}, RoaRelation{de}, RoaCase::shared_equal) == RoaRelation{cp});
  CHECK(alg().lir(CdaRelation{So}) == CdaRelation{SE, Ea, NE});
  CHECK(alg().lir(CdaRelation{SE}) == CdaRelation{SE, Ea, NE, No, NW});
  CHECK(alg().rir(CdaRelation{So}) == CdaRelation{NW, We, SW});
  CHECK(alg().lir(kCdaEq).empty());
  CHECK(alg().rir(kCdaEq).empty());
}

TEST_CASE("derived converse and rotation tables match the printed ones") {
  const RoaAtom conv[] = {de, cp, rr, bp, dd, br, cr, bw, lr};
  const RoaAtom rot[] = {de, cp, lr, bw, cr, br, dd, bp, rr};
  for (std::size_t i = 0; i < kAtomCount; ++i) {
    CHECK(tables().roa_conv[i] == conv[i]);
    CHECK(tables().roa_rot[i] == rot[i]);
  }
  const CdaAtom cda_conv[] = {So, SW, We, NW, No, NE, Ea, SE, Eq};
  for (std::size_t i = 0; i < kAtomCount; ++i) CHECK(tables().cda_conv[i] == cda_conv[i]);
}

TEST_CASE("structural laws") {
  const auto directional = kCdaNotEq;
  for (CdaAtom a : all_atoms<CdaAtom>()) {
    CHECK(comp(Eq, a) == CdaRelation{a});
    CHECK(comp(a, Eq) == CdaRelation{a});
    for (CdaAtom b : all_atoms<CdaAtom>()) {
      CHECK_FALSE(comp(a, b).empty());
      // (a o b)~ = b~ o a~
      CHECK(cda_converse(comp(a, b)) == comp(cda_converse(b), cda_converse(a)));
      if (directional.contains(a) && directional.contains(b))
        CHECK(otimes(a, b).is_subset_of(RoaRelation{lr, bp, cp, bw, cr, br, rr}));
    }
  }
  CHECK(alg().cda_otimes(CdaRelation::universal(), CdaRelation::universal()).is_universal());
}

TEST_CASE("ROA composition respects converse") {
  // t1(x,y,z) & t2(x,z,w) => t(x,y,w) read backwards gives (t1 o t2)~ = t2~ o t1~.
  for (RoaAtom a : all_atoms<RoaAtom>())
    for (RoaAtom b : all_atoms<RoaAtom>())
      CHECK(roa_converse(tables().roa_comp[index(a)][index(b)]) ==
            tables().roa_comp[index(roa_converse(b))][index(roa_converse(a))]);
}

TEST_CASE("composition case split") {
  for (RoaAtom a : all_atoms<RoaAtom>())
    for (RoaAtom b : all_atoms<RoaAtom>()) {
      const bool c1 = in_case_domain(RoaCase::shared_equal, a, b);
      const bool c2 = in_case_domain(RoaCase::shared_distinct, a, b);
      CHECK_FALSE((c1 && c2));
      // Outside both domains the two atoms disagree on whether x = z.
      if (!c1 && !c2) CHECK(tables().roa_comp[index(a)][index(b)].empty());
      if (c1 || c2) CHECK_FALSE(tables().roa_comp[index(a)][index(b)].empty());
    }
  const auto u = RoaRelation::universal();
  CHECK((alg().roa_compose(u, u, RoaCase::shared_equal) | alg().roa_compose(u, u, RoaCase::shared_distinct)) ==
        alg().roa_compose(u, u));
}

TEST_CASE("relation-level lookups are unions over atoms") {
  const CdaRelation r{No, SE, Eq}, s{We, So};
  CdaRelation expect;
  RoaRelation expect_x;
  for (CdaAtom a : r)
    for (CdaAtom b : s) {
      expect |= comp(a, b);
      expect_x |= otimes(a, b);
    }
  CHECK(alg().cda_compose(r, s) == expect);
  CHECK(alg().cda_otimes(r, s) == expect_x);
  CHECK(alg().cda_compose(CdaRelation{}, s).empty());
  CHECK(alg().cda_otimes(r, CdaRelation{}).empty());
}

TEST_CASE("canonical enumeration does not change the tables") {
  // Pinning the first point only shortens the reachable offsets, so the
  // canonical tables at radius r lie between the full ones at r and 2r.
  const auto canonical = derive_tables({4, true});
  CHECK(derive_tables({4, false}) == canonical);
  CHECK(derive_tables({2, true}).roa_comp != canonical.roa_comp);
}

TEST_CASE("certification") {
  const auto rep = certify_tables(tables(), 4);
  CHECK(rep.ok());
  CHECK(rep.cells_checked == 81 + 81 + 9 + 9 + 9 + 81 + 9 + 9);

  AlgebraTables broken = tables();
  broken.cda_comp[index(No)][index(Ea)] = CdaRelation{NE, Ea};
  broken.lir[index(So)].erase(Ea);
  const auto bad = certify_tables(broken, 4);
  REQUIRE(bad.issues.size() == 2);
  std::set<std::pair<std::string, bool>> got;
  for (const auto& i : bad.issues) got.insert({i.table + ":" + i.atom, i.unsound});
  CHECK(got.contains({"cda_comp:Ea", false}));
  CHECK(got.contains({"lir:Ea", true}));
}

TEST_CASE("interaction scheme is sound on every grid triple") {
  const auto& scheme = roa_to_cda_scheme();
  const auto g = grid_points(2);
  for (const Point& a : g)
    for (const Point& b : g)
      for (const Point& c : g) {
        const RoaAtom t = roa_of(a, b, c);
        const std::array<CdaAtom, 6> actual{cda_of(a, b), cda_of(b, a), cda_of(a, c),
                                            cda_of(c, a), cda_of(b, c), cda_of(c, b)};
        auto cell = [&](PairSlot s) { return CdaRelation{actual[static_cast<std::size_t>(s)]}; };
        for (const CdaInference& inf : scheme[index(t)].to)
          REQUIRE(implied(inf, alg(), cell).contains(actual[static_cast<std::size_t>(inf.target)]));
      }
}

TEST_CASE("interaction scheme rows") {
  const auto& s = roa_to_cda_scheme();
  for (const auto& inf : s[index(de)].to) CHECK(inf.mask == EqMask::eq_only);
  const auto& l = s[index(lr)].to;
  CHECK(l[0].target == PairSlot::ij);
  CHECK(l[0].mask == EqMask::distinct);
  CHECK(l[1].fn == Inferred::lir);
  CHECK(l[1].fn_arg == PairSlot::ij);
  CHECK(l[2].fn == Inferred::rir);
  CHECK(l[2].fn_arg == PairSlot::ji);
}

TEST_CASE("JSON export") {
  const std::string a = tables_to_json(tables());
  CHECK(a == tables_to_json(tables()));
  CHECK(tables_from_json(a) == tables());
  for (const char* key : {"\"cda_comp\"", "\"cda_otimes\"", "\"roa_conv\"", "\"roa_rot\"", "\"roa_comp_case1\"",
                          "\"roa_comp_case2\"", "\"lir\"", "\"rir\""})
    CHECK(a.find(key) != std::string::npos);
  CHECK_THROWS(tables_from_json("{\"cda_comp\": 3}"));
  CHECK_THROWS(tables_from_json("not json"));
}

TEST_CASE("printed cell decoding") {
  CHECK(decode_printed_cda("NE") == CdaRelation{NE});
  CHECK(decode_printed_cda("[So,No]") == CdaRelation{So, Eq, No});
  CHECK(decode_printed_cda("[NW,NE]") == CdaRelation{NW, No, NE});
  CHECK(decode_printed_cda("[SE,SW]") == CdaRelation{SE, So, SW});
  CHECK(decode_printed_cda("?").is_universal());
}

TEST_CASE("comparison against the transcription") {
  const auto rep = verify_against_reference(tables(), builtin_reference_tables());
  std::set<std::string> keys;
  for (const auto& d : rep.discrepancies) {
    keys.insert(d.key);
    CHECK(d.whitelisted);
  }
  CHECK(keys == std::set<std::string>{"cda_comp:SE,We", "cda_comp:SE,SW", "rir:NW"});
  CHECK(rep.stale_whitelist.empty());
  CHECK(rep.ok());

  const auto rir_nw = std::find_if(rep.discrepancies.begin(), rep.discrepancies.end(),
                                   [](const Discrepancy& d) { return d.key == "rir:NW"; });
  CHECK(rir_nw->derived == "{No,NE,Ea,SE,NW}");

  // A corrupted engine table shows up as an unexpected discrepancy.
  AlgebraTables broken = tables();
  broken.cda_comp[index(No)][index(Ea)] = CdaRelation{NE, Ea};
  const auto bad = verify_against_reference(broken, builtin_reference_tables());
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.unexpected().size() == 1);
  CHECK(bad.unexpected()[0].key == "cda_comp:No,Ea");
}
