#include "ccoa/tables.hpp"

#include <stdexcept>
#include <string>

#include "ccoa/geometry.hpp"

namespace ccoa {
namespace {

// Every atom observed per antecedent; atom-valued tables are sets here so the
// same structure serves derivation (expect singletons) and certification.
struct Witnesses {
  AtomTable<CdaRelation> cda_comp{};
  std::array<CdaRelation, kAtomCount> cda_conv{};
  AtomTable<RoaRelation> cda_otimes{};
  std::array<RoaRelation, kAtomCount> roa_conv{};
  std::array<RoaRelation, kAtomCount> roa_rot{};
  AtomTable<RoaRelation> roa_comp{};
  std::array<CdaRelation, kAtomCount> lir{};
  std::array<CdaRelation, kAtomCount> rir{};
};

Witnesses enumerate(const DeriveOptions& opts) {
  if (opts.radius < 1) throw std::invalid_argument("derive radius must be positive");
  const std::vector<Point> grid = grid_points(opts.radius);
  const std::vector<Point> origin_only{Point{0, 0}};
  const std::vector<Point>& firsts = opts.canonical ? origin_only : grid;

  Witnesses w;
  for (const Point& a : firsts) {
    for (const Point& b : grid) {
      const CdaAtom ab = cda_of(a, b);
      w.cda_conv[index(ab)].insert(cda_of(b, a));
      for (const Point& c : grid) {
        const CdaAtom bc = cda_of(b, c);
        const RoaAtom abc = roa_of(a, b, c);
        w.cda_comp[index(ab)][index(bc)].insert(cda_of(a, c));
        w.cda_otimes[index(ab)][index(bc)].insert(abc);
        w.roa_conv[index(abc)].insert(roa_of(a, c, b));
        // rot(t)(a,b,c) iff t(c,a,b)
        w.roa_rot[index(roa_of(c, a, b))].insert(abc);
        if (abc == RoaAtom::lr) w.lir[index(ab)].insert(cda_of(a, c));
        if (abc == RoaAtom::rr) w.rir[index(ab)].insert(cda_of(a, c));
      }
    }
  }

  // t1(x,y,z) & t2(x,z,w) => t(x,y,w)
  for (const Point& x : firsts) {
    for (const Point& y : grid) {
      for (const Point& z : grid) {
        const RoaAtom t1 = roa_of(x, y, z);
        auto& row = w.roa_comp[index(t1)];
        for (const Point& p : grid) row[index(roa_of(x, z, p))].insert(roa_of(x, y, p));
      }
    }
  }
  return w;
}

template <typename Atom>
Atom single_atom(RelationSet<Atom> s, const char* table) {
  if (s.empty()) throw std::logic_error(std::string("grid too small: no witness for a ") + table + " entry");
  if (!s.is_atomic()) throw std::logic_error(std::string("oracle derived a non-functional ") + table + " entry");
  return s.first();
}

template <typename Atom>
void compare_cell(CertificationReport& rep, const char* table, std::string_view row, std::string_view col,
                  RelationSet<Atom> cell, RelationSet<Atom> seen) {
  ++rep.cells_checked;
  for (Atom a : seen - cell)
    rep.issues.push_back({table, std::string(row), std::string(col), std::string(name(a)), true});
  for (Atom a : cell - seen)
    rep.issues.push_back({table, std::string(row), std::string(col), std::string(name(a)), false});
}

}  // namespace

bool in_case_domain(RoaCase c, RoaAtom t1, RoaAtom t2) {
  auto has = [](const auto& list, RoaAtom a) {
    for (RoaAtom x : list)
      if (x == a) return true;
    return false;
  };
  if (c == RoaCase::shared_equal) return has(kCase1Rows, t1) && has(kCase1Cols, t2);
  return has(kCase2Rows, t1) && has(kCase2Cols, t2);
}

RoaRelation AlgebraTables::roa_case_cell(RoaCase c, RoaAtom t1, RoaAtom t2) const {
  return in_case_domain(c, t1, t2) ? roa_comp[index(t1)][index(t2)] : RoaRelation{};
}

AlgebraTables derive_tables(const DeriveOptions& opts) {
  const Witnesses w = enumerate(opts);
  AlgebraTables t;
  t.cda_comp = w.cda_comp;
  t.cda_otimes = w.cda_otimes;
  t.roa_comp = w.roa_comp;
  t.lir = w.lir;
  t.rir = w.rir;
  for (std::size_t i = 0; i < kAtomCount; ++i) {
    t.cda_conv[i] = single_atom(w.cda_conv[i], "cda converse");
    t.roa_conv[i] = single_atom(w.roa_conv[i], "roa converse");
    t.roa_rot[i] = single_atom(w.roa_rot[i], "roa rotation");
  }
  return t;
}

CertificationReport certify_tables(const AlgebraTables& t, int radius) {
  const Witnesses w = enumerate({radius, true});
  CertificationReport rep;
  for (CdaAtom r : all_atoms<CdaAtom>()) {
    const auto i = index(r);
    compare_cell(rep, "cda_conv", name(r), "", CdaRelation{t.cda_conv[i]}, w.cda_conv[i]);
    for (CdaAtom s : all_atoms<CdaAtom>()) {
      const auto j = index(s);
      compare_cell(rep, "cda_comp", name(r), name(s), t.cda_comp[i][j], w.cda_comp[i][j]);
      compare_cell(rep, "cda_otimes", name(r), name(s), t.cda_otimes[i][j], w.cda_otimes[i][j]);
    }
    compare_cell(rep, "lir", name(r), "", t.lir[i], w.lir[i]);
    compare_cell(rep, "rir", name(r), "", t.rir[i], w.rir[i]);
  }
  for (RoaAtom a : all_atoms<RoaAtom>()) {
    const auto i = index(a);
    compare_cell(rep, "roa_conv", name(a), "", RoaRelation{t.roa_conv[i]}, w.roa_conv[i]);
    compare_cell(rep, "roa_rot", name(a), "", RoaRelation{t.roa_rot[i]}, w.roa_rot[i]);
    for (RoaAtom b : all_atoms<RoaAtom>()) {
      const auto j = index(b);
      compare_cell(rep, "roa_comp", name(a), name(b), t.roa_comp[i][j], w.roa_comp[i][j]);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Cell>
std::vector<std::uint16_t> lift_binary(Cell cell) {
  constexpr std::size_t kN = 512;
  std::vector<std::uint16_t> out(kN * kN, 0);
  auto at = [&](std::size_t r, std::size_t s) -> std::uint16_t& { return out[(r << kAtomCount) | s]; };
  for (std::size_t r = 1; r < kN; ++r) {
    const std::size_t low = r & (~r + 1);
    const std::size_t rest = r ^ low;
    if (rest != 0) {
      for (std::size_t s = 1; s < kN; ++s) at(r, s) = at(low, s) | at(rest, s);
      continue;
    }
    const auto a = static_cast<std::size_t>(std::countr_zero(r));
    for (std::size_t s = 1; s < kN; ++s) {
      const std::size_t slow = s & (~s + 1);
      const std::size_t srest = s ^ slow;
      at(r, s) = srest != 0 ? static_cast<std::uint16_t>(at(r, slow) | at(r, srest))
                            : cell(a, static_cast<std::size_t>(std::countr_zero(s)));
    }
  }
  return out;
}

template <typename F>
std::array<std::uint16_t, 512> lift_unary(F per_atom) {
  std::array<std::uint16_t, 512> out{};
  for (std::size_t m = 1; m < 512; ++m) {
    const std::size_t low = m & (~m + 1);
    const std::size_t rest = m ^ low;
    out[m] = static_cast<std::uint16_t>(per_atom(static_cast<std::size_t>(std::countr_zero(m))) | out[rest]);
  }
  return out;
}

}  // namespace

Algebra::Algebra(AlgebraTables tables) : tables_(std::move(tables)) {
  const AlgebraTables& t = tables_;
  cda_comp_ = lift_binary([&](std::size_t a, std::size_t b) { return t.cda_comp[a][b].mask(); });
  otimes_ = lift_binary([&](std::size_t a, std::size_t b) { return t.cda_otimes[a][b].mask(); });
  roa_comp_ = lift_binary([&](std::size_t a, std::size_t b) { return t.roa_comp[a][b].mask(); });
  cda_conv_ = lift_unary([&](std::size_t a) { return std::uint16_t(1u << index(t.cda_conv[a])); });
  roa_conv_ = lift_unary([&](std::size_t a) { return std::uint16_t(1u << index(t.roa_conv[a])); });
  roa_rot_ = lift_unary([&](std::size_t a) { return std::uint16_t(1u << index(t.roa_rot[a])); });
  lir_ = lift_unary([&](std::size_t a) { return t.lir[a].mask(); });
  rir_ = lift_unary([&](std::size_t a) { return t.rir[a].mask(); });
}

const Algebra& Algebra::builtin() {
  static const Algebra instance(derive_tables());
  return instance;
}

RoaRelation Algebra::roa_compose(RoaRelation r, RoaRelation s, RoaCase c) const {
  RoaRelation out;
  for (RoaAtom a : r)
    for (RoaAtom b : s) out |= tables_.roa_case_cell(c, a, b);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr CdaInference infer(PairSlot target, std::initializer_list<PairSlot> same, EqMask mask = EqMask::none,
                             Inferred fn = Inferred::none, PairSlot fn_arg = PairSlot::ij) {
  CdaInference inf;
  inf.target = target;
  for (PairSlot s : same) inf.same[inf.same_count++] = s;
  inf.mask = mask;
  inf.fn = fn;
  inf.fn_arg = fn_arg;
  return inf;
}

}  // namespace

const std::array<RoaToCdaRow, kAtomCount>& roa_to_cda_scheme() {
  using enum PairSlot;
  using enum EqMask;
  static const std::array<RoaToCdaRow, kAtomCount> scheme{{
      // de
      {{infer(ij, {}, eq_only), infer(ik, {}, eq_only), infer(jk, {}, eq_only)}},
      // dd
      {{infer(ij, {}, eq_only), infer(ik, {jk}, distinct), infer(jk, {ik})}},
      // lr
      {{infer(ij, {}, distinct), infer(ik, {}, none, Inferred::lir, ij), infer(jk, {}, none, Inferred::rir, ji)}},
      // bp
      {{infer(ij, {ki, kj}, distinct), infer(ik, {ji}), infer(jk, {ik})}},
      // cp
      {{infer(ij, {kj}, distinct), infer(ik, {}, eq_only), infer(jk, {ji})}},
      // bw
      {{infer(ij, {ik, kj}, distinct), infer(ik, {ij}), infer(jk, {ji})}},
      // cr
      {{infer(ij, {ik}, distinct), infer(ik, {ij}), infer(jk, {}, eq_only)}},
      // br
      {{infer(ij, {ik, jk}, distinct), infer(ik, {ij}), infer(jk, {ij})}},
      // rr
      {{infer(ij, {}, distinct), infer(ik, {}, none, Inferred::rir, ij), infer(jk, {}, none, Inferred::lir, ji)}},
  }};
  return scheme;
}

}  // namespace ccoa
