#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccoa/algebra.hpp"

namespace ccoa {

template <typename T>
using AtomTable = std::array<std::array<T, kAtomCount>, kAtomCount>;

/// Whether the shared argument x of t1(x,y,z) and t2(x,z,w) coincides with z.
enum class RoaCase : std::uint8_t { shared_equal, shared_distinct };

inline constexpr std::array<RoaAtom, 2> kCase1Rows{RoaAtom::de, RoaAtom::cp};
inline constexpr std::array<RoaAtom, 2> kCase1Cols{RoaAtom::de, RoaAtom::dd};
inline constexpr std::array<RoaAtom, 7> kCase2Rows{RoaAtom::dd, RoaAtom::lr, RoaAtom::bp, RoaAtom::bw,
                                                   RoaAtom::cr, RoaAtom::br, RoaAtom::rr};
inline constexpr std::array<RoaAtom, 7> kCase2Cols{RoaAtom::lr, RoaAtom::bp, RoaAtom::cp, RoaAtom::bw,
                                                   RoaAtom::cr, RoaAtom::br, RoaAtom::rr};

/// Atom-level algebra tables. All tables are indexed by stable atom index.
struct AlgebraTables {
  AtomTable<CdaRelation> cda_comp{};    // r1 o r2
  std::array<CdaAtom, kAtomCount> cda_conv{};
  AtomTable<RoaRelation> cda_otimes{};  // r1(x,y) & r2(y,z) => (r1 (x) r2)(x,y,z)
  std::array<RoaAtom, kAtomCount> roa_conv{};
  std::array<RoaAtom, kAtomCount> roa_rot{};
  // t1(x,y,z) & t2(x,z,w) => (t1 o t2)(x,y,w). Cells outside both case
  // domains are empty: such atom pairs disagree on whether x = z.
  AtomTable<RoaRelation> roa_comp{};
  std::array<CdaRelation, kAtomCount> lir{};  // Eq entry is empty
  std::array<CdaRelation, kAtomCount> rir{};

  bool operator==(const AlgebraTables&) const = default;

  RoaRelation roa_case_cell(RoaCase c, RoaAtom t1, RoaAtom t2) const;
};

bool in_case_domain(RoaCase c, RoaAtom t1, RoaAtom t2);

struct DeriveOptions {
  int radius = 4;
  // Pin the first point of every enumerated tuple to the origin.
  bool canonical = true;
};

/// Builds every table by exhaustive enumeration of the integer grid under
/// the geometric semantics. Deterministic for fixed options.
AlgebraTables derive_tables(const DeriveOptions& opts = {});

/// One oracle disagreement found by certify_tables().
struct CertificationIssue {
  std::string table;
  std::string row;
  std::string col;
  std::string atom;
  bool unsound = false;  // true: witness outside the cell; false: atom without witness
};

struct CertificationReport {
  std::size_t cells_checked = 0;
  std::vector<CertificationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Soundness (no grid witness falls outside a cell) and minimality (every
/// atom of every cell has a grid witness) of `t` on a fresh enumeration.
CertificationReport certify_tables(const AlgebraTables& t, int radius);

/// Relation-level operations backed by AlgebraTables, with precomputed
/// 512x512 lookups for the hot binary operations.
class Algebra {
 public:
  explicit Algebra(AlgebraTables tables);

  /// Tables derived on first use at radius 4.
  static const Algebra& builtin();

  const AlgebraTables& tables() const { return tables_; }

  CdaRelation cda_converse(CdaRelation r) const { return CdaRelation::from_mask(cda_conv_[r.mask()]); }
  RoaRelation roa_converse(RoaRelation r) const { return RoaRelation::from_mask(roa_conv_[r.mask()]); }
  RoaRelation roa_rotation(RoaRelation r) const { return RoaRelation::from_mask(roa_rot_[r.mask()]); }

  CdaRelation cda_compose(CdaRelation r, CdaRelation s) const {
    return CdaRelation::from_mask(cda_comp_[lookup(r, s)]);
  }
  RoaRelation cda_otimes(CdaRelation r, CdaRelation s) const {
    return RoaRelation::from_mask(otimes_[lookup(r, s)]);
  }
  /// Union of both composition cases.
  RoaRelation roa_compose(RoaRelation r, RoaRelation s) const {
    return RoaRelation::from_mask(roa_comp_[lookup(r, s)]);
  }
  /// Only atom pairs inside the chosen case's row/column domain contribute.
  RoaRelation roa_compose(RoaRelation r, RoaRelation s, RoaCase c) const;

  CdaRelation lir(CdaRelation r) const { return CdaRelation::from_mask(lir_[r.mask()]); }
  CdaRelation rir(CdaRelation r) const { return CdaRelation::from_mask(rir_[r.mask()]); }

 private:
  template <typename A, typename B>
  static std::size_t lookup(RelationSet<A> r, RelationSet<B> s) {
    return (std::size_t{r.mask()} << kAtomCount) | s.mask();
  }

  AlgebraTables tables_;
  std::vector<std::uint16_t> cda_comp_;
  std::vector<std::uint16_t> otimes_;
  std::vector<std::uint16_t> roa_comp_;
  std::array<std::uint16_t, 512> cda_conv_{};
  std::array<std::uint16_t, 512> roa_conv_{};
  std::array<std::uint16_t, 512> roa_rot_{};
  std::array<std::uint16_t, 512> lir_{};
  std::array<std::uint16_t, 512> rir_{};
};

// ---------------------------------------------------------------------------
// ROA-to-CDA interaction scheme.
//
// For an atom t holding on (i,j,k), each of the three CDA cells on its pairs
// is refined by intersecting it with further cells that must carry the same
// atom, an Eq / not-Eq mask, and optionally Lir or Rir of another cell.

enum class PairSlot : std::uint8_t { ij, ji, ik, ki, jk, kj };
enum class EqMask : std::uint8_t { none, eq_only, distinct };
enum class Inferred : std::uint8_t { none, lir, rir };

struct CdaInference {
  PairSlot target = PairSlot::ij;
  std::array<PairSlot, 2> same{};  // first `same_count` entries are used
  std::uint8_t same_count = 0;
  EqMask mask = EqMask::none;
  Inferred fn = Inferred::none;
  PairSlot fn_arg = PairSlot::ij;
};

struct RoaToCdaRow {
  std::array<CdaInference, 3> to;  // targets ij, ik, jk in that order
};

const std::array<RoaToCdaRow, kAtomCount>& roa_to_cda_scheme();

/// The relation the target cell must lie in, given the other cells of the
/// triple. `cell(slot)` returns the current CDA relation for that pair.
template <typename CellFn>
CdaRelation implied(const CdaInference& inf, const Algebra& alg, CellFn&& cell) {
  CdaRelation r = CdaRelation::universal();
  for (std::uint8_t s = 0; s < inf.same_count; ++s) r &= cell(inf.same[s]);
  if (inf.mask == EqMask::eq_only) r &= kCdaEq;
  if (inf.mask == EqMask::distinct) r &= kCdaNotEq;
  if (inf.fn == Inferred::lir) r &= alg.lir(cell(inf.fn_arg));
  if (inf.fn == Inferred::rir) r &= alg.rir(cell(inf.fn_arg));
  return r;
}

// ---------------------------------------------------------------------------
// JSON export/import and reference comparison.

/// Byte-stable JSON: one key per table, cells as arrays of atom names.
std::string tables_to_json(const AlgebraTables& t);

/// Inverse of tables_to_json. Throws std::runtime_error on malformed input.
AlgebraTables tables_from_json(std::string_view text);

struct Discrepancy {
  std::string key;      // e.g. "cda_comp:SE,We"
  std::string printed;  // as transcribed
  std::string expected; // decoded transcription
  std::string derived;
  bool whitelisted = false;
};

struct DiscrepancyReport {
  std::size_t cells_compared = 0;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> stale_whitelist;  // whitelisted keys that now match

  std::vector<Discrepancy> unexpected() const;
  bool ok() const { return unexpected().empty() && stale_whitelist.empty(); }
};

/// Reference tables as printed in the literature, embedded at build time.
std::string_view builtin_reference_tables();

/// Decodes a printed composition cell such as `NE`, `[So,No]` or `?`.
CdaRelation decode_printed_cda(std::string_view printed);

/// Cell-by-cell comparison of derived tables against a transcription
/// fixture (JSON text, see core/data/reference_tables.json).
DiscrepancyReport verify_against_reference(const AlgebraTables& derived,
                                           std::string_view reference_json);

}  // namespace ccoa
