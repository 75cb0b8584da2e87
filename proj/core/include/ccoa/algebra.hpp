#pragma once

#include "ccoa/relation.hpp"

namespace ccoa {

/// Sign of (x_p - x_s, y_p - y_s) for cda atom r(p, s). Each CDA atom is
/// exactly one sign pair, which is what makes the calculus separable by axis.
struct SignPair {
  int x;
  int y;
  constexpr bool operator==(const SignPair&) const = default;
};

constexpr SignPair signs(CdaAtom a) {
  constexpr std::array<SignPair, kAtomCount> table{{
      {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}, {0, 0}}};
  return table[index(a)];
}

constexpr CdaAtom cda_from_signs(int sx, int sy) {
  for (CdaAtom a : all_atoms<CdaAtom>())
    if (signs(a) == SignPair{sx, sy}) return a;
  return CdaAtom::Eq;  // unreachable for sx, sy in {-1,0,1}
}

// Swapping the arguments negates both coordinate differences.
constexpr CdaAtom cda_converse(CdaAtom a) {
  const SignPair s = signs(a);
  return cda_from_signs(-s.x, -s.y);
}

/// t~ = {(a,b,c) : (a,c,b) in t}.
constexpr RoaAtom roa_converse(RoaAtom a) {
  using enum RoaAtom;
  constexpr std::array<RoaAtom, kAtomCount> table{de, cp, rr, bp, dd, br, cr, bw, lr};
  return table[index(a)];
}

/// t^ = {(a,b,c) : (c,a,b) in t}.
constexpr RoaAtom roa_rotation(RoaAtom a) {
  using enum RoaAtom;
  constexpr std::array<RoaAtom, kAtomCount> table{de, cp, lr, bw, cr, br, dd, bp, rr};
  return table[index(a)];
}

constexpr CdaRelation cda_converse(CdaRelation r) {
  return map_atoms(r, [](CdaAtom a) { return cda_converse(a); });
}

constexpr RoaRelation roa_converse(RoaRelation r) {
  return map_atoms(r, [](RoaAtom a) { return roa_converse(a); });
}

constexpr RoaRelation roa_rotation(RoaRelation r) {
  return map_atoms(r, [](RoaAtom a) { return roa_rotation(a); });
}

inline constexpr CdaRelation kCdaEq{CdaAtom::Eq};
inline constexpr CdaRelation kCdaNotEq = CdaRelation{CdaAtom::Eq}.complement();

}  // namespace ccoa
