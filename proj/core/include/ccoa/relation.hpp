#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

namespace ccoa {

inline constexpr std::size_t kAtomCount = 9;

/// Cardinal direction atoms of the projection-based model. `No` means the
/// first argument lies north of the second. Directional atoms 0..7 run
/// clockwise starting at north.
enum class CdaAtom : std::uint8_t { No, NE, Ea, SE, So, SW, We, NW, Eq };

/// Coarse relative-orientation atoms. t(parent, reference, primary): lr(A,B,C)
/// reads "viewed from A, C is to the left of B".
enum class RoaAtom : std::uint8_t { de, dd, lr, bp, cp, bw, cr, br, rr };

template <typename Atom>
struct AtomTraits;

template <>
struct AtomTraits<CdaAtom> {
  static constexpr std::array<std::string_view, kAtomCount> names{
      "No", "NE", "Ea", "SE", "So", "SW", "We", "NW", "Eq"};
};

template <>
struct AtomTraits<RoaAtom> {
  static constexpr std::array<std::string_view, kAtomCount> names{
      "de", "dd", "lr", "bp", "cp", "bw", "cr", "br", "rr"};
};

template <typename Atom>
constexpr std::size_t index(Atom a) {
  return static_cast<std::size_t>(a);
}

template <typename Atom>
constexpr Atom atom_at(std::size_t i) {
  return static_cast<Atom>(i);
}

template <typename Atom>
constexpr std::string_view name(Atom a) {
  return AtomTraits<Atom>::names[index(a)];
}

template <typename Atom>
constexpr std::optional<Atom> parse_atom(std::string_view s) {
  for (std::size_t i = 0; i < kAtomCount; ++i)
    if (AtomTraits<Atom>::names[i] == s) return atom_at<Atom>(i);
  return std::nullopt;
}

template <typename Atom>
constexpr std::array<Atom, kAtomCount> all_atoms() {
  std::array<Atom, kAtomCount> out{};
  for (std::size_t i = 0; i < kAtomCount; ++i) out[i] = atom_at<Atom>(i);
  return out;
}

/// A relation of one of the two 9-atom algebras: a set of atoms stored as a
/// 9-bit mask. Bit i is set iff the atom with stable index i is a member.
template <typename Atom>
class RelationSet {
 public:
  using atom_type = Atom;
  static constexpr std::uint16_t kUniversalMask = (1u << kAtomCount) - 1;

  constexpr RelationSet() = default;
  constexpr RelationSet(std::initializer_list<Atom> atoms) {
    for (Atom a : atoms) insert(a);
  }

  static constexpr RelationSet from_mask(std::uint16_t m) {
    RelationSet r;
    r.bits_ = static_cast<std::uint16_t>(m & kUniversalMask);
    return r;
  }
  static constexpr RelationSet universal() { return from_mask(kUniversalMask); }
  static constexpr RelationSet empty_set() { return RelationSet{}; }
  static constexpr RelationSet single(Atom a) { return RelationSet{a}; }

  constexpr std::uint16_t mask() const { return bits_; }
  constexpr bool contains(Atom a) const { return (bits_ >> index(a)) & 1u; }
  constexpr void insert(Atom a) { bits_ |= static_cast<std::uint16_t>(1u << index(a)); }
  constexpr void erase(Atom a) { bits_ &= static_cast<std::uint16_t>(~(1u << index(a))); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_universal() const { return bits_ == kUniversalMask; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_atomic() const { return size() == 1; }

  // Lowest-index member. Precondition: !empty().
  constexpr Atom first() const { return atom_at<Atom>(std::countr_zero(bits_)); }

  constexpr bool is_subset_of(RelationSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr RelationSet complement() const { return from_mask(~bits_); }

  constexpr RelationSet operator&(RelationSet o) const { return from_mask(bits_ & o.bits_); }
  constexpr RelationSet operator|(RelationSet o) const { return from_mask(bits_ | o.bits_); }
  constexpr RelationSet operator-(RelationSet o) const { return from_mask(bits_ & ~o.bits_); }
  constexpr RelationSet& operator&=(RelationSet o) { return *this = *this & o; }
  constexpr RelationSet& operator|=(RelationSet o) { return *this = *this | o; }
  constexpr bool operator==(const RelationSet&) const = default;

  class iterator {
   public:
    using value_type = Atom;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint16_t rest) : rest_(rest) {}
    constexpr Atom operator*() const { return atom_at<Atom>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= static_cast<std::uint16_t>(rest_ - 1);
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint16_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint16_t bits_ = 0;
};

using CdaRelation = RelationSet<CdaAtom>;
using RoaRelation = RelationSet<RoaAtom>;

/// Lifts a per-atom map to relations by union.
template <typename Atom, typename F>
constexpr auto map_atoms(RelationSet<Atom> r, F f) {
  using Out = decltype(f(Atom{}));
  RelationSet<Out> out;
  for (Atom a : r) out.insert(f(a));
  return out;
}

/// `{a,b,c}` in stable index order; `{}` for the empty set. When
/// `question_mark_universal` is set the universal relation prints as `?`.
template <typename Atom>
std::string to_string(RelationSet<Atom> r, bool question_mark_universal = false) {
  if (question_mark_universal && r.is_universal()) return "?";
  std::string out = "{";
  bool first = true;
  for (Atom a : r) {
    if (!first) out += ',';
    out += name(a);
    first = false;
  }
  out += '}';
  return out;
}

/// Accepts a bare atom name, `?`, or a brace list (whitespace tolerated
/// inside braces). Returns nullopt on any malformed input.
template <typename Atom>
std::optional<RelationSet<Atom>> parse_relation(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s == "?") return RelationSet<Atom>::universal();
  if (s.empty()) return std::nullopt;
  if (s.front() != '{') {
    if (auto a = parse_atom<Atom>(s)) return RelationSet<Atom>::single(*a);
    return std::nullopt;
  }
  if (s.back() != '}') return std::nullopt;
  s = trim(s.substr(1, s.size() - 2));
  RelationSet<Atom> out;
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    auto tok = trim(s.substr(0, comma));
    auto a = parse_atom<Atom>(tok);
    if (!a) return std::nullopt;
    out.insert(*a);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace ccoa
