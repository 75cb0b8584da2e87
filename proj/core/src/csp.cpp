#include "ccoa/csp.hpp"

#include <set>

#include "ccoa/geometry.hpp"

namespace ccoa {

BinaryMatrix::BinaryMatrix(std::size_t n) : n_(n), cells_(n * n, CdaRelation::universal()) {
  for (std::size_t i = 0; i < n; ++i) cells_[i * n + i] = kCdaEq;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, CdaRelation r) {
  cells_[i * n_ + j] = r;
  cells_[j * n_ + i] = cda_converse(r);
}

TernaryTensor::TernaryTensor(std::size_t n) : n_(n), cells_(n * n * n, RoaRelation::universal()) {
  for (std::size_t i = 0; i < n; ++i) {
    raw(i, i, i) = RoaRelation{RoaAtom::de};
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      raw(i, i, j) = repeated_index_domain(RepeatPattern::aab);
      raw(i, j, i) = repeated_index_domain(RepeatPattern::aba);
      raw(i, j, j) = repeated_index_domain(RepeatPattern::abb);
    }
  }
}

void TernaryTensor::set(std::size_t i, std::size_t j, std::size_t k, RoaRelation t) {
  raw(i, j, k) = t;
  raw(i, k, j) = roa_converse(t);
  const RoaRelation jki = roa_rotation(t);
  raw(j, k, i) = jki;
  raw(j, i, k) = roa_converse(jki);
  const RoaRelation kij = roa_rotation(jki);
  raw(k, i, j) = kij;
  raw(k, j, i) = roa_converse(kij);
}

RoaRelation repeated_index_domain(RepeatPattern p) {
  static const auto domains = [] {
    std::array<RoaRelation, 3> d{};
    const auto grid = grid_points(2);
    const Point a{0, 0};
    for (const Point& b : grid) {
      if (b == a) continue;
      d[0].insert(roa_of(a, a, b));
      d[1].insert(roa_of(a, b, a));
      d[2].insert(roa_of(a, b, b));
    }
    // Any pattern also admits full coincidence.
    for (auto& r : d) r.insert(RoaAtom::de);
    return d;
  }();
  return domains[static_cast<std::size_t>(p)];
}

CcoaCsp::CcoaCsp(std::vector<std::string> variables) : names_(std::move(variables)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw DuplicateNameError(n);
  if (names_.empty()) throw std::invalid_argument("a constraint network needs at least one variable");
  b_ = BinaryMatrix(names_.size());
  t_ = TernaryTensor(names_.size());
}

std::optional<std::size_t> CcoaCsp::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void CcoaCsp::check_index(std::size_t i) const {
  if (i >= names_.size()) throw std::out_of_range("variable index out of range: " + std::to_string(i));
}

AssertOutcome CcoaCsp::assert_cda(std::size_t i, std::size_t j, CdaRelation r) {
  check_index(i);
  check_index(j);
  const CdaRelation before = b_.at(i, j);
  const CdaRelation after = before & r;
  b_.set(i, j, after);
  return {after != before, after.empty()};
}

AssertOutcome CcoaCsp::assert_roa(std::size_t i, std::size_t j, std::size_t k, RoaRelation r) {
  check_index(i);
  check_index(j);
  check_index(k);
  const RoaRelation before = t_.at(i, j, k);
  const RoaRelation after = before & r;
  t_.set(i, j, k, after);
  return {after != before, after.empty()};
}

bool CcoaCsp::has_empty_cell() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b_.at(i, j).empty()) return true;
      for (std::size_t k = 0; k < n; ++k)
        if (t_.at(i, j, k).empty()) return true;
    }
  return false;
}

std::optional<std::string> CcoaCsp::check_invariants() const {
  const std::size_t n = size();
  auto cell = [](std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!b_.at(i, i).is_subset_of(kCdaEq)) return "diagonal property fails at " + std::to_string(i);
    if (!t_.at(i, i, i).is_subset_of(RoaRelation{RoaAtom::de}))
      return "identity property fails at " + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (b_.at(i, j) != cda_converse(b_.at(j, i)))
        return "converse property fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (std::size_t k = 0; k < n; ++k) {
        const RoaRelation t = t_.at(i, j, k);
        if (t != roa_converse(t_.at(i, k, j))) return "ternary converse property fails at " + cell(i, j, k);
        if (t != roa_rotation(t_.at(k, i, j))) return "rotation property fails at " + cell(i, j, k);
      }
    }
  }
  return std::nullopt;
}

bool CcoaCsp::refines(const CcoaCsp& other) const {
  const std::size_t n = size();
  if (other.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!b_.at(i, j).is_subset_of(other.b_.at(i, j))) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (!t_.at(i, j, k).is_subset_of(other.t_.at(i, j, k))) return false;
    }
  return true;
}

}  // namespace ccoa
