#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccoa/algebra.hpp"

namespace ccoa {

class DuplicateNameError : public std::invalid_argument {
 public:
  explicit DuplicateNameError(const std::string& name)
      : std::invalid_argument("duplicate variable name: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Dense n x n matrix of CDA relations. Writes through set() keep the
/// converse property B_ji = (B_ij)~.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  CdaRelation at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  /// B_ij <- r and B_ji <- r~.
  void set(std::size_t i, std::size_t j, CdaRelation r);

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<CdaRelation> cells_;
};

/// Dense n x n x n tensor of ROA relations. set() writes the value and its
/// five permutation images so the converse and rotation properties hold.
class TernaryTensor {
 public:
  TernaryTensor() = default;
  explicit TernaryTensor(std::size_t n);

  std::size_t size() const { return n_; }
  RoaRelation at(std::size_t i, std::size_t j, std::size_t k) const { return cells_[(i * n_ + j) * n_ + k]; }

  void set(std::size_t i, std::size_t j, std::size_t k, RoaRelation t);

  bool operator==(const TernaryTensor&) const = default;

 private:
  RoaRelation& raw(std::size_t i, std::size_t j, std::size_t k) { return cells_[(i * n_ + j) * n_ + k]; }

  std::size_t n_ = 0;
  std::vector<RoaRelation> cells_;
};

/// Atoms geometrically possible on a triple whose index pattern is
/// (i,i,j), (i,j,i) or (i,j,j) with i != j.
enum class RepeatPattern { aab, aba, abb };
RoaRelation repeated_index_domain(RepeatPattern p);

struct AssertOutcome {
  bool changed = false;
  bool emptied = false;  // some touched cell is now empty
};

/// A cCOA constraint network over named variables: CDA relations on pairs,
/// ROA relations on triples.
class CcoaCsp {
 public:
  /// All cells universal except B_ii = {Eq}, T_iii = {de}, and triples with
  /// exactly two equal indices, which start at repeated_index_domain().
  explicit CcoaCsp(std::vector<std::string> variables);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const BinaryMatrix& binary() const { return b_; }
  const TernaryTensor& ternary() const { return t_; }
  BinaryMatrix& binary() { return b_; }
  TernaryTensor& ternary() { return t_; }

  /// B_ij <- B_ij & r, with the converse cell kept in step.
  AssertOutcome assert_cda(std::size_t i, std::size_t j, CdaRelation r);
  /// T_ijk <- T_ijk & r, with all six permutation cells kept in step.
  AssertOutcome assert_roa(std::size_t i, std::size_t j, std::size_t k, RoaRelation r);

  BinaryMatrix project_cda() const { return b_; }
  TernaryTensor project_roa() const { return t_; }

  bool has_empty_cell() const;
  /// Description of the first violated matrix/tensor property, if any.
  std::optional<std::string> check_invariants() const;
  /// True when every cell of `this` is a subset of the same cell of `other`.
  bool refines(const CcoaCsp& other) const;

  bool operator==(const CcoaCsp&) const = default;

 private:
  void check_index(std::size_t i) const;

  std::vector<std::string> names_;
  BinaryMatrix b_;
  TernaryTensor t_;
};

}  // namespace ccoa
