#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccoa/csp.hpp"
#include "ccoa/tables.hpp"

namespace ccoa {

/// A pair (i,j) with i <= j, or a triple (i,j,k) with i <= j <= k.
struct WorkItem {
  bool is_triple = false;
  std::array<std::uint32_t, 3> idx{};

  static WorkItem pair(std::size_t i, std::size_t j);
  static WorkItem triple(std::size_t i, std::size_t j, std::size_t k);
  bool operator==(const WorkItem&) const = default;
};

/// FIFO of pairs and triples in canonical (sorted) form. An item already
/// waiting in the queue is not added a second time.
class WorkQueue {
 public:
  explicit WorkQueue(std::size_t n);

  /// Every canonical pair, then every canonical triple, lexicographically.
  void fill_all();
  bool push(const WorkItem& item);  // false if already queued
  WorkItem pop();
  bool empty() const { return fifo_.empty(); }
  std::size_t size() const { return fifo_.size(); }
  bool contains(const WorkItem& item) const;

 private:
  std::size_t slot(const WorkItem& item) const;

  std::size_t n_;
  std::deque<WorkItem> fifo_;
  std::vector<bool> queued_pairs_;
  std::vector<bool> queued_triples_;
};

enum class Channel : std::uint8_t { path, strong4, cda_to_roa, roa_to_cda };
std::string_view channel_name(Channel c);

/// One cell that shrank during propagation. Masks are CDA masks for pair
/// cells and ROA masks for triple cells.
struct Refinement {
  Channel channel;
  WorkItem cell;  // indices in the orientation that was written, not sorted
  std::uint16_t before;
  std::uint16_t after;
};

/// Where an empty relation arose: `existing` & `inferred` = {}.
struct Culprit {
  Channel channel;
  WorkItem cell;  // unsorted orientation
  std::uint16_t existing;
  std::uint16_t inferred;
};

struct PropagationStats {
  std::uint64_t dequeues = 0;
  std::uint64_t pair_dequeues = 0;
  std::uint64_t triple_dequeues = 0;
  std::uint64_t refinements = 0;
  std::array<std::uint64_t, 4> by_channel{};  // indexed by Channel
};

enum class PropagationStatus : std::uint8_t { fixpoint, inconsistent };

struct PropagationOutcome {
  PropagationStatus status = PropagationStatus::fixpoint;
  std::optional<Culprit> culprit;
  PropagationStats stats;

  bool consistent() const { return status == PropagationStatus::fixpoint; }
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PropagationOptions {
  bool path = true;        // Bik <- Bik & Bij o Bjk
  bool strong4 = true;     // Tijm <- Tijm & Tijk o Tikm
  bool cda_to_roa = true;  // Tijk <- Tijk & Bij (x) Bjk
  bool roa_to_cda = true;  // CDA cells implied by Tijk
  // Re-check the matrix/tensor properties after every dequeue; throws
  // InvariantViolation on failure.
  bool check_invariants = false;
  std::function<void(const Refinement&)> trace;

  static PropagationOptions cda_only() { return {true, false, false, false}; }
  static PropagationOptions roa_only() { return {false, true, false, false}; }
};

/// The combined fixpoint engine. Each step method returns false as soon as
/// an empty relation arises; the culprit is then available via outcome().
class Propagator {
 public:
  Propagator(CcoaCsp& csp, const Algebra& algebra, PropagationOptions opts = {});

  /// Runs until the queue drains or an empty relation appears.
  PropagationOutcome run(WorkQueue& queue);

  bool pair_propagation(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k);
  bool triple_propagation(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k, std::size_t m);
  bool cda_to_roa(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k);
  bool roa_to_cda(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k);
  /// Writes T_ijk and its five permutation images.
  void update(std::size_t i, std::size_t j, std::size_t k, RoaRelation t);

  const PropagationOutcome& outcome() const { return outcome_; }

 private:
  bool refine_pair(WorkQueue& q, Channel ch, std::size_t i, std::size_t k, CdaRelation inferred);
  bool refine_triple(WorkQueue& q, Channel ch, std::size_t i, std::size_t j, std::size_t k, RoaRelation inferred);

  CcoaCsp& csp_;
  const Algebra& alg_;
  PropagationOptions opts_;
  PropagationOutcome outcome_;
};

/// Enforces path consistency on the CDA part, strong 4-consistency on the
/// ROA part and both interaction channels, in place.
PropagationOutcome pcs4c_plus(CcoaCsp& csp, const Algebra& algebra = Algebra::builtin(),
                              const PropagationOptions& opts = {});

/// Same engine, starting from the given items only. Used after a local
/// change to a CSP that was already a fixpoint.
PropagationOutcome propagate_from(CcoaCsp& csp, const std::vector<WorkItem>& seeds,
                                  const Algebra& algebra = Algebra::builtin(), const PropagationOptions& opts = {});

std::string describe(const CcoaCsp& csp, const Refinement& r);
std::string describe(const CcoaCsp& csp, const Culprit& c);

}  // namespace ccoa
