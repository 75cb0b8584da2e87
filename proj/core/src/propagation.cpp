#include "ccoa/propagation.hpp"

#include <algorithm>

namespace ccoa {

WorkItem WorkItem::pair(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return {false, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0}};
}

WorkItem WorkItem::triple(std::size_t i, std::size_t j, std::size_t k) {
  std::array<std::uint32_t, 3> a{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                 static_cast<std::uint32_t>(k)};
  std::sort(a.begin(), a.end());
  return {true, a};
}

WorkQueue::WorkQueue(std::size_t n) : n_(n), queued_pairs_(n * n, false), queued_triples_(n * n * n, false) {}

std::size_t WorkQueue::slot(const WorkItem& item) const {
  if (!item.is_triple) return item.idx[0] * n_ + item.idx[1];
  return (item.idx[0] * n_ + item.idx[1]) * n_ + item.idx[2];
}

void WorkQueue::fill_all() {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) push(WorkItem::pair(i, j));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      for (std::size_t k = j; k < n_; ++k) push(WorkItem::triple(i, j, k));
}

bool WorkQueue::push(const WorkItem& item) {
  auto& flags = item.is_triple ? queued_triples_ : queued_pairs_;
  const std::size_t s = slot(item);
  if (flags[s]) return false;
  flags[s] = true;
  fifo_.push_back(item);
  return true;
}

WorkItem WorkQueue::pop() {
  WorkItem item = fifo_.front();
  fifo_.pop_front();
  (item.is_triple ? queued_triples_ : queued_pairs_)[slot(item)] = false;
  return item;
}

bool WorkQueue::contains(const WorkItem& item) const {
  return (item.is_triple ? queued_triples_ : queued_pairs_)[slot(item)];
}

std::string_view channel_name(Channel c) {
  switch (c) {
    case Channel::path: return "path";
    case Channel::strong4: return "strong4";
    case Channel::cda_to_roa: return "cda_to_roa";
    case Channel::roa_to_cda: return "roa_to_cda";
  }
  return "?";
}

Propagator::Propagator(CcoaCsp& csp, const Algebra& algebra, PropagationOptions opts)
    : csp_(csp), alg_(algebra), opts_(std::move(opts)) {}

PropagationOutcome Propagator::run(WorkQueue& queue) {
  const std::size_t n = csp_.size();
  while (!queue.empty() && outcome_.consistent()) {
    const WorkItem item = queue.pop();
    ++outcome_.stats.dequeues;
    const auto [i, j, k] = item.idx;
    if (!item.is_triple) {
      ++outcome_.stats.pair_dequeues;
      for (std::size_t m = 0; m < n; ++m)
        if (!pair_propagation(queue, i, j, m)) break;
    } else {
      ++outcome_.stats.triple_dequeues;
      for (std::size_t m = 0; m < n; ++m)
        if (!triple_propagation(queue, i, j, k, m)) break;
    }
    if (opts_.check_invariants) {
      if (auto bad = csp_.check_invariants()) throw InvariantViolation(*bad);
    }
  }
  return outcome_;
}

bool Propagator::pair_propagation(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k) {
  const auto& b = csp_.binary();
  if (opts_.path && !refine_pair(q, Channel::path, i, k, alg_.cda_compose(b.at(i, j), b.at(j, k)))) return false;
  if (opts_.cda_to_roa && !cda_to_roa(q, i, j, k)) return false;
  if (opts_.path && !refine_pair(q, Channel::path, k, j, alg_.cda_compose(b.at(k, i), b.at(i, j)))) return false;
  if (opts_.cda_to_roa && !cda_to_roa(q, k, i, j)) return false;
  // B_ij also feeds the interaction scheme of every triple through i and j.
  if (opts_.roa_to_cda) {
    std::array<std::size_t, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    if (!roa_to_cda(q, t[0], t[1], t[2])) return false;
  }
  return true;
}

bool Propagator::triple_propagation(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
  const auto& t = csp_.ternary();
  if (opts_.strong4) {
    if (!refine_triple(q, Channel::strong4, i, j, m, alg_.roa_compose(t.at(i, j, k), t.at(i, k, m)))) return false;
    if (!refine_triple(q, Channel::strong4, i, k, m, alg_.roa_compose(t.at(i, k, j), t.at(i, j, m)))) return false;
    if (!refine_triple(q, Channel::strong4, j, k, m, alg_.roa_compose(t.at(j, k, i), t.at(j, i, m)))) return false;
    // The remaining orientations of (i,j,k) as first factor.
    if (!refine_triple(q, Channel::strong4, j, i, m, alg_.roa_compose(t.at(j, i, k), t.at(j, k, m)))) return false;
    if (!refine_triple(q, Channel::strong4, k, i, m, alg_.roa_compose(t.at(k, i, j), t.at(k, j, m)))) return false;
    if (!refine_triple(q, Channel::strong4, k, j, m, alg_.roa_compose(t.at(k, j, i), t.at(k, i, m)))) return false;
  }
  if (opts_.roa_to_cda && !roa_to_cda(q, i, j, k)) return false;
  return true;
}

bool Propagator::cda_to_roa(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k) {
  const auto& b = csp_.binary();
  return refine_triple(q, Channel::cda_to_roa, i, j, k, alg_.cda_otimes(b.at(i, j), b.at(j, k)));
}

bool Propagator::roa_to_cda(WorkQueue& q, std::size_t i, std::size_t j, std::size_t k) {
  const std::array<std::size_t, 3> v{i, j, k};
  // PairSlot -> (first, second) positions in v.
  static constexpr std::array<std::array<std::uint8_t, 2>, 6> kEnds{{{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}};
  const auto& scheme = roa_to_cda_scheme();
  const RoaRelation t = csp_.ternary().at(i, j, k);
  for (std::size_t target = 0; target < 3; ++target) {
    auto cell = [&](PairSlot s) {
      const auto& e = kEnds[static_cast<std::size_t>(s)];
      return csp_.binary().at(v[e[0]], v[e[1]]);
    };
    CdaRelation inferred;
    for (RoaAtom a : t) inferred |= implied(scheme[index(a)].to[target], alg_, cell);
    const auto& e = kEnds[static_cast<std::size_t>(scheme[0].to[target].target)];
    if (!refine_pair(q, Channel::roa_to_cda, v[e[0]], v[e[1]], inferred)) return false;
  }
  return true;
}

void Propagator::update(std::size_t i, std::size_t j, std::size_t k, RoaRelation t) {
  csp_.ternary().set(i, j, k, t);
}

bool Propagator::refine_pair(WorkQueue& q, Channel ch, std::size_t i, std::size_t k, CdaRelation inferred) {
  const CdaRelation existing = csp_.binary().at(i, k);
  const CdaRelation next = existing & inferred;
  if (next == existing) return true;
  const WorkItem cell{false, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k), 0}};
  if (next.empty()) {
    outcome_.status = PropagationStatus::inconsistent;
    outcome_.culprit = Culprit{ch, cell, existing.mask(), inferred.mask()};
    return false;
  }
  csp_.binary().set(i, k, next);
  q.push(WorkItem::pair(i, k));
  ++outcome_.stats.refinements;
  ++outcome_.stats.by_channel[static_cast<std::size_t>(ch)];
  if (opts_.trace) opts_.trace(Refinement{ch, cell, existing.mask(), next.mask()});
  return true;
}

bool Propagator::refine_triple(WorkQueue& q, Channel ch, std::size_t i, std::size_t j, std::size_t k,
                               RoaRelation inferred) {
  const RoaRelation existing = csp_.ternary().at(i, j, k);
  const RoaRelation next = existing & inferred;
  if (next == existing) return true;
  const WorkItem cell{true, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                             static_cast<std::uint32_t>(k)}};
  if (next.empty()) {
    outcome_.status = PropagationStatus::inconsistent;
    outcome_.culprit = Culprit{ch, cell, existing.mask(), inferred.mask()};
    return false;
  }
  update(i, j, k, next);
  q.push(WorkItem::triple(i, j, k));
  ++outcome_.stats.refinements;
  ++outcome_.stats.by_channel[static_cast<std::size_t>(ch)];
  if (opts_.trace) opts_.trace(Refinement{ch, cell, existing.mask(), next.mask()});
  return true;
}

PropagationOutcome pcs4c_plus(CcoaCsp& csp, const Algebra& algebra, const PropagationOptions& opts) {
  WorkQueue q(csp.size());
  q.fill_all();
  return Propagator(csp, algebra, opts).run(q);
}

PropagationOutcome propagate_from(CcoaCsp& csp, const std::vector<WorkItem>& seeds, const Algebra& algebra,
                                  const PropagationOptions& opts) {
  WorkQueue q(csp.size());
  for (const WorkItem& w : seeds) q.push(w.is_triple ? WorkItem::triple(w.idx[0], w.idx[1], w.idx[2])
                                                     : WorkItem::pair(w.idx[0], w.idx[1]));
  return Propagator(csp, algebra, opts).run(q);
}

namespace {

std::string cell_text(const CcoaCsp& csp, const WorkItem& w) {
  const auto& n = csp.names();
  if (!w.is_triple) return "B(" + n[w.idx[0]] + "," + n[w.idx[1]] + ")";
  return "T(" + n[w.idx[0]] + "," + n[w.idx[1]] + "," + n[w.idx[2]] + ")";
}

std::string mask_text(const WorkItem& w, std::uint16_t mask) {
  return w.is_triple ? to_string(RoaRelation::from_mask(mask)) : to_string(CdaRelation::from_mask(mask));
}

}  // namespace

std::string describe(const CcoaCsp& csp, const Refinement& r) {
  return "[" + std::string(channel_name(r.channel)) + "] " + cell_text(csp, r.cell) + ": " +
         mask_text(r.cell, r.before) + " -> " + mask_text(r.cell, r.after);
}

std::string describe(const CcoaCsp& csp, const Culprit& c) {
  return "[" + std::string(channel_name(c.channel)) + "] " + cell_text(csp, c.cell) + ": " +
         mask_text(c.cell, c.existing) + " & " + mask_text(c.cell, c.inferred) + " = {}";
}

}  // namespace ccoa
