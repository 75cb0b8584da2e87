#include "ccoa/oracle.hpp"

namespace ccoa {
namespace {

class Searcher {
 public:
  Searcher(const CcoaCsp& csp, int radius, std::uint64_t budget)
      : csp_(csp), grid_(grid_points(radius)), budget_(budget), placed_(csp.size()) {}

  bool run() { return place(0); }
  PointAssignment result() const { return placed_; }

 private:
  bool place(std::size_t v) {
    if (v == csp_.size()) return true;
    for (const Point& p : grid_) {
      if (++tried_ > budget_)
        throw ResourceLimitError("model search exceeded its budget of " + std::to_string(budget_) + " candidates");
      placed_[v] = p;
      if (consistent_with_prefix(v) && place(v + 1)) return true;
    }
    return false;
  }

  // Cells whose largest index is v.
  bool consistent_with_prefix(std::size_t v) const {
    const auto& b = csp_.binary();
    const auto& t = csp_.ternary();
    const Point pv = placed_[v];
    for (std::size_t u = 0; u <= v; ++u) {
      if (!b.at(u, v).contains(cda_of(placed_[u], pv))) return false;
      if (!b.at(v, u).contains(cda_of(pv, placed_[u]))) return false;
    }
    for (std::size_t a = 0; a <= v; ++a) {
      const Point pa = placed_[a];
      for (std::size_t c = 0; c <= v; ++c) {
        const Point pc = placed_[c];
        if (!t.at(a, c, v).contains(roa_of(pa, pc, pv))) return false;
        if (!t.at(a, v, c).contains(roa_of(pa, pv, pc))) return false;
        if (!t.at(v, a, c).contains(roa_of(pv, pa, pc))) return false;
      }
    }
    return true;
  }

  const CcoaCsp& csp_;
  std::vector<Point> grid_;
  std::uint64_t budget_;
  std::uint64_t tried_ = 0;
  PointAssignment placed_;
};

}  // namespace

std::optional<PointAssignment> model_search(const CcoaCsp& csp, int radius, const ModelSearchOptions& opts) {
  if (radius < 0) throw std::invalid_argument("grid radius must be non-negative");
  Searcher s(csp, radius, opts.budget);
  if (!s.run()) return std::nullopt;
  return s.result();
}

std::optional<std::string> first_violation(const CcoaCsp& csp, const PointAssignment& model) {
  const std::size_t n = csp.size();
  if (model.size() != n) return "assignment covers " + std::to_string(model.size()) + " of " + std::to_string(n) + " variables";
  const auto& names = csp.names();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const CdaAtom got = cda_of(model[i], model[j]);
      if (!csp.binary().at(i, j).contains(got))
        return "B(" + names[i] + "," + names[j] + ") = " + to_string(csp.binary().at(i, j)) + " excludes " +
               std::string(name(got));
      for (std::size_t k = 0; k < n; ++k) {
        const RoaAtom t = roa_of(model[i], model[j], model[k]);
        if (!csp.ternary().at(i, j, k).contains(t))
          return "T(" + names[i] + "," + names[j] + "," + names[k] + ") = " + to_string(csp.ternary().at(i, j, k)) +
                 " excludes " + std::string(name(t));
      }
    }
  }
  return std::nullopt;
}

}  // namespace ccoa
