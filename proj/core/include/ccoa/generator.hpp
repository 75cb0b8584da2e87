#pragma once

#include <cstdint>
#include <random>

#include "ccoa/csp.hpp"
#include "ccoa/geometry.hpp"

namespace ccoa {

/// mt19937_64 with distribution code of our own, so instances are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  bool chance(double p);
  std::int64_t between(std::int64_t lo, std::int64_t hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> default_names(std::size_t n);  // v0, v1, ...

/// Every pair and every triple of distinct variables is constrained with
/// probability `density` to a uniformly random nonempty relation.
CcoaCsp random_csp(std::size_t n, double density, std::uint64_t seed);

/// CDA-only network with one uniformly random atom on every pair i < j.
CcoaCsp random_atomic_cda(std::size_t n, Rng& rng);

struct PlantedInstance {
  CcoaCsp csp;
  PointAssignment model;
};

/// Samples points on the grid of the given radius, reads off the atomic
/// relations and weakens them: each cell is kept with probability
/// `density` and then extended by every other atom with probability one half.
PlantedInstance planted_csp(std::size_t n, int radius, double density, Rng& rng);

}  // namespace ccoa
