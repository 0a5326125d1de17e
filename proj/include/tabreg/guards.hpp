#pragma once

#include <cstddef>

namespace tabreg {

// Size limits for the exponential procedures. Every limit is checked before
// the work starts (or as it grows) and violations raise GuardExceeded.
struct Guards {
  std::size_t max_boxes = 64;
  std::size_t max_collections = 2'000'000;
  std::size_t max_ground_set = 24;       // simplicial complexes on variables
  std::size_t max_hochster_vars = 20;    // 2^N restriction loop
  std::size_t max_lcm_generators = 20;
  std::size_t max_lattice = 200'000;
  std::size_t max_grid = 5'000'000;      // exponent grid cells actually visited
  std::size_t max_faces = 2'000'000;
};

}  // namespace tabreg
