#pragma once

// Simplicial complexes on at most 64 named vertices, faces as bitmasks.

#include <cstdint>
#include <vector>

#include "tabreg/field_rank.hpp"
#include "tabreg/guards.hpp"
#include "tabreg/monomial_ideal.hpp"

namespace tabreg {

using FaceMask = std::uint64_t;

inline int face_size(FaceMask f) { return __builtin_popcountll(f); }

/// Facets over a ground set. The void complex has no faces at all; the
/// empty complex has exactly one face, the empty set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the inclusion-maximal masks. Throws std::invalid_argument when a
  /// facet uses a vertex outside the ground set or the ground set exceeds 64.
  SimplicialComplex(VariableSet ground, std::vector<FaceMask> facets);

  static SimplicialComplex void_complex(VariableSet ground) { return SimplicialComplex(std::move(ground), {}); }
  static SimplicialComplex empty_complex(VariableSet ground) { return SimplicialComplex(std::move(ground), {0}); }
  static SimplicialComplex simplex(VariableSet ground);

  const VariableSet& ground() const noexcept { return ground_; }
  /// Sorted ascending.
  const std::vector<FaceMask>& facets() const noexcept { return facets_; }

  bool is_void() const noexcept { return facets_.empty(); }
  bool is_empty_complex() const noexcept { return facets_.size() == 1 && facets_.front() == 0; }
  bool contains(FaceMask f) const;
  /// -1 for the empty complex, -2 for the void complex.
  int dimension() const;
  /// Every face, ordered by size then mask. Throws GuardExceeded.
  std::vector<FaceMask> faces(const Guards& guards = {}) const;
  /// Reduced Euler characteristic sum_q (-1)^q f_q with f_{-1} = 1.
  long long reduced_euler_characteristic(const Guards& guards = {}) const;

  SimplicialComplex link(FaceMask f) const;
  /// Restriction to the vertices in `w` (ground set unchanged).
  SimplicialComplex induced(FaceMask w) const;
  /// True when some vertex lies in every facet.
  bool is_cone() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  VariableSet ground_;
  std::vector<FaceMask> facets_;
};

/// h~_q for q = -1, 0, 1, ...; trailing zeros trimmed.
struct ReducedHomology {
  std::vector<std::size_t> ranks;  // ranks[q + 1]

  std::size_t at(int q) const {
    const auto idx = static_cast<std::size_t>(q + 1);
    return q >= -1 && idx < ranks.size() ? ranks[idx] : 0;
  }
  bool acyclic() const;
};

ReducedHomology reduced_homology(const SimplicialComplex& c, FieldChoice field = {}, const Guards& guards = {});

/// Homology of the complex whose faces are exactly `faces` (must be closed
/// under subsets, may be empty for the void complex).
ReducedHomology reduced_homology_of_faces(const std::vector<FaceMask>& faces, FieldChoice field);

/// Faces F with x_F outside the squarefree ideal. Throws
/// std::invalid_argument for non-squarefree input and GuardExceeded when the
/// variable count exceeds guards.max_ground_set.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, const Guards& guards = {});

/// Squarefree generators as masks. Throws unless squarefree with <= 64 variables.
std::vector<FaceMask> generator_masks(const MonomialIdeal& ideal);

}  // namespace tabreg
