#pragma once

// Exponent-grid searches over associated radicals sqrt(I : x^a).
//
// Every a can be clamped to a_v <= rho_v(I) without changing I : x^a. The
// radical further depends on a_v only through which generator exponents
// exceed it, so the compressed grid visits, per variable, 0 plus the
// largest value of every threshold class: {e - 1 : e a generator exponent of
// v, e >= 2} and rho_v. Both grids give the same extremes.

#include <functional>
#include <optional>

#include "tabreg/field_rank.hpp"
#include "tabreg/guards.hpp"
#include "tabreg/monomial_ideal.hpp"
#include "tabreg/simplicial_complex.hpp"
#include "tabreg/tableau.hpp"

namespace tabreg {

enum class GridMode { Full, Compressed };

/// Per-variable candidate exponents for the chosen grid.
std::vector<std::vector<Exponent>> exponent_grid(const MonomialIdeal& ideal, GridMode mode);

/// Delta(sqrt(I : x^a)). Throws std::invalid_argument("exponent inside ideal").
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Monomial& a, const Guards& guards = {});

struct CriticalPair {
  Monomial exponent;
  int index = 0;     // i with h~_{i-1}(lk F) != 0
  FaceMask face = 0; // F in Delta_a, disjoint from supp a
};

struct RegularitySearch {
  long long regularity = 0;
  CriticalPair witness;
  /// Best |a| + i over cells with a_v < rho_v for all v (the strict grid);
  /// empty when no strict cell is critical.
  std::optional<long long> strict_grid_regularity;
  std::size_t cells_visited = 0;
};

/// Visits every critical pair (a, i) of the grid once, with one witnessing
/// face. Stops when the visitor returns false. Throws GuardExceeded past
/// guards.max_grid cells.
void for_each_critical_pair(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards, GridMode mode,
                            const std::function<bool(const CriticalPair&)>& visit);

/// reg(S/I) = max |a| + i over critical pairs. Throws std::invalid_argument
/// for the unit ideal.
RegularitySearch reg_via_degree_complexes(const MonomialIdeal& ideal, FieldChoice field = {},
                                          const Guards& guards = {}, GridMode mode = GridMode::Compressed);

struct DepthSearch {
  int depth = 0;
  Monomial exponent;  // an a attaining the minimum
  std::size_t cells_visited = 0;
};

/// min depth S/sqrt(I(Y) : x^a) over the grid, each radical taken in closed
/// form (restricted Ferrers edge ideal plus variables) and its depth from the
/// Ferrers formula plus free variables. No homology is computed.
DepthSearch depth_via_associated_radicals(const Tableau& t, const Guards& guards = {},
                                          GridMode mode = GridMode::Compressed);

struct RadicalDepthSearch {
  int depth = 0;
  Monomial exponent;
  std::size_t cells_visited = 0;
  std::size_t distinct_radicals = 0;
};

/// Hochster's depth formula for any monomial ideal: min depth S/sqrt(I : x^a)
/// over the grid, each radical's depth taken from oracle_invariants. Slow but
/// needs no lcm lattice of I itself.
RadicalDepthSearch depth_via_radicals(const MonomialIdeal& ideal, FieldChoice field = {}, const Guards& guards = {},
                                      GridMode mode = GridMode::Compressed);

/// depth S/J for J = I(G restricted to the complement of U) + (U) on a
/// tableau graph, where `in_u` flags rows then columns.
int depth_of_tableau_radical(const Tableau& t, const std::vector<bool>& in_u);

}  // namespace tabreg
