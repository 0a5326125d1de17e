#pragma once

// Graded Betti numbers of S/I for monomial ideals, by two independent
// routes, and the invariants they determine.
//
//  * hochster_betti: squarefree I, beta_{i,|W|} = sum over vertex subsets W
//    of h~_{|W|-i-1}(Delta(I) restricted to W).
//  * lcm_betti: any monomial I. Betti numbers live on the lcm lattice L_I and
//    beta_{i,b} = h~_{i-2}((1, b)) for the open interval below b.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tabreg/field_rank.hpp"
#include "tabreg/guards.hpp"
#include "tabreg/monomial_ideal.hpp"
#include "tabreg/simplicial_complex.hpp"

namespace tabreg {

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::size_t variables) : variables_(variables) {}

  void add(int i, long long j, std::uint64_t rank);
  std::uint64_t at(int i, long long j) const;
  /// (i, j) -> beta_{i,j}, zero entries omitted.
  const std::map<std::pair<int, long long>, std::uint64_t>& entries() const noexcept { return entries_; }
  std::size_t variables() const noexcept { return variables_; }

  /// Largest i with a nonzero entry. Throws std::logic_error on an empty table.
  int projective_dimension() const;
  /// Largest j - i over nonzero entries.
  long long regularity() const;
  /// Number of variables minus projective dimension.
  int depth() const;

  /// Macaulay2-style grid: columns are homological degrees i, rows are j - i.
  std::string to_text() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t variables_ = 0;
  std::map<std::pair<int, long long>, std::uint64_t> entries_;
};

/// Throws std::invalid_argument for non-squarefree input, GuardExceeded when
/// the variable count exceeds guards.max_hochster_vars.
BettiTable hochster_betti(const MonomialIdeal& ideal, FieldChoice field = {}, const Guards& guards = {});

/// Join-closure of the minimal generators; excludes the bottom element 1.
/// Sorted by degree, then exponent vector. Throws GuardExceeded.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const Guards& guards = {});

/// Order complex of the open interval (1, b) of the lcm lattice: one vertex
/// per lattice element strictly below b, faces are chains. Limited to 64
/// vertices; meant for checking the cheaper complex below.
SimplicialComplex open_interval_order_complex(const std::vector<Monomial>& lattice, const Monomial& b);

/// Complex on supp(b) whose faces T satisfy x^b / x_T in I. By the crosscut
/// theorem (atoms of [1, b] are the generators dividing b) and the nerve
/// lemma applied to the cover of that crosscut complex by the sets
/// {g : deg_v g < b_v}, it has the homotopy type of (1, b).
SimplicialComplex interval_nerve(const MonomialIdeal& ideal, const Monomial& b);

/// Multigraded Betti numbers: (b, i) -> beta_{i,b}(S/I), including (1, 0).
std::map<std::pair<Monomial, int>, std::uint64_t> lcm_betti_multigraded(const MonomialIdeal& ideal,
                                                                        FieldChoice field = {},
                                                                        const Guards& guards = {});

/// Throws GuardExceeded past guards.max_lcm_generators or guards.max_lattice.
BettiTable lcm_betti(const MonomialIdeal& ideal, FieldChoice field = {}, const Guards& guards = {});

struct OracleInvariants {
  int depth = 0;
  long long regularity = 0;
  int projective_dimension = 0;
  std::string route;  // "lcm" or "hochster-polarized"
  BettiTable table;
  /// Set when both routes were run; true when their tables agree.
  std::optional<bool> routes_agree;
};

/// Betti-table invariants of S/I. Uses lcm_betti when it fits the guards,
/// otherwise hochster_betti of the polarization. With `cross_check`, runs
/// both whenever both fit. Throws GuardExceeded("instance exceeds desk
/// scale") when neither fits and std::invalid_argument for the unit ideal.
OracleInvariants oracle_invariants(const MonomialIdeal& ideal, FieldChoice field = {}, const Guards& guards = {},
                                   bool cross_check = false);

/// Height via the Stanley-Reisner complex of the radical: n - (dim + 1).
int oracle_height(const MonomialIdeal& ideal, const Guards& guards = {});

}  // namespace tabreg
