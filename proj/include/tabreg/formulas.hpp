#pragma once

// Depth and Castelnuovo-Mumford regularity of S/I(Y) for a tableau Y, where
// S has one variable per row and per column of Y. Two routes: the
// minimal-box recursion (memoized over residual tableaux) and the extremes
// of d(M,Y), r(M,Y) over all admissible collections M.

#include <optional>
#include <span>
#include <string>

#include "tabreg/guards.hpp"
#include "tabreg/tableau.hpp"

namespace tabreg {

enum class Method { Recursion, Collections, Oracle, DegreeComplexSearch, AssociatedRadicalSearch };

std::string method_name(Method m);

struct InvariantReport {
  int depth = 0;
  long long regularity = 0;
  std::optional<AdmissibleCollection> depth_witness;
  std::optional<AdmissibleCollection> reg_witness;
  Weight omega = 0;  // 0 for the empty tableau
  Method method = Method::Recursion;
};

int depth(const Tableau& t);
long long regularity(const Tableau& t);

/// Same recursions, but the first step branches on `top` instead of the
/// lexicographically first minimal box. `top` must be a minimal box.
int depth_from_box(const Tableau& t, Box top);
long long regularity_from_box(const Tableau& t, Box top);

/// Recursion values plus witnesses rebuilt by replaying the optimal branch
/// (ties prefer the row branch).
InvariantReport invariants_via_recursion(const Tableau& t);

/// Min d(M,Y) and max r(M,Y) over every admissible collection; the first
/// collection attaining each extreme is kept as witness.
InvariantReport extremes_via_collections(const Tableau& t, const Guards& guards = {});

struct FerrersInvariants {
  int height = 0;
  int projective_dimension = 0;
  int depth = 0;
  int regularity = 0;
  int dimension = 0;
  bool is_cohen_macaulay = false;
  int alpha = 0;  // smallest i attaining max(lambda_i + i)
};

/// Closed formulas for the Ferrers ideal I_lambda in n + m variables.
/// Throws std::invalid_argument on the empty partition.
FerrersInvariants ferrers_invariants(const Partition& p);

/// Staircase shape and weakly increasing weights. Throws on an empty tableau.
bool is_cohen_macaulay(const Tableau& t);

/// sum_j (w_j - 1) + max_j w_j. Throws std::invalid_argument when empty.
long long reg_single_row(std::span<const Weight> weights);

enum class RowVariableEffect { DropsByOne, Unchanged, UnchangedOrHigher };

std::string to_string(RowVariableEffect e);

/// How depth S/(I_lambda + (x_a)) compares with depth S/I_lambda.
/// Throws std::out_of_range unless 1 <= a <= n.
RowVariableEffect classify_add_row_variable(const Partition& p, int a);

}  // namespace tabreg
