#pragma once

// Monomial ideals over a named, ordered set of variables. No coefficients are
// stored; generators are kept minimal at all times, so two ideals over the
// same variables are equal exactly when their generator lists are.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tabreg/tableau.hpp"

namespace tabreg {

using Exponent = std::uint32_t;

class VariableSet {
 public:
  VariableSet() = default;
  /// Throws std::invalid_argument on duplicate or empty names.
  explicit VariableSet(std::vector<std::string> names);

  /// x1..xn followed by y1..ym.
  static VariableSet bipartite(int n, int m);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : exps_(variables, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;
  bool divides(const Monomial& other) const;
  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / gcd(a, b).
Monomial strip(const Monomial& a, const Monomial& b);
/// Squarefree monomial with the same support.
Monomial support_monomial(const Monomial& a);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal over `vars`.
  explicit MonomialIdeal(VariableSet vars) : vars_(std::move(vars)) {}
  /// Minimalizes `gens`. Throws std::invalid_argument on a length mismatch.
  MonomialIdeal(VariableSet vars, std::vector<Monomial> gens);

  const VariableSet& variables() const noexcept { return vars_; }
  std::size_t variable_count() const noexcept { return vars_.size(); }
  /// Minimal generators in canonical (descending exponent vector) order.
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  bool contains(const Monomial& f) const;
  /// Largest exponent of variable `v` over the minimal generators.
  Exponent rho(std::size_t v) const;
  Monomial rho() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  VariableSet vars_;
  std::vector<Monomial> gens_;
};

/// Keeps only generators not divisible by another, sorted canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal tableau_ideal(const Tableau& t);
MonomialIdeal ferrers_ideal(const Partition& p);

/// I : f. Throws std::invalid_argument on a variable count mismatch.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal radical(const MonomialIdeal& ideal);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Throws std::invalid_argument for t == 0.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned t);
/// I + (v : v in names). Throws std::invalid_argument for unknown names.
MonomialIdeal add_variables(const MonomialIdeal& ideal, std::span<const std::string> names);
MonomialIdeal add_variables(const MonomialIdeal& ideal, std::span<const std::size_t> indices);
/// Variables dividing no minimal generator, as indices.
std::vector<std::size_t> free_variables(const MonomialIdeal& ideal);

struct Polarization {
  MonomialIdeal ideal;
  std::size_t added = 0;
  /// For each new variable, the index of the variable it was split from.
  std::vector<std::size_t> parent;
};

/// Variable v with rho_v > 1 becomes v_1..v_rho; x_v^e maps to v_1 ... v_e.
/// Variables with rho_v <= 1 keep their name.
Polarization polarize(const MonomialIdeal& ideal);

/// One generator per line as var^e*var^e with variables in ring order;
/// exponent 1 is omitted. The zero ideal serializes to "0", the unit to "1".
std::string to_text(const MonomialIdeal& ideal);
std::string to_text(const Monomial& m, const VariableSet& vars);
Monomial parse_monomial(const std::string& text, const VariableSet& vars);

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

/// Graph with positive edge weights on named vertices. I(G_w) is generated
/// by (x_u x_v)^w(u,v).
class EdgeWeightedGraph {
 public:
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    Weight weight = 1;
  };

  EdgeWeightedGraph() = default;
  /// Throws std::invalid_argument on loops, repeated edges or zero weights.
  EdgeWeightedGraph(VariableSet vertices, std::vector<Edge> edges);

  /// Rows x1..xn, columns y1..ym, an edge per box.
  static EdgeWeightedGraph from_tableau(const Tableau& t);

  const VariableSet& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  MonomialIdeal ideal() const;
  /// Unweighted edge ideal of the underlying graph.
  MonomialIdeal edge_ideal() const;

 private:
  VariableSet vertices_;
  std::vector<Edge> edges_;
};

/// sqrt(I(G_w) : x^a) in closed form: the edge ideal of G restricted to the
/// complement of U plus the variables of U, where U collects every vertex i
/// with an edge {i,j} such that a_i < w(i,j) <= a_j.
/// Throws std::invalid_argument("exponent inside ideal") when x^a is in I(G_w).
MonomialIdeal associated_radical(const EdgeWeightedGraph& g, const Monomial& a);

}  // namespace tabreg
