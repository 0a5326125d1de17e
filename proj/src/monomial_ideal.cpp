#include "tabreg/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "tabreg/errors.hpp"

namespace tabreg {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("variable names must be nonempty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

VariableSet VariableSet::bipartite(int n, int m) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n + m));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
  return VariableSet(std::move(names));
}

std::size_t VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(i);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial strip(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return out;
}

Monomial support_monomial(const Monomial& a) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > 0 ? 1 : 0;
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

MonomialIdeal::MonomialIdeal(VariableSet vars, std::vector<Monomial> gens) : vars_(std::move(vars)) {
  for (const auto& g : gens)
    if (g.size() != vars_.size()) throw std::invalid_argument("generator length does not match the variable set");
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& f) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(f); });
}

Exponent MonomialIdeal::rho(std::size_t v) const {
  Exponent best = 0;
  for (const auto& g : gens_) best = std::max(best, g[v]);
  return best;
}

Monomial MonomialIdeal::rho() const {
  Monomial out(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) out[v] = rho(v);
  return out;
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.variables() == b.variables())) throw std::invalid_argument("ideals live over different variable sets");
}

void require_length(const MonomialIdeal& a, const Monomial& f) {
  if (f.size() != a.variable_count()) throw std::invalid_argument("monomial length does not match the variable set");
}

Monomial variable(std::size_t count, std::size_t index) {
  Monomial m(count);
  m[index] = 1;
  return m;
}

}  // namespace

MonomialIdeal tableau_ideal(const Tableau& t) {
  const int n = t.row_count();
  const auto vars = VariableSet::bipartite(n, t.column_count());
  std::vector<Monomial> gens;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= static_cast<int>(t.rows()[static_cast<std::size_t>(i - 1)].size()); ++j) {
      Monomial g(vars.size());
      g[static_cast<std::size_t>(i - 1)] = t.weight(i, j);
      g[static_cast<std::size_t>(n + j - 1)] = t.weight(i, j);
      gens.push_back(std::move(g));
    }
  }
  return MonomialIdeal(vars, std::move(gens));
}

MonomialIdeal ferrers_ideal(const Partition& p) {
  std::vector<std::vector<Weight>> rows;
  for (int len : p.parts()) rows.emplace_back(static_cast<std::size_t>(len), Weight{1});
  return tableau_ideal(Tableau(std::move(rows)));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  require_length(ideal, f);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(strip(g, f));
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(support_monomial(g));
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.variables(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::set<Monomial> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.insert(g * h);
  return MonomialIdeal(a.variables(), std::vector<Monomial>(gens.begin(), gens.end()));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned t) {
  if (t == 0) throw std::invalid_argument("power exponent must be positive");
  MonomialIdeal out = ideal;
  for (unsigned k = 1; k < t; ++k) out = product(out, ideal);
  return out;
}

MonomialIdeal add_variables(const MonomialIdeal& ideal, std::span<const std::size_t> indices) {
  std::vector<Monomial> gens = ideal.generators();
  for (std::size_t v : indices) {
    if (v >= ideal.variable_count()) throw std::invalid_argument("variable index out of range");
    gens.push_back(variable(ideal.variable_count(), v));
  }
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal add_variables(const MonomialIdeal& ideal, std::span<const std::string> names) {
  std::vector<std::size_t> indices;
  for (const auto& n : names) indices.push_back(ideal.variables().index_of(n));
  return add_variables(ideal, std::span<const std::size_t>(indices));
}

std::vector<std::size_t> free_variables(const MonomialIdeal& ideal) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ideal.variable_count(); ++v)
    if (ideal.rho(v) == 0) out.push_back(v);
  return out;
}

Polarization polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.variable_count();
  Polarization out;
  std::vector<std::string> names;
  std::vector<std::size_t> first(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Exponent copies = std::max<Exponent>(ideal.rho(v), 1);
    first[v] = names.size();
    if (copies == 1) {
      names.push_back(ideal.variables().name(v));
      out.parent.push_back(v);
      continue;
    }
    out.added += copies - 1;
    for (Exponent k = 1; k <= copies; ++k) {
      names.push_back(ideal.variables().name(v) + "_" + std::to_string(k));
      out.parent.push_back(v);
    }
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    Monomial p(names.size());
    for (std::size_t v = 0; v < n; ++v)
      for (Exponent k = 0; k < g[v]; ++k) p[first[v] + k] = 1;
    gens.push_back(std::move(p));
  }
  out.ideal = MonomialIdeal(VariableSet(std::move(names)), std::move(gens));
  return out;
}

std::string to_text(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0\n";
  std::string out;
  for (const auto& g : ideal.generators()) out += to_text(g, ideal.variables()) + '\n';
  return out;
}

Monomial parse_monomial(const std::string& text, const VariableSet& vars) {
  Monomial out(vars.size());
  if (text == "1") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    const std::string factor = text.substr(pos, end - pos);
    const std::size_t caret = factor.find('^');
    const std::string name = factor.substr(0, caret);
    Exponent e = 1;
    if (caret != std::string::npos) {
      const std::string digits = factor.substr(caret + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad exponent in '" + factor + "'", 1, pos + caret + 2);
      e = static_cast<Exponent>(std::stoul(digits));
    }
    out[vars.index_of(name)] += e;
    pos = end + 1;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  os << '(';
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    os << (i ? ", " : "") << to_text(ideal.generators()[i], ideal.variables());
  return os << ')';
}

EdgeWeightedGraph::EdgeWeightedGraph(VariableSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) throw std::invalid_argument("edge endpoint out of range");
    if (e.weight < 1) throw std::invalid_argument("edge weights must be positive");
    if (!seen.insert(std::minmax(e.u, e.v)).second) throw std::invalid_argument("repeated edge");
  }
}

EdgeWeightedGraph EdgeWeightedGraph::from_tableau(const Tableau& t) {
  const int n = t.row_count();
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= static_cast<int>(t.rows()[static_cast<std::size_t>(i - 1)].size()); ++j)
      edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(n + j - 1), t.weight(i, j)});
  return EdgeWeightedGraph(VariableSet::bipartite(n, t.column_count()), std::move(edges));
}

MonomialIdeal EdgeWeightedGraph::ideal() const {
  std::vector<Monomial> gens;
  for (const auto& e : edges_) {
    Monomial g(vertices_.size());
    g[e.u] = e.weight;
    g[e.v] = e.weight;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(vertices_, std::move(gens));
}

MonomialIdeal EdgeWeightedGraph::edge_ideal() const {
  std::vector<Monomial> gens;
  for (const auto& e : edges_) {
    Monomial g(vertices_.size());
    g[e.u] = 1;
    g[e.v] = 1;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(vertices_, std::move(gens));
}

MonomialIdeal associated_radical(const EdgeWeightedGraph& g, const Monomial& a) {
  const std::size_t n = g.vertices().size();
  if (a.size() != n) throw std::invalid_argument("exponent length does not match the graph");
  std::vector<bool> in_u(n, false);
  for (const auto& e : g.edges()) {
    const bool u_reaches = a[e.u] >= e.weight;
    const bool v_reaches = a[e.v] >= e.weight;
    if (u_reaches && v_reaches) throw std::invalid_argument("exponent inside ideal");
    if (v_reaches) in_u[e.u] = true;
    if (u_reaches) in_u[e.v] = true;
  }
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < n; ++v)
    if (in_u[v]) gens.push_back(variable(n, v));
  for (const auto& e : g.edges()) {
    if (in_u[e.u] || in_u[e.v]) continue;
    Monomial m(n);
    m[e.u] = 1;
    m[e.v] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(g.vertices(), std::move(gens));
}

}  // namespace tabreg
