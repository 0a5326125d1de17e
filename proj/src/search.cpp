#include "tabreg/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tabreg/betti.hpp"
#include "tabreg/errors.hpp"
#include "tabreg/formulas.hpp"

namespace tabreg {

std::vector<std::vector<Exponent>> exponent_grid(const MonomialIdeal& ideal, GridMode mode) {
  const std::size_t n = ideal.variable_count();
  std::vector<std::vector<Exponent>> grid(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Exponent rho = ideal.rho(v);
    if (mode == GridMode::Full) {
      for (Exponent e = 0; e <= rho; ++e) grid[v].push_back(e);
      continue;
    }
    std::set<Exponent> values{0, rho};
    for (const auto& g : ideal.generators())
      if (g[v] >= 2) values.insert(g[v] - 1);
    grid[v].assign(values.begin(), values.end());
  }
  return grid;
}

namespace {

std::size_t grid_cells(const std::vector<std::vector<Exponent>>& grid, std::size_t limit) {
  std::size_t cells = 1;
  for (const auto& axis : grid) {
    if (cells > limit / std::max<std::size_t>(axis.size(), 1)) return limit + 1;
    cells *= axis.size();
  }
  return cells;
}

// Odometer over the grid; visit(a) is called for every cell.
template <class Visit>
void for_each_cell(const std::vector<std::vector<Exponent>>& grid, Visit&& visit) {
  const std::size_t n = grid.size();
  std::vector<std::size_t> pos(n, 0);
  Monomial a(n);
  for (std::size_t v = 0; v < n; ++v) a[v] = grid[v][0];
  while (true) {
    if (!visit(a)) return;
    std::size_t v = 0;
    while (v < n && ++pos[v] == grid[v].size()) {
      pos[v] = 0;
      a[v] = grid[v][0];
      ++v;
    }
    if (v == n) return;
    a[v] = grid[v][pos[v]];
  }
}

FaceMask support_mask(const Monomial& a) {
  FaceMask m = 0;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > 0) m |= FaceMask{1} << v;
  return m;
}

// Minimal supports of g / gcd(g, x^a); empty optional when x^a is in I.
std::optional<std::vector<FaceMask>> radical_key(const MonomialIdeal& ideal, const Monomial& a) {
  std::vector<FaceMask> masks;
  masks.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    FaceMask m = 0;
    for (std::size_t v = 0; v < a.size(); ++v)
      if (g[v] > a[v]) m |= FaceMask{1} << v;
    if (m == 0) return std::nullopt;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), [](FaceMask x, FaceMask y) {
    return face_size(x) != face_size(y) ? face_size(x) < face_size(y) : x < y;
  });
  std::vector<FaceMask> kept;
  for (FaceMask m : masks)
    if (std::none_of(kept.begin(), kept.end(), [m](FaceMask k) { return (k & ~m) == 0; })) kept.push_back(m);
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal squarefree_ideal(const VariableSet& vars, const std::vector<FaceMask>& masks) {
  std::vector<Monomial> gens;
  for (FaceMask m : masks) {
    Monomial g(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (m >> v & 1) g[v] = 1;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(vars, std::move(gens));
}

// Critical indices of one degree complex, cached per face and per support.
class DegreeComplexCache {
 public:
  DegreeComplexCache(const VariableSet& vars, FieldChoice field, const Guards& guards)
      : vars_(vars), field_(field), guards_(guards) {}

  // (i, witnessing face) for every i such that some face F disjoint from
  // `support` has h~_{i-1}(lk F) != 0.
  const std::vector<std::pair<int, FaceMask>>& critical(const std::vector<FaceMask>& key, FaceMask support) {
    Entry& entry = entry_for(key);
    auto it = entry.by_support.find(support);
    if (it != entry.by_support.end()) return it->second;
    std::map<int, FaceMask> found;
    for (FaceMask f : entry.faces) {
      if (f & support) continue;
      std::uint64_t bits = link_bits(entry, f);
      for (int i = 0; bits; ++i, bits >>= 1)
        if (bits & 1) found.emplace(i, f);
    }
    return entry.by_support.emplace(support, std::vector<std::pair<int, FaceMask>>(found.begin(), found.end()))
        .first->second;
  }

 private:
  struct Entry {
    std::vector<FaceMask> faces;
    std::map<FaceMask, std::uint64_t> link_bits;
    std::map<FaceMask, std::vector<std::pair<int, FaceMask>>> by_support;
  };

  Entry& entry_for(const std::vector<FaceMask>& key) {
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
    Entry e;
    e.faces = stanley_reisner_complex(squarefree_ideal(vars_, key), guards_).faces(guards_);
    return entries_.emplace(key, std::move(e)).first->second;
  }

  std::uint64_t link_bits(Entry& entry, FaceMask f) {
    auto it = entry.link_bits.find(f);
    if (it != entry.link_bits.end()) return it->second;
    std::vector<FaceMask> link;
    for (FaceMask g : entry.faces)
      if ((f & ~g) == 0) link.push_back(g & ~f);
    const auto h = reduced_homology_of_faces(link, field_);
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < h.ranks.size() && k < 64; ++k)
      if (h.ranks[k] != 0) bits |= std::uint64_t{1} << k;  // k = q + 1 = i
    entry.link_bits.emplace(f, bits);
    return bits;
  }

  const VariableSet& vars_;
  FieldChoice field_;
  const Guards& guards_;
  std::map<std::vector<FaceMask>, Entry> entries_;
};

void require_searchable(const MonomialIdeal& ideal, const Guards& guards) {
  if (ideal.is_unit()) throw std::invalid_argument("S/I is zero for the unit ideal");
  check_guard("max_ground_set", ideal.variable_count(), guards.max_ground_set);
}

}  // namespace

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Monomial& a, const Guards& guards) {
  if (ideal.contains(a)) throw std::invalid_argument("exponent inside ideal");
  return stanley_reisner_complex(radical(colon(ideal, a)), guards);
}

void for_each_critical_pair(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards, GridMode mode,
                            const std::function<bool(const CriticalPair&)>& visit) {
  require_searchable(ideal, guards);
  const auto grid = exponent_grid(ideal, mode);
  check_guard("max_grid", grid_cells(grid, guards.max_grid), guards.max_grid);
  DegreeComplexCache cache(ideal.variables(), field, guards);
  for_each_cell(grid, [&](const Monomial& a) {
    const auto key = radical_key(ideal, a);
    if (!key) return true;
    for (auto [i, face] : cache.critical(*key, support_mask(a)))
      if (!visit(CriticalPair{a, i, face})) return false;
    return true;
  });
}

RegularitySearch reg_via_degree_complexes(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards,
                                          GridMode mode) {
  require_searchable(ideal, guards);
  const auto grid = exponent_grid(ideal, mode);
  check_guard("max_grid", grid_cells(grid, guards.max_grid), guards.max_grid);
  const Monomial rho = ideal.rho();
  DegreeComplexCache cache(ideal.variables(), field, guards);
  RegularitySearch out;
  bool found = false;
  for_each_cell(grid, [&](const Monomial& a) {
    ++out.cells_visited;
    const auto key = radical_key(ideal, a);
    if (!key) return true;
    const auto& critical = cache.critical(*key, support_mask(a));
    if (critical.empty()) return true;
    const auto& [i, face] = critical.back();  // largest index
    const long long value = static_cast<long long>(a.degree()) + i;
    if (!found || value > out.regularity) {
      out.regularity = value;
      out.witness = CriticalPair{a, i, face};
      found = true;
    }
    bool strict = true;
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[v] >= rho[v] && rho[v] > 0) strict = false;
    if (strict && (!out.strict_grid_regularity || value > *out.strict_grid_regularity))
      out.strict_grid_regularity = value;
    return true;
  });
  if (!found) throw std::logic_error("no critical pair found");
  return out;
}

int depth_of_tableau_radical(const Tableau& t, const std::vector<bool>& in_u) {
  const int n = t.row_count();
  const int total = n + t.column_count();
  int removed = 0;
  for (bool b : in_u) removed += b ? 1 : 0;
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) {
    if (in_u[static_cast<std::size_t>(i - 1)]) continue;
    int count = 0;
    for (int j = 1; j <= t.shape().part(i); ++j)
      if (!in_u[static_cast<std::size_t>(n + j - 1)]) ++count;
    if (count > 0) parts.push_back(count);
  }
  if (parts.empty()) return total - removed;
  const Partition residual(parts);
  const int free = total - removed - residual.rows() - residual.columns();
  return ferrers_invariants(residual).depth + free;
}

DepthSearch depth_via_associated_radicals(const Tableau& t, const Guards& guards, GridMode mode) {
  const auto ideal = tableau_ideal(t);
  const auto graph = EdgeWeightedGraph::from_tableau(t);
  const auto grid = exponent_grid(ideal, mode);
  check_guard("max_grid", grid_cells(grid, guards.max_grid), guards.max_grid);
  const std::size_t n = ideal.variable_count();
  std::map<std::vector<bool>, int> memo;
  DepthSearch out;
  bool found = false;
  std::vector<bool> in_u(n);
  for_each_cell(grid, [&](const Monomial& a) {
    ++out.cells_visited;
    std::fill(in_u.begin(), in_u.end(), false);
    for (const auto& e : graph.edges()) {
      const bool u_reaches = a[e.u] >= e.weight;
      const bool v_reaches = a[e.v] >= e.weight;
      if (u_reaches && v_reaches) return true;  // x^a in I(Y)
      if (v_reaches) in_u[e.u] = true;
      if (u_reaches) in_u[e.v] = true;
    }
    auto it = memo.find(in_u);
    if (it == memo.end()) it = memo.emplace(in_u, depth_of_tableau_radical(t, in_u)).first;
    if (!found || it->second < out.depth) {
      out.depth = it->second;
      out.exponent = a;
      found = true;
    }
    return true;
  });
  return out;
}

RadicalDepthSearch depth_via_radicals(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards,
                                      GridMode mode) {
  require_searchable(ideal, guards);
  const auto grid = exponent_grid(ideal, mode);
  check_guard("max_grid", grid_cells(grid, guards.max_grid), guards.max_grid);
  const auto& gens = ideal.generators();
  const std::size_t n = grid.size();

  // masks[k] = {v : g_k[v] > a_v}, updated one variable at a time.
  std::vector<FaceMask> masks(gens.size(), 0);
  std::vector<std::size_t> pos(n, 0);
  Monomial a(n);
  auto set_variable = [&](std::size_t v, Exponent value) {
    a[v] = value;
    const FaceMask bit = FaceMask{1} << v;
    for (std::size_t k = 0; k < gens.size(); ++k) masks[k] = gens[k][v] > value ? masks[k] | bit : masks[k] & ~bit;
  };
  for (std::size_t v = 0; v < n; ++v) set_variable(v, grid[v][0]);

  std::map<std::vector<FaceMask>, int> depth_of;
  std::map<std::vector<Monomial>, int> depth_of_radical;
  std::vector<FaceMask> key;
  RadicalDepthSearch out;
  bool found = false;
  while (true) {
    ++out.cells_visited;
    if (std::find(masks.begin(), masks.end(), FaceMask{0}) == masks.end()) {
      key.assign(masks.begin(), masks.end());
      std::sort(key.begin(), key.end());
      key.erase(std::unique(key.begin(), key.end()), key.end());
      auto it = depth_of.find(key);
      if (it == depth_of.end()) {
        // Many raw mask sets share one radical; the oracle runs once per radical.
        const auto sq = squarefree_ideal(ideal.variables(), key);
        auto known = depth_of_radical.find(sq.generators());
        if (known == depth_of_radical.end())
          known = depth_of_radical.emplace(sq.generators(), oracle_invariants(sq, field, guards).depth).first;
        it = depth_of.emplace(key, known->second).first;
      }
      if (!found || it->second < out.depth) {
        out.depth = it->second;
        out.exponent = a;
        found = true;
      }
    }
    std::size_t v = 0;
    while (v < n && ++pos[v] == grid[v].size()) {
      pos[v] = 0;
      set_variable(v, grid[v][0]);
      ++v;
    }
    if (v == n) break;
    set_variable(v, grid[v][pos[v]]);
  }
  out.distinct_radicals = depth_of_radical.size();
  return out;
}

}  // namespace tabreg
