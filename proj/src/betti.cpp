#include "tabreg/betti.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tabreg/errors.hpp"

namespace tabreg {

void BettiTable::add(int i, long long j, std::uint64_t rank) {
  if (rank == 0) return;
  entries_[{i, j}] += rank;
}

std::uint64_t BettiTable::at(int i, long long j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw std::logic_error("empty Betti table");
  int pd = 0;
  for (const auto& [key, rank] : entries_) pd = std::max(pd, key.first);
  return pd;
}

long long BettiTable::regularity() const {
  if (entries_.empty()) throw std::logic_error("empty Betti table");
  long long reg = 0;
  for (const auto& [key, rank] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::depth() const { return static_cast<int>(variables_) - projective_dimension(); }

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "0\n";
  const int pd = projective_dimension();
  const long long reg = regularity();
  long long low = reg;
  for (const auto& [key, rank] : entries_) low = std::min(low, key.second - key.first);

  std::vector<std::string> header{""};
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> totals{"total:"};
  for (int i = 0; i <= pd; ++i) {
    header.push_back(std::to_string(i));
    std::uint64_t total = 0;
    for (const auto& [key, rank] : entries_)
      if (key.first == i) total += rank;
    totals.push_back(std::to_string(total));
  }
  grid.push_back(header);
  grid.push_back(totals);
  for (long long row = low; row <= reg; ++row) {
    std::vector<std::string> line{std::to_string(row) + ":"};
    for (int i = 0; i <= pd; ++i) {
      const std::uint64_t v = at(i, row + i);
      line.push_back(v == 0 ? "." : std::to_string(v));
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  }
  return out.str();
}

BettiTable hochster_betti(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards) {
  const std::size_t n = ideal.variable_count();
  check_guard("max_hochster_vars", n, guards.max_hochster_vars);
  const auto masks = generator_masks(ideal);
  const auto faces = stanley_reisner_complex(ideal, guards).faces(guards);
  BettiTable table(n);
  std::vector<FaceMask> restricted;
  const FaceMask subsets = FaceMask{1} << n;
  for (FaceMask w = 0; w < subsets; ++w) {
    // Delta|_W is a cone (hence acyclic) over any vertex of W that lies in no
    // generator contained in W.
    FaceMask used = 0;
    for (FaceMask g : masks)
      if ((g & ~w) == 0) used |= g;
    if ((w & ~used) != 0) continue;
    restricted.clear();
    for (FaceMask f : faces)
      if ((f & ~w) == 0) restricted.push_back(f);
    const auto h = reduced_homology_of_faces(restricted, field);
    const int size = face_size(w);
    for (std::size_t k = 0; k < h.ranks.size(); ++k) {
      const int q = static_cast<int>(k) - 1;
      table.add(size - q - 1, size, h.ranks[k]);
    }
  }
  return table;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const Guards& guards) {
  check_guard("max_lcm_generators", ideal.generators().size(), guards.max_lcm_generators);
  std::set<Monomial> seen(ideal.generators().begin(), ideal.generators().end());
  std::deque<Monomial> queue(ideal.generators().begin(), ideal.generators().end());
  while (!queue.empty()) {
    const Monomial e = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : ideal.generators()) {
      Monomial joined = lcm(e, g);
      if (seen.insert(joined).second) {
        check_guard("max_lattice", seen.size(), guards.max_lattice);
        queue.push_back(std::move(joined));
      }
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  out.erase(std::remove_if(out.begin(), out.end(), [](const Monomial& m) { return m.is_one(); }), out.end());
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  return out;
}

SimplicialComplex open_interval_order_complex(const std::vector<Monomial>& lattice, const Monomial& b) {
  std::vector<Monomial> below;
  for (const auto& c : lattice)
    if (c != b && c.divides(b)) below.push_back(c);
  if (below.size() > 64) throw std::invalid_argument("open interval has more than 64 elements");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < below.size(); ++k) names.push_back("e" + std::to_string(k));

  // Chains, grown upward from each element; `below` is sorted by degree, so
  // any strict multiple appears later.
  std::vector<FaceMask> chains{0};
  std::vector<std::pair<FaceMask, std::size_t>> stack;
  for (std::size_t k = 0; k < below.size(); ++k) stack.emplace_back(FaceMask{1} << k, k);
  while (!stack.empty()) {
    auto [chain, top] = stack.back();
    stack.pop_back();
    chains.push_back(chain);
    for (std::size_t k = top + 1; k < below.size(); ++k)
      if (below[top].divides(below[k]) && below[top] != below[k]) stack.emplace_back(chain | (FaceMask{1} << k), k);
  }
  return SimplicialComplex(VariableSet(std::move(names)), std::move(chains));
}

SimplicialComplex interval_nerve(const MonomialIdeal& ideal, const Monomial& b) {
  const auto support = b.support();
  if (ideal.variable_count() > 64) throw std::invalid_argument("at most 64 variables are supported here");
  std::vector<const Monomial*> atoms;
  for (const auto& g : ideal.generators())
    if (g.divides(b)) atoms.push_back(&g);
  std::vector<FaceMask> faces;
  const std::size_t s = support.size();
  if (s > 30) throw std::invalid_argument("support too large for the interval nerve");
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << s); ++t) {
    // x^b / x_T lies in I iff some atom g has g_v < b_v for every v in T.
    const bool inside = std::any_of(atoms.begin(), atoms.end(), [&](const Monomial* g) {
      for (std::size_t k = 0; k < s; ++k)
        if ((t >> k & 1) && (*g)[support[k]] >= b[support[k]]) return false;
      return true;
    });
    if (!inside) continue;
    FaceMask f = 0;
    for (std::size_t k = 0; k < s; ++k)
      if (t >> k & 1) f |= FaceMask{1} << support[k];
    faces.push_back(f);
  }
  return SimplicialComplex(ideal.variables(), std::move(faces));
}

namespace {

template <class Visit>
void for_each_lcm_betti(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards, Visit&& visit) {
  if (ideal.is_unit()) throw std::invalid_argument("S/I is zero for the unit ideal");
  visit(Monomial(ideal.variable_count()), 0, 1);
  for (const auto& b : lcm_lattice(ideal, guards)) {
    check_guard("max_ground_set", b.support().size(), guards.max_ground_set);
    const auto h = reduced_homology(interval_nerve(ideal, b), field, guards);
    for (std::size_t k = 0; k < h.ranks.size(); ++k)
      if (h.ranks[k] != 0) visit(b, static_cast<int>(k) + 1, h.ranks[k]);  // i = q + 2, q = k - 1
  }
}

}  // namespace

std::map<std::pair<Monomial, int>, std::uint64_t> lcm_betti_multigraded(const MonomialIdeal& ideal,
                                                                        FieldChoice field, const Guards& guards) {
  std::map<std::pair<Monomial, int>, std::uint64_t> out;
  for_each_lcm_betti(ideal, field, guards,
                     [&](const Monomial& b, int i, std::uint64_t r) { out[{b, i}] += r; });
  return out;
}

BettiTable lcm_betti(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards) {
  BettiTable table(ideal.variable_count());
  for_each_lcm_betti(ideal, field, guards, [&](const Monomial& b, int i, std::uint64_t r) {
    table.add(i, static_cast<long long>(b.degree()), r);
  });
  return table;
}

namespace {

std::optional<BettiTable> try_lcm(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards) {
  try {
    return lcm_betti(ideal, field, guards);
  } catch (const GuardExceeded&) {
    return std::nullopt;
  }
}

std::optional<BettiTable> try_polarized(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards) {
  const auto pol = polarize(ideal);
  if (pol.ideal.variable_count() > guards.max_hochster_vars) return std::nullopt;
  try {
    BettiTable polarized = hochster_betti(pol.ideal, field, guards);
    BettiTable table(ideal.variable_count());
    for (const auto& [key, rank] : polarized.entries()) table.add(key.first, key.second, rank);
    return table;
  } catch (const GuardExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

OracleInvariants oracle_invariants(const MonomialIdeal& ideal, FieldChoice field, const Guards& guards,
                                   bool cross_check) {
  if (ideal.is_unit()) throw std::invalid_argument("S/I is zero for the unit ideal");
  OracleInvariants out;
  std::optional<BettiTable> table = try_lcm(ideal, field, guards);
  out.route = "lcm";
  if (table && cross_check) {
    if (auto other = try_polarized(ideal, field, guards)) out.routes_agree = *other == *table;
  }
  if (!table) {
    table = try_polarized(ideal, field, guards);
    out.route = "hochster-polarized";
  }
  if (!table) throw GuardExceeded("desk_scale", ideal.generators().size(), guards.max_lcm_generators,
                                  "instance exceeds desk scale");
  out.table = std::move(*table);
  out.projective_dimension = out.table.projective_dimension();
  out.depth = out.table.depth();
  out.regularity = out.table.regularity();
  return out;
}

int oracle_height(const MonomialIdeal& ideal, const Guards& guards) {
  const auto complex = stanley_reisner_complex(radical(ideal), guards);
  return static_cast<int>(ideal.variable_count()) - (complex.dimension() + 1);
}

}  // namespace tabreg
