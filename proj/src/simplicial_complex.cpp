#include "tabreg/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "tabreg/errors.hpp"

namespace tabreg {

namespace {

FaceMask full_mask(std::size_t n) { return n >= 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1; }

std::vector<FaceMask> maximal_masks(std::vector<FaceMask> masks) {
  std::sort(masks.begin(), masks.end(), [](FaceMask a, FaceMask b) {
    return face_size(a) != face_size(b) ? face_size(a) > face_size(b) : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<FaceMask> kept;
  for (FaceMask m : masks) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [m](FaceMask k) { return (m & ~k) == 0; });
    if (!covered) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool by_size_then_mask(FaceMask a, FaceMask b) {
  return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(VariableSet ground, std::vector<FaceMask> facets) : ground_(std::move(ground)) {
  if (ground_.size() > 64) throw std::invalid_argument("simplicial complexes are limited to 64 vertices");
  const FaceMask allowed = full_mask(ground_.size());
  for (FaceMask f : facets)
    if ((f & ~allowed) != 0) throw std::invalid_argument("facet uses a vertex outside the ground set");
  facets_ = maximal_masks(std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(VariableSet ground) {
  const FaceMask all = full_mask(ground.size());
  return SimplicialComplex(std::move(ground), {all});
}

bool SimplicialComplex::contains(FaceMask f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](FaceMask k) { return (f & ~k) == 0; });
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = 0;
  for (FaceMask f : facets_) best = std::max(best, face_size(f));
  return best - 1;
}

std::vector<FaceMask> SimplicialComplex::faces(const Guards& guards) const {
  std::vector<FaceMask> out;
  auto compact = [&] {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    check_guard("max_faces", out.size(), guards.max_faces);
  };
  for (FaceMask facet : facets_) {
    if (face_size(facet) >= 40) throw GuardExceeded("max_faces", guards.max_faces + 1, guards.max_faces);
    check_guard("max_faces", std::size_t{1} << face_size(facet), guards.max_faces);
    // Enumerate submasks of the facet.
    for (FaceMask sub = facet;; sub = (sub - 1) & facet) {
      out.push_back(sub);
      if (sub == 0) break;
    }
    if (out.size() > 2 * guards.max_faces) compact();
  }
  compact();
  std::sort(out.begin(), out.end(), by_size_then_mask);
  return out;
}

long long SimplicialComplex::reduced_euler_characteristic(const Guards& guards) const {
  long long chi = 0;
  for (FaceMask f : faces(guards)) chi += (face_size(f) % 2 == 1) ? 1 : -1;  // dim = size - 1
  return chi;
}

SimplicialComplex SimplicialComplex::link(FaceMask f) const {
  std::vector<FaceMask> out;
  for (FaceMask k : facets_)
    if ((f & ~k) == 0) out.push_back(k & ~f);
  return SimplicialComplex(ground_, std::move(out));
}

SimplicialComplex SimplicialComplex::induced(FaceMask w) const {
  std::vector<FaceMask> out;
  out.reserve(facets_.size());
  for (FaceMask k : facets_) out.push_back(k & w);
  return SimplicialComplex(ground_, std::move(out));
}

bool SimplicialComplex::is_cone() const {
  if (facets_.empty()) return false;
  FaceMask common = ~FaceMask{0};
  for (FaceMask k : facets_) common &= k;
  return common != 0;
}

bool ReducedHomology::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

ReducedHomology reduced_homology_of_faces(const std::vector<FaceMask>& faces, FieldChoice field) {
  ReducedHomology out;
  if (faces.empty()) return out;
  int top = 0;
  for (FaceMask f : faces) top = std::max(top, face_size(f));
  // by_size[k] holds the faces with k vertices (dimension k - 1).
  std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(top) + 1);
  for (FaceMask f : faces) by_size[static_cast<std::size_t>(face_size(f))].push_back(f);

  std::vector<std::unordered_map<FaceMask, std::uint32_t>> index(by_size.size());
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    index[k].reserve(by_size[k].size());
    for (std::size_t i = 0; i < by_size[k].size(); ++i) index[k].emplace(by_size[k][i], static_cast<std::uint32_t>(i));
  }

  // boundary_rank[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> boundary_rank(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    SparseMatrix m;
    m.rows = by_size[k - 1].size();
    m.columns.reserve(by_size[k].size());
    for (FaceMask f : by_size[k]) {
      std::vector<std::pair<std::uint32_t, int>> col;
      int position = 0;
      for (FaceMask rest = f; rest; rest &= rest - 1, ++position) {
        const FaceMask v = rest & (~rest + 1);
        col.emplace_back(index[k - 1].at(f & ~v), position % 2 == 0 ? 1 : -1);
      }
      m.columns.push_back(std::move(col));
    }
    boundary_rank[k] = rank(m, field);
  }

  out.ranks.resize(by_size.size());
  for (std::size_t k = 0; k < by_size.size(); ++k)
    out.ranks[k] = by_size[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  while (!out.ranks.empty() && out.ranks.back() == 0) out.ranks.pop_back();
  return out;
}

ReducedHomology reduced_homology(const SimplicialComplex& c, FieldChoice field, const Guards& guards) {
  return reduced_homology_of_faces(c.faces(guards), field);
}

std::vector<FaceMask> generator_masks(const MonomialIdeal& ideal) {
  if (ideal.variable_count() > 64) throw std::invalid_argument("at most 64 variables are supported here");
  if (!ideal.is_squarefree()) throw std::invalid_argument("ideal is not squarefree");
  std::vector<FaceMask> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    FaceMask m = 0;
    for (std::size_t v : g.support()) m |= FaceMask{1} << v;
    out.push_back(m);
  }
  return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, const Guards& guards) {
  const auto masks = generator_masks(ideal);
  const std::size_t n = ideal.variable_count();
  check_guard("max_ground_set", n, guards.max_ground_set);
  if (ideal.is_unit()) return SimplicialComplex::void_complex(ideal.variables());

  auto is_face = [&](FaceMask f) {
    return std::none_of(masks.begin(), masks.end(), [f](FaceMask g) { return (g & ~f) == 0; });
  };
  // Grow faces by adding larger vertices only; a face is a facet when no
  // vertex at all can be added.
  std::vector<FaceMask> facets;
  std::vector<FaceMask> stack{0};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const FaceMask f = stack.back();
    stack.pop_back();
    check_guard("max_faces", ++visited, guards.max_faces);
    bool maximal = true;
    for (std::size_t v = 0; v < n; ++v) {
      const FaceMask bit = FaceMask{1} << v;
      if (f & bit) continue;
      if (!is_face(f | bit)) continue;
      maximal = false;
      if (f == 0 || bit > (FaceMask{1} << (63 - __builtin_clzll(f)))) stack.push_back(f | bit);
    }
    if (maximal) facets.push_back(f);
  }
  return SimplicialComplex(ideal.variables(), std::move(facets));
}

}  // namespace tabreg
