#include "tabreg/formulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tabreg {

std::string method_name(Method m) {
  switch (m) {
    case Method::Recursion: return "recursion";
    case Method::Collections: return "collections";
    case Method::Oracle: return "oracle";
    case Method::DegreeComplexSearch: return "degree-complex";
    case Method::AssociatedRadicalSearch: return "associated-radical";
  }
  return "unknown";
}

namespace {

// Residuals are keyed by their weights only; labels do not affect values.
using Key = std::vector<std::vector<Weight>>;

class Recursion {
 public:
  int depth(const Tableau& t) {
    if (t.empty()) return 0;
    if (auto it = depth_memo_.find(t.rows()); it != depth_memo_.end()) return it->second;
    const int value = depth_at(t, minimal_boxes(t).front());
    depth_memo_.emplace(t.rows(), value);
    return value;
  }

  int depth_at(const Tableau& t, Box b) {
    auto [by_row, freed_cols] = delete_row(t, b.row);
    auto [by_col, freed_rows] = delete_column(t, b.col);
    return std::min(depth(by_row) + freed_cols, depth(by_col) + freed_rows);
  }

  long long regularity(const Tableau& t) {
    if (t.empty()) return 0;
    if (auto it = reg_memo_.find(t.rows()); it != reg_memo_.end()) return it->second;
    const long long value = regularity_at(t, minimal_boxes(t).front());
    reg_memo_.emplace(t.rows(), value);
    return value;
  }

  long long regularity_at(const Tableau& t, Box b) {
    if (t.boxes() == 1) return 2LL * t.weight(1, 1) - 1;
    const long long omega = t.min_weight();
    return omega - 1 + std::max(regularity(delete_row(t, b.row).first), regularity(delete_column(t, b.col).first));
  }

 private:
  std::map<Key, int> depth_memo_;
  std::map<Key, long long> reg_memo_;
};

void require_minimal(const Tableau& t, Box top) {
  const auto boxes = minimal_boxes(t);
  if (std::find(boxes.begin(), boxes.end(), top) == boxes.end())
    throw std::invalid_argument("box is not a minimal box of the tableau");
}

}  // namespace

int depth(const Tableau& t) { return Recursion{}.depth(t); }

long long regularity(const Tableau& t) { return Recursion{}.regularity(t); }

int depth_from_box(const Tableau& t, Box top) {
  require_minimal(t, top);
  return Recursion{}.depth_at(t, top);
}

long long regularity_from_box(const Tableau& t, Box top) {
  require_minimal(t, top);
  return Recursion{}.regularity_at(t, top);
}

InvariantReport invariants_via_recursion(const Tableau& t) {
  Recursion rec;
  InvariantReport report;
  report.method = Method::Recursion;
  report.depth = rec.depth(t);
  report.regularity = rec.regularity(t);
  if (t.empty()) return report;
  report.omega = t.min_weight();

  AdmissibleCollection dw;
  for (Tableau cur = t; !cur.empty();) {
    const Box b = minimal_boxes(cur).front();
    auto [by_row, freed_cols] = delete_row(cur, b.row);
    auto [by_col, freed_rows] = delete_column(cur, b.col);
    const bool take_row = rec.depth(by_row) + freed_cols <= rec.depth(by_col) + freed_rows;
    const Mark m = take_row ? Mark::Row : Mark::Column;
    dw.steps.push_back({cur.original(b, m), cur.weight(b), take_row ? freed_cols : freed_rows});
    cur = take_row ? std::move(by_row) : std::move(by_col);
  }
  report.depth_witness = std::move(dw);

  AdmissibleCollection rw;
  for (Tableau cur = t; !cur.empty();) {
    const Box b = minimal_boxes(cur).front();
    auto [by_row, freed_cols] = delete_row(cur, b.row);
    auto [by_col, freed_rows] = delete_column(cur, b.col);
    const bool take_row = cur.boxes() == 1 || rec.regularity(by_row) >= rec.regularity(by_col);
    const Mark m = take_row ? Mark::Row : Mark::Column;
    rw.steps.push_back({cur.original(b, m), cur.weight(b), take_row ? freed_cols : freed_rows});
    cur = take_row ? std::move(by_row) : std::move(by_col);
  }
  report.reg_witness = std::move(rw);
  return report;
}

InvariantReport extremes_via_collections(const Tableau& t, const Guards& guards) {
  InvariantReport report;
  report.method = Method::Collections;
  report.omega = t.min_weight();
  bool first = true;
  for_each_admissible_collection(t, guards, [&](const AdmissibleCollection& c) {
    const int d = c.depth_statistic();
    const long long r = c.regularity_statistic();
    if (first || d < report.depth) {
      report.depth = d;
      report.depth_witness = c;
    }
    if (first || r > report.regularity) {
      report.regularity = r;
      report.reg_witness = c;
    }
    first = false;
    return true;
  });
  return report;
}

FerrersInvariants ferrers_invariants(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("Ferrers invariants need a nonempty partition");
  const int n = p.rows();
  const int m = p.columns();
  FerrersInvariants f;
  int min_cover = n;
  int max_shift = 0;
  int max_sum = 0;
  for (int j = 1; j <= n; ++j) {
    const int shifted = p.part(j) + j - 1;
    min_cover = std::min(min_cover, shifted);
    max_shift = std::max(max_shift, shifted);
    if (p.part(j) + j > max_sum) {
      max_sum = p.part(j) + j;
      f.alpha = j;
    }
  }
  f.height = min_cover;
  f.projective_dimension = max_shift;
  f.depth = n + m - max_shift;
  f.regularity = 1;
  f.dimension = n + m - f.height;
  f.is_cohen_macaulay = n == m && is_staircase(p);
  return f;
}

bool is_cohen_macaulay(const Tableau& t) {
  if (t.empty()) throw std::invalid_argument("Cohen-Macaulay test needs a nonempty tableau");
  return is_staircase(t.shape()) && is_weakly_increasing(t);
}

long long reg_single_row(std::span<const Weight> weights) {
  if (weights.empty()) throw std::invalid_argument("single-row regularity needs at least one weight");
  long long total = 0;
  Weight top = 0;
  for (Weight w : weights) {
    total += static_cast<long long>(w) - 1;
    top = std::max(top, w);
  }
  return total + top;
}

std::string to_string(RowVariableEffect e) {
  switch (e) {
    case RowVariableEffect::DropsByOne: return "drops-by-one";
    case RowVariableEffect::Unchanged: return "unchanged";
    case RowVariableEffect::UnchangedOrHigher: return "unchanged-or-higher";
  }
  return "unknown";
}

RowVariableEffect classify_add_row_variable(const Partition& p, int a) {
  if (a < 1 || a > p.rows()) throw std::out_of_range("row index out of range");
  const int alpha = ferrers_invariants(p).alpha;
  if (a > alpha) return RowVariableEffect::DropsByOne;
  if (a < alpha) return RowVariableEffect::Unchanged;
  return RowVariableEffect::UnchangedOrHigher;
}

}  // namespace tabreg
