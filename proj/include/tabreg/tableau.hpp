#pragma once

// Young diagrams with positive integer weights, and the combinatorics the
// depth/regularity formulas run on: minimal boxes, line deletion and
// admissible collections of marked boxes.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tabreg/guards.hpp"

namespace tabreg {

using Weight = std::uint32_t;

inline constexpr Weight kMaxWeight = 1'000'000;

/// Weakly decreasing sequence of positive row lengths. Empty is the empty diagram.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// Number of rows (n).
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  /// Number of columns (m = lambda_1), 0 for the empty diagram.
  int columns() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int boxes() const noexcept;
  /// 1-based row length, 0 past the last row.
  int part(int i) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
bool is_staircase(const Partition& p);
std::string to_string(const Partition& p);
/// Parses "4,4,3,2,1". Throws ParseError.
Partition parse_partition(const std::string& text);
/// All partitions of exactly `boxes` boxes, in reverse lexicographic order.
std::vector<Partition> partitions_of(int boxes);

/// 1-based box coordinates.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

enum class Mark : std::uint8_t { Row, Column };

char mark_char(Mark m);

struct MarkedBox {
  int row = 0;  // original row label
  int col = 0;  // original column label
  Mark mark = Mark::Row;
  friend bool operator==(const MarkedBox&, const MarkedBox&) = default;
  friend auto operator<=>(const MarkedBox&, const MarkedBox&) = default;
};

/// A filling of a Young diagram. Rows are stored top to bottom; each box
/// carries a weight >= 1. Row and column labels record the coordinates the
/// boxes had in the tableau this one was cut from, so witnesses can be
/// reported against the original input.
class Tableau {
 public:
  Tableau() = default;
  /// Throws std::invalid_argument on empty rows, increasing row lengths or
  /// weights outside [1, kMaxWeight]. Labels start at 1.
  explicit Tableau(std::vector<std::vector<Weight>> rows);

  const std::vector<std::vector<Weight>>& rows() const noexcept { return rows_; }
  const std::vector<int>& row_labels() const noexcept { return row_labels_; }
  const std::vector<int>& col_labels() const noexcept { return col_labels_; }

  bool empty() const noexcept { return rows_.empty(); }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  int column_count() const noexcept { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  int boxes() const noexcept;
  Partition shape() const;

  /// 1-based access; box must exist.
  Weight weight(int row, int col) const { return rows_.at(row - 1).at(col - 1); }
  Weight weight(Box b) const { return weight(b.row, b.col); }
  /// Minimum weight (omega). Throws std::invalid_argument on an empty tableau.
  Weight min_weight() const;

  MarkedBox original(Box b, Mark m) const { return {row_labels_[b.row - 1], col_labels_[b.col - 1], m}; }

  /// Weights only; labels are not part of a tableau's identity.
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

 private:
  friend std::pair<Tableau, int> delete_row(const Tableau&, int);
  friend std::pair<Tableau, int> delete_column(const Tableau&, int);

  std::vector<std::vector<Weight>> rows_;
  std::vector<int> row_labels_;
  std::vector<int> col_labels_;
};

/// Minimal boxes in residual coordinates, sorted by (row, col).
/// Throws std::invalid_argument("empty tableau has no minimal box").
std::vector<Box> minimal_boxes(const Tableau& t);

/// Removes row `row` (1-based). Returns the residual and the number of
/// columns that become empty (lambda_1 - lambda_2 when row == 1, else 0).
/// Throws std::out_of_range.
std::pair<Tableau, int> delete_row(const Tableau& t, int row);

/// Removes column `col` (1-based). Returns the residual and the number of
/// rows that become empty (mu_1 - mu_2 when col == 1, else 0).
/// Throws std::out_of_range.
std::pair<Tableau, int> delete_column(const Tableau& t, int col);

bool is_weakly_increasing(const Tableau& t);

/// One step of an admissible collection: the marked box (original labels),
/// its weight and the number of variables the deletion freed.
struct CollectionStep {
  MarkedBox box;
  Weight weight = 0;
  int freed = 0;
  friend bool operator==(const CollectionStep&, const CollectionStep&) = default;
};

struct AdmissibleCollection {
  std::vector<CollectionStep> steps;

  /// d(M,Y): total freed variables.
  int depth_statistic() const;
  /// r(M,Y) = sum_t (w_t - 1) + w_s, s the last step.
  long long regularity_statistic() const;
  std::vector<MarkedBox> boxes() const;
};

/// Applies a marked box (residual coordinates) to a tableau.
std::pair<Tableau, int> delete_line(const Tableau& t, Box b, Mark m);

/// Depth-first enumeration. At every residual, minimal boxes are visited in
/// (row, col) order and mark Row before Column. Stops early when the visitor
/// returns false. Throws GuardExceeded once more than guards.max_collections
/// collections have been produced.
void for_each_admissible_collection(const Tableau& t, const Guards& guards,
                                    const std::function<bool(const AdmissibleCollection&)>& visit);

std::vector<AdmissibleCollection> enumerate_admissible_collections(const Tableau& t, const Guards& guards = {});

// Text format: one row per line, space separated weights, '#' to end of line
// is a comment, blank lines are ignored.
Tableau parse_tableau(const std::string& text);
Tableau read_tableau_file(const std::string& path);
std::string to_text(const Tableau& t);

std::ostream& operator<<(std::ostream& os, const Tableau& t);
std::ostream& operator<<(std::ostream& os, const MarkedBox& b);

}  // namespace tabreg
