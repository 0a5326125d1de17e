#include "tabreg/tableau.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tabreg/errors.hpp"

namespace tabreg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::boxes() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition conjugate(const Partition& p) {
  std::vector<int> mu(static_cast<std::size_t>(p.columns()), 0);
  for (int len : p.parts())
    for (int j = 0; j < len; ++j) ++mu[static_cast<std::size_t>(j)];
  return Partition(std::move(mu));
}

bool is_staircase(const Partition& p) {
  const int n = p.rows();
  for (int i = 1; i <= n; ++i)
    if (p.part(i) != n - i + 1) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("partition part too large", 1, start + 1);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a positive integer", 1, pos + 1);
    if (value < 1) throw ParseError("partition parts must be positive", 1, start + 1);
    if (!parts.empty() && value > parts.back())
      throw ParseError("partition parts must be weakly decreasing", 1, start + 1);
    parts.push_back(static_cast<int>(value));
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", 1, pos + 1);
      ++pos;
      if (pos == text.size()) throw ParseError("trailing ','", 1, pos);
    }
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int boxes) {
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(boxes, boxes, current, out);
  return out;
}

char mark_char(Mark m) { return m == Mark::Row ? 'r' : 'c'; }

Tableau::Tableau(std::vector<std::vector<Weight>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("row lengths must be weakly decreasing");
    for (Weight w : rows_[i])
      if (w < 1 || w > kMaxWeight) throw std::invalid_argument("weights must lie in [1, 1000000]");
  }
  row_labels_.resize(rows_.size());
  std::iota(row_labels_.begin(), row_labels_.end(), 1);
  col_labels_.resize(static_cast<std::size_t>(column_count()));
  std::iota(col_labels_.begin(), col_labels_.end(), 1);
}

int Tableau::boxes() const noexcept {
  int total = 0;
  for (const auto& r : rows_) total += static_cast<int>(r.size());
  return total;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

Weight Tableau::min_weight() const {
  if (rows_.empty()) throw std::invalid_argument("empty tableau has no minimum weight");
  Weight best = kMaxWeight + 1;
  for (const auto& r : rows_)
    for (Weight w : r) best = std::min(best, w);
  return best;
}

std::vector<Box> minimal_boxes(const Tableau& t) {
  if (t.empty()) throw std::invalid_argument("empty tableau has no minimal box");
  const Weight omega = t.min_weight();
  const auto& rows = t.rows();
  // (g, d) is minimal iff no other omega-box lies weakly northwest of it.
  // Scanning rows top-down while tracking the leftmost omega column seen so
  // far gives the staircase of minimal elements.
  std::vector<Box> out;
  int leftmost = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int first = -1;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] == omega) {
        first = static_cast<int>(j) + 1;
        break;
      }
    }
    if (first != -1 && first < leftmost) {
      out.push_back({static_cast<int>(i) + 1, first});
      leftmost = first;
    }
  }
  return out;
}

std::pair<Tableau, int> delete_row(const Tableau& t, int row) {
  if (row < 1 || row > t.row_count()) throw std::out_of_range("row index out of range");
  Tableau out = t;
  const auto idx = static_cast<std::size_t>(row - 1);
  out.rows_.erase(out.rows_.begin() + static_cast<std::ptrdiff_t>(idx));
  out.row_labels_.erase(out.row_labels_.begin() + static_cast<std::ptrdiff_t>(idx));
  const int freed = t.column_count() - out.column_count();
  out.col_labels_.resize(static_cast<std::size_t>(out.column_count()));
  return {std::move(out), freed};
}

std::pair<Tableau, int> delete_column(const Tableau& t, int col) {
  if (col < 1 || col > t.column_count()) throw std::out_of_range("column index out of range");
  Tableau out = t;
  const auto idx = static_cast<std::size_t>(col - 1);
  for (auto& r : out.rows_)
    if (r.size() > idx) r.erase(r.begin() + static_cast<std::ptrdiff_t>(idx));
  int freed = 0;
  while (!out.rows_.empty() && out.rows_.back().empty()) {
    out.rows_.pop_back();
    out.row_labels_.pop_back();
    ++freed;
  }
  out.col_labels_.erase(out.col_labels_.begin() + static_cast<std::ptrdiff_t>(idx));
  return {std::move(out), freed};
}

std::pair<Tableau, int> delete_line(const Tableau& t, Box b, Mark m) {
  return m == Mark::Row ? delete_row(t, b.row) : delete_column(t, b.col);
}

bool is_weakly_increasing(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i][j] > rows[i + 1][j]) return false;
    }
  }
  return true;
}

int AdmissibleCollection::depth_statistic() const {
  int total = 0;
  for (const auto& s : steps) total += s.freed;
  return total;
}

long long AdmissibleCollection::regularity_statistic() const {
  if (steps.empty()) return 0;
  long long total = 0;
  for (const auto& s : steps) total += static_cast<long long>(s.weight) - 1;
  return total + steps.back().weight;
}

std::vector<MarkedBox> AdmissibleCollection::boxes() const {
  std::vector<MarkedBox> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.box);
  return out;
}

namespace {

struct Enumerator {
  const Guards& guards;
  const std::function<bool(const AdmissibleCollection&)>& visit;
  AdmissibleCollection current;
  std::size_t produced = 0;

  // Returns false when the visitor asked to stop.
  bool run(const Tableau& t) {
    if (t.empty()) {
      ++produced;
      check_guard("max_collections", produced, guards.max_collections);
      return visit(current);
    }
    for (const Box& b : minimal_boxes(t)) {
      for (Mark m : {Mark::Row, Mark::Column}) {
        auto [residual, freed] = delete_line(t, b, m);
        current.steps.push_back({t.original(b, m), t.weight(b), freed});
        const bool keep_going = run(residual);
        current.steps.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  }
};

}  // namespace

void for_each_admissible_collection(const Tableau& t, const Guards& guards,
                                    const std::function<bool(const AdmissibleCollection&)>& visit) {
  if (t.empty()) throw std::invalid_argument("empty tableau has no admissible collection");
  Enumerator e{guards, visit, {}, 0};
  e.run(t);
}

std::vector<AdmissibleCollection> enumerate_admissible_collections(const Tableau& t, const Guards& guards) {
  std::vector<AdmissibleCollection> out;
  for_each_admissible_collection(t, guards, [&](const AdmissibleCollection& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<Weight>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<Weight> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const char c = line[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
        continue;
      }
      if (c < '0' || c > '9') throw ParseError(std::string("unexpected character '") + c + "'", line_no, pos + 1);
      const std::size_t start = pos;
      long long value = 0;
      while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
        value = value * 10 + (line[pos] - '0');
        if (value > static_cast<long long>(kMaxWeight))
          throw ParseError("weight exceeds 1000000", line_no, start + 1);
        ++pos;
      }
      if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
        throw ParseError(std::string("unexpected character '") + line[pos] + "'", line_no, pos + 1);
      if (value == 0) throw ParseError("weights must be positive", line_no, start + 1);
      row.push_back(static_cast<Weight>(value));
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() > rows.back().size())
      throw ParseError("row lengths must be weakly decreasing", line_no, 1);
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

Tableau read_tableau_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tableau(buf.str());
}

std::string to_text(const Tableau& t) {
  std::string out;
  for (const auto& r : t.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(r[j]);
    }
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) {
  os << '[';
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) os << (j ? "," : "") << t.rows()[i][j];
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const MarkedBox& b) {
  return os << '(' << b.row << ',' << b.col << ',' << mark_char(b.mark) << ')';
}

}  // namespace tabreg
