#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "tabreg/errors.hpp"
#include "tabreg/tableau.hpp"
#include "test_support.hpp"

using namespace tabreg;
using testing::Gen;

namespace {

const Tableau kRedBox({{3, 1, 5, 6}, {2, 3, 4, 6}, {2, 3, 5}, {2, 4}, {3}});
const Tableau kYellow({{3, 4, 2, 6, 7}, {4, 2, 4, 6}, {2, 3}, {2, 4}, {5}});
const Tableau kFourRows({{2, 2, 5, 4}, {3, 2, 4}, {4, 6}, {3}});

// Definition check, independent of minimal_boxes' row scan.
std::vector<Box> minimal_by_definition(const Tableau& t) {
  std::vector<Box> out;
  const Weight omega = t.min_weight();
  for (int i = 1; i <= t.row_count(); ++i)
    for (int j = 1; j <= t.shape().part(i); ++j) {
      if (t.weight(i, j) != omega) continue;
      bool ok = true;
      for (int a = 1; a <= i; ++a)
        for (int b = 1; b <= j && b <= t.shape().part(a); ++b)
          if ((a != i || b != j) && t.weight(a, b) <= omega) ok = false;
      if (ok) out.push_back({i, j});
    }
  return out;
}

std::set<std::pair<int, int>> original_boxes(const Tableau& t) {
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= t.row_count(); ++i)
    for (int j = 1; j <= t.shape().part(i); ++j) out.insert({t.row_labels()[i - 1], t.col_labels()[j - 1]});
  return out;
}

// Replays a collection: each step must hit a minimal box of the residual and
// report the right weight and freed count; the residual must end empty.
void check_replay(const Tableau& t, const AdmissibleCollection& c) {
  Tableau cur = t;
  for (const auto& step : c.steps) {
    REQUIRE_FALSE(cur.empty());
    const auto mins = minimal_boxes(cur);
    auto it = std::find_if(mins.begin(), mins.end(), [&](Box b) {
      const auto o = cur.original(b, step.box.mark);
      return o.row == step.box.row && o.col == step.box.col;
    });
    REQUIRE(it != mins.end());
    CHECK(cur.weight(*it) == step.weight);
    auto [next, freed] = delete_line(cur, *it, step.box.mark);
    CHECK(freed == step.freed);
    cur = std::move(next);
  }
  CHECK(cur.empty());
}

}  // namespace

TEST_CASE("partition validation and conjugate") {
  CHECK(conjugate(Partition({4, 4, 3, 2, 1})) == Partition({5, 4, 3, 2}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({4, 3, 2, 1})) == Partition({4, 3, 2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition({4, 4, 3, 2, 1}).boxes() == 14);
}

TEST_CASE("conjugate is an involution up to 12 boxes") {
  int checked = 0;
  for (int b = 0; b <= 12; ++b)
    for (const auto& p : partitions_of(b)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).boxes() == b);
      ++checked;
    }
  CHECK(checked == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30 + 42 + 56 + 77);
}

TEST_CASE("staircase test") {
  CHECK(is_staircase(Partition({3, 2, 1})));
  CHECK_FALSE(is_staircase(Partition({2, 2})));
  CHECK(is_staircase(Partition()));
  CHECK_FALSE(is_staircase(Partition({3, 1})));
}

TEST_CASE("partition literal parsing") {
  CHECK(parse_partition("4,4,3,2,1") == Partition({4, 4, 3, 2, 1}));
  CHECK(parse_partition(" 3, 2 ,1") == Partition({3, 2, 1}));
  CHECK_THROWS_AS(parse_partition("2,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("a"), ParseError);
  CHECK(to_string(Partition({7, 7, 6})) == "7,7,6");
}

TEST_CASE("minimal boxes on worked fillings") {
  CHECK(minimal_boxes(kYellow) == std::vector<Box>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(minimal_boxes(kRedBox) == std::vector<Box>{{1, 2}});
  CHECK(minimal_boxes(Tableau({{4, 4, 4}, {4, 4}, {4}})) == std::vector<Box>{{1, 1}});
  // the weight-2 box in row 4 has a weight-2 box above it
  const auto yellow = minimal_boxes(kYellow);
  CHECK(std::find(yellow.begin(), yellow.end(), Box{4, 1}) == yellow.end());
  CHECK_THROWS_WITH_AS(minimal_boxes(Tableau()), "empty tableau has no minimal box", std::invalid_argument);
}

TEST_CASE("minimal boxes form a nonempty antichain of weight omega") {
  Gen g(11);
  for (int k = 0; k < 300; ++k) {
    const Tableau t = testing::random_tableau(g, 5, 5, 3);
    const auto boxes = minimal_boxes(t);
    REQUIRE_FALSE(boxes.empty());
    CHECK(boxes == minimal_by_definition(t));
    for (Box a : boxes) {
      CHECK(t.weight(a) == t.min_weight());
      for (Box b : boxes)
        if (a != b) CHECK((a.row - b.row) * (a.col - b.col) < 0);
    }
  }
}

TEST_CASE("row deletion") {
  auto [a, freed_a] = delete_row(kRedBox, 1);
  CHECK(a.shape() == Partition({4, 3, 2, 1}));
  CHECK(freed_a == 0);
  CHECK(a.row_labels() == std::vector<int>{2, 3, 4, 5});

  auto [b, freed_b] = delete_row(Tableau({{2, 3}}), 1);
  CHECK(b.empty());
  CHECK(freed_b == 2);

  auto [c, freed_c] = delete_row(Tableau({{2, 1}, {1}}), 2);
  CHECK(c == Tableau({{2, 1}}));
  CHECK(freed_c == 0);

  CHECK_THROWS_AS(delete_row(kRedBox, 0), std::out_of_range);
  CHECK_THROWS_AS(delete_row(kRedBox, 6), std::out_of_range);
}

TEST_CASE("column deletion") {
  auto [a, freed_a] = delete_column(Tableau({{2}, {1}}), 1);
  CHECK(a.empty());
  CHECK(freed_a == 2);

  auto [b, freed_b] = delete_column(Tableau({{2, 1}, {1}}), 1);
  CHECK(b == Tableau(std::vector<std::vector<Weight>>{{1}}));
  CHECK(freed_b == 1);
  CHECK(b.col_labels() == std::vector<int>{2});
  CHECK(b.row_labels() == std::vector<int>{1});

  auto [c, freed_c] = delete_column(kFourRows, 2);
  // three of the four rows reach column 2, so 7 boxes remain
  CHECK(c.shape() == Partition({3, 2, 1, 1}));
  CHECK(freed_c == 0);
  CHECK(c.rows() == std::vector<std::vector<Weight>>{{2, 5, 4}, {3, 4}, {4}, {3}});
  CHECK(c.col_labels() == std::vector<int>{1, 3, 4});

  CHECK_THROWS_AS(delete_column(kFourRows, 5), std::out_of_range);
}

TEST_CASE("deletions keep shapes valid and count freed lines") {
  Gen g(12);
  for (int k = 0; k < 300; ++k) {
    const Tableau t = testing::random_tableau(g, 5, 5, 3);
    const Partition lam = t.shape();
    const Partition mu = conjugate(lam);
    for (int i = 1; i <= t.row_count(); ++i) {
      auto [r, freed] = delete_row(t, i);
      CHECK(r.boxes() == t.boxes() - lam.part(i));
      CHECK(freed == (i == 1 ? lam.part(1) - lam.part(2) : 0));
      CHECK(original_boxes(r).size() == static_cast<std::size_t>(r.boxes()));
      // remaining boxes keep their weights under the label map
      for (int a = 1; a <= r.row_count(); ++a)
        for (int b = 1; b <= r.shape().part(a); ++b)
          CHECK(r.weight(a, b) == t.weight(r.row_labels()[a - 1], r.col_labels()[b - 1]));
    }
    for (int j = 1; j <= t.column_count(); ++j) {
      auto [c, freed] = delete_column(t, j);
      CHECK(c.boxes() == t.boxes() - mu.part(j));
      CHECK(freed == (j == 1 ? mu.part(1) - mu.part(2) : 0));
      for (int a = 1; a <= c.row_count(); ++a)
        for (int b = 1; b <= c.shape().part(a); ++b)
          CHECK(c.weight(a, b) == t.weight(c.row_labels()[a - 1], c.col_labels()[b - 1]));
    }
  }
}

TEST_CASE("weakly increasing fillings") {
  CHECK(is_weakly_increasing(Tableau({{1, 2}, {2}})));
  CHECK_FALSE(is_weakly_increasing(Tableau({{3, 1}})));
  CHECK(is_weakly_increasing(Tableau()));
  CHECK_FALSE(is_weakly_increasing(Tableau({{1, 2}, {2, 1}})));
  CHECK_FALSE(is_weakly_increasing(Tableau({{2, 2}, {1}})));
}

TEST_CASE("tableau construction rejects bad input") {
  CHECK_THROWS_WITH_AS(Tableau({{1}, {1, 1}}), "row lengths must be weakly decreasing", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Tableau(std::vector<std::vector<Weight>>{{0}}), "weights must lie in [1, 1000000]", std::invalid_argument);
}

TEST_CASE("admissible collections of a single box") {
  for (Weight w : {1u, 4u, 9u}) {
    const Tableau t(std::vector<std::vector<Weight>>{{w}});
    const auto all = enumerate_admissible_collections(t);
    REQUIRE(all.size() == 2);
    CHECK(all[0].boxes() == std::vector<MarkedBox>{{1, 1, Mark::Row}});
    CHECK(all[1].boxes() == std::vector<MarkedBox>{{1, 1, Mark::Column}});
    for (const auto& c : all) {
      CHECK(c.regularity_statistic() == 2LL * w - 1);
      CHECK(c.depth_statistic() == 1);
    }
  }
}

TEST_CASE("admissible collections of a single row") {
  const auto all = enumerate_admissible_collections(Tableau({{2, 3}}));
  REQUIRE(all.size() == 3);
  CHECK(all[0].boxes() == std::vector<MarkedBox>{{1, 1, Mark::Row}});
  CHECK(all[1].boxes() == std::vector<MarkedBox>{{1, 1, Mark::Column}, {1, 2, Mark::Row}});
  CHECK(all[2].boxes() == std::vector<MarkedBox>{{1, 1, Mark::Column}, {1, 2, Mark::Column}});
}

TEST_CASE("worked collection on the four-row filling") {
  const std::vector<MarkedBox> m{{1, 1, Mark::Row}, {2, 2, Mark::Row}, {4, 1, Mark::Row}, {3, 1, Mark::Column},
                                 {3, 2, Mark::Column}};
  bool found = false;
  for (const auto& c : enumerate_admissible_collections(kFourRows))
    if (c.boxes() == m) {
      found = true;
      CHECK(c.depth_statistic() == 3);
      CHECK(c.regularity_statistic() == 18);
    }
  CHECK(found);
}

TEST_CASE("every enumerated collection replays and covers the diagram") {
  Gen g(13);
  int collections = 0;
  for (int k = 0; k < 80; ++k) {
    const Tableau t = testing::random_tableau(g, 4, 4, 3);
    const auto all = enumerate_admissible_collections(t);
    REQUIRE_FALSE(all.empty());
    const auto tops = minimal_boxes(t);
    for (const auto& c : all) {
      ++collections;
      check_replay(t, c);
      const Box first{c.steps.front().box.row, c.steps.front().box.col};
      CHECK(std::find(tops.begin(), tops.end(), first) != tops.end());
      std::set<std::pair<int, int>> covered;
      for (const auto& s : c.steps)
        for (auto box : original_boxes(t))
          if ((s.box.mark == Mark::Row && box.first == s.box.row) ||
              (s.box.mark == Mark::Column && box.second == s.box.col))
            covered.insert(box);
      CHECK(covered == original_boxes(t));
    }
    CHECK(enumerate_admissible_collections(t).size() == all.size());
  }
  CHECK(collections > 80);
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_admissible_collections(kYellow);
  const auto b = enumerate_admissible_collections(kYellow);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].steps == b[k].steps);
}

TEST_CASE("enumeration guard") {
  Guards guards;
  guards.max_collections = 10;
  try {
    enumerate_admissible_collections(kYellow, guards);
    FAIL("expected the guard to trip");
  } catch (const GuardExceeded& e) {
    CHECK(e.guard() == "max_collections");
    CHECK(e.reached() == 11);
    CHECK(std::string(e.what()).find("max_collections") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_admissible_collections(Tableau()), std::invalid_argument);
}

TEST_CASE("text format") {
  const std::string text = "# worked filling\n3 1 5 6\n2 3 4 6  # trailing\n\n2 3 5\n2 4\n3\n";
  const Tableau t = parse_tableau(text);
  CHECK(t == kRedBox);
  CHECK(parse_tableau(to_text(t)) == t);
  try {
    parse_tableau("1 1\n1 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("row lengths must be weakly decreasing") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_tableau("1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tableau("1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_tableau("1 -2\n"), ParseError);
  CHECK(parse_tableau("# nothing\n").empty());
}

TEST_CASE("text round trip on random tableaux") {
  Gen g(14);
  for (int k = 0; k < 100; ++k) {
    const Tableau t = testing::random_tableau(g, 6, 6, 1000);
    CHECK(parse_tableau(to_text(t)) == t);
  }
}
