// Acceptance run: one PASS/FAIL line per criterion, then a summary.
// All comparisons are exact integer equalities; the only tolerances are the
// wall-clock limits below. `--slow` adds the squared-ideal depth check.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tabreg/betti.hpp"
#include "tabreg/formulas.hpp"
#include "tabreg/monomial_ideal.hpp"
#include "tabreg/search.hpp"
#include "test_support.hpp"

using namespace tabreg;

namespace {

constexpr double kWorkedExampleSeconds = 1.0;   // criteria 1-4
constexpr double kPowersSeconds = 30.0;         // criterion 5
constexpr double kEquivalenceSeconds = 120.0;   // criterion 6
constexpr double kPropertySeconds = 180.0;      // criterion 9, all suites together
constexpr double kFerrersSeconds = 60.0;        // criterion 10
constexpr int kMinSuiteCases = 50;
constexpr int kRandomInstances = 100;
constexpr std::uint64_t kSeed = 20240611;

const Tableau kIntro({{3, 1, 5, 6}, {2, 3, 4, 6}, {2, 3, 5}, {2, 4}, {3}});
const Tableau kFourRows({{2, 2, 5, 4}, {3, 2, 4}, {4, 6}, {3}});
const Tableau kFiveRows({{3, 4, 2, 6, 7}, {4, 2, 4, 6}, {2, 3}, {2, 4}, {5}});
const Tableau kFiveRowsSorted({{2, 3, 4, 6, 7}, {4, 2, 4, 6}, {2, 3}, {2, 4}, {5}});
const Tableau kThreeExample({{1, 3, 5, 6, 7}, {2, 3, 4, 6}, {2, 3, 5}, {2, 4}, {3}});

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;  // printed indented under the criterion line
};

struct Criterion {
  std::string id;
  std::string title;
  std::optional<double> limit;
  std::function<Outcome()> body;
};

// Counts cases and failures; the first failure message is kept.
struct Tally {
  int cases = 0;
  int failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(int min_cases = 1) const {
    Outcome o;
    o.ok = failures == 0 && cases >= min_cases;
    o.detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
    if (!first.empty()) o.detail += "; first: " + first;
    if (cases < min_cases) o.detail += "; fewer than " + std::to_string(min_cases) + " cases";
    return o;
  }
};

std::string show(const Tableau& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::vector<Tableau> exhaustive_set() { return testing::all_tableaux(4, 2); }

std::vector<Tableau> random_set() {
  testing::Gen g(kSeed);
  std::vector<Tableau> out;
  for (int k = 0; k < kRandomInstances; ++k) out.push_back(testing::random_tableau(g, 3, 3, 3));
  return out;
}

Outcome worked_intro() {
  const auto rec = invariants_via_recursion(kIntro);
  const auto col = extremes_via_collections(kIntro);
  Outcome o;
  o.ok = rec.depth == 2 && rec.regularity == 20 && col.depth == 2 && col.regularity == 20;
  o.detail = "recursion (" + std::to_string(rec.depth) + ", " + std::to_string(rec.regularity) + "), collections (" +
             std::to_string(col.depth) + ", " + std::to_string(col.regularity) + ")";
  return o;
}

Outcome worked_four_rows() {
  const auto col = extremes_via_collections(kFourRows);
  const std::set<MarkedBox> witness{{1, 1, Mark::Row}, {2, 2, Mark::Row}, {4, 1, Mark::Row},
                                    {3, 1, Mark::Column}, {3, 2, Mark::Column}};
  bool found = false;
  for_each_admissible_collection(kFourRows, {}, [&](const AdmissibleCollection& c) {
    const auto boxes = c.boxes();
    if (std::set<MarkedBox>(boxes.begin(), boxes.end()) == witness && c.depth_statistic() == 3 &&
        c.regularity_statistic() == 18)
      found = true;
    return !found;
  });
  Outcome o;
  o.ok = col.depth == 3 && col.regularity == 18 && found;
  o.detail = "depth " + std::to_string(col.depth) + ", reg " + std::to_string(col.regularity) + ", witness " +
             (found ? "found" : "missing");
  return o;
}

Outcome worked_reordering() {
  const int d1 = depth(kFiveRows);
  const long long r1 = regularity(kFiveRows);
  const int d2 = depth(kFiveRowsSorted);
  const long long r2 = regularity(kFiveRowsSorted);
  std::set<std::pair<int, int>> mins;
  for (const auto& b : minimal_boxes(kFiveRows)) mins.emplace(b.row, b.col);
  const std::set<std::pair<int, int>> expected{{1, 3}, {2, 2}, {3, 1}};
  Outcome o;
  o.ok = r1 == 27 && d1 == 2 && r2 == 25 && d2 == 3 && mins == expected;
  o.detail = "(" + std::to_string(r1) + ", " + std::to_string(d1) + ") then (" + std::to_string(r2) + ", " +
             std::to_string(d2) + "), minimal boxes " + (mins == expected ? "match" : "differ");
  return o;
}

Outcome worked_three() {
  const int d = depth(kThreeExample);
  return {d == 4, "depth " + std::to_string(d)};
}

Outcome powers() {
  Tally t;
  const auto base = ferrers_ideal(Partition({2, 1}));
  std::string values;
  for (unsigned p = 2; p <= 3; ++p) {
    const auto o = oracle_invariants(power(base, p));
    t.check(o.depth == 1, "depth at t = " + std::to_string(p));
    t.check(o.regularity == 2 * static_cast<long long>(p) - 1, "reg at t = " + std::to_string(p));
    values += (values.empty() ? "" : ", ") + std::string("t=") + std::to_string(p) + ": (" + std::to_string(o.depth) +
              ", " + std::to_string(o.regularity) + ")";
  }
  auto out = t.outcome();
  out.detail = values + "; " + out.detail;
  return out;
}

Outcome oracle_equivalence() {
  Tally t;
  auto run = [&](const Tableau& y) {
    const auto o = oracle_invariants(tableau_ideal(y));
    const auto col = extremes_via_collections(y);
    const int d = depth(y);
    const long long r = regularity(y);
    t.check(d == col.depth && d == o.depth && r == col.regularity && r == o.regularity, show(y));
  };
  for (const auto& y : exhaustive_set()) run(y);
  for (const auto& y : random_set()) run(y);
  return t.outcome(kRandomInstances);
}

Outcome weakly_increasing() {
  Tally t;
  for (const auto& y : exhaustive_set()) {
    if (!is_weakly_increasing(y)) continue;
    const Partition shape = y.shape();
    const auto& parts = shape.parts();
    int peak = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) peak = std::max(peak, parts[i] + static_cast<int>(i + 1) - 1);
    t.check(depth(y) == y.row_count() + y.column_count() - peak, show(y));
  }
  return t.outcome();
}

Outcome cohen_macaulay() {
  Tally t;
  std::vector<Tableau> set = exhaustive_set();
  for (const auto& p : testing::staircases(3)) testing::for_each_filling(p, 2, [&](const Tableau& y) { set.push_back(y); });
  int cm = 0;
  for (const auto& y : set) {
    const auto ideal = tableau_ideal(y);
    const bool expect = oracle_invariants(ideal).depth == y.row_count() + y.column_count() - oracle_height(ideal);
    const bool got = is_cohen_macaulay(y);
    cm += got;
    t.check(got == expect, show(y));
  }
  auto out = t.outcome();
  out.detail += ", " + std::to_string(cm) + " Cohen-Macaulay";
  return out;
}

Outcome minimal_box_invariance() {
  Tally t;
  for (const auto& y : exhaustive_set())
    for (const Box b : minimal_boxes(y))
      t.check(depth_from_box(y, b) == depth(y) && regularity_from_box(y, b) == regularity(y), show(y));
  return t.outcome(kMinSuiteCases);
}

Outcome closed_form_radical() {
  Tally t;
  testing::Gen g(kSeed + 1);
  for (int k = 0; k < 60; ++k) {
    const auto y = testing::random_tableau(g, 3, 3, 3);
    const auto graph = EdgeWeightedGraph::from_tableau(y);
    const auto ideal = graph.ideal();
    const auto rho = ideal.rho();
    Monomial a(ideal.variable_count());
    bool same = true;
    while (true) {
      if (!ideal.contains(a)) same &= associated_radical(graph, a) == radical(colon(ideal, a));
      std::size_t v = 0;
      while (v < a.size() && a[v] == rho[v]) a[v++] = 0;
      if (v == a.size()) break;
      ++a[v];
    }
    t.check(same, show(y));
  }
  return t.outcome(kMinSuiteCases);
}

Outcome colon_membership() {
  Tally t;
  for (const auto& y : exhaustive_set()) {
    const auto ideal = tableau_ideal(y);
    const auto o = oracle_invariants(ideal);
    for (std::size_t v = 0; v < ideal.variable_count(); ++v) {
      const std::vector<std::size_t> z{v};
      Monomial zm(ideal.variable_count());
      zm[v] = 1;
      const auto plus = oracle_invariants(add_variables(ideal, z));
      const auto quotient = oracle_invariants(colon(ideal, zm));
      t.check((o.depth == plus.depth || o.depth == quotient.depth) &&
                  (o.regularity == plus.regularity || o.regularity == quotient.regularity + 1),
              show(y) + " at variable " + ideal.variables().name(v));
    }
  }
  return t.outcome(kMinSuiteCases);
}

Outcome critical_pair_index() {
  Tally t;
  testing::Gen g(kSeed + 2);
  for (int k = 0; k < 60; ++k) {
    const auto y = testing::random_tableau(g, 3, 4, 3);
    bool ok = true;
    for_each_critical_pair(tableau_ideal(y), {}, {}, GridMode::Full, [&](const CriticalPair& p) {
      ok &= p.index == 0 || p.index == 1;
      return true;
    });
    t.check(ok, show(y));
  }
  return t.outcome(kMinSuiteCases);
}

Outcome complete_bipartite() {
  Tally t;
  testing::Gen g(kSeed + 3);
  for (int k = 0; k < 300; ++k) {
    const int a = g.uniform(1, 4);
    const int b = g.uniform(1, 4);
    const double p = k % 3 == 0 ? 1.0 : k % 3 == 1 ? 0.8 : 0.5;
    const auto edges = testing::random_bipartite_edges(g, a, b, p);
    if (edges.empty()) continue;
    const auto c = stanley_reisner_complex(testing::edge_ideal(static_cast<std::size_t>(a + b), edges));
    if (reduced_homology(c).at(0) == 0) continue;
    t.check(edges.size() == static_cast<std::size_t>(a * b),
            std::to_string(a) + "+" + std::to_string(b) + " vertices, " + std::to_string(edges.size()) + " edges");
  }
  return t.outcome(kMinSuiteCases);
}

Outcome characteristic_independence() {
  Tally t;
  std::vector<Tableau> set = exhaustive_set();
  const auto extra = random_set();
  set.insert(set.end(), extra.begin(), extra.end());
  for (const auto& y : set) {
    const auto ideal = tableau_ideal(y);
    const auto f2 = oracle_invariants(ideal, FieldChoice::prime_field(2));
    const auto f3 = oracle_invariants(ideal, FieldChoice::prime_field(3));
    const auto q = oracle_invariants(ideal, FieldChoice::rationals());
    t.check(f2.depth == f3.depth && f2.depth == q.depth && f2.regularity == f3.regularity &&
                f2.regularity == q.regularity,
            show(y));
  }
  return t.outcome(kMinSuiteCases);
}

Outcome dual_oracle() {
  Tally t;
  std::vector<Tableau> set = exhaustive_set();
  const auto extra = random_set();
  set.insert(set.end(), extra.begin(), extra.end());
  for (const auto& y : set) {
    const auto ideal = tableau_ideal(y);
    const auto pol = polarize(ideal);
    const auto direct = lcm_betti(ideal);
    const auto via_polar = hochster_betti(pol.ideal);
    t.check(direct.entries() == via_polar.entries() &&
                via_polar.depth() == direct.depth() + static_cast<int>(pol.added),
            show(y));
  }
  return t.outcome(kMinSuiteCases);
}

Outcome property_suites() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> suites{
      {"minimal-box invariance", minimal_box_invariance},
      {"closed-form radical", closed_form_radical},
      {"colon membership", colon_membership},
      {"critical-pair index", critical_pair_index},
      {"complete bipartite", complete_bipartite},
      {"characteristic independence", characteristic_independence},
      {"dual oracle", dual_oracle},
  };
  Outcome all;
  for (const auto& [name, run] : suites) {
    const auto o = run();
    char line[512];
    std::snprintf(line, sizeof line, "%-28s %s  %s", name.c_str(), o.ok ? "PASS" : "FAIL", o.detail.c_str());
    all.notes.emplace_back(line);
    all.ok &= o.ok;
  }
  all.detail = std::to_string(suites.size()) + " suites";
  return all;
}

Outcome ferrers_vs_oracle() {
  Tally t;
  for (const auto& p : testing::partitions_with_ring_size(7)) {
    const auto f = ferrers_invariants(p);
    const auto ideal = ferrers_ideal(p);
    const auto o = oracle_invariants(ideal);
    t.check(f.height == oracle_height(ideal) && f.projective_dimension == o.projective_dimension &&
                f.depth == o.depth && f.regularity == o.regularity && o.regularity == 1,
            to_string(p));
  }
  return t.outcome();
}

Outcome squared_three() {
  Guards g;
  g.max_grid = 1'000'000'000;
  const auto r = depth_via_radicals(power(tableau_ideal(kThreeExample), 2), {}, g);
  return {r.depth == 2, "depth " + std::to_string(r.depth) + " over " + std::to_string(r.cells_visited) + " cells, " +
                            std::to_string(r.distinct_radicals) + " distinct radicals"};
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else {
      std::fprintf(stderr, "usage: %s [--slow]\n", argv[0]);
      return 2;
    }
  }

  std::vector<Criterion> criteria{
      {"1", "introductory filling (2, 20)", kWorkedExampleSeconds, worked_intro},
      {"2", "four-row filling (3, 18) with witness", kWorkedExampleSeconds, worked_four_rows},
      {"3", "row reordering (27, 2) -> (25, 3)", kWorkedExampleSeconds, worked_reordering},
      {"4", "five-row filling depth 4", kWorkedExampleSeconds, worked_three},
      {"5", "powers of I_(2,1)", kPowersSeconds, powers},
      {"6", "recursion = collections = oracle", kEquivalenceSeconds, oracle_equivalence},
      {"7", "weakly increasing fillings", std::nullopt, weakly_increasing},
      {"8", "Cohen-Macaulay classification", std::nullopt, cohen_macaulay},
      {"9", "property suites", kPropertySeconds, property_suites},
      {"10", "Ferrers formulas vs oracle", kFerrersSeconds, ferrers_vs_oracle},
  };
  if (slow) criteria.push_back({"4b", "squared five-row filling depth 2 (slow)", std::nullopt, squared_three});

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = !c.limit || secs < *c.limit;
    const bool pass = o.ok && in_time;
    failed += !pass;
    char timing[64];
    if (c.limit)
      std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, *c.limit);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::printf("criterion %-2s %s  %s: %s [%s]%s\n", c.id.c_str(), pass ? "PASS" : "FAIL", c.title.c_str(),
                o.detail.c_str(), timing, in_time ? "" : " over time");
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
