#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tabreg/betti.hpp"
#include "tabreg/errors.hpp"
#include "tabreg/monomial_ideal.hpp"
#include "tabreg/search.hpp"

namespace tabreg::cli {

using Json = nlohmann::ordered_json;

std::vector<Method> parse_methods(const std::string& text) {
  static const std::vector<Method> all{Method::Recursion, Method::Collections, Method::Oracle,
                                       Method::DegreeComplexSearch, Method::AssociatedRadicalSearch};
  if (text == "all") return all;
  std::vector<Method> out;
  std::stringstream ss(text);
  for (std::string name; std::getline(ss, name, ',');) {
    const auto it = std::find_if(all.begin(), all.end(), [&](Method m) { return method_name(m) == name; });
    if (it == all.end()) throw std::invalid_argument("unknown method '" + name + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  if (out.empty()) throw std::invalid_argument("no method given");
  return out;
}

Tableau random_tableau(std::mt19937_64& rng, int rows, int cols, Weight max_weight) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = uniform(1, rows);
  std::vector<std::vector<Weight>> out;
  int width = cols;
  for (int i = 0; i < n; ++i) {
    width = uniform(1, width);
    std::vector<Weight> row(static_cast<std::size_t>(width));
    for (auto& w : row) w = static_cast<Weight>(uniform(1, static_cast<int>(max_weight)));
    out.push_back(std::move(row));
  }
  return Tableau(std::move(out));
}

namespace {

std::optional<Tableau> drop_last_column(const Tableau& t) {
  if (t.boxes() <= 1) return std::nullopt;
  auto rows = t.rows();
  const std::size_t width = rows.front().size();
  for (auto& r : rows)
    if (r.size() == width) r.pop_back();
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau(std::move(rows));
}

std::optional<Tableau> drop_last_row(const Tableau& t) {
  if (t.row_count() <= 1) return std::nullopt;
  auto rows = t.rows();
  rows.pop_back();
  return Tableau(std::move(rows));
}

}  // namespace

Tableau shrink(Tableau t, const std::function<bool(const Tableau&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < t.rows().size(); ++i)
      for (std::size_t j = 0; j < t.rows()[i].size(); ++j)
        while (t.rows()[i][j] > 1) {
          bool moved = false;
          for (Weight target : {Weight{1}, t.rows()[i][j] - 1}) {
            auto rows = t.rows();
            rows[i][j] = target;
            Tableau candidate(std::move(rows));
            if (fails(candidate)) {
              t = std::move(candidate);
              moved = progress = true;
              break;
            }
          }
          if (!moved) break;
        }
    for (auto drop : {drop_last_row, drop_last_column}) {
      auto candidate = drop(t);
      if (candidate && fails(*candidate)) {
        t = std::move(*candidate);
        progress = true;
        break;
      }
    }
  }
  return t;
}

namespace {

// Extremal collections listed per statistic in reports.
constexpr std::size_t kListedExtremals = 32;

struct MethodResult {
  Method method = Method::Recursion;
  std::optional<int> depth;
  std::optional<long long> reg;
  Json witness = Json::object();
  std::string note;
  std::string error;
  bool guard_error = false;
  long long micros = 0;
};

Json marked_boxes(const AdmissibleCollection& c) {
  Json out = Json::array();
  for (const auto& b : c.boxes()) out.push_back({{"row", b.row}, {"col", b.col}, {"mark", std::string(1, mark_char(b.mark))}});
  return out;
}

std::string marked_text(const AdmissibleCollection& c) {
  std::ostringstream os;
  for (const auto& b : c.boxes()) os << (os.tellp() > 0 ? " " : "") << b;
  return os.str();
}

std::string face_text(FaceMask f, const VariableSet& vars) {
  std::string out = "{";
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (f >> v & 1) out += (out.size() > 1 ? "," : "") + vars.name(v);
  return out + "}";
}

void fill_from_report(MethodResult& r, const InvariantReport& rep) {
  r.depth = rep.depth;
  r.reg = rep.regularity;
  if (rep.depth_witness) r.witness["depth"] = marked_boxes(*rep.depth_witness);
  if (rep.reg_witness) r.witness["reg"] = marked_boxes(*rep.reg_witness);
  if (rep.depth_witness && rep.reg_witness)
    r.note = "depth witness " + marked_text(*rep.depth_witness) + "; reg witness " + marked_text(*rep.reg_witness);
}

MethodResult run_method(Method m, const Tableau& t, const RunConfig& cfg) {
  MethodResult r;
  r.method = m;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (m) {
      case Method::Recursion:
        fill_from_report(r, invariants_via_recursion(t));
        break;
      case Method::Collections: {
        const auto rep = extremes_via_collections(t, cfg.guards);
        fill_from_report(r, rep);
        Json depth_all = Json::array();
        Json reg_all = Json::array();
        std::size_t depth_count = 0;
        std::size_t reg_count = 0;
        for_each_admissible_collection(t, cfg.guards, [&](const AdmissibleCollection& c) {
          if (c.depth_statistic() == rep.depth && depth_count++ < kListedExtremals) depth_all.push_back(marked_boxes(c));
          if (c.regularity_statistic() == rep.regularity && reg_count++ < kListedExtremals)
            reg_all.push_back(marked_boxes(c));
          return true;
        });
        r.witness["depth_extremals"] = std::move(depth_all);
        r.witness["reg_extremals"] = std::move(reg_all);
        r.witness["extremal_counts"] = {{"depth", depth_count}, {"reg", reg_count}};
        r.note += "\n  " + std::to_string(depth_count) + " depth-extremal and " + std::to_string(reg_count) +
                  " reg-extremal collections";
        break;
      }
      case Method::Oracle: {
        const auto o = oracle_invariants(tableau_ideal(t), cfg.field, cfg.guards, cfg.cross_check);
        r.depth = o.depth;
        r.reg = o.regularity;
        r.witness["pd"] = o.projective_dimension;
        r.witness["route"] = o.route;
        if (o.routes_agree) r.witness["routes_agree"] = *o.routes_agree;
        r.note = "pd " + std::to_string(o.projective_dimension) + ", route " + o.route;
        break;
      }
      case Method::DegreeComplexSearch: {
        const auto ideal = tableau_ideal(t);
        const auto s = reg_via_degree_complexes(ideal, cfg.field, cfg.guards);
        r.reg = s.regularity;
        const auto a = to_text(s.witness.exponent, ideal.variables());
        const auto face = face_text(s.witness.face, ideal.variables());
        r.witness["exponent"] = a;
        r.witness["index"] = s.witness.index;
        r.witness["face"] = face;
        r.note = "a = " + a + ", i = " + std::to_string(s.witness.index) + ", F = " + face;
        break;
      }
      case Method::AssociatedRadicalSearch: {
        const auto s = depth_via_associated_radicals(t, cfg.guards);
        r.depth = s.depth;
        const auto a = to_text(s.exponent, VariableSet::bipartite(t.row_count(), t.column_count()));
        r.witness["exponent"] = a;
        r.note = "a = " + a;
        break;
      }
    }
  } catch (const GuardExceeded& e) {
    r.error = e.what();
    r.guard_error = true;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string verdict(const std::vector<MethodResult>& results) {
  std::optional<int> depth;
  std::optional<long long> reg;
  int computed = 0;
  bool agree = true;
  for (const auto& r : results) {
    if (!r.error.empty()) continue;
    ++computed;
    if (r.depth) {
      if (depth && *depth != *r.depth) agree = false;
      depth = r.depth;
    }
    if (r.reg) {
      if (reg && *reg != *r.reg) agree = false;
      reg = r.reg;
    }
  }
  if (computed < 2) return "single";
  return agree ? "agree" : "disagree";
}

std::vector<MethodResult> run_all(const Tableau& t, const RunConfig& cfg) {
  check_guard("max_boxes", static_cast<std::size_t>(t.boxes()), cfg.guards.max_boxes);
  std::vector<MethodResult> results;
  for (Method m : cfg.methods) results.push_back(run_method(m, t, cfg));
  return results;
}

Json tableau_json(const Tableau& t) {
  Json minimal = Json::array();
  for (const auto& b : minimal_boxes(t)) {
    const auto o = t.original(b, Mark::Row);
    minimal.push_back({{"row", o.row}, {"col", o.col}});
  }
  return {{"shape", t.shape().parts()}, {"weights", t.rows()}, {"omega", t.min_weight()}, {"minimal_boxes", minimal}};
}

int cmd_compute(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  const Tableau t = read_tableau_file(path);
  if (t.empty()) throw ParseError("tableau has no rows", 0, 0);
  const auto results = run_all(t, cfg);
  const auto v = verdict(results);
  bool guard_hit = false;
  bool failed = false;
  for (const auto& r : results) {
    guard_hit |= r.guard_error;
    failed |= !r.error.empty() && !r.guard_error;
  }

  if (cfg.json) {
    Json doc = tableau_json(t);
    Json methods = Json::object();
    for (const auto& r : results) {
      Json m = Json::object();
      if (!r.error.empty()) {
        m["error"] = r.error;
      } else {
        m["depth"] = r.depth ? Json(*r.depth) : Json(nullptr);
        m["reg"] = r.reg ? Json(*r.reg) : Json(nullptr);
        m["witness"] = r.witness;
      }
      m["micros"] = r.micros;
      methods[method_name(r.method)] = std::move(m);
    }
    doc["methods"] = std::move(methods);
    doc["verdict"] = v;
    out << doc.dump(2) << '\n';
  } else {
    out << "shape: " << to_string(t.shape()) << '\n' << "omega: " << t.min_weight() << '\n' << "minimal boxes:";
    for (const auto& b : minimal_boxes(t)) out << " (" << b.row << ',' << b.col << ')';
    out << '\n';
    for (const auto& r : results) {
      out << method_name(r.method) << ": ";
      if (!r.error.empty()) {
        out << "error: " << r.error << '\n';
        continue;
      }
      if (r.depth) out << "depth " << *r.depth << (r.reg ? ", " : "");
      if (r.reg) out << "reg " << *r.reg;
      out << " [" << r.micros << " us]\n";
      if (!r.note.empty()) out << "  " << r.note << '\n';
    }
    out << "verdict: " << v << '\n';
  }
  if (failed) return kInputError;
  if (guard_hit) return kGuardExceeded;
  return v == "disagree" ? kDisagreement : kOk;
}

int cmd_ferrers(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  const Partition p = parse_partition(text);
  if (p.empty()) throw ParseError("partition has no parts", 0, 0);
  const auto f = ferrers_invariants(p);
  if (cfg.json) {
    Json doc{{"partition", p.parts()},     {"height", f.height},       {"projective_dimension", f.projective_dimension},
             {"depth", f.depth},           {"regularity", f.regularity}, {"dimension", f.dimension},
             {"cohen_macaulay", f.is_cohen_macaulay}, {"alpha", f.alpha}};
    out << doc.dump(2) << '\n';
  } else {
    out << "partition: " << to_string(p) << '\n'
        << "height: " << f.height << '\n'
        << "pd: " << f.projective_dimension << '\n'
        << "depth: " << f.depth << '\n'
        << "reg: " << f.regularity << '\n'
        << "dim: " << f.dimension << '\n'
        << "cohen-macaulay: " << (f.is_cohen_macaulay ? "true" : "false") << '\n'
        << "alpha: " << f.alpha << '\n';
  }
  return kOk;
}

struct RandomBounds {
  int count = 50;
  int rows = 3;
  int cols = 3;
  int max_weight = 3;
};

int cmd_random_check(const RandomBounds& b, const RunConfig& cfg, std::ostream& out) {
  if (b.count < 0) throw std::invalid_argument("count must be nonnegative");
  check_guard("max_boxes", static_cast<std::size_t>(b.rows) * static_cast<std::size_t>(b.cols), cfg.guards.max_boxes);
  std::mt19937_64 rng(cfg.seed);
  auto disagrees = [&](const Tableau& t) {
    const auto results = run_all(t, cfg);
    for (const auto& r : results)
      if (r.guard_error) throw GuardExceeded("random_check", 0, 0, r.error);
    return verdict(results) == "disagree";
  };
  for (int k = 0; k < b.count; ++k) {
    const Tableau t = random_tableau(rng, b.rows, b.cols, static_cast<Weight>(b.max_weight));
    if (!disagrees(t)) continue;
    const Tableau small = shrink(t, disagrees);
    if (cfg.json) {
      const Json doc{{"instances", k + 1}, {"verdict", "disagree"}, {"original", t.rows()}, {"shrunk", small.rows()}};
      out << doc.dump(2) << '\n';
    } else {
      out << "disagreement at instance " << k + 1 << ": " << t << "\nshrunk to: " << small << '\n';
    }
    return kDisagreement;
  }
  if (cfg.json)
    out << Json{{"instances", b.count}, {"verdict", "agree"}}.dump(2) << '\n';
  else
    out << b.count << " instances agree\n";
  return kOk;
}

int cmd_betti(const std::string& path, unsigned power_t, const RunConfig& cfg, std::ostream& out) {
  const Tableau t = read_tableau_file(path);
  check_guard("max_boxes", static_cast<std::size_t>(t.boxes()), cfg.guards.max_boxes);
  const auto ideal = power(tableau_ideal(t), power_t);
  const auto o = oracle_invariants(ideal, cfg.field, cfg.guards, cfg.cross_check);
  if (cfg.json) {
    Json entries = Json::array();
    for (const auto& [key, rank] : o.table.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
    Json doc{{"variables", o.table.variables()}, {"generators", ideal.generators().size()}, {"route", o.route},
             {"betti", entries}, {"pd", o.projective_dimension}, {"depth", o.depth}, {"reg", o.regularity}};
    if (o.routes_agree) doc["routes_agree"] = *o.routes_agree;
    out << doc.dump(2) << '\n';
  } else {
    out << o.table.to_text() << "pd: " << o.projective_dimension << '\n'
        << "depth: " << o.depth << '\n'
        << "reg: " << o.regularity << '\n'
        << "route: " << o.route << '\n';
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depth and regularity of tableau ideals", "tabreg"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string method = "recursion";
  std::string field = "2";
  std::string path;
  std::string partition;
  unsigned power_t = 1;
  RandomBounds bounds;
  std::string random_method = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "Coefficient field: 2, 3, another prime, or q")->capture_default_str();
    sub->add_flag("--json", cfg.json, "Emit JSON");
    sub->add_flag("--cross-check", cfg.cross_check, "Run both Betti routes when both fit");
    auto guard = [&](const char* name, std::size_t& slot, const char* what) {
      sub->add_option(name, slot, what)->check(CLI::PositiveNumber)->capture_default_str();
    };
    guard("--guard-boxes", cfg.guards.max_boxes, "Maximum boxes");
    guard("--guard-collections", cfg.guards.max_collections, "Maximum admissible collections");
    guard("--guard-lattice", cfg.guards.max_lattice, "Maximum lcm lattice size");
    guard("--guard-generators", cfg.guards.max_lcm_generators, "Maximum generators for the lcm route");
    guard("--guard-hochster-vars", cfg.guards.max_hochster_vars, "Maximum variables for Hochster's formula");
    guard("--guard-ground-set", cfg.guards.max_ground_set, "Maximum ground set of a complex");
    guard("--guard-grid", cfg.guards.max_grid, "Maximum exponent grid cells");
    guard("--guard-faces", cfg.guards.max_faces, "Maximum faces of a complex");
  };

  auto* compute = app.add_subcommand("compute", "Depth and regularity of a tableau file");
  compute->add_option("file", path, "Tableau file")->required();
  compute->add_option("--method", method, "recursion|collections|oracle|degree-complex|associated-radical|all, or a comma list")
      ->capture_default_str();
  add_common(compute);

  auto* ferrers = app.add_subcommand("ferrers", "Closed-form invariants of a Ferrers ideal");
  ferrers->add_option("partition", partition, "Parts, e.g. 4,4,3,2,1")->required();
  ferrers->add_flag("--json", cfg.json, "Emit JSON");

  auto* random = app.add_subcommand("random-check", "Cross-check methods on seeded random tableaux");
  random->add_option("--count", bounds.count, "Number of instances")->capture_default_str();
  random->add_option("--rows", bounds.rows, "Maximum rows")->check(CLI::PositiveNumber)->capture_default_str();
  random->add_option("--cols", bounds.cols, "Maximum first-row length")->check(CLI::PositiveNumber)->capture_default_str();
  random->add_option("--max-weight", bounds.max_weight, "Maximum weight")
      ->check(CLI::Range(1, static_cast<int>(kMaxWeight)))
      ->capture_default_str();
  random->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  random->add_option("--method", random_method, "Methods to compare")->capture_default_str();
  add_common(random);

  auto* betti = app.add_subcommand("betti", "Graded Betti table of a tableau ideal or its power");
  betti->add_option("file", path, "Tableau file")->required();
  betti->add_option("--power", power_t, "Exponent t of I(Y)^t")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(betti);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    cfg.field = FieldChoice::parse(field);
    if (compute->parsed()) {
      cfg.methods = parse_methods(method);
      return cmd_compute(path, cfg, out);
    }
    if (ferrers->parsed()) return cmd_ferrers(partition, cfg, out);
    if (random->parsed()) {
      cfg.methods = parse_methods(random_method);
      return cmd_random_check(bounds, cfg, out);
    }
    return cmd_betti(path, power_t, cfg, out);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace tabreg::cli
