#pragma once

// Command-line front end. run_cli is the whole program minus process
// plumbing, so tests drive it in-process.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "tabreg/field_rank.hpp"
#include "tabreg/formulas.hpp"
#include "tabreg/guards.hpp"
#include "tabreg/tableau.hpp"

namespace tabreg::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kGuardExceeded = 2, kDisagreement = 3 };

struct RunConfig {
  std::vector<Method> methods;
  FieldChoice field;
  Guards guards;
  bool json = false;
  bool cross_check = false;
  std::uint64_t seed = 1;
};

/// Comma-separated method names; "all" expands to every method, in enum order.
std::vector<Method> parse_methods(const std::string& text);

/// Random tableau with at most `rows` rows, first row at most `cols`, weights
/// in [1, max_weight].
Tableau random_tableau(std::mt19937_64& rng, int rows, int cols, Weight max_weight);

/// Greedy shrink of a failing instance: every weight toward 1 (first to 1,
/// then down by one), then drop the last row or the last column; repeated
/// until no step keeps `fails` true.
Tableau shrink(Tableau t, const std::function<bool(const Tableau&)>& fails);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tabreg::cli
