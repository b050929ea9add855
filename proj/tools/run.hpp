#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "document.hpp"

namespace fpush::cli {

enum ExitCode : int { kOk = 0, kError = 1, kUndecided = 2, kDiscrepancy = 3 };

struct Options {
  std::string document;
  std::string module;
  std::string target;  ///< summand: the module searched for Q
  std::uint64_t q = 0;
  int index = 0;
  int max_steps = 20;
  std::uint64_t seed = 1;
  int threads = 1;
  bool json = false;
  std::int64_t budget_ms = 0;
};

struct Report {
  std::string command;
  std::string status = "ok";  ///< ok | undecided | discrepancy
  json results = json::object();
  json discrepancies = json::array();
  std::vector<std::string> text;

  void discrepancy(const std::string& what, json expected, json computed);
  int exit_code() const;
};

/// Runs one subcommand; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The bundled regression over the worked examples.
Report example_suite(const Options& opts);

}  // namespace fpush::cli
