#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "knotalg/json_io.hpp"
#include "knotalg/scalar.hpp"

namespace knotalg::cli {

struct Options {
  std::string command;
  std::string ring = "z";
  std::string eta = "+1";
  std::string in;
  std::string out;
  std::string format = "json";
  std::string knot;
  std::uint64_t seed = 0;
  int count = 10;
  int max_rank = 4;
  long degree_cap = 512;
};

struct Output {
  io::json body;
  std::string text;
  int exit_code = 0;
};

/// Runs one subcommand; throws knotalg::Error on failure.
Output run(const Options& opt);

}  // namespace knotalg::cli
