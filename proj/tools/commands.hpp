#pragma once

#include <optional>
#include <string>

#include "periodlab/numeric.hpp"

namespace periodlab::cli {

enum ExitCode : int {
  ok = 0,
  parse_error = 2,
  shape_error = 3,
  oracle_disagreement = 4,
  resource_limit = 5,
};

struct Options {
  std::string command;  // analyze | realize | embed-check | layers
  std::string input;
  std::string into;     // embed-check target
  std::string target;   // realize target
  std::string format = "json";
  std::string output;   // artifact file for realize; report file otherwise
  u64 horizon = 0;      // 0: the command's default
  u64 seed = 20240601;
  std::optional<u64> oracle_cap;
  bool timing = true;
};

struct Result {
  int exit_code = ok;
  std::string out;  // stdout
  std::string err;  // stderr
};

// Flag, then PERIODLAB_ORACLE_CAP, then 20.
u64 resolve_oracle_cap(const std::optional<u64>& flag);

Result run(const Options& opts);

}  // namespace periodlab::cli
