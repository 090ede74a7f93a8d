// Copyright 2026 the divfrob authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divfrob/blocks.hpp"

namespace divfrob {

enum class BlockSel { Full, HasseWitt, Cartier, UpperRight, LowerLeft };
enum class Format { Text, Json, Csv };

std::string_view block_name(BlockSel b);
std::string_view format_name(Format f);
std::optional<BlockSel> parse_block(std::string_view s);
std::optional<Order> parse_order(std::string_view s);
std::optional<Format> parse_format(std::string_view s);
/// "on"/"off"/"true"/"false"/"1"/"0".
std::optional<bool> parse_switch(std::string_view s);

struct JobSpec {
  u64 p = 0;
  unsigned n = 0;
  std::vector<std::string> f;  // decimal integers, ascending degree
  BlockSel block = BlockSel::Full;
  Order order = Order::Filtration;
  Format format = Format::Text;
  bool checks = true;
  bool oracle = false;
  bool shift = false;  // apply shift_to_unit before validation
  unsigned threads = 0;
};

/// Splits "a,b,c" (whitespace tolerated) into integer tokens.
std::vector<std::string> split_coefficients(std::string_view list);

/// Reads a JobSpec from JSON text; unknown keys and malformed values throw
/// Error(ParseError).
JobSpec job_from_json(std::string_view text);

/// Throws Error(ParseError) on inconsistent combinations.
void check_job(const JobSpec& spec);

struct JobResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 1 parse error, 2 invalid curve, 3 failed internal check.
JobResult run(const JobSpec& spec);

/// Matrix as read back from text or json output.
struct ParsedOutput {
  u64 p = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<u64>> matrix;
};

std::optional<ParsedOutput> parse_text_output(std::string_view text);
std::optional<ParsedOutput> parse_json_output(std::string_view text);

struct BenchPoint {
  u64 p = 0;
  double seconds = 0.0;
};

/// Wall time of the Hasse-Witt block (f^a and the H1 columns) for each p.
std::vector<BenchPoint> bench_hw(unsigned n, const std::vector<std::string>& f,
                                 const std::vector<u64>& primes, unsigned repeats = 3);

}  // namespace divfrob
