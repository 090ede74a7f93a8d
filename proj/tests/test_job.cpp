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
#include <string>

#include "divfrob/job.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace divfrob;

namespace {

JobSpec quintic(u64 p)
{
  JobSpec s;
  s.p = p;
  s.n = 3;
  s.f = split_coefficients("-120,274,-225,85,-15,1");
  return s;
}

JobSpec septic()
{
  JobSpec s;
  s.p = 13;
  s.n = 4;
  s.f = split_coefficients("-5040, 13068, -13132, 6769, -1960, 322, -28, 1");
  return s;
}

std::vector<std::vector<u64>> as_u64(const fixtures::Matrix& m) { return {m.begin(), m.end()}; }

}  // namespace

TEST_CASE("option parsing helpers")
{
  CHECK(parse_block("upper-right") == BlockSel::UpperRight);
  CHECK(parse_block("hw") == BlockSel::HasseWitt);
  CHECK_FALSE(parse_block("diag").has_value());
  CHECK(parse_order("isotypic") == Order::Isotypic);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_switch("off") == false);
  CHECK(parse_switch("on") == true);
  CHECK_FALSE(parse_switch("maybe").has_value());
  const auto toks = split_coefficients(" -120, 274 ,-225");
  CHECK(toks == std::vector<std::string>{"-120", "274", "-225"});
}

TEST_CASE("run reproduces the reference p = 17 matrix")
{
  const auto res = run(quintic(17));
  CHECK(res.exit_code == 0);
  const auto parsed = parse_text_output(res.out);
  REQUIRE(parsed.has_value());
  CHECK(parsed->p == 17);
  CHECK(parsed->matrix == as_u64(fixtures::kFilt17));
  CHECK(parsed->col_labels.front() == "y^-1*dt");
  CHECK(parsed->col_labels.back() == "t^-3*y^2");
  CHECK(res.out.find("l 5\nr 2\ng 4\n") != std::string::npos);
  CHECK(res.out.find("fail") == std::string::npos);
  CHECK(res.out.find("det_hw 0\n") != std::string::npos);
}

TEST_CASE("isotypic order for the septic")
{
  auto s = septic();
  s.order = Order::Isotypic;
  const auto res = run(s);
  CHECK(res.exit_code == 0);
  const auto parsed = parse_text_output(res.out);
  REQUIRE(parsed.has_value());
  CHECK(parsed->matrix == as_u64(fixtures::kIso13));
}

TEST_CASE("oracle check is reported")
{
  auto s = quintic(31);
  s.oracle = true;
  const auto res = run(s);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("check oracle_equal pass") != std::string::npos);
  CHECK(res.out.find("det_hw 8\n") != std::string::npos);
}

TEST_CASE("blocks are submatrices of the full matrix")
{
  const auto full = parse_text_output(run(quintic(41)).out);
  REQUIRE(full.has_value());
  const std::size_t g = 4;
  const std::pair<BlockSel, std::pair<std::size_t, std::size_t>> cases[] = {
      {BlockSel::Cartier, {0, 0}},
      {BlockSel::UpperRight, {0, g}},
      {BlockSel::LowerLeft, {g, 0}},
      {BlockSel::HasseWitt, {g, g}}};
  for (const auto& [blk, off] : cases) {
    auto s = quintic(41);
    s.block = blk;
    const auto out = parse_text_output(run(s).out);
    REQUIRE(out.has_value());
    REQUIRE(out->matrix.size() == g);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b) CHECK(out->matrix[a][b] == full->matrix[off.first + a][off.second + b]);
    CHECK(out->row_labels[0] == full->row_labels[off.first]);
    CHECK(out->col_labels[0] == full->col_labels[off.second]);
  }
}

TEST_CASE("json output round-trips byte for byte")
{
  for (auto s : {quintic(17), septic()}) {
    s.format = Format::Json;
    const auto res = run(s);
    REQUIRE(res.exit_code == 0);
    CHECK(nlohmann::json::parse(res.out).dump(2) + "\n" == res.out);
    const auto doc = nlohmann::json::parse(res.out);
    for (const char* key : {"p", "n", "f", "l", "r", "g", "order", "basis", "matrix", "checks", "det_hw",
                            "det_full_nonzero"})
      CHECK(doc.contains(key));
    for (const auto& row : doc["matrix"])
      for (const auto& x : row) CHECK(x.is_number_unsigned());
  }
}

TEST_CASE("text and json encode the same matrix")
{
  for (auto s : {quintic(31), septic()}) {
    const auto text = parse_text_output(run(s).out);
    s.format = Format::Json;
    const auto json = parse_json_output(run(s).out);
    REQUIRE(text.has_value());
    REQUIRE(json.has_value());
    CHECK(text->p == json->p);
    CHECK(text->matrix == json->matrix);
    CHECK(text->row_labels == json->row_labels);
    CHECK(text->col_labels == json->col_labels);
  }
}

TEST_CASE("csv carries only the matrix")
{
  auto s = quintic(17);
  s.format = Format::Csv;
  s.block = BlockSel::HasseWitt;
  const auto res = run(s);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0,10,8,0\n0,0,0,0\n13,0,0,0\n10,0,0,0\n");
}

TEST_CASE("invalid curves exit with status 2")
{
  JobSpec s;
  s.p = 5;
  s.n = 2;
  s.f = {"0", "1"};
  auto res = run(s);
  CHECK(res.exit_code == 2);
  CHECK(res.out.empty());
  CHECK(res.err.find("RootAtZero") != std::string::npos);
  CHECK(res.err.find("--shift") != std::string::npos);

  s.f = {"1", "1", "1"};
  res = run(s);
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("BadDegreeResidue") != std::string::npos);

  auto q = quintic(15);
  res = run(q);
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("NotPrime") != std::string::npos);

  q = quintic(3);
  res = run(q);
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("NNotCoprimeToP") != std::string::npos);
}

TEST_CASE("shift makes a curve with a root at zero usable")
{
  JobSpec s;
  s.p = 17;
  s.n = 3;
  s.f = split_coefficients("0,-24,50,-35,10,-1");  // -t(t-1)(t-2)(t-3)(t-4)
  CHECK(run(s).exit_code == 2);
  s.shift = true;
  const auto res = run(s);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("shift 5\n") != std::string::npos);
}

TEST_CASE("parse errors exit with status 1")
{
  auto s = quintic(17);
  s.f = {"12x"};
  CHECK(run(s).exit_code == 1);
  s = quintic(17);
  s.order = Order::Isotypic;
  s.block = BlockSel::HasseWitt;
  CHECK(run(s).exit_code == 1);
  CHECK_THROWS_AS(check_job(s), Error);
}

TEST_CASE("job_from_json")
{
  const auto s = job_from_json(
      R"({"p": 13, "n": 4, "f": [-5040, 13068, -13132, 6769, -1960, 322, -28, 1], "order": "isotypic",)"
      R"( "format": "json", "checks": "off", "oracle": "on"})");
  CHECK(s.p == 13);
  CHECK(s.n == 4);
  CHECK(s.f.size() == 8);
  CHECK(s.f[0] == "-5040");
  CHECK(s.order == Order::Isotypic);
  CHECK(s.format == Format::Json);
  CHECK_FALSE(s.checks);
  CHECK(s.oracle);

  const auto big = job_from_json(R"({"p": 17, "n": 3, "f": "-120, 274, -225, 85, -15, 1"})");
  CHECK(big.f.size() == 6);

  auto code_of = [](std::string_view text) {
    try {
      job_from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::OracleMismatch;
  };
  CHECK(code_of(R"({"p": 17, "n": 3, "f": [1], "colour": "red"})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"p": 17, "n": 3, "f": [1], "block": "diag"})") == ErrorCode::ParseError);
  CHECK(code_of("{not json") == ErrorCode::ParseError);
  CHECK(code_of(R"({"p": "seventeen", "n": 3, "f": [1]})") == ErrorCode::ParseError);
}

TEST_CASE("large coefficients are reduced mod p^2")
{
  const auto a = quintic(17);
  auto b = quintic(17);
  // add 289 * 10^40 to two coefficients
  b.f[0] = "-289" + std::string(37, '0') + "120";
  b.f[1] = "289" + std::string(37, '0') + "274";
  CHECK(run(b).exit_code == 0);
  CHECK(run(a).out == run(b).out);
}
