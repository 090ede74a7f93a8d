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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "divfrob/job.hpp"
#include "divfrob/kernels.hpp"

namespace {

int usage_error(const std::string& msg)
{
  std::cerr << "error: ParseError: " << msg << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv)
{
  using namespace divfrob;

  CLI::App app{"Divided Frobenius matrix of y^n = f(t) over F_p"};
  app.set_version_flag("--version", "divfrob 0.1.0");

  u64 p = 0;
  unsigned n = 0;
  std::string f_list, block = "full", order = "filtration", format = "text";
  std::string checks = "on", oracle = "off", spec_file, bench_primes = "101,211,401";
  std::string isa;
  unsigned threads = 0;
  bool bench = false, shift = false;

  app.add_option("--p", p, "prime modulus (p^2 < 2^64)");
  app.add_option("--n", n, "exponent of y");
  app.add_option("--f", f_list, "coefficients of f, ascending degree, comma separated");
  app.add_option("--block", block, "full | hw | cartier | upper-right | lower-left");
  app.add_option("--order", order, "filtration | isotypic");
  app.add_option("--format", format, "text | json | csv");
  app.add_option("--checks", checks, "on | off");
  app.add_option("--oracle", oracle, "on | off (compare with the structural computation)");
  app.add_option("--spec", spec_file, "JSON job file; command-line flags override it");
  app.add_option("--threads", threads, "worker threads (0: all cores)");
  app.add_option("--isa", isa, "force kernel: scalar | avx2");
  app.add_flag("--shift", shift, "translate t so that f(0) != 0 mod p");
  app.add_flag("--bench", bench, "time the Hasse-Witt block over a sweep of primes");
  app.add_option("--bench-primes", bench_primes, "primes for --bench");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (!isa.empty()) {
    if (isa == "scalar") {
      kernels::set_active_isa(kernels::Isa::Scalar);
    } else if (isa == "avx2") {
      if (!kernels::set_active_isa(kernels::Isa::Avx2)) return usage_error("avx2 is not available");
    } else {
      return usage_error("unknown --isa '" + isa + "'");
    }
  }

  JobSpec spec;
  try {
    if (!spec_file.empty()) {
      std::ifstream in(spec_file);
      if (!in) return usage_error("cannot read " + spec_file);
      std::stringstream buf;
      buf << in.rdbuf();
      spec = job_from_json(buf.str());
    }
    if (app.count("--p")) spec.p = p;
    if (app.count("--n")) spec.n = n;
    if (app.count("--f")) spec.f = split_coefficients(f_list);
    if (app.count("--threads")) spec.threads = threads;
    if (shift) spec.shift = true;
    if (app.count("--block") || spec_file.empty()) {
      auto b = parse_block(block);
      if (!b) return usage_error("unknown --block '" + block + "'");
      spec.block = *b;
    }
    if (app.count("--order") || spec_file.empty()) {
      auto o = parse_order(order);
      if (!o) return usage_error("unknown --order '" + order + "'");
      spec.order = *o;
    }
    if (app.count("--format") || spec_file.empty()) {
      auto fm = parse_format(format);
      if (!fm) return usage_error("unknown --format '" + format + "'");
      spec.format = *fm;
    }
    if (app.count("--checks") || spec_file.empty()) {
      auto c = parse_switch(checks);
      if (!c) return usage_error("--checks expects on or off");
      spec.checks = *c;
    }
    if (app.count("--oracle") || spec_file.empty()) {
      auto o = parse_switch(oracle);
      if (!o) return usage_error("--oracle expects on or off");
      spec.oracle = *o;
    }

    if (bench) {
      const unsigned bn = spec.n ? spec.n : 3;
      const std::vector<std::string> bf =
          spec.f.empty() ? std::vector<std::string>{"-120", "274", "-225", "85", "-15", "1"} : spec.f;
      std::vector<u64> primes;
      for (const auto& s : split_coefficients(bench_primes)) primes.push_back(std::stoull(s));
      const auto pts = bench_hw(bn, bf, primes);
      std::cout << "p seconds ratio\n";
      for (std::size_t k = 0; k < pts.size(); ++k) {
        std::cout << pts[k].p << ' ' << pts[k].seconds;
        if (k > 0 && pts[k - 1].seconds > 0) std::cout << ' ' << pts[k].seconds / pts[k - 1].seconds;
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? 1 : (is_validation_error(e.code()) ? 2 : 3);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  const JobResult res = run(spec);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
