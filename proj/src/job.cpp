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
#include "divfrob/job.hpp"

#include <chrono>
#include <sstream>

#include "divfrob/oracle.hpp"
#include "json.hpp"

namespace divfrob {

using nlohmann::json;

std::string_view block_name(BlockSel b)
{
  switch (b) {
    case BlockSel::Full: return "full";
    case BlockSel::HasseWitt: return "hw";
    case BlockSel::Cartier: return "cartier";
    case BlockSel::UpperRight: return "upper-right";
    case BlockSel::LowerLeft: return "lower-left";
  }
  return "full";
}

std::string_view format_name(Format f)
{
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "text";
}

std::optional<BlockSel> parse_block(std::string_view s)
{
  for (BlockSel b : {BlockSel::Full, BlockSel::HasseWitt, BlockSel::Cartier, BlockSel::UpperRight,
                     BlockSel::LowerLeft})
    if (s == block_name(b)) return b;
  return std::nullopt;
}

std::optional<Order> parse_order(std::string_view s)
{
  if (s == "filtration") return Order::Filtration;
  if (s == "isotypic") return Order::Isotypic;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view s)
{
  for (Format f : {Format::Text, Format::Json, Format::Csv})
    if (s == format_name(f)) return f;
  return std::nullopt;
}

std::optional<bool> parse_switch(std::string_view s)
{
  if (s == "on" || s == "true" || s == "1") return true;
  if (s == "off" || s == "false" || s == "0") return false;
  return std::nullopt;
}

std::vector<std::string> split_coefficients(std::string_view list)
{
  std::vector<std::string> out;
  std::string cur;
  bool any = false;
  auto flush = [&] {
    if (cur.empty()) throw Error(ErrorCode::ParseError, "empty coefficient in list");
    out.push_back(cur);
    cur.clear();
  };
  for (char ch : list) {
    if (ch == ' ' || ch == '\t' || ch == '\n') continue;
    any = true;
    if (ch == ',') {
      flush();
    } else if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
      cur += ch;
    } else {
      throw Error(ErrorCode::ParseError, std::string("unexpected character '") + ch + "' in coefficients");
    }
  }
  if (!any) throw Error(ErrorCode::ParseError, "coefficient list is empty");
  flush();
  return out;
}

JobSpec job_from_json(std::string_view text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("spec file: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "spec file must hold a JSON object");

  JobSpec spec;
  auto bad = [](const std::string& key) {
    return Error(ErrorCode::ParseError, "spec file: bad value for '" + key + "'");
  };
  auto text_or_bool = [&](const json& v, const std::string& key) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_string()) {
      if (auto b = parse_switch(v.get<std::string>())) return *b;
    }
    throw bad(key);
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "p") {
      if (!v.is_number_unsigned()) throw bad(key);
      spec.p = v.get<u64>();
    } else if (key == "n") {
      if (!v.is_number_unsigned() || v.get<u64>() > 1'000'000) throw bad(key);
      spec.n = v.get<unsigned>();
    } else if (key == "f") {
      if (v.is_string()) {
        spec.f = split_coefficients(v.get<std::string>());
        continue;
      }
      if (!v.is_array() || v.empty()) throw bad(key);
      for (const auto& c : v) {
        if (c.is_number_integer()) {
          spec.f.push_back(c.dump());
        } else if (c.is_string()) {
          auto parts = split_coefficients(c.get<std::string>());
          if (parts.size() != 1) throw bad(key);
          spec.f.push_back(parts[0]);
        } else {
          throw bad(key);
        }
      }
    } else if (key == "block") {
      auto b = v.is_string() ? parse_block(v.get<std::string>()) : std::nullopt;
      if (!b) throw bad(key);
      spec.block = *b;
    } else if (key == "order") {
      auto o = v.is_string() ? parse_order(v.get<std::string>()) : std::nullopt;
      if (!o) throw bad(key);
      spec.order = *o;
    } else if (key == "format") {
      auto f = v.is_string() ? parse_format(v.get<std::string>()) : std::nullopt;
      if (!f) throw bad(key);
      spec.format = *f;
    } else if (key == "checks") {
      spec.checks = text_or_bool(v, key);
    } else if (key == "oracle") {
      spec.oracle = text_or_bool(v, key);
    } else if (key == "shift") {
      spec.shift = text_or_bool(v, key);
    } else if (key == "threads") {
      if (!v.is_number_unsigned()) throw bad(key);
      spec.threads = v.get<unsigned>();
    } else {
      throw Error(ErrorCode::ParseError, "spec file: unknown key '" + key + "'");
    }
  }
  return spec;
}

void check_job(const JobSpec& spec)
{
  if (spec.p == 0) throw Error(ErrorCode::ParseError, "missing p");
  if (spec.n == 0) throw Error(ErrorCode::ParseError, "missing n");
  if (spec.f.empty()) throw Error(ErrorCode::ParseError, "missing f");
  if (spec.order == Order::Isotypic && spec.block != BlockSel::Full) {
    throw Error(ErrorCode::ParseError, "isotypic order applies to the full matrix only");
  }
}

namespace {

struct Emitted {
  std::vector<BasisElement> rows;
  std::vector<BasisElement> cols;
  std::vector<std::vector<u64>> rows_data;
};

Emitted select_block(const DividedFrobeniusMatrix& mat, BlockSel block)
{
  Emitted e;
  const std::size_t g = mat.curve.g;
  std::size_t r0 = 0, c0 = 0, len = mat.labels.size();
  switch (block) {
    case BlockSel::Full: break;
    case BlockSel::Cartier: len = g; break;
    case BlockSel::UpperRight: len = g; c0 = g; break;
    case BlockSel::LowerLeft: len = g; r0 = g; break;
    case BlockSel::HasseWitt: len = g; r0 = g; c0 = g; break;
  }
  for (std::size_t k = 0; k < len; ++k) {
    e.rows.push_back(mat.labels[r0 + k]);
    e.cols.push_back(mat.labels[c0 + k]);
    std::vector<u64> row;
    for (std::size_t c = 0; c < len; ++c) row.push_back(mat.m.at(r0 + k, c0 + c));
    e.rows_data.push_back(std::move(row));
  }
  return e;
}

std::vector<std::string> labels_of(const std::vector<BasisElement>& v)
{
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(basis_label(e));
  return out;
}

}  // namespace

JobResult run(const JobSpec& spec)
{
  JobResult res;
  std::ostringstream out;
  try {
    check_job(spec);
    CurveParams params = CurveParams::from_decimal(spec.p, spec.n, spec.f);
    std::optional<u64> shift;
    if (spec.shift) {
      ShiftResult s = shift_to_unit(params.p, params.f);
      shift = s.u;
      params.f = s.shifted;
    }
    const DerivedParams d = validate(params);
    const FrobeniusLift lift = compute_lift(d);

    AssembleOptions aopts;
    aopts.threads = spec.threads;
    aopts.require_invertible = false;
    const DividedFrobeniusMatrix filt = assemble(d, lift, Order::Filtration, aopts);
    const bool det_nonzero = det_mod_p(filt.m) != 0;
    const u64 det_hw = det_mod_p(quadrant(filt, Quadrant::HasseWitt));

    std::vector<std::pair<std::string, bool>> checks;
    if (spec.checks) {
      const LiftReport rep = check_lift(d, lift);
      checks.emplace_back("det_nonzero", det_nonzero);
      checks.emplace_back("lift_divisibility", rep.divisibility);
      checks.emplace_back("lift_fu", rep.fu_consistency);
      checks.emplace_back("lift_relation", rep.relation);
      checks.emplace_back("support", support_ok(filt));
      if (spec.oracle) {
        oracle::StructuralOptions sopts;
        sopts.threads = spec.threads;
        bool same = false;
        try {
          same = oracle::structural_phi(d, lift, sopts).m == filt.m;
        } catch (const Error& e) {
          res.err += std::string("oracle: ") + e.what() + "\n";
        }
        checks.emplace_back("oracle_equal", same);
      }
    } else if (!det_nonzero) {
      throw Error(ErrorCode::SingularMatrix, "assembled matrix is singular mod p");
    }

    const DividedFrobeniusMatrix shown = reorder(filt, spec.order);
    const Emitted em = select_block(shown, spec.block);
    std::vector<std::string> fres;
    for (u64 c : d.f.coeffs()) fres.push_back(std::to_string(c));

    switch (spec.format) {
      case Format::Json: {
        json j;
        j["p"] = d.p;
        j["n"] = d.n;
        j["f"] = d.f.coeffs();
        j["l"] = d.l;
        j["r"] = d.r;
        j["g"] = d.g;
        j["order"] = std::string(order_name(spec.order));
        j["block"] = std::string(block_name(spec.block));
        j["basis"] = labels_of(em.cols);
        j["row_basis"] = labels_of(em.rows);
        j["matrix"] = em.rows_data;
        j["checks"] = json::object();
        for (const auto& [name, ok] : checks) j["checks"][name] = ok;
        j["det_hw"] = det_hw;
        j["det_full_nonzero"] = det_nonzero;
        if (shift) j["shift"] = *shift;
        out << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        for (const auto& row : em.rows_data) {
          for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
          out << '\n';
        }
        break;
      case Format::Text: {
        out << "p " << d.p << "\nn " << d.n << "\nf";
        for (const auto& c : fres) out << ' ' << c;
        out << "\nl " << d.l << "\nr " << d.r << "\ng " << d.g;
        if (shift) out << "\nshift " << *shift;
        out << "\norder " << order_name(spec.order) << "\nblock " << block_name(spec.block);
        out << "\nrows";
        for (const auto& s : labels_of(em.rows)) out << ' ' << s;
        out << "\ncols";
        for (const auto& s : labels_of(em.cols)) out << ' ' << s;
        out << "\nmatrix " << em.rows_data.size() << ' ' << em.cols.size() << '\n';
        for (const auto& row : em.rows_data) {
          for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
          out << '\n';
        }
        for (const auto& [name, ok] : checks) out << "check " << name << ' ' << (ok ? "pass" : "fail") << '\n';
        out << "det_hw " << det_hw << "\ndet_full_nonzero " << (det_nonzero ? "true" : "false") << '\n';
        break;
      }
    }
    res.out = out.str();
    for (const auto& [name, ok] : checks) {
      if (!ok) {
        res.err += "check failed: " + name + "\n";
        res.exit_code = 3;
      }
    }
  } catch (const Error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    if (!e.hint().empty()) res.err += "hint: " + e.hint() + "\n";
    if (e.code() == ErrorCode::ParseError) {
      res.exit_code = 1;
    } else if (is_validation_error(e.code())) {
      res.exit_code = 2;
    } else {
      res.exit_code = 3;
    }
  }
  return res;
}

std::optional<ParsedOutput> parse_text_output(std::string_view text)
{
  ParsedOutput po;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t want_rows = 0, want_cols = 0;
  bool have_matrix = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "p") {
      ls >> po.p;
    } else if (key == "rows" || key == "cols") {
      auto& dst = key == "rows" ? po.row_labels : po.col_labels;
      for (std::string s; ls >> s;) dst.push_back(s);
    } else if (key == "matrix") {
      if (!(ls >> want_rows >> want_cols)) return std::nullopt;
      for (std::size_t r = 0; r < want_rows; ++r) {
        if (!std::getline(in, line)) return std::nullopt;
        std::istringstream rs(line);
        std::vector<u64> row;
        for (u64 x; rs >> x;) row.push_back(x);
        if (row.size() != want_cols) return std::nullopt;
        po.matrix.push_back(std::move(row));
      }
      have_matrix = true;
    }
  }
  if (!have_matrix || po.row_labels.size() != want_rows || po.col_labels.size() != want_cols) {
    return std::nullopt;
  }
  return po;
}

std::optional<ParsedOutput> parse_json_output(std::string_view text)
{
  try {
    const json j = json::parse(text);
    ParsedOutput po;
    po.p = j.at("p").get<u64>();
    po.row_labels = j.at("row_basis").get<std::vector<std::string>>();
    po.col_labels = j.at("basis").get<std::vector<std::string>>();
    po.matrix = j.at("matrix").get<std::vector<std::vector<u64>>>();
    return po;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

namespace {
volatile std::size_t bench_sink = 0;
}  // namespace

std::vector<BenchPoint> bench_hw(unsigned n, const std::vector<std::string>& f,
                                 const std::vector<u64>& primes, unsigned repeats)
{
  std::vector<BenchPoint> out;
  for (u64 p : primes) {
    const DerivedParams d = validate(CurveParams::from_decimal(p, n, f));
    const auto basis = enumerate_basis(d);
    auto once = [&] {
      std::size_t nonzero = 0;
      for (unsigned j = 1; j < d.n; ++j) {
        const EuclidPj e = euclid_pj(d.p, j, d.n);
        ClassData cd;
        cd.j = j;
        cd.a = e.a;
        cd.b = e.b;
        cd.F = fp_pow_recurrence(d.f_modp, e.a);
        for (const auto& el : basis)
          if (el.block == Block::H1 && el.j == j) nonzero += hw_column(d, cd, el.i).entries.size();
      }
      bench_sink = nonzero;
    };
    // Batches of at least 20 ms; the best batch average is reported.
    double best = 1e300;
    for (unsigned rep = 0; rep < std::max(1u, repeats); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      std::size_t iters = 0;
      std::chrono::duration<double> dt{};
      do {
        once();
        ++iters;
        dt = std::chrono::steady_clock::now() - t0;
      } while (dt.count() < 0.02);
      best = std::min(best, dt.count() / static_cast<double>(iters));
    }
    out.push_back({p, best});
  }
  return out;
}

}  // namespace divfrob
