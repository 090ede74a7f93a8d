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
#include "divfrob/blocks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "divfrob/kernels.hpp"

namespace divfrob {

std::string_view order_name(Order o) { return o == Order::Filtration ? "filtration" : "isotypic"; }

std::size_t series_order(const FrobeniusLift& lift, std::size_t extra) { return lift.dv + 1 + extra; }

ClassData class_data(const DerivedParams& d, const FrobeniusLift& lift, unsigned j,
                     std::size_t extra_order)
{
  ClassData cd;
  cd.j = j;
  const EuclidPj e = euclid_pj(d.p, j, d.n);
  cd.a = e.a;
  cd.b = e.b;
  cd.F = fp_pow_recurrence(d.f_modp, e.a);
  const std::size_t order = series_order(lift, extra_order);
  cd.IP = fp_pow_trunc(trunc_inverse(d.f_modp, order), e.a + 1, order);
  cd.Qc = qcart(d, lift, j);
  return cd;
}

ColumnVector hw_column(const DerivedParams& d, const ClassData& cd, long i)
{
  ColumnVector col{{Block::H1, cd.j, i}, {}};
  const long pi = static_cast<long>(d.p) * i;
  for (long k = 1; k <= static_cast<long>(d.r * cd.b) - 1; ++k)
    col.add({Block::H1, cd.b, k}, cd.F[pi - k], d.p);
  return col;
}

ColumnVector upper_right_column(const DerivedParams& d, const ClassData& cd, long i)
{
  ColumnVector col{{Block::H1, cd.j, i}, {}};
  const u64 p = d.p;
  const long n = d.n, b = cd.b;
  const long pi = static_cast<long>(p) * i;
  const long dF = cd.F.degree();
  const FpPoly& f = d.f_modp;
  const unsigned cls = d.n - cd.b;
  for (long m = 0; m <= static_cast<long>(d.r * cls) - 2; ++m) {
    u64 acc = 0;
    for (long k = pi - dF; k <= static_cast<long>(d.r) * b - 1; ++k) {
      const u64 Fk = cd.F[pi - k];
      const u64 fk = f[m + k + 1];
      if (Fk == 0 || fk == 0) continue;
      const u64 w = mul_mod(reduce_signed(k * n - b * (m + k + 1), p), d.n_inv, p);
      acc = add_mod(acc, mul_mod(mul_mod(w, Fk, p), fk, p), p);
    }
    col.add({Block::H0, cls, m}, acc, p);
  }
  return col;
}

namespace {

// W[m] = sum_k IP[k] * v[p(i+2) + k + m], the inner sum shared by the two
// H0-source blocks.
u64 ip_v_sum(const DerivedParams& d, const FrobeniusLift& lift, const ClassData& cd, long i, long m)
{
  const long start = static_cast<long>(d.p) * (i + 2) + m;
  const long vdeg = lift.v.degree();
  if (start > vdeg || cd.IP.is_zero()) return 0;
  const std::size_t len =
      std::min(cd.IP.coeffs().size(), static_cast<std::size_t>(vdeg - start + 1));
  return kernels::dot_mod({cd.IP.coeffs().data(), len},
                          {lift.v.coeffs().data() + start, len}, d.p);
}

}  // namespace

ColumnVector lower_left_column(const DerivedParams& d, const FrobeniusLift& lift,
                               const ClassData& cd, long i)
{
  ColumnVector col{{Block::H0, cd.j, i}, {}};
  const unsigned cls = d.n - cd.b;
  for (long m = 1; m <= static_cast<long>(d.r * cls) - 1; ++m)
    col.add({Block::H1, cls, m}, ip_v_sum(d, lift, cd, i, m), d.p);
  return col;
}

ColumnVector cartier_column(const DerivedParams& d, const FrobeniusLift& lift,
                            const ClassData& cd, long i)
{
  ColumnVector col{{Block::H0, cd.j, i}, {}};
  const u64 p = d.p;
  const long n = d.n, b = cd.b, r = d.r, l = d.l;
  const long pl = static_cast<long>(p);
  // f[mu+m+1] vanishes once m > l - 1, so W[m] is only needed for
  // r(n-b) <= m <= l - 1; the bound m <= dv - (pi + k) is implied by
  // v[p(i+2)+k+m] = 0 beyond deg v.
  const long mlo = r * (n - b);
  std::vector<u64> W;
  for (long m = mlo; m <= l - 1; ++m) W.push_back(ip_v_sum(d, lift, cd, i, m));
  for (long mu = 0; mu <= r * b - 2; ++mu) {
    u64 acc = cd.Qc[r * b - 2 + pl * (i + 2 - r * static_cast<long>(cd.j)) - mu];
    for (long m = mlo; m <= l - 1; ++m) {
      const u64 fk = d.f_modp[mu + m + 1];
      const u64 w = W[static_cast<std::size_t>(m - mlo)];
      if (fk == 0 || w == 0) continue;
      const u64 c = mul_mod(reduce_signed(n * (mu + 1) - b * (mu + m + 1), p), d.n_inv, p);
      acc = add_mod(acc, mul_mod(mul_mod(c, fk, p), w, p), p);
    }
    col.add({Block::H0, cd.b, mu}, acc, p);
  }
  return col;
}

ColumnVector hw_column(const DerivedParams& d, long i, unsigned j)
{
  const EuclidPj e = euclid_pj(d.p, j, d.n);
  ClassData cd;
  cd.j = j;
  cd.a = e.a;
  cd.b = e.b;
  cd.F = fp_pow_recurrence(d.f_modp, e.a);
  return hw_column(d, cd, i);
}

ColumnVector upper_right_column(const DerivedParams& d, long i, unsigned j)
{
  const EuclidPj e = euclid_pj(d.p, j, d.n);
  ClassData cd;
  cd.j = j;
  cd.a = e.a;
  cd.b = e.b;
  cd.F = fp_pow_recurrence(d.f_modp, e.a);
  return upper_right_column(d, cd, i);
}

ColumnVector lower_left_column(const DerivedParams& d, const FrobeniusLift& lift, long i, unsigned j)
{
  return lower_left_column(d, lift, class_data(d, lift, j), i);
}

ColumnVector cartier_column(const DerivedParams& d, const FrobeniusLift& lift, long i, unsigned j)
{
  return cartier_column(d, lift, class_data(d, lift, j), i);
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

DividedFrobeniusMatrix from_columns(const DerivedParams& d, const std::vector<ColumnVector>& cols)
{
  DividedFrobeniusMatrix out;
  out.curve = d;
  out.labels = enumerate_basis(d);
  out.m = FpMatrix(d.p, out.labels.size());
  std::map<BasisElement, std::size_t> index;
  for (std::size_t k = 0; k < out.labels.size(); ++k) index[out.labels[k]] = k;
  for (const auto& col : cols) {
    const std::size_t c = index.at(col.source);
    for (const auto& [row, val] : col.entries) out.m.at(index.at(row), c) = val;
  }
  return out;
}

DividedFrobeniusMatrix assemble(const DerivedParams& d, const FrobeniusLift& lift, Order order,
                                AssembleOptions opts)
{
  std::vector<ClassData> memo(d.n);
  parallel_for(d.n - 1, opts.threads,
               [&](std::size_t k) { memo[k + 1] = class_data(d, lift, static_cast<unsigned>(k + 1), opts.extra_order); });

  const auto basis = enumerate_basis(d);
  std::vector<ColumnVector> cols(basis.size());
  parallel_for(basis.size(), opts.threads, [&](std::size_t k) {
    const BasisElement& e = basis[k];
    const ClassData& cd = memo[e.j];
    ColumnVector col{e, {}};
    const ColumnVector top =
        e.block == Block::H0 ? cartier_column(d, lift, cd, e.i) : upper_right_column(d, cd, e.i);
    const ColumnVector bottom =
        e.block == Block::H0 ? lower_left_column(d, lift, cd, e.i) : hw_column(d, cd, e.i);
    col.entries = top.entries;
    col.entries.insert(bottom.entries.begin(), bottom.entries.end());
    cols[k] = std::move(col);
  });

  DividedFrobeniusMatrix out = from_columns(d, cols);
  if (opts.require_invertible && det_mod_p(out.m) == 0) {
    throw Error(ErrorCode::SingularMatrix, "assembled matrix is singular mod p");
  }
  return reorder(out, order);
}

DividedFrobeniusMatrix reorder(const DividedFrobeniusMatrix& mat, Order order)
{
  if (mat.order == order) return mat;
  const auto basis = enumerate_basis(mat.curve);
  std::vector<std::size_t> perm = isotypic_permutation(mat.curve);
  // perm maps isotypic positions to filtration positions.
  std::vector<std::size_t> src(perm.size());
  if (order == Order::Isotypic) {
    src = perm;
  } else {
    for (std::size_t k = 0; k < perm.size(); ++k) src[perm[k]] = k;
  }
  DividedFrobeniusMatrix out;
  out.curve = mat.curve;
  out.order = order;
  out.m = FpMatrix(mat.m.p, mat.m.dim);
  out.labels.resize(mat.labels.size());
  for (std::size_t a = 0; a < src.size(); ++a) {
    out.labels[a] = mat.labels[src[a]];
    for (std::size_t b = 0; b < src.size(); ++b) out.m.at(a, b) = mat.m.at(src[a], src[b]);
  }
  return out;
}

FpMatrix quadrant(const DividedFrobeniusMatrix& mat, Quadrant q)
{
  const DividedFrobeniusMatrix f = reorder(mat, Order::Filtration);
  const std::size_t g = f.curve.g;
  const std::size_t r0 = (q == Quadrant::LowerLeft || q == Quadrant::HasseWitt) ? g : 0;
  const std::size_t c0 = (q == Quadrant::UpperRight || q == Quadrant::HasseWitt) ? g : 0;
  std::vector<std::size_t> rows(g), cols(g);
  for (std::size_t k = 0; k < g; ++k) {
    rows[k] = r0 + k;
    cols[k] = c0 + k;
  }
  return f.m.select(rows, cols);
}

unsigned image_class(const DerivedParams& d, const BasisElement& src)
{
  return euclid_pj(d.p, src.j, d.n).b;
}

bool support_ok(const DividedFrobeniusMatrix& mat)
{
  const DerivedParams& d = mat.curve;
  for (std::size_t c = 0; c < mat.labels.size(); ++c) {
    const BasisElement& src = mat.labels[c];
    const unsigned b = image_class(d, src);
    const unsigned h0_class = src.block == Block::H0 ? b : d.n - b;
    const unsigned h1_class = src.block == Block::H0 ? d.n - b : b;
    for (std::size_t r = 0; r < mat.labels.size(); ++r) {
      if (mat.m.at(r, c) == 0) continue;
      const BasisElement& row = mat.labels[r];
      const unsigned want = row.block == Block::H0 ? h0_class : h1_class;
      if (row.j != want) return false;
    }
  }
  return true;
}

}  // namespace divfrob
