#include "double_description.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace toriq::detail {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  LatticeVector v;
  Bits zeros;  // processed rows on which <a, v> = 0
};

// Columns of B^{-1} for an invertible square B, scaled to primitive integers.
std::vector<LatticeVector> inverse_columns(const std::vector<LatticeVector>& b, std::size_t n) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(b[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("initial basis is singular");
    std::swap(a[c], a[p]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<LatticeVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Integer l = 1;
    for (std::size_t i = 0; i < n; ++i) l = lcm(l, denominator(a[i][n + j]));
    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = numerator(a[i][n + j]) * (l / denominator(a[i][n + j]));
    cols.push_back(primitive(LatticeVector(std::move(v))));
  }
  return cols;
}

}  // namespace

ConeGenerators extreme_rays(const std::vector<LatticeVector>& inequalities, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("ambient dimension must be positive");

  std::set<LatticeVector> unique;
  for (const auto& a : inequalities) {
    if (a.dim() != dim) throw std::invalid_argument("dimension mismatch");
    if (!a.is_zero()) unique.insert(primitive(a));
  }
  std::vector<LatticeVector> ineqs(unique.begin(), unique.end());

  ConeGenerators out;
  out.lineality = nullspace(ineqs, dim);

  // Restrict to the orthogonal complement of the lineality space so the
  // remaining cone is pointed.
  std::vector<LatticeVector> rows;
  for (const auto& l : out.lineality) rows.push_back(l);
  for (const auto& l : out.lineality) rows.push_back(-l);
  rows.insert(rows.end(), ineqs.begin(), ineqs.end());
  const std::size_t total = rows.size();

  std::vector<std::size_t> basis;
  std::vector<LatticeVector> basis_rows;
  std::vector<bool> used(total, false);
  RowSpan span(dim);
  for (std::size_t i = 0; i < total && basis.size() < dim; ++i) {
    if (span.add(rows[i])) {
      basis.push_back(i);
      basis_rows.push_back(rows[i]);
      used[i] = true;
    }
  }
  if (basis.size() != dim) throw std::logic_error("constraint system is not of full rank");

  std::vector<Ray> rays;
  const auto cols = inverse_columns(basis_rows, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Bits z(total);
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) z.set(basis[k]);
    rays.push_back({cols[j], std::move(z)});
  }

  for (std::size_t row = 0; row < total; ++row) {
    if (used[row]) continue;
    const auto& a = rows[row];

    std::vector<std::size_t> pos, zer, neg;
    std::vector<Integer> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].v);
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
      else
        zer.push_back(r);
    }

    std::vector<Ray> next;
    for (auto r : pos) next.push_back(rays[r]);
    for (auto r : zer) {
      next.push_back(rays[r]);
      next.back().zeros.set(row);
    }
    if (!neg.empty()) {
      for (auto p : pos) {
        for (auto n : neg) {
          Bits common = rays[p].zeros & rays[n].zeros;
          if (dim >= 2 && common.count() + 2 < dim) continue;
          bool adjacent = true;
          for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
            if (r == p || r == n) continue;
            if (common.is_subset_of(rays[r].zeros)) adjacent = false;
          }
          if (!adjacent) continue;
          LatticeVector v = val[p] * rays[n].v - val[n] * rays[p].v;
          common.set(row);
          next.push_back({primitive(v), std::move(common)});
        }
      }
    }
    rays = std::move(next);
    used[row] = true;
  }

  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace toriq::detail
