#include "toriq/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toriq {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::size_t dim) : coords_(dim) {
  if (dim == 0) throw std::invalid_argument("lattice vector dimension must be positive");
}

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("lattice vector dimension must be positive");
}

LatticeVector::LatticeVector(std::initializer_list<long long> coords)
    : coords_(coords.begin(), coords.end()) {
  if (coords_.empty()) throw std::invalid_argument("lattice vector dimension must be positive");
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

bool LatticeVector::is_primitive() const {
  Integer g = 0;
  for (const auto& x : coords_) g = gcd(g, x);
  return g == 1;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(*this);
  for (auto& x : r.coords_) x = -x;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }

LatticeVector operator*(const Integer& k, LatticeVector v) {
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] *= k;
  return v;
}

// ---------------------------------------------------------------------------
// RationalVector

RationalVector::RationalVector(std::size_t dim) : coords_(dim) {
  if (dim == 0) throw std::invalid_argument("rational vector dimension must be positive");
}

RationalVector::RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("rational vector dimension must be positive");
}

RationalVector::RationalVector(const LatticeVector& v) : coords_(v.begin(), v.end()) {}

RationalVector::RationalVector(std::initializer_list<Rational> coords)
    : coords_(coords.begin(), coords.end()) {
  if (coords_.empty()) throw std::invalid_argument("rational vector dimension must be positive");
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& x) { return denominator(x) == 1; });
}

LatticeVector RationalVector::to_lattice() const {
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& x : coords_) {
    if (denominator(x) != 1) throw std::domain_error("rational vector is not integral");
    out.push_back(numerator(x));
  }
  return LatticeVector(std::move(out));
}

std::string RationalVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << format_rational(coords_[i]);
  }
  os << ')';
  return os.str();
}

bool operator<(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.dim(), b.dim());
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim());
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim());
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    std::size_t j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().dim();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

// ---------------------------------------------------------------------------
// Operations

LatticeVector primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
  std::vector<Integer> out;
  out.reserve(v.dim());
  for (const auto& x : v) out.push_back(x / g);
  return LatticeVector(std::move(out));
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t n = std::min(rows, cols);

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        // Trailing block is zero.
        std::vector<Integer> d;
        for (std::size_t i = 0; i < n; ++i) d.push_back(abs(a(i, i)));
        return d;
      }
      a.swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain against the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<Integer> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(abs(a(i, i)));
  return d;
}

namespace {

// Row echelon form over Z with every pivot column cleared in the other rows
// and each row divided by its content, pivots positive. Equal to the rational
// RREF up to a positive scale per row. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  auto normalize = [](std::vector<Integer>& row) {
    Integer g = 0;
    for (const auto& x : row) g = gcd(g, x);
    if (g > 1)
      for (auto& x : row) x /= g;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    normalize(a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Integer f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[r][c] * a[i][j] - f * a[r][j];
      normalize(a[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

LatticeVector clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (l / denominator(x)));
  return primitive(LatticeVector(std::move(out)));
}

bool search(const LatticeVector& remaining, const std::vector<LatticeVector>& gens,
            std::size_t k, long long bound, std::vector<Integer>& coeffs) {
  if (k == gens.size()) return remaining.is_zero();
  LatticeVector rest = remaining;
  for (long long c = 0; c <= bound; ++c) {
    coeffs[k] = c;
    if (search(rest, gens, k + 1, bound, coeffs)) return true;
    if (gens[k].is_zero()) break;
    rest -= gens[k];
  }
  coeffs[k] = 0;
  return false;
}

}  // namespace

bool RowSpan::add(const LatticeVector& v) {
  require_same_dim(v.dim(), dim_);
  LatticeVector w = v;
  for (const auto& [pivot, row] : rows_) {
    if (w[pivot] == 0) continue;
    w = row[pivot] * w - w[pivot] * row;
    if (w.is_zero()) return false;
    w = primitive(w);
  }
  if (w.is_zero()) return false;
  std::size_t pivot = 0;
  while (w[pivot] == 0) ++pivot;
  rows_.emplace_back(pivot, std::move(w));
  return true;
}

std::size_t rank(const std::vector<LatticeVector>& rows, std::size_t dim) {
  RowSpan span(dim);
  for (const auto& r : rows) span.add(r);
  return span.rank();
}

std::vector<LatticeVector> nullspace(const std::vector<LatticeVector>& rows, std::size_t dim) {
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    require_same_dim(r.dim(), dim);
    a.emplace_back(r.begin(), r.end());
  }
  const auto pivots = rref(a, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<LatticeVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(dim);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (a[r][f] != 0) v[pivots[r]] = Rational(-a[r][f], a[r][pivots[r]]);
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

std::optional<std::vector<Integer>> nonneg_int_combination(const LatticeVector& target,
                                                           const std::vector<LatticeVector>& gens,
                                                           long long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  for (const auto& g : gens) require_same_dim(g.dim(), target.dim());
  std::vector<Integer> coeffs(gens.size());
  if (search(target, gens, 0, bound, coeffs)) return coeffs;
  return std::nullopt;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational '" + text + "'");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Integer num = parse_int(s.substr(0, slash));
  const Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace toriq
