#pragma once

// Exact integer and rational linear algebra over the lattice N = Z^n and its
// real span. Everything here is arbitrary precision.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toriq {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Point of the lattice Z^n.
class LatticeVector {
 public:
  explicit LatticeVector(std::size_t dim);
  explicit LatticeVector(std::vector<Integer> coords);
  LatticeVector(std::initializer_list<long long> coords);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  bool is_primitive() const;
  std::string to_string() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic order; vectors of different dimension order by dimension.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

 private:
  std::vector<Integer> coords_;
};

LatticeVector operator+(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a, const LatticeVector& b);
LatticeVector operator*(const Integer& k, LatticeVector v);

/// Point of Q^n; coordinates are kept in lowest terms by the rational type.
class RationalVector {
 public:
  explicit RationalVector(std::size_t dim);
  explicit RationalVector(std::vector<Rational> coords);
  explicit RationalVector(const LatticeVector& v);
  RationalVector(std::initializer_list<Rational> coords);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Only valid when is_integral().
  LatticeVector to_lattice() const;
  std::string to_string() const;

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const RationalVector& a, const RationalVector& b);

 private:
  std::vector<Rational> coords_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_rows(const std::vector<LatticeVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  IntMatrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

/// v / gcd(v). Sign is preserved, so the ray direction is unchanged.
LatticeVector primitive(const LatticeVector& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

/// Elementary divisors d1 | d2 | ... of m, length min(rows, cols), zeros last.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

/// Incrementally built row echelon form over Z (fraction free).
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  /// Adds v if it is independent of the rows added so far; returns whether
  /// it was.
  bool add(const LatticeVector& v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, LatticeVector>> rows_;  // (pivot column, row)
};

/// Rank over Q.
std::size_t rank(const std::vector<LatticeVector>& rows, std::size_t dim);

/// Primitive integer basis of {x : <r, x> = 0 for all rows r}, taken from the
/// reduced row echelon form so that it depends only on the row space.
std::vector<LatticeVector> nullspace(const std::vector<LatticeVector>& rows, std::size_t dim);

/// Exhaustive search for c >= 0 with sum c_i gens_i = target and every
/// c_i <= bound. Returns the lexicographically smallest solution found.
std::optional<std::vector<Integer>> nonneg_int_combination(const LatticeVector& target,
                                                           const std::vector<LatticeVector>& gens,
                                                           long long bound);

/// Parses "p/q" or "p" into a rational; throws std::invalid_argument.
Rational parse_rational(const std::string& text);
/// "p/q", or "p" for integers.
std::string format_rational(const Rational& q);

}  // namespace toriq
