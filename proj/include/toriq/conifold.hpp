#pragma once

// The conifold in its three guises: the quadric sum z_i^2 = 0 in C^4, the
// 2x2 determinant variety a00 a11 - a01 a10 = 0, and the toric cone over the
// unit square. Also its two small resolutions and its deformation
// det = omega.

#include <complex>
#include <string>
#include <vector>

#include "toriq/fan.hpp"
#include "toriq/lattice.hpp"
#include "toriq/polyhedral.hpp"

namespace toriq {

/// Exact complex number with rational parts.
struct ComplexRational {
  Rational re = 0;
  Rational im = 0;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(int r) : re(r) {}

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const;
};

template <typename Scalar>
struct QuadricPoint {
  Scalar z1{}, z2{}, z3{}, z4{};

  Scalar quadric() const { return z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4; }
  friend bool operator==(const QuadricPoint&, const QuadricPoint&) = default;
};

template <typename Scalar>
struct AmplitudeMatrix {
  Scalar a00{}, a01{}, a10{}, a11{};

  Scalar det() const { return a00 * a11 - a01 * a10; }
  friend bool operator==(const AmplitudeMatrix&, const AmplitudeMatrix&) = default;
};

using Complex = std::complex<double>;

/// The toric cone of the conifold: rays (0,0,1), (1,0,1), (0,1,1), (1,1,1).
Cone conifold_cone();

enum class Diagonal { A, B };

/// Small resolution: split the square base along a diagonal. A joins
/// (0,0,1) to (1,1,1); B joins (1,0,1) to (0,1,1).
Fan resolve_conifold(Diagonal diagonal);

/// a00 = z1 + i z2, a01 = -z4 + i z3, a10 = z4 + i z3, a11 = z1 - i z2.
template <typename Scalar>
AmplitudeMatrix<Scalar> quadric_to_matrix(const QuadricPoint<Scalar>& p) {
  const Scalar i(0, 1);
  return {p.z1 + i * p.z2, -p.z4 + i * p.z3, p.z4 + i * p.z3, p.z1 - i * p.z2};
}

/// Linear inverse of quadric_to_matrix.
template <typename Scalar>
QuadricPoint<Scalar> matrix_to_quadric(const AmplitudeMatrix<Scalar>& m) {
  const Scalar two(2, 0);
  const Scalar two_i(0, 2);
  return {(m.a00 + m.a11) / two, (m.a00 - m.a11) / two_i, (m.a01 + m.a10) / two_i,
          (m.a10 - m.a01) / two};
}

template <typename Scalar>
struct DeformationSmoothness {
  bool smooth = false;
  std::vector<AmplitudeMatrix<Scalar>> singular_points;
};

/// Singularities of {det = omega} in C^4. The gradient (a11, -a10, -a01, a00)
/// vanishes only at the origin, which lies on the variety iff omega == 0.
template <typename Scalar>
DeformationSmoothness<Scalar> is_deformation_smooth(const Scalar& omega) {
  if (omega == Scalar(0)) return {false, {AmplitudeMatrix<Scalar>{}}};
  return {true, {}};
}

/// Result of absorbing gamma and lambda in
///   a00 a11 - gamma a01 a10 + lambda a10
/// into a single coordinate. The linear term multiplies a10, so the absorbed
/// coordinate is its partner a01: a01' = gamma a01 - lambda and the equation
/// becomes a00 a11 - a01' a10. Transposing the matrix swaps the roles of a01
/// and a10 without changing the determinant.
struct DeformationAbsorption {
  Complex gamma;
  Complex lambda;
  /// Name of the rewritten coordinate.
  std::string absorbed;
  /// a' = scale * a + shift.
  Complex scale;
  Complex shift;
  /// Largest |original - rewritten| over the random samples.
  double max_residual = 0.0;
  int samples = 0;

  std::string describe() const;
};

/// Throws std::domain_error("degenerate absorption") when gamma == 0.
DeformationAbsorption absorb_deformation(Complex gamma, Complex lambda, unsigned seed = 0,
                                         int samples = 10);

}  // namespace toriq
