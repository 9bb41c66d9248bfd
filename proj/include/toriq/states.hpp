#pragma once

// Pure m-qubit states and the entanglement data read off the m-cube:
// 2-face minors, concurrence, three-tangle, flattening ranks and the Segre
// product structure.
//
// Amplitudes are indexed by the bitstring x_m ... x_1 read as a binary
// number, so qubit k (1-based) is bit k-1 of the index.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toriq/fan.hpp"

namespace toriq {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kRankTolerance = 1e-10;

class QState {
 public:
  QState(int num_qubits, std::vector<Amplitude> amps);

  int num_qubits() const { return m_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t index) const { return amps_[index]; }

  double norm() const;
  bool is_normalized() const;
  QState normalized() const;

 private:
  int m_;
  std::vector<Amplitude> amps_;
};

/// A 2-face of the m-cube: free qubits i < j (1-based) and the bits of the
/// remaining qubits. `fixed` is an amplitude index with bits i and j clear.
struct Face2 {
  int i = 1;
  int j = 2;
  std::uint32_t fixed = 0;

  /// Bitstring x_m ... x_1 with '*' on the free positions.
  std::string label(int m) const;
  friend bool operator==(const Face2&, const Face2&) = default;
};

struct FaceMinor {
  Face2 face;
  Amplitude omega;
};

struct FaceMinorReport {
  std::vector<FaceMinor> entries;
  double max_abs = 0.0;
};

/// Factors (alpha_0, alpha_1) listed in tensor order: factors[0] belongs to
/// qubit m (the leftmost bit), factors[m-1] to qubit 1.
struct ProductFactors {
  std::vector<std::pair<Amplitude, Amplitude>> factors;
};

struct ChartCoordinates {
  ChartIndex chart;
  std::vector<Amplitude> coords;
};

/// Builds a dense state from (bitstring, amplitude) pairs.
QState load_state(int num_qubits, const std::vector<std::pair<std::string, Amplitude>>& entries);

/// 2^(m-2) m (m-1) / 2.
std::uint64_t face_count(int m);

/// Pairs (i, j) lexicographically, then the fixed bits as a binary counter
/// over the remaining positions (lowest position least significant).
std::vector<Face2> enumerate_faces(int m);

Amplitude face_minor(const QState& s, const Face2& f);
FaceMinorReport face_minors(const QState& s);

/// 2 |a00 a11 - a01 a10| for a normalized two-qubit state.
double concurrence_2qubit(const QState& s);

/// Numerical rank of the amplitude matrix with rows indexed by the qubits in
/// `subset` (1-based positions).
int flattening_rank(const QState& s, const std::vector<int>& subset);

bool is_fully_separable(const QState& s);

std::optional<ProductFactors> factor_product(const QState& s);

QState segre_embed(const ProductFactors& f);

/// Charts of chart_atlas(m) whose denominators are nonzero. Slot k of a chart
/// corresponds to factors[k-1].
std::vector<ChartCoordinates> chart_coordinates(const ProductFactors& f);

/// Cayley 2x2x2 hyperdeterminant of a[x3 x2 x1] (index = 4 x3 + 2 x2 + x1).
template <typename T>
T hyperdeterminant(const T (&a)[8]) {
  const T &a000 = a[0], &a001 = a[1], &a010 = a[2], &a011 = a[3];
  const T &a100 = a[4], &a101 = a[5], &a110 = a[6], &a111 = a[7];
  T d = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
        a100 * a100 * a011 * a011;
  d = d - T(2) * (a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 +
                  a000 * a100 * a011 * a111 + a001 * a010 * a101 * a110 +
                  a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101);
  d = d + T(4) * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111);
  return d;
}

/// 4 |Det(a)| for a normalized three-qubit state.
double three_tangle(const QState& s);

/// Projective comparison: both states normalized and rotated so that the
/// largest-magnitude amplitude of `a` is real positive.
double projective_distance(const QState& a, const QState& b);

}  // namespace toriq
