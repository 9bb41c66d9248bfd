#pragma once

// Fans, the cube polytopes of m qubits, their normal fans and the chart
// atlas of (CP^1)^m.

#include <cstddef>
#include <string>
#include <vector>

#include "toriq/polyhedral.hpp"

namespace toriq {

inline constexpr int kMaxQubits = 10;

/// A collection of strongly convex cones closed under taking faces, any two
/// of which meet in a common face. Cones are stored with the full face
/// closure, sorted and deduplicated.
class Fan {
 public:
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Cone>& cones() const { return cones_; }
  /// Cones that are not a proper face of another cone of the fan.
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.cones_ == b.cones_;
  }

 private:
  friend Fan fan_from_cones(const std::vector<Cone>& cones);
  friend Fan normal_fan(const Polytope& p);
  static Fan close_under_faces(std::size_t dim, const std::vector<Cone>& cones);

  std::size_t dim_ = 0;
  std::vector<Cone> cones_;
  std::vector<Cone> maximal_;
};

/// Sign pattern of a chart of (CP^1)^m: -1 in slot k means the chart uses
/// z_k^{-1} instead of z_k.
struct ChartIndex {
  std::vector<int> signs;

  std::string to_string() const;
  friend bool operator==(const ChartIndex&, const ChartIndex&) = default;
};

/// Closes `cones` under faces and checks the intersection axiom; throws
/// std::domain_error naming the first offending pair.
Fan fan_from_cones(const std::vector<Cone>& cones);

/// The m-cube with vertices (+/-1, ..., +/-1), 1 <= m <= 10.
Polytope cube_polytope(int m);

/// Fan of cones over the facets of polar(p); origin must be interior.
Fan normal_fan(const Polytope& p);

bool fan_is_smooth(const Fan& f);

/// All 2^m sign tuples, lexicographic with +1 before -1.
std::vector<ChartIndex> chart_atlas(int m);

/// The orthant {x : sign_k x_k >= 0} matching a chart.
Cone orthant(const ChartIndex& chart);

}  // namespace toriq
