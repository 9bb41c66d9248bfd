#pragma once

// Rational polyhedral cones and lattice polytopes.
//
// A Cone keeps both descriptions in canonical form: the minimal generators
// (primitive, sorted) and the supporting half-spaces <u, .> >= 0 (primitive,
// sorted). Equalities of a lower-dimensional cone appear as a +u / -u pair.
// Two cones are equal exactly when their generator lists are equal.

#include <cstddef>
#include <vector>

#include "toriq/lattice.hpp"

namespace toriq {

/// Maximum ambient dimension for duality and Hilbert bases.
inline constexpr std::size_t kMaxDualityDim = 4;

class Cone {
 public:
  /// Cone(S) without the strong convexity check. Zero vectors are ignored.
  static Cone from_generators(const std::vector<LatticeVector>& generators, std::size_t dim);
  /// {x : <u, x> >= 0 for every u in normals}.
  static Cone from_halfspaces(const std::vector<LatticeVector>& normals, std::size_t dim);
  static Cone zero(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  /// Minimal generators. For a cone with lineality the lineality basis is
  /// listed with both signs.
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& halfspaces() const { return halfspaces_; }
  /// Basis of the largest linear subspace contained in the cone.
  const std::vector<LatticeVector>& lineality() const { return lineality_; }
  /// Dimension of the linear span.
  std::size_t dimension() const { return dimension_; }

  std::string to_string() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_;
  }
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  Cone(std::size_t dim, std::vector<LatticeVector> rays, std::vector<LatticeVector> lineality,
       std::vector<LatticeVector> halfspaces);
  Cone(std::size_t dim, std::size_t dimension, std::vector<LatticeVector> rays,
       std::vector<LatticeVector> lineality, std::vector<LatticeVector> halfspaces);

  std::size_t dim_;
  std::size_t dimension_;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_;
  std::vector<LatticeVector> halfspaces_;
};

/// Conv(S) for a finite set of rational points, stored by its vertices.
class Polytope {
 public:
  /// Drops every point that is not a vertex.
  static Polytope from_points(const std::vector<RationalVector>& points);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }

  /// Facet inequalities a.x >= -b as primitive integer (a, b) of length
  /// ambient_dim + 1. For a lower-dimensional polytope the affine hull shows
  /// up as +/- pairs.
  const std::vector<LatticeVector>& facet_inequalities() const { return cone_.halfspaces(); }
  /// The cone over {(v, 1)}.
  const Cone& homogenization() const { return cone_; }

  bool contains_origin_in_interior() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope(std::size_t dim, std::vector<RationalVector> vertices, Cone cone);

  std::size_t dim_;
  std::vector<RationalVector> vertices_;
  Cone cone_;
};

struct HilbertBasis {
  Cone cone;
  std::vector<LatticeVector> generators;
};

/// Cone(S), rejecting cones that contain a line.
Cone cone_from_generators(const std::vector<LatticeVector>& generators);

/// {u : <u, v> >= 0 for all v in c}. Ambient dimension at most 4.
Cone dual_cone(const Cone& c);

/// {u : <u, v> >= -1 for all v in p}. Requires 0 in the interior of p.
Polytope polar(const Polytope& p);

bool is_strongly_convex(const Cone& c);
bool is_simplicial(const Cone& c);
/// Simplicial with rays extending to a basis of the lattice.
bool is_smooth_cone(const Cone& c);

/// All faces including {0} (or the lineality space) and c itself, sorted by
/// dimension and then by rays.
std::vector<Cone> cone_faces(const Cone& c);

bool cone_contains(const Cone& c, const RationalVector& v);
bool cone_contains(const Cone& c, const LatticeVector& v);

/// True when `face` is one of the faces of `c`.
bool is_face_of(const Cone& face, const Cone& c);

/// Intersection of two cones in the same ambient space.
Cone intersect(const Cone& a, const Cone& b);

/// Simplicial cones, given by their rays, that subdivide a pointed cone
/// without new rays.
std::vector<std::vector<LatticeVector>> triangulate(const Cone& c);

/// Minimal generating set of the semigroup c ∩ Z^n. Requires a strongly
/// convex cone in ambient dimension at most 4.
HilbertBasis hilbert_basis(const Cone& c);

}  // namespace toriq
