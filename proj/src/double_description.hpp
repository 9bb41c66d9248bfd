#pragma once

#include <cstddef>
#include <vector>

#include "toriq/lattice.hpp"

namespace toriq::detail {

struct ConeGenerators {
  /// Extreme rays of the pointed part (the cone intersected with the
  /// orthogonal complement of its lineality space), primitive and sorted.
  std::vector<LatticeVector> rays;
  /// Canonical primitive basis of the lineality space.
  std::vector<LatticeVector> lineality;
};

/// Double description: generators of {x in R^dim : <a, x> >= 0 for all a}.
ConeGenerators extreme_rays(const std::vector<LatticeVector>& inequalities, std::size_t dim);

}  // namespace toriq::detail
