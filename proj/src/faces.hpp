#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "toriq/polyhedral.hpp"

namespace toriq::detail {

/// Every face of c as the set of c.rays() it contains, the full cone first.
std::vector<boost::dynamic_bitset<>> face_masks(const Cone& c);

}  // namespace toriq::detail
