#pragma once

#include <string>
#include <vector>

#include "grp/group.hpp"

namespace grp {

// Soluble group of order 294 on 49 points: the full translation lattice of a
// 7x7 grid extended by an order-3 linear map and a coordinate swap.  It is a
// product of two supersoluble factors that both sit well relative to the
// fitting subgroup, yet the whole group is not supersoluble.
GroupSpec witness_group_spec();

struct WitnessCertificate {
  TablePtr table;
  std::vector<std::string> lines;  // certified facts, one per line
};

// Builds the witness group and certifies every claimed property, throwing
// ConstructionFailed on the first property that does not hold.
WitnessCertificate certify_witness_group();

}  // namespace grp
