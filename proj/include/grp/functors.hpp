#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "grp/lattice.hpp"

namespace grp {

enum class Tri { Yes, No, Skipped };

struct PredicateResult {
  Tri value = Tri::Skipped;
  std::string witness;  // always populated when value == No

  bool yes() const { return value == Tri::Yes; }
  bool no() const { return value == Tri::No; }
  bool skipped() const { return value == Tri::Skipped; }
};

// Is H subnormal in <H, R>?
PredicateResult r_subnormal(const Subgroup& h, const Subgroup& r);

// Does H H^x = H^x H hold for every x in K?  Requires H <= K.
PredicateResult conjugate_permutable_in(const Subgroup& h, const Subgroup& k);

// Same predicate with K = <H, R>.
PredicateResult r_conjugate_permutable(const Subgroup& h, const Subgroup& r);

// Decides existence of a chain H = H_0 < H_1 < ... < H_n = G with every
// index |H_i : H_{i-1}| prime, by memoized ascent over a fixed subgroup
// lattice.  A partial lattice downgrades every nontrivial query to Skipped.
class PSubnormalSolver {
 public:
  PSubnormalSolver(TablePtr g, const SubgroupList* lattice);

  PredicateResult p_subnormal(const Subgroup& h);

 private:
  bool reach(int i);

  TablePtr g_;
  const SubgroupList* lattice_;
  std::unordered_map<ElemSet, int, ElemSetHash> index_;
  std::vector<int8_t> memo_;  // -1 unknown, 0 no, 1 yes
  std::vector<int> next_;     // successful step upward, for chain reconstruction
};

// Is H prime-index reachable inside <H, R>?  Enumerates the join's subgroup
// lattice through the store when the join is proper.
PredicateResult r_p_subnormal(const Subgroup& h, const Subgroup& r, LatticeStore& store);

}  // namespace grp
