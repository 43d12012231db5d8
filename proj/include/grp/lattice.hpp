#pragma once

#include <unordered_map>

#include "grp/quotient.hpp"
#include "grp/subgroup.hpp"

namespace grp {

inline constexpr int kDefaultMaxSubgroups = 50000;

// Canonically sorted (by order, then lexicographic membership).  When the
// enumeration budget runs out the list is partial and exhaustive is false.
struct SubgroupList {
  std::vector<Subgroup> items;
  bool exhaustive = true;
};

// Cyclic seeds joined pairwise to a fixpoint, deduplicated by membership set.
SubgroupList all_subgroups(const TablePtr& g, int max_subgroups = kDefaultMaxSubgroups);

SubgroupList maximal_subgroups(const SubgroupList& all);
SubgroupList maximal_subgroups(const TablePtr& g, int max_subgroups = kDefaultMaxSubgroups);

// Computed independently of all_subgroups: joins of conjugacy-class closures.
struct NormalSubgroups {
  std::vector<Subgroup> all;      // canonical order
  std::vector<Subgroup> minimal;  // nontrivial minimal members
};
NormalSubgroups normal_subgroups(const TablePtr& g);

// Subgroups k with h <= k <= G.
SubgroupList intermediate_subgroups(const SubgroupList& all, const Subgroup& h);

Subgroup normal_closure(const Subgroup& h, const Subgroup& k);  // smallest N with h <= N normal in k

struct SubnormalChain {
  bool subnormal = false;
  int defect = 0;
  std::vector<Subgroup> chain;  // descending from k; ends at h when subnormal, else at the stall
};
SubnormalChain subnormal_defect(const Subgroup& h, const Subgroup& k);  // pre: h <= k

// g in <h, h^g> for every g of the parent.
bool is_abnormal(const Subgroup& h);

enum class ChiefTieBreak { SmallestFactor, LargestFactor };

struct ChiefSeries {
  std::vector<Subgroup> chain;     // descending: G = chain[0] > ... > 1
  std::vector<int> factor_orders;  // |chain[i]| / |chain[i+1]|
};
ChiefSeries chief_series(const TablePtr& g, ChiefTieBreak tie = ChiefTieBreak::SmallestFactor);

// Per-run cache of subgroup lattices keyed by table identity.
class LatticeStore {
 public:
  explicit LatticeStore(int max_subgroups = kDefaultMaxSubgroups) : max_(max_subgroups) {}
  const SubgroupList& of(const TablePtr& g);
  int max_subgroups() const { return max_; }

 private:
  int max_;
  std::unordered_map<const GroupTable*, SubgroupList> map_;
  std::unordered_map<const GroupTable*, TablePtr> keep_;
};

}  // namespace grp
