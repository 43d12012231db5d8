#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grp/functors.hpp"
#include "grp/radicals.hpp"

namespace grp {

struct Budget {
  int max_pairs = 500000;       // subgroup pairs a quantified check may examine
  int max_triples = 2000000;    // subgroup triples a quantified check may examine
  int max_subgroups = kDefaultMaxSubgroups;
  int product_max_order = 200;  // order bound for pair/triple quantified checks
};

enum class CheckStatus { Holds, Fails, Vacuous, Skipped };
const char* to_string(CheckStatus s);

struct Verdict {
  std::string check_id;
  std::string group;
  CheckStatus status = CheckStatus::Skipped;
  std::string witness;  // always populated for Fails and Skipped
  long long cost = 0;   // deterministic count of instantiations examined
};

// Per-group evaluation state.  Lazily computes and caches the subgroup
// lattice, normal structure, radical report, per-subgroup classifications and
// the prime-index ascent solver; all checks on one group share one context.
class GroupContext {
 public:
  GroupContext(std::string name, TablePtr table, Budget budget,
               std::vector<std::string> tags = {},
               std::optional<DirectProduct> split = std::nullopt);

  const std::string& name() const { return name_; }
  const TablePtr& table() const { return table_; }
  const Budget& budget() const { return budget_; }
  const std::vector<std::string>& tags() const { return tags_; }
  bool has_tag(const std::string& t) const;
  const std::optional<DirectProduct>& split() const { return split_; }

  LatticeStore& store() { return store_; }
  const SubgroupList& lattice();   // throws BudgetExceeded when incomplete
  const SubgroupList& maximals();
  const NormalSubgroups& normals();
  const RadicalReport& radicals();

  // Memoized per-subgroup facts, keyed by membership set.
  const EmbeddedGroup& embedded(const Subgroup& h);
  bool subgroup_nilpotent(const Subgroup& h);
  bool subgroup_supersoluble(const Subgroup& h);
  bool subgroup_subnormal(const Subgroup& h);       // subnormal in the whole group
  bool subgroup_fit_subnormal(const Subgroup& h);   // subnormal in join with fitting subgroup
  bool subgroup_abnormal(const Subgroup& h);

  // Prime-index ascent inside the join <h, r>; shares one solver when the
  // join is the whole group.
  PredicateResult p_subnormal_join(const Subgroup& h, const Subgroup& r);

 private:
  std::string name_;
  TablePtr table_;
  Budget budget_;
  std::vector<std::string> tags_;
  std::optional<DirectProduct> split_;
  LatticeStore store_;
  std::optional<SubgroupList> maximals_;
  std::optional<NormalSubgroups> normals_;
  std::optional<RadicalReport> radicals_;
  std::optional<PSubnormalSolver> solver_;
  std::unordered_map<ElemSet, EmbeddedGroup, ElemSetHash> embedded_;
  std::unordered_map<ElemSet, char, ElemSetHash> nilp_, ssol_, subn_, fsub_, abn_;
};

struct CheckDef {
  const char* id;
  bool probe;  // probes report open questions; their failures never gate exit codes
  const char* blurb;
  Verdict (*run)(GroupContext&);
};

// All checks in canonical report order.
const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& id);

}  // namespace grp
