#pragma once

#include <span>
#include <vector>

#include "grp/elemset.hpp"
#include "grp/group.hpp"

namespace grp {

// Subgroup of a fixed parent table, stored as a membership set.
// Construction asserts the identity bit, closure (for from_members) and
// Lagrange divisibility.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup from_members(TablePtr parent, ElemSet members);  // verifies closure
  static Subgroup trivial(TablePtr parent);
  static Subgroup whole(TablePtr parent);

  const TablePtr& parent_ptr() const { return parent_; }
  const GroupTable& table() const { return *parent_; }
  const ElemSet& members() const { return members_; }
  std::vector<int> member_list() const { return members_.to_vector(); }

  int order() const { return order_; }
  bool contains(int g) const { return members_.test(g); }
  bool contains(const Subgroup& h) const { return h.members_.subset_of(members_); }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == parent_->order; }
  bool same_parent(const Subgroup& o) const { return parent_.get() == o.parent_.get(); }

  bool operator==(const Subgroup& o) const {
    return parent_.get() == o.parent_.get() && members_ == o.members_;
  }

  // Canonical order: by order, then lexicographic membership sequence.
  static bool canonical_less(const Subgroup& a, const Subgroup& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return ElemSet::lex_less(a.members_, b.members_);
  }

  // Internal factory for sets already known to be closed (Lagrange still checked).
  static Subgroup from_closed(TablePtr parent, ElemSet members);

 private:
  TablePtr parent_;
  ElemSet members_;
  int order_ = 0;
};

Subgroup closure(const TablePtr& parent, std::span<const int> seed);
Subgroup closure(const TablePtr& parent, const ElemSet& seed);
Subgroup join(const Subgroup& a, const Subgroup& b);

struct SetProduct {
  ElemSet elems;
  int size = 0;
  bool is_subgroup = false;  // true iff AB = BA, i.e. the product set is a subgroup
};
SetProduct set_product(const Subgroup& a, const Subgroup& b);
ElemSet product_set(const GroupTable& t, const ElemSet& a, const ElemSet& b);

Subgroup conjugate_subgroup(const Subgroup& h, int g);

Subgroup centralizer(const TablePtr& parent, const ElemSet& s);
Subgroup centralizer_of(const Subgroup& h);
Subgroup center(const TablePtr& parent);

Subgroup normalizer(const Subgroup& h);
bool is_normal(const Subgroup& h);                             // in the whole parent
bool is_normal_in(const Subgroup& h, const Subgroup& k);       // h <= k assumed

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const Subgroup& a);

// Greedy minimal-index generating set; at most log2(order) elements.
std::vector<int> small_generators(const Subgroup& h);

// A subgroup reindexed as a group in its own right, 0 = identity, elements in
// ascending parent order.  as_group of the whole group shares the table.
struct EmbeddedGroup {
  TablePtr group;
  TablePtr parent;
  std::vector<uint16_t> to_parent;

  Subgroup lift(const Subgroup& sub_of_group) const;  // -> subgroup of parent
  int lift_elt(int i) const { return to_parent[i]; }
};
EmbeddedGroup as_group(const Subgroup& h);

// Deterministic normalizer-growth construction; trivial subgroup when p
// does not divide the order.
Subgroup sylow_subgroup(const TablePtr& parent, int p);

// All conjugates of a Sylow subgroup, canonically sorted.
std::vector<Subgroup> conjugate_orbit(const Subgroup& h);

struct DirectProduct {
  TablePtr table;
  Subgroup left, right;
};
DirectProduct direct_product(const TablePtr& g, const TablePtr& h, int cap = kDefaultOrderCap);

}  // namespace grp
