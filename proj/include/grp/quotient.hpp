#pragma once

#include "grp/subgroup.hpp"

namespace grp {

// Quotient by a normal subgroup.  Cosets are numbered by their minimal
// source element index, so the identity coset is 0.  Quotient by the trivial
// subgroup shares the source table with an identity element map.
class QuotientMap {
 public:
  static QuotientMap of(const Subgroup& kernel);  // throws NotNormal

  const TablePtr& source() const { return source_; }
  const TablePtr& image() const { return image_; }
  const Subgroup& kernel() const { return kernel_; }

  int map(int x) const { return elt_map_[x]; }
  const std::vector<uint16_t>& elt_map() const { return elt_map_; }

  Subgroup push_forward(const Subgroup& h) const;  // h <= source
  Subgroup pull_back(const Subgroup& k) const;     // k <= image

 private:
  TablePtr source_, image_;
  Subgroup kernel_;
  std::vector<uint16_t> elt_map_;
};

}  // namespace grp
