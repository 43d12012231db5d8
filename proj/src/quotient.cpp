#include "grp/quotient.hpp"

#include "grp/error.hpp"

namespace grp {

QuotientMap QuotientMap::of(const Subgroup& kernel) {
  if (!is_normal(kernel)) throw NotNormal("quotient: kernel is not normal");
  QuotientMap q;
  q.source_ = kernel.parent_ptr();
  q.kernel_ = kernel;
  const GroupTable& t = *q.source_;
  int n = t.order;

  if (kernel.is_trivial()) {
    q.image_ = q.source_;
    q.elt_map_.resize(n);
    for (int i = 0; i < n; ++i) q.elt_map_[i] = uint16_t(i);
    return q;
  }

  auto ker = kernel.member_list();
  q.elt_map_.assign(n, 0xffff);
  std::vector<int> rep;
  for (int x = 0; x < n; ++x) {
    if (q.elt_map_[x] != 0xffff) continue;
    int c = int(rep.size());
    rep.push_back(x);
    for (int h : ker) q.elt_map_[t.at(x, h)] = uint16_t(c);
  }
  int m = int(rep.size());
  check_internal(m * kernel.order() == n, "quotient: cosets do not partition the group");

  std::vector<uint16_t> mul(size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[size_t(a) * m + b] = q.elt_map_[t.at(rep[a], rep[b])];
  q.image_ = table_from_mul(m, std::move(mul));

  for (int x = 0; x < n; ++x) {
    check_internal((q.elt_map_[x] == 0) == kernel.contains(x),
                   "quotient: fiber over identity is not the kernel");
    for (int y = 0; y < n; ++y)
      check_internal(q.elt_map_[t.at(x, y)] == q.image_->at(q.elt_map_[x], q.elt_map_[y]),
                     "quotient: element map is not a homomorphism");
  }
  return q;
}

Subgroup QuotientMap::push_forward(const Subgroup& h) const {
  check_internal(h.parent_ptr().get() == source_.get(), "push_forward: wrong parent");
  ElemSet m(image_->order);
  h.members().for_each([&](int x) { m.set(elt_map_[x]); });
  return Subgroup::from_closed(image_, std::move(m));
}

Subgroup QuotientMap::pull_back(const Subgroup& k) const {
  check_internal(k.parent_ptr().get() == image_.get(), "pull_back: wrong parent");
  ElemSet m(source_->order);
  for (int x = 0; x < source_->order; ++x)
    if (k.contains(elt_map_[x])) m.set(x);
  return Subgroup::from_closed(source_, std::move(m));
}

}  // namespace grp
