#include "grp/subgroup.hpp"

#include <algorithm>

#include "grp/error.hpp"

namespace grp {

namespace {

void check_lagrange(const GroupTable& t, const ElemSet& members, int count) {
  check_internal(count > 0 && members.test(0), "subgroup: identity missing");
  check_internal(t.order % count == 0, "subgroup: Lagrange divisibility fails");
}

}  // namespace

Subgroup Subgroup::from_closed(TablePtr parent, ElemSet members) {
  Subgroup s;
  s.order_ = members.count();
  check_lagrange(*parent, members, s.order_);
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  return s;
}

Subgroup Subgroup::from_members(TablePtr parent, ElemSet members) {
  const GroupTable& t = *parent;
  auto mem = members.to_vector();
  for (int a : mem)
    for (int b : mem)
      check_internal(members.test(t.at(a, b)), "subgroup: set not closed under products");
  return from_closed(std::move(parent), std::move(members));
}

Subgroup Subgroup::trivial(TablePtr parent) {
  ElemSet m(parent->order);
  m.set(0);
  return from_closed(std::move(parent), std::move(m));
}

Subgroup Subgroup::whole(TablePtr parent) {
  ElemSet m(parent->order);
  for (int i = 0; i < parent->order; ++i) m.set(i);
  return from_closed(std::move(parent), std::move(m));
}

Subgroup closure(const TablePtr& parent, std::span<const int> seed) {
  const GroupTable& t = *parent;
  ElemSet s(t.order);
  std::vector<int> q;
  q.reserve(64);
  s.set(0);
  q.push_back(0);
  for (int g : seed)
    if (!s.test(g)) {
      s.set(g);
      q.push_back(g);
    }
  for (size_t i = 0; i < q.size(); ++i)
    for (int g : seed) {
      int v = t.at(q[i], g);
      if (!s.test(v)) {
        s.set(v);
        q.push_back(v);
      }
    }
  return Subgroup::from_closed(parent, std::move(s));
}

Subgroup closure(const TablePtr& parent, const ElemSet& seed) {
  return closure(parent, std::span<const int>(seed.to_vector()));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  check_internal(a.same_parent(b), "join: different parents");
  if (b.members().subset_of(a.members())) return a;
  if (a.members().subset_of(b.members())) return b;
  std::vector<int> seed = small_generators(a);
  for (int g : small_generators(b)) seed.push_back(g);
  return closure(a.parent_ptr(), seed);
}

ElemSet product_set(const GroupTable& t, const ElemSet& a, const ElemSet& b) {
  ElemSet p(t.order);
  auto bv = b.to_vector();
  a.for_each([&](int x) {
    for (int y : bv) p.set(t.at(x, y));
  });
  return p;
}

SetProduct set_product(const Subgroup& a, const Subgroup& b) {
  check_internal(a.same_parent(b), "set_product: different parents");
  const GroupTable& t = a.table();
  SetProduct r;
  r.elems = product_set(t, a.members(), b.members());
  r.size = r.elems.count();
  r.is_subgroup = (r.elems == product_set(t, b.members(), a.members()));
  return r;
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  const GroupTable& t = h.table();
  ElemSet m(t.order);
  h.members().for_each([&](int x) { m.set(t.conj(x, g)); });
  return Subgroup::from_closed(h.parent_ptr(), std::move(m));
}

Subgroup centralizer(const TablePtr& parent, const ElemSet& s) {
  const GroupTable& t = *parent;
  auto sv = s.to_vector();
  ElemSet m(t.order);
  for (int g = 0; g < t.order; ++g) {
    bool ok = true;
    for (int x : sv)
      if (t.at(g, x) != t.at(x, g)) {
        ok = false;
        break;
      }
    if (ok) m.set(g);
  }
  return Subgroup::from_closed(parent, std::move(m));
}

Subgroup centralizer_of(const Subgroup& h) { return centralizer(h.parent_ptr(), h.members()); }

Subgroup center(const TablePtr& parent) {
  ElemSet all(parent->order);
  for (int i = 0; i < parent->order; ++i) all.set(i);
  return centralizer(parent, all);
}

namespace {

bool conj_stable(const GroupTable& t, const ElemSet& members, const std::vector<int>& mem, int g) {
  for (int h : mem)
    if (!members.test(t.conj(h, g))) return false;
  return true;
}

}  // namespace

Subgroup normalizer(const Subgroup& h) {
  const GroupTable& t = h.table();
  auto mem = h.member_list();
  ElemSet m(t.order);
  for (int g = 0; g < t.order; ++g)
    if (conj_stable(t, h.members(), mem, g)) m.set(g);
  return Subgroup::from_closed(h.parent_ptr(), std::move(m));
}

bool is_normal(const Subgroup& h) {
  const GroupTable& t = h.table();
  auto mem = h.member_list();
  for (int g = 0; g < t.order; ++g)
    if (!conj_stable(t, h.members(), mem, g)) return false;
  return true;
}

bool is_normal_in(const Subgroup& h, const Subgroup& k) {
  const GroupTable& t = h.table();
  auto mem = h.member_list();
  bool ok = true;
  k.members().for_each([&](int g) {
    if (ok && !conj_stable(t, h.members(), mem, g)) ok = false;
  });
  return ok;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  check_internal(a.same_parent(b), "commutator: different parents");
  const GroupTable& t = a.table();
  ElemSet seed(t.order);
  auto bv = b.member_list();
  a.members().for_each([&](int x) {
    for (int y : bv) seed.set(t.comm(x, y));
  });
  return closure(a.parent_ptr(), seed);
}

Subgroup derived_subgroup(const Subgroup& a) { return commutator_subgroup(a, a); }

std::vector<int> small_generators(const Subgroup& h) {
  std::vector<int> gens;
  if (h.is_trivial()) return gens;
  ElemSet cur(h.table().order);
  cur.set(0);
  for (;;) {
    int pick = -1;
    auto hv = h.member_list();
    for (int x : hv)
      if (!cur.test(x)) {
        pick = x;
        break;
      }
    if (pick < 0) break;
    gens.push_back(pick);
    cur = closure(h.parent_ptr(), gens).members();
  }
  return gens;
}

EmbeddedGroup as_group(const Subgroup& h) {
  EmbeddedGroup e;
  e.parent = h.parent_ptr();
  if (h.is_whole()) {
    e.group = h.parent_ptr();
    e.to_parent.resize(h.order());
    for (int i = 0; i < h.order(); ++i) e.to_parent[i] = uint16_t(i);
    return e;
  }
  const GroupTable& t = h.table();
  auto mem = h.member_list();  // ascending, so identity stays at index 0
  int m = int(mem.size());
  std::vector<int> pos(t.order, -1);
  for (int i = 0; i < m; ++i) pos[mem[i]] = i;
  std::vector<uint16_t> mul(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = pos[t.at(mem[i], mem[j])];
      check_internal(p >= 0, "as_group: set not closed");
      mul[size_t(i) * m + j] = uint16_t(p);
    }
  e.group = table_from_mul(m, std::move(mul));
  e.to_parent.assign(mem.begin(), mem.end());
  return e;
}

Subgroup EmbeddedGroup::lift(const Subgroup& sub_of_group) const {
  check_internal(sub_of_group.parent_ptr().get() == group.get(), "lift: wrong parent");
  ElemSet m(parent->order);
  sub_of_group.members().for_each([&](int i) { m.set(to_parent[i]); });
  return Subgroup::from_closed(parent, std::move(m));
}

Subgroup sylow_subgroup(const TablePtr& parent, int p) {
  const GroupTable& t = *parent;
  int target = p_part(t.order, p);
  Subgroup s = Subgroup::trivial(parent);
  if (target == 1) return s;
  std::vector<int> gens;
  while (s.order() < target) {
    Subgroup n = normalizer(s);
    int pick = -1;
    auto nv = n.member_list();
    for (int x : nv) {
      if (s.contains(x)) continue;
      int o = t.elt_order[x];
      if (o > 1 && p_part(o, p) == o) {
        pick = x;
        break;
      }
    }
    check_internal(pick >= 0, "sylow: normalizer contains no new p-element");
    gens.push_back(pick);
    s = closure(parent, gens);
    check_internal(s.order() == p_part(s.order(), p), "sylow: grown subgroup is not a p-group");
  }
  check_internal(s.order() == target, "sylow: wrong final order");
  return s;
}

std::vector<Subgroup> conjugate_orbit(const Subgroup& h) {
  const GroupTable& t = h.table();
  std::vector<Subgroup> orbit;
  std::vector<ElemSet> seen;
  for (int g = 0; g < t.order; ++g) {
    Subgroup c = conjugate_subgroup(h, g);
    if (std::find(seen.begin(), seen.end(), c.members()) == seen.end()) {
      seen.push_back(c.members());
      orbit.push_back(std::move(c));
    }
  }
  std::sort(orbit.begin(), orbit.end(), Subgroup::canonical_less);
  return orbit;
}

DirectProduct direct_product(const TablePtr& g, const TablePtr& h, int cap) {
  int n1 = g->order, n2 = h->order;
  if (n1 * n2 > cap) throw OrderExceedsCap("direct product exceeds cap " + std::to_string(cap));
  int n = n1 * n2;
  std::vector<uint16_t> mul(size_t(n) * n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          mul[size_t(a1 * n2 + a2) * n + (b1 * n2 + b2)] =
              uint16_t(g->at(a1, b1) * n2 + h->at(a2, b2));
  DirectProduct dp;
  dp.table = table_from_mul(n, std::move(mul));
  ElemSet left(n), right(n);
  for (int a = 0; a < n1; ++a) left.set(a * n2);
  for (int b = 0; b < n2; ++b) right.set(b);
  dp.left = Subgroup::from_closed(dp.table, std::move(left));
  dp.right = Subgroup::from_closed(dp.table, std::move(right));
  return dp;
}

}  // namespace grp
