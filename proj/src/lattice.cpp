#include "grp/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "grp/error.hpp"

namespace grp {

SubgroupList all_subgroups(const TablePtr& g, int max_subgroups) {
  const GroupTable& t = *g;
  SubgroupList out;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<Subgroup> list;
  std::vector<std::vector<int>> gensets;

  auto try_add = [&](Subgroup s, std::vector<int> gens) {
    if (!seen.insert(s.members()).second) return false;
    list.push_back(std::move(s));
    gensets.push_back(std::move(gens));
    return true;
  };

  try_add(Subgroup::trivial(g), {});
  std::vector<int> cyclic_ids;
  bool truncated = false;
  for (int x = 1; x < t.order && !truncated; ++x) {
    int one[] = {x};
    Subgroup c = closure(g, one);
    if (int(list.size()) >= max_subgroups && !seen.count(c.members())) {
      truncated = true;
      break;
    }
    if (try_add(std::move(c), {x})) cyclic_ids.push_back(int(list.size()) - 1);
  }

  for (size_t i = 0; i < list.size() && !truncated; ++i) {
    for (int ci : cyclic_ids) {
      if (list[ci].members().subset_of(list[i].members())) continue;
      std::vector<int> gens = gensets[i];
      gens.push_back(gensets[ci][0]);
      Subgroup j = closure(g, gens);
      if (seen.count(j.members())) continue;
      if (int(list.size()) >= max_subgroups) {
        truncated = true;
        break;
      }
      try_add(std::move(j), std::move(gens));
    }
  }

  out.items = std::move(list);
  out.exhaustive = !truncated;
  std::sort(out.items.begin(), out.items.end(), Subgroup::canonical_less);
  return out;
}

SubgroupList maximal_subgroups(const SubgroupList& all) {
  SubgroupList out;
  out.exhaustive = all.exhaustive;
  const auto& v = all.items;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_whole()) continue;
    bool maximal = true;
    for (size_t j = 0; j < v.size(); ++j) {
      if (j == i || v[j].is_whole()) continue;
      if (v[j].order() > v[i].order() && v[i].members().subset_of(v[j].members())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.items.push_back(v[i]);
  }
  return out;
}

SubgroupList maximal_subgroups(const TablePtr& g, int max_subgroups) {
  return maximal_subgroups(all_subgroups(g, max_subgroups));
}

NormalSubgroups normal_subgroups(const TablePtr& g) {
  const GroupTable& t = *g;
  int n = t.order;

  // Closures of conjugacy classes generate every normal subgroup under joins.
  std::vector<char> classed(n, 0);
  std::vector<Subgroup> base;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members()).second) base.push_back(std::move(s));
  };
  add(Subgroup::trivial(g));
  for (int x = 1; x < n; ++x) {
    if (classed[x]) continue;
    ElemSet cls(n);
    for (int y = 0; y < n; ++y) {
      int c = t.conj(x, y);
      cls.set(c);
      classed[c] = 1;
    }
    add(closure(g, cls));
  }

  std::vector<Subgroup> list = base;
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t b = 0; b < base.size(); ++b) {
      if (base[b].members().subset_of(list[i].members())) continue;
      Subgroup j = join(list[i], base[b]);
      if (seen.insert(j.members()).second) list.push_back(std::move(j));
    }

  NormalSubgroups out;
  out.all = std::move(list);
  std::sort(out.all.begin(), out.all.end(), Subgroup::canonical_less);
  for (const Subgroup& s : out.all) {
    if (s.is_trivial()) continue;
    bool minimal = true;
    for (const Subgroup& o : out.all) {
      if (o.is_trivial() || o == s) continue;
      if (o.order() < s.order() && o.members().subset_of(s.members())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.minimal.push_back(s);
  }
  return out;
}

SubgroupList intermediate_subgroups(const SubgroupList& all, const Subgroup& h) {
  SubgroupList out;
  out.exhaustive = all.exhaustive;
  for (const Subgroup& s : all.items)
    if (h.members().subset_of(s.members())) out.items.push_back(s);
  return out;
}

Subgroup normal_closure(const Subgroup& h, const Subgroup& k) {
  check_internal(h.same_parent(k), "normal_closure: different parents");
  check_internal(h.members().subset_of(k.members()), "normal_closure: h not inside k");
  const GroupTable& t = h.table();
  std::vector<int> gens = small_generators(h);
  std::vector<int> kgens = small_generators(k);
  Subgroup s = closure(h.parent_ptr(), gens);
  for (;;) {
    bool grew = false;
    for (int g : kgens) {
      std::vector<int> missing;
      s.members().for_each([&](int x) {
        int c = t.conj(x, g);
        if (!s.contains(c)) missing.push_back(c);
      });
      if (!missing.empty()) {
        for (int c : missing) gens.push_back(c);
        s = closure(h.parent_ptr(), gens);
        gens = small_generators(s);
        grew = true;
      }
    }
    if (!grew) return s;
  }
}

SubnormalChain subnormal_defect(const Subgroup& h, const Subgroup& k) {
  check_internal(h.members().subset_of(k.members()), "subnormal_defect: h not inside k");
  SubnormalChain r;
  Subgroup cur = k;
  r.chain.push_back(cur);
  for (;;) {
    if (cur == h) {
      r.subnormal = true;
      return r;
    }
    Subgroup nxt = normal_closure(h, cur);
    if (nxt == cur) {
      r.subnormal = false;
      return r;
    }
    cur = std::move(nxt);
    r.chain.push_back(cur);
    ++r.defect;
  }
}

bool is_abnormal(const Subgroup& h) {
  const GroupTable& t = h.table();
  // An abnormal subgroup is self-normalizing; reject cheaply first.
  if (normalizer(h).order() != h.order()) return h.is_whole();
  std::vector<int> gens = small_generators(h);
  std::vector<int> seed(gens);
  seed.resize(gens.size() * 2);
  for (int g = 0; g < t.order; ++g) {
    if (h.contains(g)) continue;
    for (size_t i = 0; i < gens.size(); ++i) seed[gens.size() + i] = t.conj(gens[i], g);
    Subgroup j = closure(h.parent_ptr(), seed);
    if (!j.contains(g)) return false;
  }
  return true;
}

ChiefSeries chief_series(const TablePtr& g, ChiefTieBreak tie) {
  std::vector<Subgroup> asc;
  Subgroup cur = Subgroup::trivial(g);
  asc.push_back(cur);
  while (!cur.is_whole()) {
    QuotientMap q = QuotientMap::of(cur);
    NormalSubgroups ns = normal_subgroups(q.image());
    check_internal(!ns.minimal.empty(), "chief_series: no minimal normal subgroup");
    const Subgroup* pick = &ns.minimal.front();
    if (tie == ChiefTieBreak::LargestFactor) {
      for (const Subgroup& s : ns.minimal)
        if (s.order() > pick->order()) pick = &s;
    }
    cur = q.pull_back(*pick);
    asc.push_back(cur);
  }
  ChiefSeries out;
  out.chain.assign(asc.rbegin(), asc.rend());
  for (size_t i = 0; i + 1 < out.chain.size(); ++i)
    out.factor_orders.push_back(out.chain[i].order() / out.chain[i + 1].order());
  return out;
}

const SubgroupList& LatticeStore::of(const TablePtr& g) {
  auto it = map_.find(g.get());
  if (it == map_.end()) {
    it = map_.emplace(g.get(), all_subgroups(g, max_)).first;
    keep_.emplace(g.get(), g);
  }
  return it->second;
}

}  // namespace grp
