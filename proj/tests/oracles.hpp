#pragma once

// Slow, literal reference computations used to cross-check the library.
// Everything here works on the raw multiplication table only.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grp/elemset.hpp"
#include "grp/group.hpp"

namespace oracle {

using grp::ElemSet;
using grp::GroupTable;

inline ElemSet mini_closure(const GroupTable& t, ElemSet seed) {
  seed.set(0);
  std::vector<int> work = seed.to_vector();
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (int b : seed.to_vector()) {
      for (int p : {t.at(a, b), t.at(b, a)}) {
        if (!seed.test(p)) {
          seed.set(p);
          work.push_back(p);
        }
      }
    }
  }
  return seed;
}

inline bool closed_under_mul(const GroupTable& t, const std::vector<int>& elems,
                             const ElemSet& s) {
  for (int a : elems)
    for (int b : elems)
      if (!s.test(t.at(a, b))) return false;
  return true;
}

// Every subgroup of a group of order <= 24, found by scanning all subsets of
// the non-identity elements (prefiltered by the Lagrange size condition).
inline std::vector<ElemSet> brute_subgroups(const GroupTable& t) {
  int n = t.order;
  if (n > 24) throw std::runtime_error("brute_subgroups: order too large");
  std::vector<ElemSet> out;
  uint32_t top = uint32_t(1) << (n - 1);
  for (uint32_t mask = 0; mask < top; ++mask) {
    int size = std::popcount(mask) + 1;
    if (n % size != 0) continue;
    ElemSet s(n);
    s.set(0);
    std::vector<int> elems{0};
    for (int i = 1; i < n; ++i)
      if (mask & (uint32_t(1) << (i - 1))) {
        s.set(i);
        elems.push_back(i);
      }
    if (closed_under_mul(t, elems, s)) out.push_back(s);
  }
  return out;
}

inline bool normal_set(const GroupTable& t, const ElemSet& s) {
  for (int g = 0; g < t.order; ++g)
    for (int h : s.to_vector())
      if (!s.test(t.conj(h, g))) return false;
  return true;
}

// H subnormal in K iff a chain H = L0 normal in L1 normal in ... normal in K
// exists; searched over the supplied candidate subgroup sets.
class ChainSubnormal {
 public:
  ChainSubnormal(const GroupTable& t, std::vector<ElemSet> candidates)
      : t_(t), cands_(std::move(candidates)) {}

  bool reachable(const ElemSet& h, const ElemSet& k) {
    if (h == k) return true;
    auto key = std::make_pair(h.to_vector(), k.to_vector());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    for (const ElemSet& l : cands_) {
      if (l == k || !h.subset_of(l) || !l.subset_of(k)) continue;
      if (!normal_in(l, k)) continue;
      if (reachable(h, l)) {
        ok = true;
        break;
      }
    }
    if (!ok && normal_in(h, k)) ok = true;
    memo_[key] = ok;
    return ok;
  }

 private:
  bool normal_in(const ElemSet& s, const ElemSet& k) {
    for (int g : k.to_vector())
      for (int h : s.to_vector())
        if (!s.test(t_.conj(h, g))) return false;
    return true;
  }

  const GroupTable& t_;
  std::vector<ElemSet> cands_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, bool> memo_;
};

// All commutators [a,b] with a in A, b in B.
inline ElemSet commutator_set(const GroupTable& t, const ElemSet& a, const ElemSet& b) {
  ElemSet out(t.order);
  for (int x : a.to_vector())
    for (int y : b.to_vector()) out.set(t.comm(x, y));
  return out;
}

// Direct check: H H^g = H^g H for every g in the whole group.
inline bool conj_permutable_classic(const GroupTable& t, const ElemSet& h, int* first_bad) {
  auto prod = [&](const ElemSet& a, const ElemSet& b) {
    ElemSet r(t.order);
    for (int x : a.to_vector())
      for (int y : b.to_vector()) r.set(t.at(x, y));
    return r;
  };
  for (int g = 0; g < t.order; ++g) {
    ElemSet hg(t.order);
    for (int x : h.to_vector()) hg.set(t.conj(x, g));
    if (hg == h) continue;
    if (!(prod(h, hg) == prod(hg, h))) {
      if (first_bad) *first_bad = g;
      return false;
    }
  }
  return true;
}

}  // namespace oracle
