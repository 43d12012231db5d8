#include "grp/functors.hpp"

#include "grp/error.hpp"

namespace grp {

PredicateResult r_subnormal(const Subgroup& h, const Subgroup& r) {
  Subgroup j = join(h, r);
  SubnormalChain sc = subnormal_defect(h, j);
  PredicateResult out;
  if (sc.subnormal) {
    out.value = Tri::Yes;
    out.witness = "defect " + std::to_string(sc.defect) + " in join of order " +
                  std::to_string(j.order());
  } else {
    out.value = Tri::No;
    out.witness = "normal closure stalls at order " +
                  std::to_string(sc.chain.back().order()) + " in join of order " +
                  std::to_string(j.order());
  }
  return out;
}

PredicateResult conjugate_permutable_in(const Subgroup& h, const Subgroup& k) {
  check_internal(h.same_parent(k) && k.contains(h),
                 "conjugate_permutable_in: subgroup must lie inside the scope");
  const GroupTable& t = h.table();
  PredicateResult out;
  out.value = Tri::Yes;
  for (int x : k.member_list()) {
    Subgroup hx = conjugate_subgroup(h, x);
    if (hx == h) continue;
    ElemSet ab = product_set(t, h.members(), hx.members());
    ElemSet ba = product_set(t, hx.members(), h.members());
    if (!(ab == ba)) {
      out.value = Tri::No;
      out.witness = "products differ for conjugator " + std::to_string(x);
      return out;
    }
  }
  return out;
}

PredicateResult r_conjugate_permutable(const Subgroup& h, const Subgroup& r) {
  return conjugate_permutable_in(h, join(h, r));
}

PSubnormalSolver::PSubnormalSolver(TablePtr g, const SubgroupList* lattice)
    : g_(std::move(g)), lattice_(lattice) {
  memo_.assign(lattice_->items.size(), -1);
  next_.assign(lattice_->items.size(), -1);
  for (size_t i = 0; i < lattice_->items.size(); ++i) {
    index_[lattice_->items[i].members()] = static_cast<int>(i);
  }
}

bool PSubnormalSolver::reach(int i) {
  if (memo_[i] != -1) return memo_[i] == 1;
  const Subgroup& cur = lattice_->items[i];
  if (cur.is_whole()) {
    memo_[i] = 1;
    return true;
  }
  memo_[i] = 0;
  // Candidates in canonical order: a prime-index step admits no intermediate
  // subgroup, so every step of a valid chain appears here.
  for (size_t j = 0; j < lattice_->items.size(); ++j) {
    const Subgroup& up = lattice_->items[j];
    if (up.order() <= cur.order() || up.order() % cur.order() != 0) continue;
    if (!is_prime(up.order() / cur.order())) continue;
    if (!cur.members().subset_of(up.members())) continue;
    if (reach(static_cast<int>(j))) {
      memo_[i] = 1;
      next_[i] = static_cast<int>(j);
      return true;
    }
  }
  return false;
}

PredicateResult PSubnormalSolver::p_subnormal(const Subgroup& h) {
  check_internal(h.parent_ptr().get() == g_.get(),
                 "p_subnormal: subgroup belongs to a different table");
  PredicateResult out;
  if (h.is_whole()) {
    out.value = Tri::Yes;
    out.witness = "equals the whole group";
    return out;
  }
  if (!lattice_->exhaustive) {
    out.value = Tri::Skipped;
    out.witness = "subgroup enumeration incomplete";
    return out;
  }
  auto it = index_.find(h.members());
  check_internal(it != index_.end(), "p_subnormal: subgroup missing from lattice");
  if (reach(it->second)) {
    out.value = Tri::Yes;
    std::string chain = std::to_string(h.order());
    for (int i = it->second; !lattice_->items[i].is_whole(); i = next_[i]) {
      chain += " < " + std::to_string(lattice_->items[next_[i]].order());
    }
    out.witness = "prime-index chain " + chain;
  } else {
    out.value = Tri::No;
    out.witness = "no prime-index ascent to the whole group";
  }
  return out;
}

PredicateResult r_p_subnormal(const Subgroup& h, const Subgroup& r, LatticeStore& store) {
  Subgroup j = join(h, r);
  if (j == h) {
    PredicateResult out;
    out.value = Tri::Yes;
    out.witness = "join equals the subgroup";
    return out;
  }
  if (j.is_whole()) {
    PSubnormalSolver solver(h.parent_ptr(), &store.of(h.parent_ptr()));
    return solver.p_subnormal(h);
  }
  EmbeddedGroup e = as_group(j);
  std::unordered_map<int, int> back;
  for (int i = 0; i < e.group->order; ++i) back[e.to_parent[i]] = i;
  ElemSet hm(e.group->order);
  for (int x : h.member_list()) hm.set(back.at(x));
  Subgroup hin = Subgroup::from_closed(e.group, hm);
  PSubnormalSolver solver(e.group, &store.of(e.group));
  return solver.p_subnormal(hin);
}

}  // namespace grp
