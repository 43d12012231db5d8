#include "grp/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "grp/error.hpp"
#include "grp/quotient.hpp"

namespace grp {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

GroupContext::GroupContext(std::string name, TablePtr table, Budget budget,
                           std::vector<std::string> tags,
                           std::optional<DirectProduct> split)
    : name_(std::move(name)),
      table_(std::move(table)),
      budget_(budget),
      tags_(std::move(tags)),
      split_(std::move(split)),
      store_(budget.max_subgroups) {}

bool GroupContext::has_tag(const std::string& t) const {
  return std::find(tags_.begin(), tags_.end(), t) != tags_.end();
}

const SubgroupList& GroupContext::lattice() {
  const SubgroupList& l = store_.of(table_);
  if (!l.exhaustive)
    throw BudgetExceeded("subgroup enumeration for " + name_ + " exceeds " +
                         std::to_string(store_.max_subgroups()) + " subgroups");
  return l;
}

const SubgroupList& GroupContext::maximals() {
  if (!maximals_) maximals_ = maximal_subgroups(lattice());
  return *maximals_;
}

const NormalSubgroups& GroupContext::normals() {
  if (!normals_) normals_ = normal_subgroups(table_);
  return *normals_;
}

const RadicalReport& GroupContext::radicals() {
  if (!radicals_) radicals_ = radical_report(table_, store_);
  return *radicals_;
}

const EmbeddedGroup& GroupContext::embedded(const Subgroup& h) {
  check_internal(h.parent_ptr().get() == table_.get(), "embedded: foreign subgroup");
  auto it = embedded_.find(h.members());
  if (it == embedded_.end()) it = embedded_.emplace(h.members(), as_group(h)).first;
  return it->second;
}

bool GroupContext::subgroup_nilpotent(const Subgroup& h) {
  auto it = nilp_.find(h.members());
  if (it == nilp_.end()) it = nilp_.emplace(h.members(), is_nilpotent_subgroup(h) ? 1 : 0).first;
  return it->second != 0;
}

bool GroupContext::subgroup_supersoluble(const Subgroup& h) {
  auto it = ssol_.find(h.members());
  if (it == ssol_.end())
    it = ssol_.emplace(h.members(), is_supersoluble(embedded(h).group) ? 1 : 0).first;
  return it->second != 0;
}

bool GroupContext::subgroup_subnormal(const Subgroup& h) {
  auto it = subn_.find(h.members());
  if (it == subn_.end()) {
    bool sn = subnormal_defect(h, Subgroup::whole(table_)).subnormal;
    it = subn_.emplace(h.members(), sn ? 1 : 0).first;
  }
  return it->second != 0;
}

bool GroupContext::subgroup_fit_subnormal(const Subgroup& h) {
  auto it = fsub_.find(h.members());
  if (it == fsub_.end()) {
    bool sn = r_subnormal(h, radicals().fit).yes();
    it = fsub_.emplace(h.members(), sn ? 1 : 0).first;
  }
  return it->second != 0;
}

bool GroupContext::subgroup_abnormal(const Subgroup& h) {
  auto it = abn_.find(h.members());
  if (it == abn_.end()) it = abn_.emplace(h.members(), is_abnormal(h) ? 1 : 0).first;
  return it->second != 0;
}

PredicateResult GroupContext::p_subnormal_join(const Subgroup& h, const Subgroup& r) {
  Subgroup j = join(h, r);
  if (j == h) {
    PredicateResult out;
    out.value = Tri::Yes;
    out.witness = "join equals the subgroup";
    return out;
  }
  if (j.is_whole()) {
    if (!solver_) solver_.emplace(table_, &lattice());
    return solver_->p_subnormal(h);
  }
  return r_p_subnormal(h, r, store_);
}

namespace {

Verdict begin_check(GroupContext& ctx, const char* id) {
  Verdict v;
  v.check_id = id;
  v.group = ctx.name();
  return v;
}

Verdict& holds(Verdict& v) {
  v.status = CheckStatus::Holds;
  return v;
}

Verdict& holds(Verdict& v, std::string w) {
  v.status = CheckStatus::Holds;
  v.witness = std::move(w);
  return v;
}

Verdict& fails(Verdict& v, std::string w) {
  v.status = CheckStatus::Fails;
  v.witness = std::move(w);
  return v;
}

Verdict& vacuous(Verdict& v, std::string w) {
  v.status = CheckStatus::Vacuous;
  v.witness = std::move(w);
  return v;
}

Verdict& skipped(Verdict& v, std::string w) {
  v.status = CheckStatus::Skipped;
  v.witness = std::move(w);
  return v;
}

std::string ord(const Subgroup& h) { return std::to_string(h.order()); }

// Pair/triple quantified checks run only below the order bound, except on
// groups explicitly tagged as the shipped counterexample.
bool quantified_allowed(GroupContext& ctx, Verdict& v) {
  if (ctx.table()->order <= ctx.budget().product_max_order) return true;
  if (ctx.has_tag("counterexample")) return true;
  skipped(v, "order " + std::to_string(ctx.table()->order) + " above quantified-check bound " +
                 std::to_string(ctx.budget().product_max_order));
  return false;
}

bool pair_budget_ok(GroupContext& ctx, Verdict& v) {
  if (v.cost <= ctx.budget().max_pairs) return true;
  skipped(v, "pair budget exhausted after " + std::to_string(ctx.budget().max_pairs));
  return false;
}

// |A B| = |A||B| / |A meet B| as sets, so the cover test needs no product.
bool covers_group(const Subgroup& a, const Subgroup& b, long long n) {
  long long inter = (a.members() & b.members()).count();
  return 1LL * a.order() * b.order() == n * inter;
}

ElemSet conj_set(const GroupTable& t, const ElemSet& s, int g) {
  ElemSet out(t.order);
  for (int x : s.to_vector()) out.set(t.conj(x, g));
  return out;
}

bool set_is_subgroup(const GroupTable& t, const ElemSet& s) {
  if (!s.test(0)) return false;
  return product_set(t, s, s) == s;
}

bool set_is_normal(const GroupTable& t, const ElemSet& s, const std::vector<int>& gens) {
  for (int g : gens)
    if (!(conj_set(t, s, g) == s)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Containment chain of the canonical radicals.

Verdict run_radical_chain(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "radical-chain");
  const RadicalReport& r = ctx.radicals();
  v.cost = 4;
  if (!r.fit.contains(r.phi))
    return fails(v, "frattini subgroup (order " + ord(r.phi) + ") escapes the fitting subgroup");
  if (!r.fstar.contains(r.fit))
    return fails(v, "fitting subgroup escapes the quasinilpotent radical");
  if (!r.ftilde_inf.contains(r.fstar))
    return fails(v, "quasinilpotent radical escapes the stable tower term");
  if (!r.ftilde.contains(r.ftilde_inf))
    return fails(v, "stable tower term escapes the generalized fitting subgroup");
  return holds(v);
}

// ---------------------------------------------------------------------------
// Normality of the maximal subgroups of the Sylow subgroups of the fitting
// subgroup forces supersolubility of a soluble group.

Verdict run_ramadan_criterion(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "ramadan-criterion");
  const RadicalReport& r = ctx.radicals();
  if (!r.classes.soluble) return vacuous(v, "group is not soluble");
  const EmbeddedGroup& ef = ctx.embedded(r.fit);
  for (int p : ef.group->prime_factors) {
    Subgroup syl = sylow_subgroup(ef.group, p);
    EmbeddedGroup ep = as_group(syl);
    SubgroupList maxs = maximal_subgroups(ctx.store().of(ep.group));
    for (const Subgroup& m : maxs.items) {
      ++v.cost;
      Subgroup in_g = ef.lift(ep.lift(m));
      if (!is_normal(in_g))
        return vacuous(v, "maximal subgroup of order " + ord(in_g) + " of the Sylow " +
                              std::to_string(p) +
                              "-subgroup of the fitting subgroup is not normal");
    }
  }
  if (r.classes.supersoluble) return holds(v);
  return fails(v, "hypothesis met yet the group is not supersoluble");
}

// ---------------------------------------------------------------------------
// The maximal subgroups that cover the group against the generalized fitting
// subgroup intersect exactly in the frattini subgroup.

Verdict run_frattini_intersection(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "frattini-intersection");
  const RadicalReport& r = ctx.radicals();
  const TablePtr& g = ctx.table();
  ElemSet inter(g->order);
  for (int i = 0; i < g->order; ++i) inter.set(i);
  for (const Subgroup& m : ctx.maximals().items) {
    ++v.cost;
    if (set_product(m, r.ftilde).size == g->order) inter &= m.members();
  }
  Subgroup got = Subgroup::from_closed(g, inter);
  if (got == r.phi) return holds(v);
  return fails(v, "covering maximal subgroups intersect in order " + ord(got) +
                      ", frattini subgroup has order " + ord(r.phi));
}

// ---------------------------------------------------------------------------
// Prime-index ascent of the maximal subgroups: against the fitting subgroup
// it forces supersolubility of soluble groups; against the generalized
// fitting subgroup it characterizes supersolubility.

Verdict run_psubnormal_criteria(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "psubnormal-criteria");
  const RadicalReport& r = ctx.radicals();

  if (r.classes.soluble) {
    bool premise = true;
    for (const Subgroup& m : ctx.maximals().items) {
      ++v.cost;
      PredicateResult pr = ctx.p_subnormal_join(m, r.fit);
      if (pr.skipped()) return skipped(v, pr.witness);
      if (pr.no()) {
        premise = false;
        break;
      }
    }
    if (premise && !r.classes.supersoluble)
      return fails(v, "every maximal subgroup ascends by prime steps to its join with the "
                      "fitting subgroup, yet the group is not supersoluble");
  }

  bool rhs = true;
  std::string rw;
  for (const Subgroup& m : ctx.maximals().items) {
    ++v.cost;
    PredicateResult pr = ctx.p_subnormal_join(m, r.ftilde);
    if (pr.skipped()) return skipped(v, pr.witness);
    if (pr.no()) {
      rhs = false;
      rw = "maximal subgroup of order " + ord(m) + ": " + pr.witness;
      break;
    }
  }
  if (rhs != r.classes.supersoluble) {
    if (rhs) return fails(v, "all maximal subgroups ascend by prime steps to their joins with "
                             "the generalized fitting subgroup, yet the group is not supersoluble");
    return fails(v, "group is supersoluble but " + rw);
  }
  return holds(v);
}

// ---------------------------------------------------------------------------
// Conjugate permutability of the maximal subgroups against the generalized
// fitting subgroup, and of the Sylow subgroups against the quasinilpotent
// radical, each characterize nilpotency.

Verdict run_conjperm_criteria(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "conjperm-criteria");
  const RadicalReport& r = ctx.radicals();
  bool nil = r.classes.nilpotent;

  bool all_max = true;
  std::string w1;
  for (const Subgroup& m : ctx.maximals().items) {
    ++v.cost;
    PredicateResult pr = r_conjugate_permutable(m, r.ftilde);
    if (pr.no()) {
      all_max = false;
      w1 = "maximal subgroup of order " + ord(m) + ": " + pr.witness;
      break;
    }
  }
  if (all_max != nil)
    return fails(v, nil ? "group is nilpotent but " + w1
                        : "all maximal subgroups permute with their conjugates in the joins "
                          "with the generalized fitting subgroup, yet the group is not nilpotent");

  bool all_syl = true;
  std::string w2;
  for (int p : ctx.table()->prime_factors) {
    ++v.cost;
    Subgroup syl = sylow_subgroup(ctx.table(), p);
    PredicateResult pr = r_conjugate_permutable(syl, r.fstar);
    if (pr.no()) {
      all_syl = false;
      w2 = "Sylow " + std::to_string(p) + "-subgroup: " + pr.witness;
      break;
    }
  }
  if (all_syl != nil)
    return fails(v, nil ? "group is nilpotent but " + w2
                        : "all Sylow subgroups permute with their conjugates in the joins "
                          "with the quasinilpotent radical, yet the group is not nilpotent");
  return holds(v);
}

// ---------------------------------------------------------------------------
// Modulo the frattini subgroup, the abnormal-intersection subgroup equals the
// hypercenter and the center of the quotient; it is also nilpotent.

Verdict run_delta_center_identities(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "delta-center-identities");
  const RadicalReport& r = ctx.radicals();
  v.cost = 4;
  QuotientMap q = QuotientMap::of(r.phi);
  Subgroup d_img = delta_subgroup(q.image(), ctx.store());
  Subgroup d_push = q.push_forward(r.delta);
  if (!(d_img == d_push))
    return fails(v, "abnormal-intersection subgroup of the quotient (order " + ord(d_img) +
                        ") differs from the pushed subgroup (order " + ord(d_push) + ")");
  Subgroup zinf_img = hypercenter(q.image());
  if (!(d_img == zinf_img))
    return fails(v, "abnormal-intersection subgroup of the quotient differs from its "
                    "hypercenter (order " + ord(zinf_img) + ")");
  Subgroup z_img = center(q.image());
  if (!(d_img == z_img))
    return fails(v, "hypercenter of the frattini quotient (order " + ord(zinf_img) +
                        ") differs from its center (order " + ord(z_img) + ")");
  if (!is_nilpotent_subgroup(r.delta))
    return fails(v, "abnormal-intersection subgroup of order " + ord(r.delta) + " is not nilpotent");
  return holds(v);
}

// ---------------------------------------------------------------------------
// The nilpotent residual centralizes the hypercenter.

Verdict run_residual_hypercenter(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "residual-hypercenter");
  const RadicalReport& r = ctx.radicals();
  v.cost = 1;
  Subgroup c = centralizer(ctx.table(), r.zinf.members());
  if (c.contains(r.nilpotent_res)) return holds(v);
  return fails(v, "nilpotent residual of order " + ord(r.nilpotent_res) +
                      " does not centralize the hypercenter of order " + ord(r.zinf));
}

// ---------------------------------------------------------------------------
// The centralizer of the quasinilpotent radical lies in the fitting subgroup.

Verdict run_fstar_centralizer(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "fstar-centralizer");
  const RadicalReport& r = ctx.radicals();
  v.cost = 1;
  Subgroup c = centralizer_of(r.fstar);
  if (r.fit.contains(c)) return holds(v);
  return fails(v, "centralizer of the quasinilpotent radical has order " + ord(c) +
                      " and escapes the fitting subgroup of order " + ord(r.fit));
}

// ---------------------------------------------------------------------------
// A group with nilpotent derived subgroup covered by two subnormal
// supersoluble factors is supersoluble.

Verdict run_product_derived_supersoluble(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "product-derived-supersoluble");
  const RadicalReport& r = ctx.radicals();
  if (!is_nilpotent_subgroup(r.derived))
    return vacuous(v, "derived subgroup is not nilpotent");
  if (!quantified_allowed(ctx, v)) return v;
  const SubgroupList& lat = ctx.lattice();
  long long n = ctx.table()->order;
  for (size_t i = 0; i < lat.items.size(); ++i) {
    const Subgroup& a = lat.items[i];
    if (!ctx.subgroup_supersoluble(a) || !ctx.subgroup_subnormal(a)) continue;
    for (size_t j = i; j < lat.items.size(); ++j) {
      const Subgroup& b = lat.items[j];
      ++v.cost;
      if (!pair_budget_ok(ctx, v)) return v;
      if (!covers_group(a, b, n)) continue;
      if (!ctx.subgroup_supersoluble(b) || !ctx.subgroup_subnormal(b)) continue;
      if (r.classes.supersoluble)
        return holds(v, "e.g. subnormal factors of orders " + ord(a) + " and " + ord(b));
      return fails(v, "subnormal supersoluble factors of orders " + ord(a) + " and " + ord(b) +
                          " cover the group, the derived subgroup is nilpotent, yet the group "
                          "is not supersoluble");
    }
  }
  return vacuous(v, "no covering pair of subnormal supersoluble factors");
}

// ---------------------------------------------------------------------------
// A product of a subnormal supersoluble factor and a normal nilpotent factor
// is supersoluble.

Verdict run_product_normal_supersoluble(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "product-normal-supersoluble");
  const RadicalReport& r = ctx.radicals();
  if (!quantified_allowed(ctx, v)) return v;
  const SubgroupList& lat = ctx.lattice();
  long long n = ctx.table()->order;
  for (const Subgroup& b : ctx.normals().all) {
    if (!ctx.subgroup_nilpotent(b)) continue;
    for (const Subgroup& a : lat.items) {
      ++v.cost;
      if (!pair_budget_ok(ctx, v)) return v;
      if (!covers_group(a, b, n)) continue;
      if (!ctx.subgroup_supersoluble(a) || !ctx.subgroup_subnormal(a)) continue;
      if (r.classes.supersoluble)
        return holds(v, "e.g. subnormal factor of order " + ord(a) +
                            " with normal nilpotent factor of order " + ord(b));
      return fails(v, "subnormal supersoluble factor of order " + ord(a) +
                          " and normal nilpotent factor of order " + ord(b) +
                          " cover the group, yet it is not supersoluble");
    }
  }
  return vacuous(v, "no qualifying factor pair");
}

// ---------------------------------------------------------------------------
// Commutator identities for generating pairs: [A,B] is normal, A[A,B] and
// B[A,B] are normal, A B [A,B] covers the group and A'B'[A,B] is the derived
// subgroup.  Verified on a deterministic sample of subgroup pairs.

constexpr long long kPairSample = 512;

Verdict run_join_commutator_identities(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "join-commutator-identities");
  if (!quantified_allowed(ctx, v)) return v;
  const SubgroupList& lat = ctx.lattice();
  const GroupTable& t = *ctx.table();
  const RadicalReport& r = ctx.radicals();
  std::vector<int> gens = small_generators(Subgroup::whole(ctx.table()));
  long long k = static_cast<long long>(lat.items.size());
  long long total = k * k;
  long long stride = std::max(1LL, total / kPairSample);
  for (long long idx = 0;; idx += stride) {
    long long i, j;
    if (idx < total) {
      i = idx / k;
      j = idx % k;
    } else {
      i = k - 1;  // force the whole-group pair so at least one join covers G
      j = k - 1;
    }
    const Subgroup& a = lat.items[i];
    const Subgroup& b = lat.items[j];
    ++v.cost;
    Subgroup jn = join(a, b);
    if (jn.is_whole()) {
      std::string pair = "pair of orders " + ord(a) + " and " + ord(b);
      Subgroup c = commutator_subgroup(a, b);
      if (!is_normal(c))
        return fails(v, pair + ": commutator subgroup of order " + ord(c) + " is not normal");
      ElemSet pa = product_set(t, a.members(), c.members());
      ElemSet pb = product_set(t, b.members(), c.members());
      if (!set_is_subgroup(t, pa) || !set_is_normal(t, pa, gens))
        return fails(v, pair + ": first factor times the commutator subgroup is not normal");
      if (!set_is_subgroup(t, pb) || !set_is_normal(t, pb, gens))
        return fails(v, pair + ": second factor times the commutator subgroup is not normal");
      ElemSet triple = product_set(t, product_set(t, a.members(), b.members()), c.members());
      if (triple.count() != t.order)
        return fails(v, pair + ": factors times the commutator subgroup cover only " +
                            std::to_string(triple.count()) + " elements");
      ElemSet drv = product_set(
          t, product_set(t, derived_subgroup(a).members(), derived_subgroup(b).members()),
          c.members());
      if (!(drv == r.derived.members()))
        return fails(v, pair + ": derived factors times the commutator subgroup differ from "
                            "the derived subgroup");
    }
    if (idx >= total) break;
  }
  return holds(v);
}

// ---------------------------------------------------------------------------
// Identities of the iterated generalized fitting tower.

Verdict run_tower_identities(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "tower-identities");
  const RadicalReport& r = ctx.radicals();
  const FittingTower& tw = r.tower;
  const TablePtr& g = ctx.table();
  const NormalSubgroups& ns = ctx.normals();
  int top = std::max(1, tw.stabilization_index);

  struct PerNormal {
    QuotientMap q;
    FittingTower img_tower;
    FittingTower sub_tower;
    const EmbeddedGroup* emb;
  };
  std::vector<PerNormal> per;
  per.reserve(ns.all.size());
  for (const Subgroup& nn : ns.all) {
    ++v.cost;
    QuotientMap q = QuotientMap::of(nn);
    FittingTower img = generalized_fitting_tower(q.image(), ctx.store());
    const EmbeddedGroup& e = ctx.embedded(nn);
    FittingTower sub = generalized_fitting_tower(e.group, ctx.store());
    per.push_back(PerNormal{std::move(q), std::move(img), std::move(sub), &e});
  }

  std::optional<FittingTower> ltower, rtower;
  const EmbeddedGroup* el = nullptr;
  const EmbeddedGroup* er = nullptr;
  if (ctx.split()) {
    el = &ctx.embedded(ctx.split()->left);
    er = &ctx.embedded(ctx.split()->right);
    ltower = generalized_fitting_tower(el->group, ctx.store());
    rtower = generalized_fitting_tower(er->group, ctx.store());
  }

  for (int lvl = 1; lvl <= top; ++lvl) {
    std::string at = "level " + std::to_string(lvl) + ": ";
    const Subgroup& fn = tw.level(lvl);
    const Subgroup& fprev = tw.level(lvl - 1);
    if (!fn.contains(r.fstar))
      return fails(v, at + "quasinilpotent radical escapes the tower term");
    Subgroup cg = centralizer(g, fn.members());
    if (!r.fit.contains(cg))
      return fails(v, at + "centralizer of the tower term (order " + ord(cg) +
                          ") escapes the fitting subgroup");
    const EmbeddedGroup& ep = ctx.embedded(fprev);
    Subgroup phi_prev = ep.lift(frattini_subgroup(ep.group, ctx.store()));
    if (phi_prev.is_trivial() && !(fn == r.fstar))
      return fails(v, at + "previous term has trivial frattini subgroup but the tower term "
                          "differs from the quasinilpotent radical");
    for (size_t k = 0; k < ns.all.size(); ++k) {
      ++v.cost;
      const Subgroup& nn = ns.all[k];
      Subgroup push = per[k].q.push_forward(fn);
      const Subgroup& img_term = per[k].img_tower.level(lvl);
      if (!img_term.contains(push))
        return fails(v, at + "image of the tower term escapes the tower term of the quotient "
                            "by the normal subgroup of order " + ord(nn));
      if (phi_prev.contains(nn) && !(img_term == push))
        return fails(v, at + "quotient by a normal subgroup of order " + ord(nn) +
                            " inside the frattini subgroup of the previous term changes the "
                            "tower term");
      Subgroup lifted = per[k].emb->lift(per[k].sub_tower.level(lvl));
      if (!fn.contains(lifted))
        return fails(v, at + "tower term of the normal subgroup of order " + ord(nn) +
                            " escapes the tower term of the group");
    }
    if (ltower) {
      Subgroup fl = el->lift(ltower->level(lvl));
      Subgroup fr = er->lift(rtower->level(lvl));
      ElemSet prod = product_set(*g, fl.members(), fr.members());
      if (!(prod == fn.members()))
        return fails(v, at + "tower term differs from the product of the factor tower terms");
    }
  }
  return holds(v);
}

// ---------------------------------------------------------------------------
// The abnormal-intersection subgroup sits inside the generalized fitting
// subgroup and quotienting by it commutes with that radical.

Verdict run_delta_quotient(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "delta-quotient");
  const RadicalReport& r = ctx.radicals();
  v.cost = 2;
  if (!r.ftilde.contains(r.delta))
    return fails(v, "abnormal-intersection subgroup escapes the generalized fitting subgroup");
  QuotientMap q = QuotientMap::of(r.delta);
  Subgroup img_rad = generalized_fitting(q.image(), ctx.store());
  Subgroup push = q.push_forward(r.ftilde);
  if (!(img_rad == push))
    return fails(v, "generalized fitting subgroup of the quotient (order " + ord(img_rad) +
                        ") differs from the pushed radical (order " + ord(push) + ")");
  return holds(v);
}

// ---------------------------------------------------------------------------
// The abnormal selection of maximal subgroups reproduces the generalized
// fitting subgroup.

Verdict run_delta_functor(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "delta-functor");
  const RadicalReport& r = ctx.radicals();
  v.cost = 1;
  FunctorFitting ff = functor_fitting(ctx.table(), MaximalFunctor::abnormal(), ctx.store());
  if (!(ff.core == r.delta))
    return fails(v, "abnormal selection core has order " + ord(ff.core) +
                        ", abnormal-intersection subgroup has order " + ord(r.delta));
  if (!(ff.radical == r.ftilde))
    return fails(v, "abnormal selection radical has order " + ord(ff.radical) +
                        ", generalized fitting subgroup has order " + ord(r.ftilde));
  return holds(v);
}

// ---------------------------------------------------------------------------
// Every conjugation-invariant selection of maximal subgroups yields a radical
// containing the generalized fitting subgroup and absorbing its centralizer;
// the full selection reproduces the frattini-based construction exactly.

Verdict run_mfunctor_bound(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "mfunctor-bound");
  const RadicalReport& r = ctx.radicals();
  FunctorFitting all = functor_fitting(ctx.table(), MaximalFunctor::all(), ctx.store());
  v.cost = 2;
  if (!(all.core == r.phi) || !(all.radical == r.ftilde))
    return fails(v, "full selection gives core of order " + ord(all.core) +
                        " and radical of order " + ord(all.radical) +
                        ", expected the frattini subgroup and the generalized fitting subgroup");
  for (const MaximalFunctor& f : {MaximalFunctor::all(), MaximalFunctor::abnormal()}) {
    ++v.cost;
    FunctorFitting ff = functor_fitting(ctx.table(), f, ctx.store());
    if (!ff.radical.contains(r.ftilde))
      return fails(v, f.name + " selection radical of order " + ord(ff.radical) +
                          " does not contain the generalized fitting subgroup");
    Subgroup c = centralizer_of(ff.radical);
    if (!ff.radical.contains(c))
      return fails(v, f.name + " selection radical does not absorb its centralizer (order " +
                          ord(c) + ")");
  }
  return holds(v);
}

// ---------------------------------------------------------------------------
// Subnormality of every maximal subgroup in its join with the generalized
// fitting subgroup characterizes nilpotency; otherwise some abnormal maximal
// subgroup avoids that radical.

Verdict run_maximal_subnormal_nilpotency(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "maximal-subnormal-nilpotency");
  const RadicalReport& r = ctx.radicals();
  bool nil = r.classes.nilpotent;
  bool rhs = true;
  std::string rw;
  for (const Subgroup& m : ctx.maximals().items) {
    ++v.cost;
    PredicateResult pr = r_subnormal(m, r.ftilde);
    if (pr.no()) {
      rhs = false;
      rw = "maximal subgroup of order " + ord(m) + ": " + pr.witness;
      break;
    }
  }
  if (rhs != nil) {
    if (rhs) return fails(v, "all maximal subgroups are subnormal in their joins with the "
                             "generalized fitting subgroup, yet the group is not nilpotent");
    return fails(v, "group is nilpotent but " + rw);
  }
  if (!nil) {
    bool found = false;
    for (const Subgroup& m : ctx.maximals().items) {
      ++v.cost;
      if (!m.contains(r.ftilde) && ctx.subgroup_abnormal(m)) {
        found = true;
        break;
      }
    }
    if (!found)
      return fails(v, "group is not nilpotent yet every abnormal maximal subgroup contains "
                      "the generalized fitting subgroup");
  }
  return holds(v);
}

// ---------------------------------------------------------------------------
// Six equivalent readings of nilpotency through the quasinilpotent radical:
// abnormal subgroups, Sylow normalizers, primary cyclic subgroups and Sylow
// subgroups subnormal in their joins with it, and the radical lying inside
// every Sylow normalizer.

Verdict run_sylow_fstar_criteria(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "sylow-fstar-criteria");
  const RadicalReport& r = ctx.radicals();
  const TablePtr& g = ctx.table();
  bool nil = r.classes.nilpotent;

  bool abn_ok = true;
  std::string w_abn;
  for (const Subgroup& h : ctx.lattice().items) {
    ++v.cost;
    if (!ctx.subgroup_abnormal(h)) continue;
    PredicateResult pr = r_subnormal(h, r.fstar);
    if (pr.no()) {
      abn_ok = false;
      w_abn = "abnormal subgroup of order " + ord(h);
      break;
    }
  }

  bool norm_ok = true, syl_ok = true, inside_ok = true;
  std::string w_syl;
  for (int p : g->prime_factors) {
    ++v.cost;
    Subgroup syl = sylow_subgroup(g, p);
    Subgroup nz = normalizer(syl);
    if (norm_ok && !r_subnormal(nz, r.fstar).yes()) {
      norm_ok = false;
      w_syl = "normalizer of the Sylow " + std::to_string(p) + "-subgroup";
    }
    if (syl_ok && !r_subnormal(syl, r.fstar).yes()) syl_ok = false;
    if (inside_ok && !nz.contains(r.fstar)) inside_ok = false;
  }

  bool cyc_ok = true;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  for (int e = 1; e < g->order && cyc_ok; ++e) {
    if (!is_prime_power(g->elt_order[e])) continue;
    Subgroup c = closure(g, std::vector<int>{e});
    if (!seen.insert(c.members()).second) continue;
    ++v.cost;
    if (!r_subnormal(c, r.fstar).yes()) cyc_ok = false;
  }

  bool vals[6] = {nil, abn_ok, norm_ok, cyc_ok, syl_ok, inside_ok};
  const char* names[6] = {"nilpotency",
                          "abnormal subgroups subnormal against the quasinilpotent radical",
                          "Sylow normalizers subnormal against the quasinilpotent radical",
                          "primary cyclic subgroups subnormal against the quasinilpotent radical",
                          "Sylow subgroups subnormal against the quasinilpotent radical",
                          "quasinilpotent radical inside every Sylow normalizer"};
  for (int i = 1; i < 6; ++i)
    if (vals[i] != vals[0])
      return fails(v, std::string(names[i]) + " is " + (vals[i] ? "true" : "false") + " while " +
                          names[0] + " is " + (vals[0] ? "true" : "false") +
                          (w_abn.empty() ? "" : " (" + w_abn + ")") +
                          (w_syl.empty() ? "" : " (" + w_syl + ")"));
  return holds(v);
}

// ---------------------------------------------------------------------------
// A cover by two nilpotent factors subnormal against the fitting subgroup
// forces nilpotency.

Verdict run_product_nilpotent(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "product-nilpotent");
  const RadicalReport& r = ctx.radicals();
  if (!quantified_allowed(ctx, v)) return v;
  const SubgroupList& lat = ctx.lattice();
  long long n = ctx.table()->order;
  for (size_t i = 0; i < lat.items.size(); ++i) {
    const Subgroup& a = lat.items[i];
    if (!ctx.subgroup_nilpotent(a) || !ctx.subgroup_fit_subnormal(a)) continue;
    for (size_t j = i; j < lat.items.size(); ++j) {
      const Subgroup& b = lat.items[j];
      ++v.cost;
      if (!pair_budget_ok(ctx, v)) return v;
      if (!covers_group(a, b, n)) continue;
      if (!ctx.subgroup_nilpotent(b) || !ctx.subgroup_fit_subnormal(b)) continue;
      if (r.classes.nilpotent)
        return holds(v, "e.g. nilpotent factors of orders " + ord(a) + " and " + ord(b));
      return fails(v, "nilpotent factors of orders " + ord(a) + " and " + ord(b) +
                          ", both subnormal in their joins with the fitting subgroup, cover "
                          "the group, yet it is not nilpotent");
    }
  }
  return vacuous(v, "no covering pair of qualifying nilpotent factors");
}

// ---------------------------------------------------------------------------
// Two supersoluble subgroups subnormal against the fitting subgroup whose
// join is the whole group and whose commutator subgroup is nilpotent force
// supersolubility.

Verdict run_join_supersoluble(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "join-supersoluble");
  const RadicalReport& r = ctx.radicals();
  if (!quantified_allowed(ctx, v)) return v;
  const SubgroupList& lat = ctx.lattice();
  for (size_t i = 0; i < lat.items.size(); ++i) {
    const Subgroup& a = lat.items[i];
    if (!ctx.subgroup_supersoluble(a) || !ctx.subgroup_fit_subnormal(a)) continue;
    for (size_t j = i; j < lat.items.size(); ++j) {
      const Subgroup& b = lat.items[j];
      ++v.cost;
      if (!pair_budget_ok(ctx, v)) return v;
      if (!ctx.subgroup_supersoluble(b) || !ctx.subgroup_fit_subnormal(b)) continue;
      if (!join(a, b).is_whole()) continue;
      Subgroup c = commutator_subgroup(a, b);
      if (!ctx.subgroup_nilpotent(c)) continue;
      if (r.classes.supersoluble)
        return holds(v, "e.g. generating supersoluble factors of orders " + ord(a) + " and " +
                            ord(b));
      return fails(v, "supersoluble factors of orders " + ord(a) + " and " + ord(b) +
                          " generate the group with nilpotent commutator subgroup of order " +
                          ord(c) + ", yet the group is not supersoluble");
    }
  }
  return vacuous(v, "no generating pair with nilpotent commutator subgroup");
}

// ---------------------------------------------------------------------------
// Coprime-index scans share this class decomposition: qualifying subgroups
// grouped by their index in the group.

struct IndexClasses {
  std::vector<long long> values;  // sorted distinct index values
  std::unordered_map<long long, std::vector<int>> members;
};

template <typename Qual>
IndexClasses index_classes(const SubgroupList& lat, long long n, Qual qual) {
  IndexClasses ic;
  for (size_t i = 0; i < lat.items.size(); ++i) {
    if (!qual(lat.items[i])) continue;
    long long val = n / lat.items[i].order();
    auto [it, fresh] = ic.members.try_emplace(val);
    if (fresh) ic.values.push_back(val);
    it->second.push_back(static_cast<int>(i));
  }
  std::sort(ic.values.begin(), ic.values.end());
  return ic;
}

Verdict run_coprime_triples_generic(GroupContext& ctx, const char* id, bool need_fit_subnormal,
                                    bool need_fit_inside) {
  Verdict v = begin_check(ctx, id);
  const RadicalReport& r = ctx.radicals();
  if (!quantified_allowed(ctx, v)) return v;
  const SubgroupList& lat = ctx.lattice();
  long long n = ctx.table()->order;
  IndexClasses ic = index_classes(lat, n, [&](const Subgroup& h) {
    if (!ctx.subgroup_supersoluble(h)) return false;
    if (need_fit_subnormal && !ctx.subgroup_fit_subnormal(h)) return false;
    return true;
  });
  const ElemSet& fit = r.fit.members();
  for (size_t x = 0; x < ic.values.size(); ++x) {
    for (size_t y = x; y < ic.values.size(); ++y) {
      if (x == y && ic.values[x] != 1) continue;
      if (std::gcd(ic.values[x], ic.values[y]) != 1) continue;
      for (size_t z = y; z < ic.values.size(); ++z) {
        if (z == y && ic.values[z] != 1) continue;
        if (std::gcd(ic.values[x], ic.values[z]) != 1) continue;
        if (std::gcd(ic.values[y], ic.values[z]) != 1) continue;
        for (int ai : ic.members[ic.values[x]])
          for (int bi : ic.members[ic.values[y]])
            for (int ci : ic.members[ic.values[z]]) {
              ++v.cost;
              if (v.cost > ctx.budget().max_triples)
                return skipped(v, "triple budget exhausted after " +
                                      std::to_string(ctx.budget().max_triples));
              const Subgroup& a = lat.items[ai];
              const Subgroup& b = lat.items[bi];
              const Subgroup& c = lat.items[ci];
              if (need_fit_inside &&
                  (!fit.subset_of(a.members()) || !fit.subset_of(b.members()) ||
                   !fit.subset_of(c.members())))
                continue;
              if (r.classes.supersoluble)
                return holds(v, "e.g. factors of orders " + ord(a) + ", " + ord(b) + ", " +
                                    ord(c) + " with pairwise coprime indexes");
              return fails(v, "supersoluble factors of orders " + ord(a) + ", " + ord(b) +
                                  ", " + ord(c) +
                                  " have pairwise coprime indexes, yet the group is not "
                                  "supersoluble");
            }
      }
    }
  }
  return vacuous(v, "no qualifying triple with pairwise coprime indexes");
}

Verdict run_coprime_triples(GroupContext& ctx) {
  return run_coprime_triples_generic(ctx, "coprime-triples", /*need_fit_subnormal=*/true,
                                     /*need_fit_inside=*/false);
}

Verdict run_coprime_triples_core(GroupContext& ctx) {
  return run_coprime_triples_generic(ctx, "coprime-triples-core", /*need_fit_subnormal=*/false,
                                     /*need_fit_inside=*/true);
}

// ---------------------------------------------------------------------------
// The stable tower term is the largest normal subgroup whose quotient by its
// own frattini subgroup is quasinilpotent.

Verdict run_tower_radical(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "tower-radical");
  const RadicalReport& r = ctx.radicals();
  const TablePtr& g = ctx.table();
  auto qualifies = [&](const Subgroup& nn) {
    const EmbeddedGroup& e = ctx.embedded(nn);
    Subgroup phi_n = frattini_subgroup(e.group, ctx.store());
    TablePtr img = QuotientMap::of(phi_n).image();
    return quasinilpotent_radical(img).is_whole();
  };
  Subgroup best = Subgroup::trivial(g);
  for (const Subgroup& nn : ctx.normals().all) {
    ++v.cost;
    if (qualifies(nn)) best = join(best, nn);
  }
  if (!is_normal(best) || !qualifies(best))
    return fails(v, "join of the qualifying normal subgroups (order " + ord(best) +
                        ") does not itself qualify");
  if (best == r.ftilde_inf) return holds(v);
  return fails(v, "largest normal subgroup with quasinilpotent frattini quotient has order " +
                      ord(best) + ", stable tower term has order " + ord(r.ftilde_inf));
}

// ---------------------------------------------------------------------------
// Probes for the open questions: tower stabilization depth, the stable-term
// variant of the maximal-subgroup nilpotency criterion, and the two-factor
// variant of the coprime-index supersolubility criterion.

Verdict run_probe_stabilization(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "probe-stabilization");
  const RadicalReport& r = ctx.radicals();
  v.cost = static_cast<long long>(r.tower.levels.size());
  v.witness = "stabilization index " + std::to_string(r.tower.stabilization_index);
  v.status = r.tower.stabilization_index <= 1 ? CheckStatus::Holds : CheckStatus::Fails;
  return v;
}

Verdict run_probe_stable_nilpotency(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "probe-stable-nilpotency");
  const RadicalReport& r = ctx.radicals();
  bool nil = r.classes.nilpotent;
  bool rhs = true;
  std::string rw;
  for (const Subgroup& m : ctx.maximals().items) {
    ++v.cost;
    PredicateResult pr = r_subnormal(m, r.ftilde_inf);
    if (pr.no()) {
      rhs = false;
      rw = "maximal subgroup of order " + ord(m) + ": " + pr.witness;
      break;
    }
  }
  if (rhs == nil) return holds(v);
  if (rhs)
    return fails(v, "all maximal subgroups are subnormal in their joins with the stable tower "
                    "term, yet the group is not nilpotent");
  return fails(v, "group is nilpotent but " + rw);
}

Verdict run_probe_coprime_pairs(GroupContext& ctx) {
  Verdict v = begin_check(ctx, "probe-coprime-pairs");
  const RadicalReport& r = ctx.radicals();
  if (!quantified_allowed(ctx, v)) return v;
  const SubgroupList& lat = ctx.lattice();
  long long n = ctx.table()->order;
  IndexClasses ic = index_classes(lat, n, [&](const Subgroup& h) {
    return ctx.subgroup_supersoluble(h) && ctx.subgroup_fit_subnormal(h);
  });
  for (size_t x = 0; x < ic.values.size(); ++x)
    for (size_t y = x; y < ic.values.size(); ++y) {
      if (x == y && ic.values[x] != 1) continue;
      if (std::gcd(ic.values[x], ic.values[y]) != 1) continue;
      for (int ai : ic.members[ic.values[x]])
        for (int bi : ic.members[ic.values[y]]) {
          ++v.cost;
          if (!pair_budget_ok(ctx, v)) return v;
          const Subgroup& a = lat.items[ai];
          const Subgroup& b = lat.items[bi];
          if (r.classes.supersoluble)
            return holds(v, "e.g. factors of orders " + ord(a) + " and " + ord(b) +
                                " with coprime indexes");
          return fails(v, "supersoluble factors of orders " + ord(a) + " and " + ord(b) +
                              " with coprime indexes " + std::to_string(n / a.order()) +
                              " and " + std::to_string(n / b.order()) +
                              " cover the group, yet it is not supersoluble");
        }
    }
  return vacuous(v, "no qualifying pair with coprime indexes");
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = {
      {"radical-chain", false,
       "containment chain of the frattini, fitting, quasinilpotent and generalized fitting "
       "subgroups",
       &run_radical_chain},
      {"ramadan-criterion", false,
       "normal maximal subgroups of the Sylow subgroups of the fitting subgroup force "
       "supersolubility",
       &run_ramadan_criterion},
      {"frattini-intersection", false,
       "maximal subgroups covering the group against the generalized fitting subgroup meet in "
       "the frattini subgroup",
       &run_frattini_intersection},
      {"psubnormal-criteria", false,
       "prime-index ascent of maximal subgroups characterizes supersolubility",
       &run_psubnormal_criteria},
      {"conjperm-criteria", false,
       "conjugate permutability of maximal and Sylow subgroups characterizes nilpotency",
       &run_conjperm_criteria},
      {"delta-center-identities", false,
       "abnormal-intersection subgroup equals center and hypercenter modulo the frattini "
       "subgroup",
       &run_delta_center_identities},
      {"residual-hypercenter", false, "the nilpotent residual centralizes the hypercenter",
       &run_residual_hypercenter},
      {"fstar-centralizer", false,
       "the centralizer of the quasinilpotent radical lies in the fitting subgroup",
       &run_fstar_centralizer},
      {"product-derived-supersoluble", false,
       "two subnormal supersoluble factors with nilpotent derived subgroup force "
       "supersolubility",
       &run_product_derived_supersoluble},
      {"product-normal-supersoluble", false,
       "a subnormal supersoluble factor times a normal nilpotent factor forces "
       "supersolubility",
       &run_product_normal_supersoluble},
      {"join-commutator-identities", false,
       "commutator identities for pairs generating the group", &run_join_commutator_identities},
      {"tower-identities", false, "identities of the iterated generalized fitting tower",
       &run_tower_identities},
      {"delta-quotient", false,
       "the abnormal-intersection subgroup respects the generalized fitting subgroup",
       &run_delta_quotient},
      {"delta-functor", false,
       "the abnormal maximal-subgroup selection reproduces the generalized fitting subgroup",
       &run_delta_functor},
      {"mfunctor-bound", false,
       "every maximal-subgroup selection dominates the generalized fitting subgroup",
       &run_mfunctor_bound},
      {"maximal-subnormal-nilpotency", false,
       "subnormality of maximal subgroups against the generalized fitting subgroup "
       "characterizes nilpotency",
       &run_maximal_subnormal_nilpotency},
      {"sylow-fstar-criteria", false,
       "six equivalent nilpotency readings through the quasinilpotent radical",
       &run_sylow_fstar_criteria},
      {"product-nilpotent", false,
       "a cover by two nilpotent factors subnormal against the fitting subgroup forces "
       "nilpotency",
       &run_product_nilpotent},
      {"join-supersoluble", false,
       "generating supersoluble factors with nilpotent commutator subgroup force "
       "supersolubility",
       &run_join_supersoluble},
      {"coprime-triples", false,
       "three qualifying supersoluble factors with pairwise coprime indexes force "
       "supersolubility",
       &run_coprime_triples},
      {"coprime-triples-core", false,
       "three supersoluble factors over the fitting subgroup with pairwise coprime indexes "
       "force supersolubility",
       &run_coprime_triples_core},
      {"tower-radical", false,
       "the stable tower term is the largest normal subgroup with quasinilpotent frattini "
       "quotient",
       &run_tower_radical},
      {"probe-stabilization", true, "depth of the generalized fitting tower",
       &run_probe_stabilization},
      {"probe-stable-nilpotency", true,
       "maximal-subgroup subnormality against the stable tower term versus nilpotency",
       &run_probe_stable_nilpotency},
      {"probe-coprime-pairs", true,
       "two-factor variant of the coprime-index supersolubility criterion",
       &run_probe_coprime_pairs},
  };
  return defs;
}

const CheckDef* find_check(const std::string& id) {
  for (const CheckDef& d : check_registry())
    if (id == d.id) return &d;
  return nullptr;
}

}  // namespace grp
