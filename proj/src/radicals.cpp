#include "grp/radicals.hpp"

#include <string>
#include <unordered_set>

#include "grp/error.hpp"
#include "grp/quotient.hpp"

namespace grp {

static void assert_normal_output(const Subgroup& h, const char* what) {
  check_internal(is_normal(h), what);
}

Subgroup frattini_subgroup(const TablePtr& g, LatticeStore& store) {
  const SubgroupList& lat = store.of(g);
  if (!lat.exhaustive)
    throw BudgetExceeded("frattini: subgroup enumeration over budget at order " +
                         std::to_string(g->order));
  SubgroupList maxes = maximal_subgroups(lat);
  Subgroup out = Subgroup::whole(g);
  if (!maxes.items.empty()) {
    ElemSet inter = maxes.items.front().members();
    for (size_t i = 1; i < maxes.items.size(); ++i) inter &= maxes.items[i].members();
    out = Subgroup::from_closed(g, inter);
  }
  assert_normal_output(out, "frattini subgroup not normal");
  return out;
}

Subgroup frattini_subgroup(const TablePtr& g) {
  LatticeStore store;
  return frattini_subgroup(g, store);
}

Subgroup socle(const TablePtr& g) {
  NormalSubgroups ns = normal_subgroups(g);
  if (ns.minimal.empty()) return Subgroup::trivial(g);
  ElemSet seed(g->order);
  for (const Subgroup& m : ns.minimal) seed |= m.members();
  Subgroup out = closure(g, seed);
  assert_normal_output(out, "socle not normal");
  return out;
}

Subgroup hypercenter(const TablePtr& g, std::vector<Subgroup>* series) {
  if (series) series->clear();
  Subgroup cur = Subgroup::trivial(g);
  for (;;) {
    QuotientMap q = QuotientMap::of(cur);
    Subgroup nxt = q.pull_back(center(q.image()));
    if (nxt == cur) break;
    cur = nxt;
    if (series) series->push_back(cur);
  }
  assert_normal_output(cur, "hypercenter not normal");
  return cur;
}

Subgroup nilpotent_residual(const TablePtr& g, std::vector<Subgroup>* series) {
  if (series) series->clear();
  Subgroup whole = Subgroup::whole(g);
  Subgroup cur = whole;
  if (series) series->push_back(cur);
  for (;;) {
    Subgroup nxt = commutator_subgroup(cur, whole);
    if (nxt == cur) break;
    cur = nxt;
    if (series) series->push_back(cur);
  }
  assert_normal_output(cur, "nilpotent residual not normal");
  return cur;
}

std::vector<Subgroup> derived_series(const TablePtr& g) {
  std::vector<Subgroup> out;
  out.push_back(Subgroup::whole(g));
  for (;;) {
    Subgroup nxt = derived_subgroup(out.back());
    if (nxt == out.back()) break;
    out.push_back(nxt);
  }
  return out;
}

bool is_nilpotent_subgroup(const Subgroup& h) {
  Subgroup cur = h;
  for (;;) {
    Subgroup nxt = commutator_subgroup(cur, h);
    if (nxt == cur) return cur.is_trivial();
    cur = nxt;
  }
}

// Largest normal p-subgroup, found as the intersection of the conjugates of a
// Sylow p-subgroup.  Deliberately avoids the normal-subgroup enumeration so
// the two fitting_subgroup routes stay independent.
static Subgroup sylow_core(const TablePtr& g, int p) {
  Subgroup syl = sylow_subgroup(g, p);
  ElemSet inter = syl.members();
  for (const Subgroup& c : conjugate_orbit(syl)) inter &= c.members();
  return Subgroup::from_closed(g, inter);
}

Subgroup fitting_subgroup(const TablePtr& g) {
  // Route A: join of the nilpotent normal subgroups.
  NormalSubgroups ns = normal_subgroups(g);
  Subgroup a = Subgroup::trivial(g);
  for (const Subgroup& n : ns.all)
    if (!n.members().subset_of(a.members()) && is_nilpotent_subgroup(n)) a = join(a, n);

  // Route B: product of the Sylow cores.
  Subgroup b = Subgroup::trivial(g);
  for (int p : g->prime_factors) {
    Subgroup core = sylow_core(g, p);
    if (!core.is_trivial()) b = join(b, core);
  }

  check_internal(a == b, "fitting subgroup: routes disagree");
  check_internal(is_nilpotent_subgroup(a), "fitting subgroup not nilpotent");
  assert_normal_output(a, "fitting subgroup not normal");
  return a;
}

Subgroup quasinilpotent_radical(const TablePtr& g) {
  Subgroup fit = fitting_subgroup(g);
  Subgroup cf = centralizer_of(fit);
  QuotientMap q = QuotientMap::of(fit);
  Subgroup ximg = q.push_forward(join(cf, fit));
  EmbeddedGroup e = as_group(ximg);
  Subgroup out = q.pull_back(e.lift(socle(e.group)));
  check_internal(out.contains(fit), "quasinilpotent radical lost the fitting subgroup");
  assert_normal_output(out, "quasinilpotent radical not normal");
  return out;
}

Subgroup generalized_fitting(const TablePtr& g, LatticeStore& store) {
  Subgroup phi = frattini_subgroup(g, store);
  QuotientMap q = QuotientMap::of(phi);
  Subgroup out = q.pull_back(socle(q.image()));
  assert_normal_output(out, "generalized fitting subgroup not normal");
  return out;
}

Subgroup generalized_fitting(const TablePtr& g) {
  LatticeStore store;
  return generalized_fitting(g, store);
}

FittingTower generalized_fitting_tower(const TablePtr& g, LatticeStore& store) {
  FittingTower tw;
  tw.levels.push_back(Subgroup::whole(g));
  int cap = 2;
  for (int o = g->order; o > 1; o /= 2) ++cap;  // each strict descent halves the order
  for (int iter = 0;; ++iter) {
    check_internal(iter < cap, "fitting tower failed to stabilize");
    const Subgroup& cur = tw.levels.back();
    EmbeddedGroup e = as_group(cur);
    Subgroup nxt = e.lift(generalized_fitting(e.group, store));
    check_internal(nxt.members().subset_of(cur.members()), "fitting tower level escaped");
    if (nxt == cur) {
      tw.stabilization_index = int(tw.levels.size()) - 1;
      break;
    }
    tw.levels.push_back(nxt);
  }
  for (const Subgroup& lv : tw.levels)
    assert_normal_output(lv, "fitting tower level not normal");
  return tw;
}

FittingTower generalized_fitting_tower(const TablePtr& g) {
  LatticeStore store;
  return generalized_fitting_tower(g, store);
}

Subgroup delta_subgroup(const TablePtr& g, LatticeStore& store) {
  const SubgroupList& lat = store.of(g);
  if (!lat.exhaustive)
    throw BudgetExceeded("delta: subgroup enumeration over budget at order " +
                         std::to_string(g->order));
  ElemSet inter(g->order);
  bool any = false;
  for (const Subgroup& m : maximal_subgroups(lat).items) {
    if (!is_abnormal(m)) continue;
    if (!any) {
      inter = m.members();
      any = true;
    } else {
      inter &= m.members();
    }
  }
  Subgroup out = any ? Subgroup::from_closed(g, inter) : Subgroup::whole(g);
  assert_normal_output(out, "delta subgroup not normal");
  return out;
}

Subgroup delta_subgroup(const TablePtr& g) {
  LatticeStore store;
  return delta_subgroup(g, store);
}

MaximalFunctor MaximalFunctor::all() {
  return {"all", [](const Subgroup&) { return true; }};
}

MaximalFunctor MaximalFunctor::abnormal() {
  return {"abnormal", [](const Subgroup& m) { return is_abnormal(m); }};
}

FunctorFitting functor_fitting(const TablePtr& g, const MaximalFunctor& f, LatticeStore& store) {
  const SubgroupList& lat = store.of(g);
  if (!lat.exhaustive)
    throw BudgetExceeded("functor fitting: subgroup enumeration over budget at order " +
                         std::to_string(g->order));
  std::vector<Subgroup> picked;
  for (const Subgroup& m : maximal_subgroups(lat).items)
    if (f.selects(m)) picked.push_back(m);

  // Closure under conjugation by a generating set implies closure under all
  // conjugations, since (M^a)^b = M^{ab}.
  std::unordered_set<ElemSet, ElemSetHash> picked_sets;
  for (const Subgroup& m : picked) picked_sets.insert(m.members());
  std::vector<int> gens = small_generators(Subgroup::whole(g));
  for (const Subgroup& m : picked)
    for (int x : gens)
      if (!picked_sets.count(conjugate_subgroup(m, x).members()))
        throw NotConjugationClosed("maximal-subgroup selection '" + f.name +
                                   "' is not conjugation-invariant");

  FunctorFitting out;
  out.degenerate = picked.empty();
  if (picked.empty()) {
    out.core = Subgroup::whole(g);
  } else {
    ElemSet inter = picked.front().members();
    for (size_t i = 1; i < picked.size(); ++i) inter &= picked[i].members();
    out.core = Subgroup::from_closed(g, inter);
  }
  if (!is_normal(out.core))
    throw NotNormal("core of maximal-subgroup selection '" + f.name + "' is not normal");
  QuotientMap q = QuotientMap::of(out.core);
  out.radical = q.pull_back(socle(q.image()));
  check_internal(is_normal(out.radical), "functor radical not normal");
  return out;
}

bool is_p_decomposable(const TablePtr& g, int p) {
  const GroupTable& t = *g;
  Subgroup syl = sylow_subgroup(g, p);
  if (!is_normal(syl)) return false;
  ElemSet seed(t.order);
  seed.set(0);
  for (int x = 1; x < t.order; ++x)
    if (t.elt_order[x] % p != 0) seed.set(x);
  Subgroup h = closure(g, seed);
  if (int64_t(h.order()) * syl.order() != t.order) return false;
  std::vector<int> pm = syl.member_list();
  std::vector<int> hm = h.member_list();
  for (int a : pm)
    for (int b : hm)
      if (t.at(a, b) != t.at(b, a)) return false;
  return true;
}

Subgroup p_decomposable_residual(const TablePtr& g, int p) {
  const GroupTable& t = *g;

  // Route A: closure of the commutators [x, y] with x of p-power order and y
  // of prime-power order for a different prime.
  std::vector<int> pelts, qelts;
  for (int x = 1; x < t.order; ++x) {
    int o = t.elt_order[x];
    if (!is_prime_power(o)) continue;
    if (o % p == 0)
      pelts.push_back(x);
    else
      qelts.push_back(x);
  }
  ElemSet seed(t.order);
  seed.set(0);
  for (int a : pelts)
    for (int b : qelts) seed.set(t.comm(a, b));
  Subgroup ra = closure(g, seed);

  // Route B: intersection of the normal subgroups with splitting quotient.
  NormalSubgroups ns = normal_subgroups(g);
  ElemSet inter = ElemSet(t.order);
  bool any = false;
  for (const Subgroup& n : ns.all) {
    QuotientMap q = QuotientMap::of(n);
    if (!is_p_decomposable(q.image(), p)) continue;
    if (!any) {
      inter = n.members();
      any = true;
    } else {
      inter &= n.members();
    }
  }
  check_internal(any, "whole-group quotient must split trivially");
  Subgroup rb = Subgroup::from_closed(g, inter);
  check_internal(is_p_decomposable(QuotientMap::of(rb).image(), p),
                 "intersection of splitting kernels does not split");

  check_internal(ra == rb, "p-decomposable residual: routes disagree");
  assert_normal_output(ra, "p-decomposable residual not normal");
  return ra;
}

GroupClasses classify(const TablePtr& g) {
  GroupClasses c;
  bool sylow_route = true;
  for (int p : g->prime_factors)
    if (!is_normal(sylow_subgroup(g, p))) {
      sylow_route = false;
      break;
    }
  bool series_route = nilpotent_residual(g).is_trivial();
  check_internal(sylow_route == series_route, "nilpotency checks disagree");
  c.nilpotent = series_route;
  c.quasinilpotent = quasinilpotent_radical(g).is_whole();
  c.soluble = derived_series(g).back().is_trivial();
  if (c.soluble) {
    c.supersoluble = true;
    for (int f : chief_series(g).factor_orders)
      if (!is_prime(f)) {
        c.supersoluble = false;
        break;
      }
  }
  return c;
}

bool is_nilpotent(const TablePtr& g) {
  return is_nilpotent_subgroup(Subgroup::whole(g));
}

bool is_supersoluble(const TablePtr& g) {
  for (int f : chief_series(g).factor_orders)
    if (!is_prime(f)) return false;
  return true;
}

RadicalReport radical_report(const TablePtr& g, LatticeStore& store) {
  RadicalReport r;
  r.order = g->order;
  r.phi = frattini_subgroup(g, store);
  r.soc = socle(g);
  r.zcenter = center(g);
  r.zinf = hypercenter(g);
  r.delta = delta_subgroup(g, store);
  r.fit = fitting_subgroup(g);
  r.fstar = quasinilpotent_radical(g);
  r.ftilde = generalized_fitting(g, store);
  r.tower = generalized_fitting_tower(g, store);
  r.ftilde_inf = r.tower.stable();
  r.nilpotent_res = nilpotent_residual(g);
  r.derived = derived_subgroup(Subgroup::whole(g));
  r.classes = classify(g);
  check_internal(r.zinf.members().subset_of(r.fit.members()),
                 "hypercenter escapes the fitting subgroup");
  check_internal(r.fit.members().subset_of(r.fstar.members()),
                 "fitting subgroup escapes the quasinilpotent radical");
  check_internal(r.fstar.members().subset_of(r.ftilde.members()),
                 "quasinilpotent radical escapes the generalized fitting subgroup");
  check_internal(r.phi.members().subset_of(r.ftilde.members()),
                 "frattini subgroup escapes the generalized fitting subgroup");
  return r;
}

}  // namespace grp
