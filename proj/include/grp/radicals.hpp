#pragma once

#include <algorithm>
#include <functional>
#include <string>

#include "grp/lattice.hpp"

namespace grp {

// Intersection of the maximal subgroups (G itself when none exist).
Subgroup frattini_subgroup(const TablePtr& g, LatticeStore& store);
Subgroup frattini_subgroup(const TablePtr& g);

// Product of the minimal normal subgroups (trivial when none exist).
Subgroup socle(const TablePtr& g);

// Stable term of the upper central series; *series receives Z1 <= Z2 <= ...
Subgroup hypercenter(const TablePtr& g, std::vector<Subgroup>* series = nullptr);

// Stable term of the lower central series; *series receives G >= [G,G] >= ...
Subgroup nilpotent_residual(const TablePtr& g, std::vector<Subgroup>* series = nullptr);

std::vector<Subgroup> derived_series(const TablePtr& g);

// Lower central series of a subgroup computed inside its parent.
bool is_nilpotent_subgroup(const Subgroup& h);

// Largest normal nilpotent subgroup.  Two independent routes (join of the
// nilpotent normal subgroups; product of the Sylow cores) must agree or
// InternalDisagreement is thrown.
Subgroup fitting_subgroup(const TablePtr& g);

// Largest normal quasinilpotent subgroup, via the fitting quotient formula.
Subgroup quasinilpotent_radical(const TablePtr& g);

// Preimage of the socle of G modulo its Frattini subgroup.
Subgroup generalized_fitting(const TablePtr& g, LatticeStore& store);
Subgroup generalized_fitting(const TablePtr& g);

struct FittingTower {
  std::vector<Subgroup> levels;   // levels[0] = G, strictly descending
  int stabilization_index = 0;    // least n with level n == level n+1

  const Subgroup& stable() const { return levels.back(); }
  const Subgroup& level(size_t n) const { return levels[std::min(n, levels.size() - 1)]; }
};
FittingTower generalized_fitting_tower(const TablePtr& g, LatticeStore& store);
FittingTower generalized_fitting_tower(const TablePtr& g);

// Intersection of the abnormal maximal subgroups (G when none exist).
Subgroup delta_subgroup(const TablePtr& g, LatticeStore& store);
Subgroup delta_subgroup(const TablePtr& g);

// Conjugation-invariant selection of maximal subgroups.
struct MaximalFunctor {
  std::string name;
  std::function<bool(const Subgroup&)> selects;

  static MaximalFunctor all();
  static MaximalFunctor abnormal();
};

struct FunctorFitting {
  Subgroup core;     // intersection of {G} and the selected maximal subgroups
  Subgroup radical;  // preimage of socle(G / core)
  bool degenerate = false;  // the selected family was empty, so core = radical = G
};
// Throws NotConjugationClosed if the selection is not conjugation-invariant,
// NotNormal if the resulting core is not normal.
FunctorFitting functor_fitting(const TablePtr& g, const MaximalFunctor& f, LatticeStore& store);

// Smallest normal subgroup whose quotient splits as Sylow-p times a
// complement.  Dual routes: commutator generation from p-elements against
// coprime prime-power elements, and a scan over all normal subgroups.
Subgroup p_decomposable_residual(const TablePtr& g, int p);
bool is_p_decomposable(const TablePtr& g, int p);

struct GroupClasses {
  bool nilpotent = false;
  bool quasinilpotent = false;
  bool soluble = false;
  bool supersoluble = false;
};
GroupClasses classify(const TablePtr& g);

// Cheaper single-property probes for per-subgroup scans.
bool is_nilpotent(const TablePtr& g);     // lower central series reaches 1
bool is_supersoluble(const TablePtr& g);  // every chief factor has prime order

struct RadicalReport {
  int order = 1;
  Subgroup phi, soc, zcenter, zinf, delta, fit, fstar, ftilde, ftilde_inf;
  FittingTower tower;
  Subgroup nilpotent_res, derived;
  GroupClasses classes;
};
RadicalReport radical_report(const TablePtr& g, LatticeStore& store);

}  // namespace grp
