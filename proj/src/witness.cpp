#include "grp/witness.hpp"

#include <functional>

#include "grp/error.hpp"
#include "grp/functors.hpp"
#include "grp/radicals.hpp"
#include "grp/subgroup.hpp"

namespace grp {

namespace {

constexpr int kP = 7;

int point(int x, int y) {
  return kP * (((x % kP) + kP) % kP) + (((y % kP) + kP) % kP);
}

Perm grid_perm(const std::function<std::pair<int, int>(int, int)>& f) {
  std::vector<uint16_t> img(kP * kP);
  for (int x = 0; x < kP; ++x)
    for (int y = 0; y < kP; ++y) {
      auto [u, v] = f(x, y);
      img[point(x, y)] = static_cast<uint16_t>(point(u, v));
    }
  return Perm(std::move(img));
}

int locate(const GroupTable& t, const Perm& p) {
  for (int i = 0; i < t.order; ++i)
    if (t.elt_perm[i] == p) return i;
  throw ConstructionFailed("witness generator missing from the built table");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionFailed("witness certification failed: " + what);
}

}  // namespace

GroupSpec witness_group_spec() {
  GroupSpec spec;
  spec.name = "W294";
  spec.degree = kP * kP;
  // Translation by (1,0); the order-3 map (x,y) -> (-y, x-y); the swap.
  spec.generators.push_back(grid_perm([](int x, int y) { return std::pair(x + 1, y); }));
  spec.generators.push_back(grid_perm([](int x, int y) { return std::pair(-y, x - y); }));
  spec.generators.push_back(grid_perm([](int x, int y) { return std::pair(y, x); }));
  return spec;
}

WitnessCertificate certify_witness_group() {
  GroupSpec spec = witness_group_spec();
  TablePtr g = build_group(spec);
  WitnessCertificate cert;
  cert.table = g;

  require(g->order == 294, "order is " + std::to_string(g->order) + ", wanted 294");
  cert.lines.push_back("order 294 on 49 points");

  int t1 = locate(*g, spec.generators[0]);
  int rot = locate(*g, spec.generators[1]);
  int swp = locate(*g, spec.generators[2]);
  int t2 = g->conj(t1, rot);  // conjugating a translation gives the other basis translation

  Subgroup v = closure(g, std::vector<int>{t1, t2});
  require(v.order() == 49, "translation subgroup has order " + std::to_string(v.order()));
  Subgroup fit = fitting_subgroup(g);
  require(fit == v, "fitting subgroup differs from the translation subgroup");
  cert.lines.push_back("fitting subgroup = translation subgroup, order 49");

  Subgroup a = closure(g, std::vector<int>{t1, t2, rot});
  Subgroup b = closure(g, std::vector<int>{t1, t2, swp});
  require(a.order() == 147, "factor A has order " + std::to_string(a.order()));
  require(b.order() == 98, "factor B has order " + std::to_string(b.order()));
  require(is_supersoluble(as_group(a).group), "factor A is not supersoluble");
  require(is_supersoluble(as_group(b).group), "factor B is not supersoluble");
  cert.lines.push_back("factor A: order 147, supersoluble");
  cert.lines.push_back("factor B: order 98, supersoluble");

  SetProduct ab = set_product(a, b);
  require(ab.size == g->order, "set product A*B covers only " + std::to_string(ab.size) +
                                   " of " + std::to_string(g->order) + " elements");
  cert.lines.push_back("A * B covers the whole group as a set product");

  GroupClasses cls = classify(g);
  require(cls.soluble, "whole group is not soluble");
  require(!cls.supersoluble, "whole group is unexpectedly supersoluble");
  bool big_factor = false;
  for (int f : chief_series(g).factor_orders)
    if (f == 49) big_factor = true;
  require(big_factor, "no chief factor of order 49");
  cert.lines.push_back("whole group: soluble, not supersoluble (chief factor of order 49)");

  // Both relational readings hold for the factors against the fitting
  // subgroup: each factor is subnormal in its join with it, and each factor
  // permutes with all of its conjugates there.
  require(r_subnormal(a, fit).yes(), "factor A is not subnormal in its join with the fitting subgroup");
  require(r_subnormal(b, fit).yes(), "factor B is not subnormal in its join with the fitting subgroup");
  require(r_conjugate_permutable(a, fit).yes(), "factor A fails conjugate permutability");
  require(r_conjugate_permutable(b, fit).yes(), "factor B fails conjugate permutability");
  cert.lines.push_back(
      "both factors are subnormal in, and conjugate-permutable in, their joins "
      "with the fitting subgroup");

  return cert;
}

}  // namespace grp
