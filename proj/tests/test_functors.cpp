// Predicate-level tests: subnormality in joins, conjugate permutability,
// and prime-index reachability, cross-checked against brute-force oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "grp/catalog.hpp"
#include "grp/functors.hpp"
#include "grp/lattice.hpp"
#include "grp/radicals.hpp"
#include "oracles.hpp"

using namespace grp;

namespace {

std::map<std::string, PreparedGroup> by_name() {
  std::map<std::string, PreparedGroup> out;
  for (PreparedGroup& pg : builtin_catalog()) out.emplace(pg.name, std::move(pg));
  return out;
}

// Element index whose permutation image equals img.
int find_perm(const GroupTable& t, const std::vector<int>& img) {
  for (int e = 0; e < t.order; ++e) {
    bool ok = true;
    for (size_t p = 0; p < img.size(); ++p)
      if (t.elt_perm[e][p] != img[p]) { ok = false; break; }
    if (ok) return e;
  }
  REQUIRE(false);
  return -1;
}

Subgroup point_stabilizer(const TablePtr& t, int point) {
  ElemSet s(t->order);
  for (int e = 0; e < t->order; ++e)
    if (t->elt_perm[e][point] == point) s.set(e);
  return Subgroup::from_members(t, s);
}

}  // namespace

TEST_CASE("normal subgroups are subnormal over every radical") {
  LatticeStore store;
  for (const PreparedGroup& pg : builtin_catalog()) {
    CAPTURE(pg.name);
    RadicalReport r = radical_report(pg.table, store);
    for (const Subgroup& h : normal_subgroups(pg.table).all) {
      for (const Subgroup* rad : {&r.fit, &r.fstar, &r.ftilde}) {
        PredicateResult pr = r_subnormal(h, *rad);
        CHECK(pr.yes());
        CHECK(!pr.witness.empty());
      }
    }
  }
}

TEST_CASE("subnormality verdicts carry informative witnesses") {
  auto cat = by_name();
  const PreparedGroup& s3 = cat.at("S3");
  Subgroup refl = closure(s3.table, std::vector<int>{2});  // order-2 reflection
  REQUIRE(refl.order() == 2);

  PredicateResult no = r_subnormal(refl, Subgroup::whole(s3.table));
  CHECK(no.no());
  CHECK(no.witness == "normal closure stalls at order 6 in join of order 6");

  Subgroup rot = closure(s3.table, std::vector<int>{1});  // order-3 rotation
  PredicateResult yes = r_subnormal(rot, refl);
  CHECK(yes.yes());
  CHECK(yes.witness == "defect 1 in join of order 6");
}

TEST_CASE("conjugate permutability matches the quadratic definition") {
  LatticeStore store;
  for (const PreparedGroup& pg : builtin_catalog(24)) {
    CAPTURE(pg.name);
    Subgroup whole = Subgroup::whole(pg.table);
    for (const Subgroup& h : store.of(pg.table).items) {
      PredicateResult pr = conjugate_permutable_in(h, whole);
      int first_bad = -1;
      bool classic = oracle::conj_permutable_classic(*pg.table, h.members(), &first_bad);
      CHECK(pr.yes() == classic);
      if (!classic) {
        CHECK(pr.no());
        CHECK(pr.witness == "products differ for conjugator " + std::to_string(first_bad));
      }
    }
  }
}

TEST_CASE("prime-index reachability: frozen verdicts in S4 and A5") {
  auto cat = by_name();
  const PreparedGroup& s4 = cat.at("S4");
  SubgroupList l4 = all_subgroups(s4.table);
  PSubnormalSolver solver4(s4.table, &l4);

  Subgroup a4 = derived_subgroup(Subgroup::whole(s4.table));
  REQUIRE(a4.order() == 12);
  PredicateResult pa4 = solver4.p_subnormal(a4);
  CHECK(pa4.yes());
  CHECK(pa4.witness == "prime-index chain 12 < 24");

  Subgroup d8 = sylow_subgroup(s4.table, 2);
  REQUIRE(d8.order() == 8);
  CHECK(solver4.p_subnormal(d8).yes());

  Subgroup v4 = fitting_subgroup(s4.table);
  REQUIRE(v4.order() == 4);
  PredicateResult pv4 = solver4.p_subnormal(v4);
  CHECK(pv4.yes());
  CHECK(pv4.witness == "prime-index chain 4 < 8 < 24");

  Subgroup s3 = point_stabilizer(s4.table, 3);
  REQUIRE(s3.order() == 6);
  PredicateResult ps3 = solver4.p_subnormal(s3);
  CHECK(ps3.no());
  CHECK(ps3.witness == "no prime-index ascent to the whole group");

  CHECK(solver4.p_subnormal(Subgroup::whole(s4.table)).witness == "equals the whole group");

  const PreparedGroup& a5 = cat.at("A5");
  SubgroupList l5 = all_subgroups(a5.table);
  PSubnormalSolver solver5(a5.table, &l5);

  Subgroup a4in5 = point_stabilizer(a5.table, 4);
  REQUIRE(a4in5.order() == 12);
  PredicateResult pa = solver5.p_subnormal(a4in5);
  CHECK(pa.yes());  // index 5 is prime even though A4 is not subnormal
  CHECK(pa.witness == "prime-index chain 12 < 60");

  Subgroup d10 = normalizer(sylow_subgroup(a5.table, 5));
  REQUIRE(d10.order() == 10);
  CHECK(solver5.p_subnormal(d10).no());
}

TEST_CASE("prime-index reachability through a proper join") {
  auto cat = by_name();
  LatticeStore store;
  const PreparedGroup& s4 = cat.at("S4");
  int t01 = find_perm(*s4.table, {1, 0, 2, 3});
  int t23 = find_perm(*s4.table, {0, 1, 3, 2});
  Subgroup h = closure(s4.table, std::vector<int>{t01});
  Subgroup r = closure(s4.table, std::vector<int>{t23});
  PredicateResult pr = r_p_subnormal(h, r, store);
  CHECK(pr.yes());
  CHECK(pr.witness == "prime-index chain 2 < 4");

  PredicateResult same = r_p_subnormal(h, Subgroup::trivial(s4.table), store);
  CHECK(same.yes());
  CHECK(same.witness == "join equals the subgroup");
}

TEST_CASE("a partial lattice downgrades reachability queries to skipped") {
  auto cat = by_name();
  const PreparedGroup& c6 = cat.at("C6");
  SubgroupList partial = all_subgroups(c6.table);
  partial.exhaustive = false;
  PSubnormalSolver solver(c6.table, &partial);

  Subgroup c2 = closure(c6.table, std::vector<int>{c6.table->at(1, c6.table->at(1, 1))});
  REQUIRE(c2.order() == 2);
  PredicateResult pr = solver.p_subnormal(c2);
  CHECK(pr.skipped());
  CHECK(pr.witness == "subgroup enumeration incomplete");
  CHECK(solver.p_subnormal(Subgroup::whole(c6.table)).yes());
}

TEST_CASE("prime-index reachability is transitive") {
  LatticeStore store;
  for (const PreparedGroup& pg : builtin_catalog(48)) {
    CAPTURE(pg.name);
    const SubgroupList& lat = store.of(pg.table);
    REQUIRE(lat.exhaustive);
    Subgroup whole = Subgroup::whole(pg.table);
    std::vector<bool> in_whole(lat.items.size());
    for (size_t i = 0; i < lat.items.size(); ++i)
      in_whole[i] = r_p_subnormal(lat.items[i], whole, store).yes();
    for (size_t i = 0; i < lat.items.size(); ++i) {
      for (size_t j = 0; j < lat.items.size(); ++j) {
        if (i == j || !in_whole[j]) continue;
        const Subgroup& h = lat.items[i];
        const Subgroup& k = lat.items[j];
        if (k.order() <= h.order() || !k.contains(h)) continue;
        if (r_p_subnormal(h, k, store).yes()) {
          CAPTURE(h.order());
          CAPTURE(k.order());
          CHECK(in_whole[i]);
        }
      }
    }
  }
}
