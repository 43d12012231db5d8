#include "grp/group.hpp"

#include <unordered_map>

#include "grp/error.hpp"

namespace grp {

namespace {

void finish_table(GroupTable& t) {
  int n = t.order;
  t.inv.assign(n, 0);
  std::vector<char> has_inv(n, 0);
  for (int a = 0; a < n; ++a) {
    if (t.at(a, 0) != a || t.at(0, a) != a)
      throw InternalDisagreement("table: index 0 is not an identity");
    for (int b = 0; b < n; ++b)
      if (t.at(a, b) == 0) {
        t.inv[a] = uint16_t(b);
        has_inv[a] = 1;
      }
  }
  for (int a = 0; a < n; ++a)
    if (!has_inv[a]) throw InternalDisagreement("table: element without inverse");

  t.elt_order.assign(n, 1);
  for (int a = 1; a < n; ++a) {
    int cur = a, k = 1;
    while (cur != 0) {
      cur = t.at(cur, a);
      ++k;
      if (k > n) throw InternalDisagreement("table: element order exceeds group order");
    }
    t.elt_order[a] = k;
  }
  t.prime_factors = factor_primes(n);
  // Every table small enough for the cubic scan gets the full axiom check at
  // construction time; larger ones keep the identity/inverse checks above.
  if (n <= 512) validate_table(t);
}

}  // namespace

TablePtr build_group(const GroupSpec& spec, int cap) {
  if (cap < 1 || cap > kHardOrderCap)
    throw OrderExceedsCap("cap must lie in 1.." + std::to_string(kHardOrderCap));
  if (spec.degree < 1) throw InvalidPerm(spec.name + ": degree must be positive");
  for (const Perm& g : spec.generators)
    if (g.degree() != spec.degree) throw InvalidPerm(spec.name + ": generator degree mismatch");

  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> index;
  Perm id = Perm::identity(spec.degree);
  elems.push_back(id);
  index.emplace(std::move(id), 0);

  for (size_t i = 0; i < elems.size(); ++i)
    for (const Perm& g : spec.generators) {
      Perm t = elems[i] * g;
      auto [it, inserted] = index.emplace(t, int(elems.size()));
      if (inserted) {
        elems.push_back(std::move(t));
        if (int(elems.size()) > cap)
          throw OrderExceedsCap(spec.name + ": closure exceeds cap " + std::to_string(cap));
      }
    }

  auto t = std::make_shared<GroupTable>();
  int n = int(elems.size());
  t->order = n;
  t->mul.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t->mul[size_t(a) * n + b] = uint16_t(index.at(elems[a] * elems[b]));
  t->elt_perm = std::move(elems);
  finish_table(*t);
  return t;
}

TablePtr table_from_mul(int order, std::vector<uint16_t> mul) {
  auto t = std::make_shared<GroupTable>();
  t->order = order;
  t->mul = std::move(mul);
  finish_table(*t);
  return t;
}

void validate_table(const GroupTable& t) {
  int n = t.order;
  if (int(t.mul.size()) != n * n) throw InternalDisagreement("table: wrong mul size");
  for (int a = 0; a < n; ++a) {
    if (t.at(0, a) != a || t.at(a, 0) != a) throw InternalDisagreement("table: identity axiom fails");
    if (t.at(a, t.inv[a]) != 0 || t.at(t.inv[a], a) != 0)
      throw InternalDisagreement("table: inverse axiom fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
          throw InternalDisagreement("table: associativity fails");
}

std::vector<int> factor_primes(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  return factor_primes(n).size() == 1;
}

}  // namespace grp
