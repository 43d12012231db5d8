#pragma once

#include <memory>
#include <string>
#include <vector>

#include "grp/perm.hpp"

namespace grp {

inline constexpr int kDefaultOrderCap = 360;
inline constexpr int kHardOrderCap = 1024;

struct GroupSpec {
  std::string name;
  int degree = 1;
  std::vector<Perm> generators;
};

// Fully materialized finite group on element indices 0..order-1.
// Index 0 is the identity; the indexing is the breadth-first closure order
// from the identity when built from a GroupSpec.
struct GroupTable {
  int order = 1;
  std::vector<uint16_t> mul;   // row-major order x order
  std::vector<uint16_t> inv;
  std::vector<int> elt_order;
  std::vector<int> prime_factors;  // distinct primes dividing order, increasing
  std::vector<Perm> elt_perm;      // populated only when built from a GroupSpec

  int at(int a, int b) const { return mul[size_t(a) * order + b]; }
  int conj(int h, int g) const { return at(at(inv[g], h), g); }          // g^-1 h g
  int comm(int a, int b) const { return at(at(at(inv[a], inv[b]), a), b); }  // [a,b]
};

using TablePtr = std::shared_ptr<const GroupTable>;

// Closes the generators breadth-first from the identity, generators applied
// in listed order.  Throws OrderExceedsCap or InvalidPerm.
TablePtr build_group(const GroupSpec& spec, int cap = kDefaultOrderCap);

// Completes inv/elt_order/prime_factors from a multiplication table whose
// identity is index 0.  Used by internal constructions (quotients, subgroup
// reindexing, direct products).
TablePtr table_from_mul(int order, std::vector<uint16_t> mul);

// Full axiom check (identity, inverses, associativity): O(order^3).
void validate_table(const GroupTable& t);

std::vector<int> factor_primes(int n);
int p_part(int n, int p);
bool is_prime(int n);
bool is_prime_power(int n);  // true for p^k with k >= 1

}  // namespace grp
