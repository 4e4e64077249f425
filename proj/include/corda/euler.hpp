#pragma once
#include "corda/orders.hpp"
#include "corda/smith.hpp"

namespace corda {

// f_c over a finite enumerable group, indexed like elements().
struct CocycleTable {
  GroupPtr group;
  std::vector<GroupElement> elems; // elems[0] is the identity
  std::vector<std::vector<Int>> f;
};

CocycleTable order_cocycle_table(const CircularOrder& c);

struct EulerClassInfo {
  bool torsion = false;
  Integer order; // minimal k >= 1 with k [f_c] = 0, when torsion
};

// Order of the euler class of the order's cocycle in H^2(G; Z): the minimal
// k for which eta(g) + eta(h) - eta(gh) = k f_c(g, h) has an integral
// solution with eta(id) = 0.
EulerClassInfo euler_class_order(const CircularOrder& c);

// The eta certificate for a given multiple k of the euler class order;
// indexed like elements(), eta[0] = 0.  Throws when no solution exists.
std::vector<Integer> eta_solve(const CircularOrder& c, const Integer& k);

struct LoNormalData {
  Integer k;                  // euler class order
  std::vector<Integer> phi;   // eta mod k: a surjection G -> Z/k
  std::vector<size_t> kernel; // element indices with phi = 0
};

// phi = eta mod k is a surjective homomorphism onto Z/k whose kernel carries
// the left order hidden inside the circular order.
LoNormalData lo_normal_subgroup(const CircularOrder& c);

} // namespace corda
