#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "corda/groups.hpp"

namespace corda {

// Left-invariant linear order, described by the sign of each element:
// sign(g) = +1 when id < g, -1 when g < id, 0 exactly at the identity.
struct LeftOrder {
  GroupPtr group;
  std::function<int(const GroupElement&)> sign;
  std::string tag;

  bool positive(const GroupElement& g) const { return sign(g) > 0; }
  // -1 / 0 / +1 for a < b, a == b, a > b.
  int compare(const GroupElement& a, const GroupElement& b) const;
  bool less(const GroupElement& a, const GroupElement& b) const { return compare(a, b) < 0; }
};

// Left-invariant circular order c(g1, g2, g3) in {-1, 0, +1}, zero exactly on
// degenerate triples.  exact_rot, when present, reports the rotation number
// of an element in [0, 1); it may decline with nullopt.
struct CircularOrder {
  GroupPtr group;
  std::function<int(const GroupElement&, const GroupElement&, const GroupElement&)> eval;
  std::string tag;
  std::function<std::optional<Rational>(const GroupElement&)> exact_rot;
};

// Orientation of three distinct values under a strict comparator outcome:
// ab = (a < b) etc.  +1 when the cyclic order (a, b, c) agrees with the line.
inline int triple_sign(bool ab, bool ac, bool bc) {
  int inversions = (ab ? 0 : 1) + (ac ? 0 : 1) + (bc ? 0 : 1);
  return inversions % 2 == 0 ? 1 : -1;
}

// Orientation of three points of [0, 1) on the oriented circle.
int circle_orientation(const Rational& x, const Rational& y, const Rational& z);

// Sign of the first nonzero coordinate; group must be Z (CyclicGroup(0)) or
// a lattice.  The standard order on Z, lexicographic on Z^k.
LeftOrder coordinate_lex_order(GroupPtr g);

LeftOrder opposite_order(const LeftOrder& lo);

// Circular order induced by a linear one ("secretly" linear); rot == 0.
CircularOrder secret_circular_order(const LeftOrder& lo);

// On Z/n: g placed at (k g mod n)/n of the circle; gcd(k, n) = 1.
CircularOrder cyclic_rot_order(GroupPtr zn, Int k);

struct ShortExactSequence {
  GroupPtr total;
  GroupPtr quotient;
  std::function<GroupElement(const GroupElement&)> project;
};

// Lexicographic circular order on the total group: compare projections, fall
// back to the kernel order inside a fibre.  kernel_order lives on ses.total
// and is only consulted on kernel elements; rot factors through projection.
CircularOrder lex_circular_order(const ShortExactSequence& ses, const LeftOrder& kernel_order,
                                 const CircularOrder& quotient_order);

LeftOrder lex_left_order(const ShortExactSequence& ses, const LeftOrder& kernel_order,
                         const LeftOrder& quotient_order);

// Planar order on a free product of cyclic groups: elements are embedded in
// the plane via the Bass-Serre tree with one ribbon per vertex, and triples
// are compared by the cyclic order of the directions they leave their median
// vertex.  factor_orders[i] must live on a CyclicGroup matching modulus i;
// when omitted, Z/m gets cyclic_rot_order(.., 1) and Z the standard order.
// Restriction to each factor recovers its factor order.
CircularOrder planar_free_product_order(GroupPtr fp, std::vector<CircularOrder> factor_orders = {});

struct AxiomReport {
  bool ok = false;
  std::vector<std::string> violations; // sorted, deduplicated, capped
};

// Degeneracy, cocycle, left-invariance and the alternating property over all
// tuples from the sample (group elements() when sample is empty and finite).
AxiomReport validate_circular_order(const CircularOrder& c, std::vector<GroupElement> sample = {},
                                    size_t max_violations = 16);

AxiomReport validate_left_order(const LeftOrder& lo, std::vector<GroupElement> sample = {},
                                size_t max_violations = 16);

} // namespace corda
