#pragma once
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "corda/orders.hpp"
#include "corda/smith.hpp"

namespace corda {

// ---- Seifert invariants (orientable total space) ---------------------------
//
// Homology conventions, fixed once and used everywhere:
//   cone relation      alpha*gamma + beta*h = 0
//   surface relation   (2*sum a | 0) + sum gamma + sum x - b*h = 0
//   crosscap           2h = 0
//   e = -(b + sum beta/alpha) for closed spaces
// Boundary slopes are written a*s - b*h in the (section, fibre) basis of a
// boundary torus, so filling (a, b) adds the pair (a, -b); the torus knot
// exterior D2((p,p'),(q,q')) with p'q + q'p = pq - 1 has meridian (1, 1).

struct SeifertPair {
  Int alpha;
  Int beta;
  bool operator==(const SeifertPair&) const = default;
};

struct SeifertData {
  bool base_orientable = true;
  Int genus = 0; // handles, or crosscaps when nonorientable (then >= 1)
  Int boundary_count = 0;
  std::vector<SeifertPair> pairs;
  Int b = 0; // integral twist, meaningful for closed spaces

  bool operator==(const SeifertData&) const = default;
};

void validate_seifert(const SeifertData& sd);

// Closed spaces: betas folded into [0, alpha), (1, k) pairs absorbed into b,
// pairs sorted.  Bounded spaces are returned untouched.
SeifertData normalized(const SeifertData& sd);

Rational orbifold_euler(const SeifertData& sd);       // chi of the base orbifold
Rational euler_number(const SeifertData& sd);         // closed only

// Generators ordered [surface], x_1..x_bd, gamma_1..gamma_m, h; one column
// per generator, one row per relation.
IMat h1_matrix(const SeifertData& sd);
Int h1_surface_generators(const SeifertData& sd); // where x_1 starts
Int h1_generator_count(const SeifertData& sd);    // h sits at the end
std::vector<Integer> h1_invariants(const SeifertData& sd); // torsion > 1, then 0s
Int first_betti(const SeifertData& sd);

// Tri-state: nullopt when the classification here does not decide
// (projective base with at most one cone point).
std::optional<bool> is_finite_pi1(const SeifertData& sd);

// ---- boundary slopes --------------------------------------------------------

struct Slope {
  Integer a; // section coefficient
  Integer b; // fibre coefficient (sign as in a*s - b*h)
  bool operator==(const Slope&) const = default;
};

Integer slope_delta(const Slope& s1, const Slope& s2); // |a1 b2 - a2 b1|
Slope normalized_slope(Slope s);                       // primitive, a > 0 or (0, 1)

struct RationalLongitude {
  Slope slope;   // the unique slope rationally null in H1
  Integer order; // order of its image in the torsion of H1
};

// One-boundary spaces only.
RationalLongitude rational_longitude(const SeifertData& sd);

// Same computation on an arbitrary presentation (generators = columns of rel):
// the slope (a, b) whose class a*col(s_idx) - b*col(h_idx) is torsion in the
// cokernel.  nullopt, with a reason, when the torus image is not rank one.
std::optional<RationalLongitude> presentation_longitude(const IMat& rel, size_t s_idx,
                                                        size_t h_idx,
                                                        std::string* reason = nullptr);

// ---- Dehn filling -----------------------------------------------------------

// Result of filling along the fibre slope: a connected sum of lens spaces
// L(alpha_i, beta_i), free_rank extra S1 x S2 (or S1 x D2 while boundary
// remains) summands.  Always circularly orderable.
struct ConnectedSum {
  std::vector<SeifertPair> lens;
  Int free_rank = 0;
  Int remaining_boundary = 0;

  bool infinite_pi1() const { return free_rank > 0 || lens.size() >= 2; }
};

using FillResult = std::variant<SeifertData, ConnectedSum>;

FillResult fill(const SeifertData& sd, const Slope& slope);

// ---- base orbifold classes --------------------------------------------------

// Disk orbifolds relevant to the gluing criteria: the exceptional family A
// consists of D2(p,q), D2(2,2,r), D2(2,3,3), D2(2,3,4), D2(2,3,5); F is the
// pair D2(2,2), D2(2,3) inside it.
struct BaseClass {
  bool in_a = false;
  bool in_f = false;
  bool compressible = false; // disk with at most one cone point
  std::vector<Int> cones;    // sorted, >= 2
};

BaseClass base_orbifold_class(const SeifertData& sd);

// ---- achievable rotation numbers of the fibre -------------------------------

enum class FibreRotValues {
  zero,        // infinite pi1: rot(h) = 0 always achievable
  zero_half,   // nonorientable base with an exceptional fibre: {0, 1/2}
  one_over_p,  // orientable base, exceptional fibres: 1/p for every p
  all_rational // no exceptional fibres: every rational value
};

struct SfcoClassification {
  FibreRotValues values;
  bool lo_certified = false;    // one_over_p backed by b1 > 0 or an assumption
  bool conditional_on_lo = false;
  std::vector<std::string> notes;
};

// Closed, infinite fundamental group required (finite is refused).
SfcoClassification sfco_classification(const SeifertData& sd, bool assume_left_orderable = false);

// Circular order on Z^3 = H1(T^3) whose fibre (0,0,1) rotates by exactly p/q.
struct T3Order {
  CircularOrder order;
  GroupElement fibre;
};

T3Order materialize_t3_order(Int p, Int q);

// Fibred exterior of the (p, q) torus knot: D2((p, p'), (q, q')) with
// p'q + q'p = pq - 1; meridian slope (1, 1), fibre distance 1 from it.
SeifertData torus_knot_exterior(Int p, Int q);

// ---- Brieskorn spheres and cyclic branched covers ---------------------------

// Pairwise coprime a1, a2, a3 (>= 2): the unique Seifert homology sphere
// with these cone orders, e = -1/(a1 a2 a3).
SeifertData brieskorn_zhs(Int a1, Int a2, Int a3);

// Z[t] utilities used for branched cover homology.
using Poly = std::vector<Integer>; // coefficient of t^i at index i
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_divexact(const Poly& f, const Poly& g);
Integer poly_resultant(Poly f, Poly g);
Poly torus_knot_alexander(Int p, Int q);

// |H1| of the n-fold cyclic branched cover of T(p,q); nullopt when infinite.
std::optional<Integer> branched_cover_h1_order(Int p, Int q, Int n);

struct ClosedSfsSummary {
  Int genus = 0;
  std::vector<Int> cones; // sorted
  Rational e;
  std::optional<Integer> h1_order; // nullopt: infinite
  bool finite_pi1 = false;
  bool cyclic = false;                // when finite
  std::optional<Integer> pi1_order;   // when finite
  std::string pi1_name;               // "cyclic", "quaternion", "binary ..."
};

// Seifert shape of the n-fold cyclic branched cover of the (p, q) torus knot
// (the Brieskorn manifold of (p, q, n)); p, q coprime, n >= 1.
ClosedSfsSummary brieskorn_cover(Int p, Int q, Int n);

} // namespace corda
