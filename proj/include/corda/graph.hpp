#pragma once
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corda/seifert.hpp"

namespace corda {

// ---- JSJ trees of Seifert pieces --------------------------------------------
//
// A gluing matrix carries slope pairs on the A-side boundary torus to the B
// side, acting on columns:
//   phi(a, b) = (m00 * a + m01 * b, m10 * a + m11 * b),
// so phi(s_a) = m00 * s_b - m10 * h_b and phi(h_a) = -m01 * s_b + m11 * h_b.
// Orientation-reversing gluings have determinant -1.

struct GluingMatrix {
  Integer m00{1}, m01{0};
  Integer m10{0}, m11{-1};
  bool operator==(const GluingMatrix&) const = default;
};

Integer gluing_det(const GluingMatrix& g);
GluingMatrix gluing_inverse(const GluingMatrix& g); // |det| = 1 required
Slope apply_gluing(const GluingMatrix& g, const Slope& s);

// Geometric intersection number of two slopes on the same torus.
Integer delta(const Slope& s1, const Slope& s2);

struct JsjEdge {
  std::size_t node_a = 0;
  Int bdry_a = 0;
  std::size_t node_b = 0;
  Int bdry_b = 0;
  GluingMatrix glue;
};

struct JsjTree {
  std::vector<SeifertData> nodes;
  std::vector<JsjEdge> edges;
};

// Connected, acyclic, every boundary used at most once, all determinants -1.
void validate_jsj_tree(const JsjTree& t);

Int tree_free_boundaries(const JsjTree& t);

// H1 presentation of the glued space: the node matrices side by side plus two
// rows per edge identifying the (section, fibre) pairs through the gluing.
// Node i's generators start at column graph_node_offset(t, i) and follow the
// h1_matrix layout.
IMat graph_h1_matrix(const JsjTree& t);
std::size_t graph_node_offset(const JsjTree& t, std::size_t node);
std::vector<Integer> graph_h1_invariants(const JsjTree& t);
Int graph_first_betti(const JsjTree& t);

// Rational longitude of the unique free boundary of the tree; nullopt with a
// reason when the boundary image in H1 is not rank one.
std::optional<RationalLongitude> rational_longitude_graph(const JsjTree& t,
                                                          std::string* reason = nullptr);

// ---- verdicts ----------------------------------------------------------------
//
// Three-valued and sound: CO_CERTIFIED and NOT_CO are backed by the named rule
// and the recorded hypotheses; everything else is UNKNOWN, never a guess.

enum class VerdictAnswer { co_certified, not_co, unknown };

struct Verdict {
  VerdictAnswer answer = VerdictAnswer::unknown;
  std::string rule;   // exactly one rule id when certified
  std::string reason; // NOT_CO grounds, or why the engine stopped
  std::vector<std::string> citations;  // mathematical content backing the rule
  std::vector<std::string> hypotheses; // machine-checked and caller-assumed facts
  std::vector<std::pair<std::string, std::string>> data; // exact values used
};

// Caller-verified facts, consulted only where the engine itself cannot decide
// (fillings with a projective-plane base are refused by is_finite_pi1).
// fill1 refers to piece 1 filled along phi^-1(lambda_2), fill2 to piece 2
// filled along phi(lambda_1).
struct TwoPieceHints {
  std::optional<bool> fill1_infinite;
  std::optional<bool> fill2_infinite;
};

// Closed union of two one-boundary pieces along one torus.
Verdict two_piece_verdict(const JsjTree& t, const TwoPieceHints& hints = {});

// Closed trees of any size; single nodes are closed Seifert spaces, two-node
// trees delegate to two_piece_verdict.
Verdict class_c_verdict(const JsjTree& t, const TwoPieceHints& hints = {});

// Data for the slope-detection criteria on M1 cup_phi M2.  Peripheral flags
// assert that the whole boundary Z x Z of that side dies in its filled
// fundamental group (checked against homology, but the group-level fact is
// the caller's).  Rot lists assert achievable rotation numbers of the image
// of the common dual class in the corresponding filling, mod 1.
struct SlopeDetectHints {
  bool side1_peripheral_killed = false;
  bool side2_peripheral_killed = false;
  std::vector<Rational> side1_rots;
  std::vector<Rational> side2_rots;
};

// alpha lives on the boundary of m1; phi carries it to the boundary of m2.
Verdict slope_detect_verdict(const SeifertData& m1, const SeifertData& m2,
                             const GluingMatrix& phi, const Slope& alpha,
                             const SlopeDetectHints& hints = {});

} // namespace corda
