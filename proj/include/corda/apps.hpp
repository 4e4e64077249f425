#pragma once
#include <optional>
#include <string>
#include <vector>

#include "corda/graph.hpp"

namespace corda {

// Sigma_n of the (p, q) torus knot is the Brieskorn manifold of (p, q, n);
// the verdict reads its fundamental group off the Seifert shape.
Verdict torus_knot_cover_verdict(Int p, Int q, Int n);

// Sigma_2 of the two-bridge link with fraction p/q is the lens space L(p, q).
Verdict two_bridge_double_cover_verdict(Int p, Int q);

struct KnownNegativeEntry {
  std::string name;
  std::string identification;
  std::string citation;
};

// Curated manifolds with non-circularly-orderable fundamental group.  Names
// are matched after normalization (case, sigma glyphs, subscripts,
// punctuation), so "weeks", "Σ₃(5₂)" and "Sigma_3(5_2)" all resolve.
std::string normalize_manifold_name(const std::string& raw);
std::optional<KnownNegativeEntry> known_negative_lookup(const std::string& name);

struct CoverFact {
  Int degree;        // n >= 2 with Sigma_n(K) circularly orderable
  bool infinite_pi1; // the propagation needs an infinite target
};

// Sigma_m(K) through the surjection onto the fundamental group of a divisor
// cover; the knot must be prime (caller-asserted).
Verdict divisible_propagation(const std::vector<CoverFact>& known, Int m, bool prime_knot);

// Generalized Fibonacci manifold M(k, m): double branched cover of the
// closure of (sigma_1^k sigma_2^-k)^m.
Verdict fibonacci_verdict(Int k, Int m);

struct TakahashiPair {
  Int p, q, r, s;
};

// Generalized periodic Takahashi manifold T_{n,m}(p_j/q_j; r_j/s_j);
// prime_link asserts the branch link is prime (caller responsibility).
Verdict takahashi_verdict(const std::vector<TakahashiPair>& pairs, Int n, bool prime_link);

// True when the surgery coefficient p/q avoids the excluded window around
// p * c, where c is the fractional Dehn twist coefficient of the monodromy
// (caller-supplied): p*c integral demands q != p*c, otherwise q must avoid
// {floor(p*c), floor(p*c) + 1}.
bool surgery_window(Int p, Int q, const Rational& c);

} // namespace corda
