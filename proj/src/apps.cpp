#include "corda/apps.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "corda/error.hpp"
#include "corda/groups.hpp"

namespace corda {

namespace {

Verdict certified(std::string rule, std::vector<std::string> citations, Verdict v = {}) {
  v.answer = VerdictAnswer::co_certified;
  v.rule = std::move(rule);
  v.citations = std::move(citations);
  return v;
}

std::string int_str(const Integer& x) { return x.get_str(); }

} // namespace

Verdict torus_knot_cover_verdict(Int p, Int q, Int n) {
  if (n < 2) fail_arg("branched cover degree must be at least 2");
  ClosedSfsSummary cover = brieskorn_cover(p, q, n); // validates p, q

  Verdict v;
  v.data.emplace_back("cover", "Sigma_" + std::to_string(n) + "(T(" + std::to_string(p) + "," +
                                   std::to_string(q) + "))");
  std::string cones = "{";
  for (size_t i = 0; i < cover.cones.size(); ++i)
    cones += (i ? "," : "") + std::to_string(cover.cones[i]);
  v.data.emplace_back("cones", cones + "}");
  v.data.emplace_back("genus", std::to_string(cover.genus));
  v.data.emplace_back("e", rational_string(cover.e));
  v.data.emplace_back("h1-order", cover.h1_order ? int_str(*cover.h1_order) : "infinite");

  if (!cover.finite_pi1) {
    v.hypotheses.push_back("the base orbifold has non-positive euler characteristic, so pi1 "
                           "is infinite");
    return certified(
        "sfco-infinite",
        {"the n-fold cyclic branched cover of the (p,q) torus knot is the Brieskorn manifold "
         "of (p,q,n), a closed Seifert fibred space",
         "a closed Seifert fibred space with infinite fundamental group has circularly "
         "orderable fundamental group"},
        std::move(v));
  }

  v.data.emplace_back("pi1-order", int_str(*cover.pi1_order));
  v.data.emplace_back("pi1-name", cover.pi1_name);
  if (cover.cyclic) {
    v.hypotheses.push_back("at most two exceptional fibres over a spherical base: the cover "
                           "is a lens space");
    return certified("finite-cyclic",
                     {"a closed Seifert fibred space over the sphere with at most two "
                      "exceptional fibres and nonzero euler number is a lens space",
                      "finite cyclic groups embed in the rotations of the circle and are "
                      "circularly orderable"},
                     std::move(v));
  }
  v.answer = VerdictAnswer::not_co;
  v.reason = "finite non-cyclic fundamental group: " + cover.pi1_name + " of order " +
             int_str(*cover.pi1_order);
  v.citations = {"a finite group is circularly orderable exactly when it is cyclic",
                 "three exceptional fibres over a spherical base orbifold give a finite "
                 "non-cyclic fundamental group"};
  return v;
}

Verdict two_bridge_double_cover_verdict(Int p, Int q) {
  if (p < 1 || q < 1) fail_arg("two-bridge fraction needs p, q >= 1");
  if (std::gcd(p, q) != 1) fail_arg("two-bridge fraction needs coprime p, q");

  Verdict v;
  v.data.emplace_back("double-cover", "L(" + std::to_string(p) + "," + std::to_string(q) + ")");
  v.data.emplace_back("h1-order", std::to_string(p));
  return certified("finite-cyclic",
                   {"the double branched cover of the two-bridge link with fraction p/q is "
                    "the lens space L(p,q)",
                    "the fundamental group of L(p,q) is cyclic of order p",
                    "finite cyclic groups embed in the rotations of the circle and are "
                    "circularly orderable"},
                   std::move(v));
}

std::string normalize_manifold_name(const std::string& raw) {
  std::string out;
  for (size_t i = 0; i < raw.size();) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    unsigned char c1 = i + 1 < raw.size() ? static_cast<unsigned char>(raw[i + 1]) : 0;
    unsigned char c2 = i + 2 < raw.size() ? static_cast<unsigned char>(raw[i + 2]) : 0;
    if (c == 0xCE && c1 == 0xA3) { // capital sigma
      out += "sigma";
      i += 2;
      continue;
    }
    if (c == 0xCF && c1 == 0x83) { // small sigma
      out += "sigma";
      i += 2;
      continue;
    }
    if (c == 0xE2 && c1 == 0x82 && c2 >= 0x80 && c2 <= 0x89) { // subscript digits
      out += static_cast<char>('0' + (c2 - 0x80));
      i += 3;
      continue;
    }
    if (std::isalnum(c)) out += static_cast<char>(std::tolower(c));
    ++i;
  }
  return out;
}

std::optional<KnownNegativeEntry> known_negative_lookup(const std::string& name) {
  static const KnownNegativeEntry weeks{
      "Weeks manifold", "Sigma_3(5_2) = Sigma_2(9_49)",
      "the Weeks manifold has non-circularly-orderable fundamental group; it is the 3-fold "
      "cyclic branched cover of the knot 5_2 and the double branched cover of the knot 9_49"};
  std::string key = normalize_manifold_name(name);
  if (key == "weeks" || key == "weeksmanifold" || key == "sigma352" || key == "sigma2949")
    return weeks;
  return std::nullopt;
}

Verdict divisible_propagation(const std::vector<CoverFact>& known, Int m, bool prime_knot) {
  if (m < 2) fail_arg("cover degree must be at least 2");
  for (const auto& f : known)
    if (f.degree < 2) fail_arg("known cover degrees must be at least 2");

  Verdict v;
  v.data.emplace_back("m", std::to_string(m));
  if (!prime_knot) {
    v.answer = VerdictAnswer::unknown;
    v.reason = "primeness of the knot was not asserted, so irreducibility of the covers is "
               "not available";
    return v;
  }
  v.hypotheses.push_back("the knot is prime (caller-asserted), so its cyclic branched covers "
                         "are irreducible");

  std::optional<Int> divisor;
  for (const auto& f : known)
    if (f.infinite_pi1 && m % f.degree == 0 && (!divisor || f.degree < *divisor))
      divisor = f.degree;
  if (!divisor) {
    v.answer = VerdictAnswer::unknown;
    v.reason = "no degree known to give a circularly orderable cover with infinite "
               "fundamental group divides " +
               std::to_string(m);
    return v;
  }
  v.data.emplace_back("n", std::to_string(*divisor));
  v.hypotheses.push_back("pi1(Sigma_" + std::to_string(*divisor) +
                         "(K)) is circularly orderable and infinite (caller-supplied)");
  return certified(
      "divisible-cover",
      {"whenever n divides m there is a surjection from pi1(Sigma_m(K)) onto pi1(Sigma_n(K))",
       "an irreducible 3-manifold whose fundamental group surjects onto an infinite "
       "circularly orderable group has circularly orderable fundamental group"},
      std::move(v));
}

Verdict fibonacci_verdict(Int k, Int m) {
  if (k < 1 || m < 1) fail_arg("Fibonacci parameters must be positive");

  Verdict v;
  v.data.emplace_back("group", "F^" + std::to_string(k) + "_" + std::to_string(2 * m));
  if (k == 1) {
    v.answer = VerdictAnswer::unknown;
    v.reason = "the epimorphism argument needs k >= 2 (Z/1 * Z/1 is trivial)";
    return v;
  }

  // rho sends even-index generators to x and odd-index ones to y; verify the
  // relation x_i x_{i+1}^k x_{i+2}^{-1} dies in Z/k * Z/k for every i.
  const std::vector<Int> moduli{k, k};
  for (Int i = 0; i < 2 * m; ++i) {
    std::vector<Syllable> word{{i % 2, 1}, {(i + 1) % 2, k}, {i % 2, -1}};
    if (!free_reduce(moduli, word).empty())
      fail(Status::internal, "Fibonacci relation does not die in the free product");
  }
  v.data.emplace_back("relations-checked", std::to_string(2 * m));
  v.data.emplace_back("target", "Z/" + std::to_string(k) + " * Z/" + std::to_string(k));
  v.hypotheses.push_back("both generator parities occur, so the homomorphism is onto");
  v.hypotheses.push_back("M(k,m) is irreducible for k >= 2");
  return certified(
      "fibonacci-epimorphism",
      {"the fundamental group of M(k,m) is the generalized Fibonacci group on 2m generators "
       "with relations x_i x_{i+1}^k = x_{i+2}",
       "sending even-index generators to x and odd-index generators to y kills every "
       "relation, giving an epimorphism onto Z/k * Z/k",
       "a free product of two nontrivial cyclic groups is infinite and circularly orderable",
       "an irreducible 3-manifold whose fundamental group surjects onto an infinite "
       "circularly orderable group has circularly orderable fundamental group"},
      std::move(v));
}

Verdict takahashi_verdict(const std::vector<TakahashiPair>& pairs, Int n, bool prime_link) {
  if (pairs.empty()) fail_arg("Takahashi data needs at least one pair");
  if (n < 1) fail_arg("Takahashi index n must be positive");
  for (const auto& pr : pairs) {
    if (pr.p < 0 || pr.r < 0) fail_arg("Takahashi p, r must be nonnegative");
    if (std::gcd(pr.p, pr.q) != 1 || std::gcd(pr.r, pr.s) != 1)
      fail_arg("Takahashi fractions must be in lowest terms");
  }

  Verdict v;
  std::string factors;
  Int nontrivial = 0;
  for (const auto& pr : pairs) {
    for (Int f : {pr.p, pr.r}) {
      factors += (factors.empty() ? "" : " * ") +
                 (f == 0 ? std::string("Z") : "Z/" + std::to_string(f));
      if (f != 1) ++nontrivial;
    }
  }
  v.data.emplace_back("free-product", factors);
  v.data.emplace_back("nontrivial-factors", std::to_string(nontrivial));
  v.data.emplace_back("n", std::to_string(n));

  if (!prime_link) {
    v.answer = VerdictAnswer::unknown;
    v.reason = "primeness of the branch link was not asserted, so irreducibility of the "
               "double branched cover is not available";
    return v;
  }
  v.hypotheses.push_back("the branch link is prime (caller-asserted), so the double "
                         "branched cover is irreducible");
  if (nontrivial < 2) {
    v.answer = VerdictAnswer::unknown;
    v.reason = "the free product of the tangle denominators has fewer than two nontrivial "
               "factors and may be finite";
    return v;
  }
  return certified(
      "takahashi-free-product",
      {"the generalized periodic Takahashi manifold is the n-fold cyclic branched cover of a "
       "connected sum of lens spaces, branched over a knot independent of n",
       "its fundamental group surjects onto the free product of the cyclic groups Z/p_j and "
       "Z/r_j",
       "a free product of cyclic groups with at least two nontrivial factors is infinite and "
       "circularly orderable",
       "an irreducible 3-manifold whose fundamental group surjects onto an infinite "
       "circularly orderable group has circularly orderable fundamental group"},
      std::move(v));
}

bool surgery_window(Int p, Int q, const Rational& c) {
  if (p < 1) fail_arg("surgery numerator p must be at least 1");
  if (q == 0) fail_arg("surgery slope p/q needs q != 0");
  if (std::gcd(p, q) != 1) return false; // not a reduced slope: no certificate
  Rational pc = c * to_integer(p);
  if (pc.get_den() == 1) return to_integer(q) != pc.get_num();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), pc.get_num().get_mpz_t(), pc.get_den().get_mpz_t());
  return to_integer(q) != fl && to_integer(q) != fl + 1;
}

} // namespace corda
