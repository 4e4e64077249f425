#include "corda/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "corda/error.hpp"

namespace corda {

namespace {

Int cone_count(const SeifertData& sd) {
  Int m = 0;
  for (const auto& p : sd.pairs)
    if (p.alpha >= 2) ++m;
  return m;
}

std::vector<Int> sorted_cones(const SeifertData& sd) {
  std::vector<Int> cones;
  for (const auto& p : sd.pairs)
    if (p.alpha >= 2) cones.push_back(p.alpha);
  std::sort(cones.begin(), cones.end());
  return cones;
}

Rational chi_orb_closed(Int genus, const std::vector<Int>& cones) {
  Rational chi = 2 - 2 * Rational(to_integer(genus));
  for (Int c : cones) chi -= 1 - make_rational(1, c);
  return chi;
}

Int surface_generators(const SeifertData& sd) {
  return sd.base_orientable ? 2 * sd.genus : sd.genus;
}

Int modular_inverse(Int a, Int m) {
  Int t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    Int q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) fail(Status::internal, "modular inverse of a non-unit");
  return ((t % m) + m) % m;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

} // namespace

void validate_seifert(const SeifertData& sd) {
  if (sd.genus < 0) fail_arg("genus must be nonnegative");
  if (!sd.base_orientable && sd.genus < 1) fail_arg("nonorientable base needs genus >= 1");
  if (sd.boundary_count < 0) fail_arg("negative boundary count");
  for (const auto& p : sd.pairs) {
    if (p.alpha < 1) fail_arg("Seifert pair needs alpha >= 1");
    if (std::gcd(p.alpha, p.beta < 0 ? -p.beta : p.beta) != 1)
      fail_arg("Seifert pair (alpha, beta) must be coprime");
  }
}

SeifertData normalized(const SeifertData& sd) {
  validate_seifert(sd);
  if (sd.boundary_count > 0) return sd;
  SeifertData out = sd;
  out.pairs.clear();
  for (auto p : sd.pairs) {
    Int t = p.beta >= 0 ? p.beta / p.alpha : -((-p.beta + p.alpha - 1) / p.alpha);
    p.beta -= t * p.alpha;
    out.b += t;
    if (p.alpha >= 2) out.pairs.push_back(p);
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const SeifertPair& x, const SeifertPair& y) {
              return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
            });
  return out;
}

Rational orbifold_euler(const SeifertData& sd) {
  validate_seifert(sd);
  Rational chi = to_integer((sd.base_orientable ? 2 - 2 * sd.genus : 2 - sd.genus) - sd.boundary_count);
  for (const auto& p : sd.pairs) chi -= 1 - make_rational(1, p.alpha);
  return chi;
}

Rational euler_number(const SeifertData& sd) {
  validate_seifert(sd);
  if (sd.boundary_count != 0) fail_arg("euler number needs a closed space");
  Rational e = to_integer(sd.b);
  for (const auto& p : sd.pairs) e += make_rational(p.beta, p.alpha);
  return -e;
}

Int h1_surface_generators(const SeifertData& sd) { return surface_generators(sd); }

Int h1_generator_count(const SeifertData& sd) {
  return surface_generators(sd) + sd.boundary_count + static_cast<Int>(sd.pairs.size()) + 1;
}

IMat h1_matrix(const SeifertData& sd) {
  validate_seifert(sd);
  size_t sg = static_cast<size_t>(surface_generators(sd));
  size_t bd = static_cast<size_t>(sd.boundary_count);
  size_t m = sd.pairs.size();
  size_t cols = sg + bd + m + 1; // [surface] x_1..x_bd gamma_1..gamma_m h
  IMat rows;
  for (size_t j = 0; j < m; ++j) {
    std::vector<Integer> r(cols, 0);
    r[sg + bd + j] = to_integer(sd.pairs[j].alpha);
    r[cols - 1] = to_integer(sd.pairs[j].beta);
    rows.push_back(std::move(r));
  }
  if (!sd.base_orientable) {
    for (size_t j = 0; j < sg; ++j) {
      std::vector<Integer> r(cols, 0);
      r[cols - 1] = 2;
      rows.push_back(std::move(r));
    }
  }
  std::vector<Integer> surf(cols, 0);
  if (!sd.base_orientable)
    for (size_t j = 0; j < sg; ++j) surf[j] = 2;
  for (size_t j = 0; j < bd + m; ++j) surf[sg + j] = 1;
  surf[cols - 1] = to_integer(-sd.b);
  rows.push_back(std::move(surf));
  return rows;
}

std::vector<Integer> h1_invariants(const SeifertData& sd) {
  return cokernel_invariants(mat_transpose(h1_matrix(sd)));
}

Int first_betti(const SeifertData& sd) {
  Int betti = 0;
  for (const auto& d : h1_invariants(sd))
    if (d == 0) ++betti;
  return betti;
}

std::optional<bool> is_finite_pi1(const SeifertData& sd) {
  validate_seifert(sd);
  if (sd.boundary_count > 0) return false;
  if (sd.base_orientable)
    return orbifold_euler(sd) > 0 && euler_number(sd) != 0;
  if (sd.genus >= 2) return false;
  if (cone_count(normalized(sd)) >= 2) return false;
  return std::nullopt; // projective base, at most one cone point
}

// ---- slopes -----------------------------------------------------------------

Integer slope_delta(const Slope& s1, const Slope& s2) {
  return abs(s1.a * s2.b - s2.a * s1.b);
}

Slope normalized_slope(Slope s) {
  if (s.a == 0 && s.b == 0) fail_arg("slope (0, 0)");
  Integer g = int_gcd(s.a, s.b);
  s.a /= g;
  s.b /= g;
  if (s.a < 0 || (s.a == 0 && s.b < 0)) {
    s.a = -s.a;
    s.b = -s.b;
  }
  return s;
}

std::optional<RationalLongitude> presentation_longitude(const IMat& rel, size_t s_idx,
                                                        size_t h_idx, std::string* reason) {
  auto snf = smith_normal_form(mat_transpose(rel));
  size_t gens = snf.rows;
  std::vector<Integer> ys(gens), yh(gens);
  for (size_t i = 0; i < gens; ++i) {
    ys[i] = snf.u[i][s_idx];
    yh[i] = snf.u[i][h_idx];
  }
  auto is_free = [&](size_t i) { return i >= snf.diag.size() || snf.diag[i] == 0; };
  Slope slope{0, 0};
  for (size_t i = 0; i < gens; ++i) {
    if (!is_free(i) || (ys[i] == 0 && yh[i] == 0)) continue;
    slope = normalized_slope({yh[i], ys[i]});
    break;
  }
  if (slope.a == 0 && slope.b == 0) {
    if (reason) *reason = "boundary torus died rationally";
    return std::nullopt;
  }
  Integer order = 1;
  for (size_t i = 0; i < gens; ++i) {
    Integer t = slope.a * ys[i] - slope.b * yh[i];
    if (is_free(i)) {
      if (t != 0) {
        if (reason) *reason = "rational longitude is not well defined";
        return std::nullopt;
      }
    } else if (snf.diag[i] > 1) {
      Integer d = snf.diag[i];
      order = int_lcm(order, d / int_gcd(d, t));
    }
  }
  return RationalLongitude{slope, order};
}

RationalLongitude rational_longitude(const SeifertData& sd) {
  validate_seifert(sd);
  if (sd.boundary_count != 1) fail_arg("rational longitude needs exactly one boundary");
  std::string why;
  auto out = presentation_longitude(h1_matrix(sd), static_cast<size_t>(surface_generators(sd)),
                                    static_cast<size_t>(h1_generator_count(sd)) - 1, &why);
  if (!out) fail(Status::internal, why);
  return *out;
}

// ---- Dehn filling -----------------------------------------------------------

FillResult fill(const SeifertData& sd, const Slope& slope) {
  validate_seifert(sd);
  if (sd.boundary_count < 1) fail_arg("no boundary to fill");
  Slope s = normalized_slope(slope);
  if (s.a == 0) {
    ConnectedSum cs;
    for (auto p : sd.pairs) {
      if (p.alpha < 2) continue;
      p.beta = ((p.beta % p.alpha) + p.alpha) % p.alpha;
      cs.lens.push_back(p);
    }
    cs.free_rank = surface_generators(sd) + sd.boundary_count - 1;
    cs.remaining_boundary = sd.boundary_count - 1;
    return cs;
  }
  if (!s.a.fits_slong_p() || !s.b.fits_slong_p()) fail_arg("slope out of range");
  SeifertData out = sd;
  out.boundary_count -= 1;
  out.pairs.push_back({static_cast<Int>(s.a.get_si()), static_cast<Int>(-s.b.get_si())});
  return out.boundary_count == 0 ? normalized(out) : out;
}

// ---- base orbifold classes --------------------------------------------------

BaseClass base_orbifold_class(const SeifertData& sd) {
  validate_seifert(sd);
  BaseClass bc;
  bc.cones = sorted_cones(sd);
  if (!(sd.base_orientable && sd.genus == 0 && sd.boundary_count == 1)) return bc;
  const auto& c = bc.cones;
  if (c.size() <= 1) {
    bc.compressible = true;
    return bc;
  }
  if (c.size() == 2) {
    bc.in_a = true;
    bc.in_f = (c[0] == 2 && (c[1] == 2 || c[1] == 3));
  } else if (c.size() == 3) {
    bc.in_a = (c[0] == 2 && c[1] == 2) ||
              (c[0] == 2 && c[1] == 3 && c[2] >= 3 && c[2] <= 5);
  }
  return bc;
}

// ---- achievable rotation numbers of the fibre -------------------------------

SfcoClassification sfco_classification(const SeifertData& sd, bool assume_left_orderable) {
  validate_seifert(sd);
  if (sd.boundary_count != 0) fail_arg("classification needs a closed space");
  auto finite = is_finite_pi1(sd);
  if (!finite.has_value())
    fail(Status::unsupported, "projective base with at most one cone point is not classified here");
  if (*finite) fail(Status::unsupported, "finite fundamental group has no circular order to grade");

  SfcoClassification out;
  Int m = cone_count(normalized(sd));
  if (sd.base_orientable && m == 0) {
    out.values = FibreRotValues::all_rational;
    out.notes.push_back("no exceptional fibres; every rational rotation number is realized");
    out.notes.push_back("irrational values are reported descriptively only");
    return out;
  }
  if (!sd.base_orientable) {
    out.values = FibreRotValues::zero_half;
    out.notes.push_back("fibre is reversed along a crosscap; rotation number is 0 or 1/2");
    return out;
  }
  out.lo_certified = first_betti(sd) > 0 || assume_left_orderable;
  out.conditional_on_lo = !out.lo_certified;
  if (out.lo_certified) {
    out.values = FibreRotValues::one_over_p;
    out.notes.push_back(first_betti(sd) > 0 ? "left-orderable: positive first Betti number"
                                            : "left-orderability assumed by caller");
    out.notes.push_back("rotation number 1/p is realized for every p >= 1 (and 0)");
  } else {
    out.values = FibreRotValues::zero;
    out.notes.push_back("rotation number 0 is always realized");
    out.notes.push_back("1/p for every p would follow from left-orderability");
  }
  return out;
}

T3Order materialize_t3_order(Int p, Int q) {
  if (q < 1) fail_arg("rotation denominator must be positive");
  Int g = std::gcd(p < 0 ? -p : p, q);
  p /= g;
  q /= g;
  Int k = ((p % q) + q) % q;

  auto z = cyclic_group(0);
  CircularOrder cz;
  if (k == 0) {
    cz = secret_circular_order(coordinate_lex_order(z));
  } else {
    auto zq = cyclic_group(q);
    ShortExactSequence ses{z, zq, [zq, q](const GroupElement& e) {
                             return zq->element({((e.data()[0] % q) + q) % q});
                           }};
    cz = lex_circular_order(ses, coordinate_lex_order(z), cyclic_rot_order(zq, k));
  }

  auto t3 = lattice_group(3);
  ShortExactSequence ses3{t3, z, [z](const GroupElement& e) {
                            return z->element({e.data()[2]});
                          }};
  CircularOrder c = lex_circular_order(ses3, coordinate_lex_order(t3), cz);
  return {std::move(c), t3->element({0, 0, 1})};
}

// ---- torus knot exteriors and Brieskorn covers ------------------------------

SeifertData torus_knot_exterior(Int p, Int q) {
  if (p < 2 || q < 2) fail_arg("torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) fail_arg("torus knot needs coprime p, q");
  Int pp = (p - modular_inverse(q % p, p)) % p; // p'q = -1 (mod p)
  Int qq = (p * q - 1 - pp * q) / p;
  SeifertData sd{true, 0, 1, {{p, pp}, {q, qq}}, 0};
  validate_seifert(sd);
  return sd;
}

SeifertData brieskorn_zhs(Int a1, Int a2, Int a3) {
  Int a[3] = {a1, a2, a3};
  for (Int x : a)
    if (x < 2) fail_arg("Brieskorn exponents must be >= 2");
  if (std::gcd(a1, a2) != 1 || std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1)
    fail_arg("Brieskorn homology sphere needs pairwise coprime exponents");
  Int prod = a1 * a2 * a3;
  SeifertData sd{true, 0, 0, {}, 0};
  Int sum = 0;
  for (Int x : a) {
    Int beta = modular_inverse((prod / x) % x, x);
    sd.pairs.push_back({x, beta});
    sum += beta * (prod / x);
  }
  sd.b = (1 - sum) / prod;
  return normalized(sd);
}

Poly poly_mul(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, Integer(0));
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  trim(out);
  return out;
}

Poly poly_divexact(const Poly& f, const Poly& g) {
  Poly num = f, den = g;
  trim(num);
  trim(den);
  if (den.empty()) fail_arg("polynomial division by zero");
  if (num.empty()) return {};
  if (num.size() < den.size()) fail(Status::internal, "inexact polynomial division");
  Poly q(num.size() - den.size() + 1, Integer(0));
  for (size_t i = q.size(); i-- > 0;) {
    Integer lead = num[i + den.size() - 1];
    if (lead == 0) continue;
    if (lead % den.back() != 0) fail(Status::internal, "inexact polynomial division");
    q[i] = lead / den.back();
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  trim(num);
  if (!num.empty()) fail(Status::internal, "inexact polynomial division");
  return q;
}

Integer poly_resultant(Poly f, Poly g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) fail_arg("resultant of the zero polynomial");
  size_t m = f.size() - 1, n = g.size() - 1;
  if (m == 0 && n == 0) return 1;
  IMat syl(m + n, std::vector<Integer>(m + n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) syl[i][i + j] = f[m - j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) syl[n + i][i + j] = g[n - j];
  return mat_det(syl);
}

Poly torus_knot_alexander(Int p, Int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) fail_arg("torus knot needs coprime p, q >= 2");
  auto cyc = [](Int n) { // t^n - 1
    Poly f(static_cast<size_t>(n) + 1, Integer(0));
    f[0] = -1;
    f[static_cast<size_t>(n)] = 1;
    return f;
  };
  return poly_divexact(poly_divexact(poly_mul(cyc(p * q), cyc(1)), cyc(p)), cyc(q));
}

std::optional<Integer> branched_cover_h1_order(Int p, Int q, Int n) {
  if (n < 1) fail_arg("cover degree must be >= 1");
  Poly tn(static_cast<size_t>(n) + 1, Integer(0));
  tn[0] = -1;
  tn[static_cast<size_t>(n)] = 1;
  Integer r = poly_resultant(tn, torus_knot_alexander(p, q));
  if (r == 0) return std::nullopt;
  return abs(r);
}

ClosedSfsSummary brieskorn_cover(Int p, Int q, Int n) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) fail_arg("torus knot needs coprime p, q >= 2");
  if (n < 1) fail_arg("cover degree must be >= 1");

  Int a[3] = {p, q, n};
  Int ell = std::lcm(std::lcm(p, q), n);
  Int prod = p * q * n;

  ClosedSfsSummary out;
  Rational chi = make_rational(prod, ell) * (make_rational(1, p) + make_rational(1, q) + make_rational(1, n) - 1);
  for (int i = 0; i < 3; ++i) {
    Int elli = std::lcm(a[(i + 1) % 3], a[(i + 2) % 3]);
    Int alpha_bar = ell / elli;
    Int copies = (prod / a[i]) / elli;
    if (alpha_bar >= 2)
      for (Int j = 0; j < copies; ++j) out.cones.push_back(alpha_bar);
    chi += to_integer(copies) * (1 - make_rational(1, alpha_bar));
  }
  std::sort(out.cones.begin(), out.cones.end());

  Rational genus2 = 2 - chi;
  if (genus2.get_den() != 1 || genus2 < 0 || genus2.get_num() % 2 != 0)
    fail(Status::internal, "branched cover genus is not a nonnegative integer");
  out.genus = static_cast<Int>(genus2.get_num().get_si()) / 2;
  out.e = make_rational(to_integer(-prod), to_integer(ell) * to_integer(ell));
  out.h1_order = branched_cover_h1_order(p, q, n);

  Rational chi_orb = chi_orb_closed(out.genus, out.cones);
  out.finite_pi1 = chi_orb > 0; // e is never zero here
  if (out.finite_pi1 && !out.h1_order.has_value())
    fail(Status::internal, "finite fundamental group with infinite homology");
  if (!out.finite_pi1) return out;

  out.cyclic = out.cones.size() <= 2;
  if (out.cyclic) {
    out.pi1_order = out.h1_order;
    out.pi1_name = "cyclic";
    return out;
  }
  Rational order = 4 * abs(out.e) / (chi_orb * chi_orb);
  if (order.get_den() != 1) fail(Status::internal, "spherical group order is not an integer");
  out.pi1_order = order.get_num();
  const auto& c = out.cones;
  if (c[0] == 2 && c[1] == 2)
    out.pi1_name = c[2] == 2 ? "quaternion" : "binary dihedral";
  else if (c[0] == 2 && c[1] == 3 && c[2] == 3)
    out.pi1_name = "binary tetrahedral";
  else if (c[0] == 2 && c[1] == 3 && c[2] == 4)
    out.pi1_name = "binary octahedral";
  else if (c[0] == 2 && c[1] == 3 && c[2] == 5)
    out.pi1_name = "binary icosahedral";
  else
    fail(Status::internal, "unrecognized spherical cone triple");
  return out;
}

} // namespace corda
