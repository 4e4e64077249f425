#include "corda/orders.hpp"

#include <algorithm>
#include <numeric>

#include "corda/error.hpp"

namespace corda {

int LeftOrder::compare(const GroupElement& a, const GroupElement& b) const {
  return -sign(a.inverse() * b);
}

int circle_orientation(const Rational& x, const Rational& y, const Rational& z) {
  if (x == y || y == z || x == z) return 0;
  Rational dy = rational_mod1(y - x), dz = rational_mod1(z - x);
  return dy < dz ? 1 : -1;
}

LeftOrder coordinate_lex_order(GroupPtr g) {
  bool is_z = std::dynamic_pointer_cast<const CyclicGroup>(g) &&
              std::static_pointer_cast<const CyclicGroup>(g)->modulus() == 0;
  if (!is_z && !std::dynamic_pointer_cast<const LatticeGroup>(g))
    fail_arg("coordinate_lex_order: needs Z or a lattice group");
  LeftOrder lo;
  lo.group = g;
  lo.tag = "lex";
  lo.sign = [](const GroupElement& e) {
    for (Int v : e.data()) {
      if (v > 0) return 1;
      if (v < 0) return -1;
    }
    return 0;
  };
  return lo;
}

LeftOrder opposite_order(const LeftOrder& lo) {
  LeftOrder out;
  out.group = lo.group;
  out.tag = "opposite(" + lo.tag + ")";
  out.sign = [inner = lo.sign](const GroupElement& g) { return -inner(g); };
  return out;
}

CircularOrder secret_circular_order(const LeftOrder& lo) {
  CircularOrder c;
  c.group = lo.group;
  c.tag = "secret(" + lo.tag + ")";
  c.eval = [lo](const GroupElement& a, const GroupElement& b, const GroupElement& g) {
    if (a == b || b == g || a == g) return 0;
    return triple_sign(lo.less(a, b), lo.less(a, g), lo.less(b, g));
  };
  c.exact_rot = [](const GroupElement&) { return std::optional<Rational>(Rational(0)); };
  return c;
}

CircularOrder cyclic_rot_order(GroupPtr zn, Int k) {
  auto cyc = std::dynamic_pointer_cast<const CyclicGroup>(zn);
  if (!cyc || cyc->modulus() < 1) fail_arg("cyclic_rot_order: needs a finite cyclic group");
  Int n = cyc->modulus();
  if (std::gcd(k, n) != 1) fail_arg("cyclic_rot_order: k must be a unit mod n");
  k = ((k % n) + n) % n;
  CircularOrder c;
  c.group = zn;
  c.tag = "cyclic_rot(" + std::to_string(n) + "," + std::to_string(k) + ")";
  c.eval = [n, k](const GroupElement& a, const GroupElement& b, const GroupElement& g) {
    Int x = k * a.data()[0] % n, y = k * b.data()[0] % n, z = k * g.data()[0] % n;
    if (x == y || y == z || x == z) return 0;
    Int dy = ((y - x) % n + n) % n, dz = ((z - x) % n + n) % n;
    return dy < dz ? 1 : -1;
  };
  c.exact_rot = [n, k](const GroupElement& g) {
    return std::optional<Rational>(make_rational(k * g.data()[0] % n, n));
  };
  return c;
}

CircularOrder lex_circular_order(const ShortExactSequence& ses, const LeftOrder& kernel_order,
                                 const CircularOrder& quotient_order) {
  if (kernel_order.group != ses.total)
    fail_arg("lex_circular_order: kernel order must live on the total group");
  if (quotient_order.group != ses.quotient)
    fail_arg("lex_circular_order: quotient order must live on the quotient group");
  if (!ses.project(ses.total->identity()).is_identity())
    fail_arg("lex_circular_order: projection does not preserve identity");

  CircularOrder c;
  c.group = ses.total;
  c.tag = "lex(" + kernel_order.tag + ";" + quotient_order.tag + ")";
  auto project = ses.project;
  auto ksign = kernel_order.sign;
  auto qeval = quotient_order.eval;
  c.eval = [project, ksign, qeval](const GroupElement& g1, const GroupElement& g2,
                                   const GroupElement& g3) {
    if (g1 == g2 || g2 == g3 || g1 == g3) return 0;
    GroupElement q1 = project(g1), q2 = project(g2), q3 = project(g3);
    bool eq12 = q1 == q2, eq23 = q2 == q3, eq13 = q1 == q3;
    if (eq12 && eq23) {
      // one fibre: orientation of the linear kernel order
      auto less = [&](const GroupElement& a, const GroupElement& b) {
        return ksign(a.inverse() * b) > 0;
      };
      return triple_sign(less(g1, g2), less(g1, g3), less(g2, g3));
    }
    // a fibre enters a circle at one point: the pair inside it decides
    if (eq12) return ksign(g1.inverse() * g2);
    if (eq23) return ksign(g2.inverse() * g3);
    if (eq13) return ksign(g3.inverse() * g1);
    return qeval(q1, q2, q3);
  };
  if (quotient_order.exact_rot) {
    auto qrot = quotient_order.exact_rot;
    c.exact_rot = [project, qrot](const GroupElement& g) { return qrot(project(g)); };
  }
  return c;
}

LeftOrder lex_left_order(const ShortExactSequence& ses, const LeftOrder& kernel_order,
                         const LeftOrder& quotient_order) {
  if (kernel_order.group != ses.total)
    fail_arg("lex_left_order: kernel order must live on the total group");
  if (quotient_order.group != ses.quotient)
    fail_arg("lex_left_order: quotient order must live on the quotient group");
  LeftOrder lo;
  lo.group = ses.total;
  lo.tag = "lex(" + kernel_order.tag + ";" + quotient_order.tag + ")";
  auto project = ses.project;
  auto ksign = kernel_order.sign;
  auto qsign = quotient_order.sign;
  lo.sign = [project, ksign, qsign](const GroupElement& g) {
    int s = qsign(project(g));
    return s ? s : ksign(g);
  };
  return lo;
}

// ---- planar free product order ---------------------------------------------

namespace {

struct SplitVertex {
  std::vector<Syllable> prefix;
  bool coset = false; // true: the coset vertex (prefix, factor)
  Int factor = -1;
  size_t depth() const { return 2 * prefix.size() + (coset ? 1 : 0); }
};

SplitVertex split_vertex(const std::vector<Syllable>& u, const std::vector<Syllable>& v) {
  size_t j = 0;
  while (j < u.size() && j < v.size() && u[j].factor == v[j].factor &&
         u[j].exponent == v[j].exponent)
    ++j;
  SplitVertex s;
  s.prefix.assign(u.begin(), u.begin() + j);
  if (j < u.size() && j < v.size() && u[j].factor == v[j].factor) {
    s.coset = true;
    s.factor = u[j].factor;
  }
  return s;
}

bool is_prefix(const std::vector<Syllable>& p, const std::vector<Syllable>& t) {
  if (p.size() > t.size()) return false;
  for (size_t i = 0; i < p.size(); ++i)
    if (t[i].factor != p[i].factor || t[i].exponent != p[i].exponent) return false;
  return true;
}

} // namespace

CircularOrder planar_free_product_order(GroupPtr fp, std::vector<CircularOrder> factor_orders) {
  auto group = std::dynamic_pointer_cast<const FreeProductGroup>(fp);
  if (!group) fail_arg("planar_free_product_order: needs a free product group");
  const std::vector<Int>& moduli = group->moduli();
  if (factor_orders.empty()) {
    for (Int m : moduli) {
      GroupPtr factor = cyclic_group(m);
      factor_orders.push_back(m == 0 ? secret_circular_order(coordinate_lex_order(factor))
                                     : cyclic_rot_order(factor, 1));
    }
  }
  if (factor_orders.size() != moduli.size())
    fail_arg("planar_free_product_order: one factor order per factor");
  for (size_t i = 0; i < moduli.size(); ++i) {
    auto cyc = std::dynamic_pointer_cast<const CyclicGroup>(factor_orders[i].group);
    if (!cyc || cyc->modulus() != moduli[i])
      fail_arg("planar_free_product_order: factor order group mismatch");
  }

  size_t nfactors = moduli.size();
  auto orders = std::make_shared<std::vector<CircularOrder>>(std::move(factor_orders));

  CircularOrder c;
  c.group = fp;
  c.tag = "planar";
  c.eval = [orders, nfactors](const GroupElement& ge1, const GroupElement& ge2,
                              const GroupElement& ge3) {
    if (ge1 == ge2 || ge2 == ge3 || ge1 == ge3) return 0;
    std::vector<Syllable> w[3] = {FreeProductGroup::syllables(ge1.data()),
                                  FreeProductGroup::syllables(ge2.data()),
                                  FreeProductGroup::syllables(ge3.data())};
    SplitVertex median = split_vertex(w[0], w[1]);
    for (const auto& s : {split_vertex(w[0], w[2]), split_vertex(w[1], w[2])})
      if (s.depth() > median.depth()) median = s;

    if (!median.coset) {
      // Ribbon at a group-element vertex: the marker sits at position 0 and
      // the edge toward factor i at position 1 + i.
      Int positions[3];
      for (int t = 0; t < 3; ++t) {
        if (w[t] == median.prefix)
          positions[t] = 0;
        else if (is_prefix(median.prefix, w[t]))
          positions[t] = 1 + w[t][median.prefix.size()].factor;
        else
          positions[t] = 1 + median.prefix.back().factor; // exit toward the root
      }
      Int n = static_cast<Int>(nfactors) + 1;
      Int x = positions[0], y = positions[1], z = positions[2];
      Int dy = ((y - x) % n + n) % n, dz = ((z - x) % n + n) % n;
      return dy < dz ? 1 : -1;
    }

    // Ribbon at a coset vertex: directions are factor-group elements compared
    // by that factor's circular order; the way out of the coset is 0.
    const CircularOrder& fo = (*orders)[median.factor];
    GroupElement labels[3];
    for (int t = 0; t < 3; ++t) {
      Int e = 0;
      if (w[t].size() > median.prefix.size() && is_prefix(median.prefix, w[t]) &&
          w[t][median.prefix.size()].factor == median.factor)
        e = w[t][median.prefix.size()].exponent;
      labels[t] = fo.group->element({e});
    }
    return fo.eval(labels[0], labels[1], labels[2]);
  };
  return c;
}

// ---- axiom checking ---------------------------------------------------------

namespace {

std::vector<GroupElement> sample_or_all(const GroupPtr& g, std::vector<GroupElement> sample) {
  if (sample.empty()) sample = g->elements();
  for (const GroupElement& e : sample)
    if (e.group() != g) fail_arg("validate: sample element from another group");
  return sample;
}

struct ViolationSink {
  std::vector<std::string> items;
  void add(std::string s) { items.push_back(std::move(s)); }
  AxiomReport finish(size_t cap) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    if (items.size() > cap) items.resize(cap);
    AxiomReport r;
    r.violations = std::move(items);
    r.ok = r.violations.empty();
    return r;
  }
};

} // namespace

AxiomReport validate_circular_order(const CircularOrder& c, std::vector<GroupElement> sample,
                                    size_t max_violations) {
  std::vector<GroupElement> s = sample_or_all(c.group, std::move(sample));
  ViolationSink sink;
  size_t n = s.size();
  auto str3 = [&](size_t i, size_t j, size_t k) {
    return "(" + s[i].str() + "," + s[j].str() + "," + s[k].str() + ")";
  };
  std::vector<std::vector<std::vector<int>>> val(
      n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        int v = c.eval(s[i], s[j], s[k]);
        val[i][j][k] = v;
        bool degenerate = s[i] == s[j] || s[j] == s[k] || s[i] == s[k];
        if (v < -1 || v > 1) sink.add("range: " + str3(i, j, k));
        if (degenerate && v != 0) sink.add("degenerate triple not zero: " + str3(i, j, k));
        if (!degenerate && v == 0) sink.add("distinct triple zero: " + str3(i, j, k));
      }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (val[i][j][k] != -val[j][i][k] || val[i][j][k] != val[j][k][i])
          sink.add("not alternating: " + str3(i, j, k));
        for (size_t l = 0; l < n; ++l)
          if (val[j][k][l] - val[i][k][l] + val[i][j][l] - val[i][j][k] != 0)
            sink.add("cocycle: " + str3(i, j, k) + "+" + s[l].str());
      }
  for (size_t h = 0; h < n; ++h)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
          if (c.eval(s[h] * s[i], s[h] * s[j], s[h] * s[k]) != val[i][j][k])
            sink.add("left invariance: " + s[h].str() + "*" + str3(i, j, k));
  return sink.finish(max_violations);
}

AxiomReport validate_left_order(const LeftOrder& lo, std::vector<GroupElement> sample,
                                size_t max_violations) {
  std::vector<GroupElement> s = sample_or_all(lo.group, std::move(sample));
  ViolationSink sink;
  if (lo.sign(lo.group->identity()) != 0) sink.add("identity not neutral");
  for (const GroupElement& g : s) {
    int v = lo.sign(g);
    if (v < -1 || v > 1) sink.add("range: " + g.str());
    if (!g.is_identity() && v == 0) sink.add("nonidentity zero: " + g.str());
    if (g.is_identity() && v != 0) sink.add("identity nonzero");
    if (lo.sign(g.inverse()) != -v) sink.add("inverse sign: " + g.str());
  }
  for (const GroupElement& g : s)
    for (const GroupElement& h : s)
      if (lo.sign(g) > 0 && lo.sign(h) > 0 && lo.sign(g * h) <= 0)
        sink.add("positives not closed: " + g.str() + "*" + h.str());
  return sink.finish(max_violations);
}

} // namespace corda
