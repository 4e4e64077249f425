#include "corda/euler.hpp"

#include <algorithm>

#include "corda/error.hpp"
#include "corda/extensions.hpp"

namespace corda {

CocycleTable order_cocycle_table(const CircularOrder& c) {
  CocycleTable t;
  t.group = c.group;
  t.elems = c.group->elements();
  if (t.elems.empty() || !t.elems[0].is_identity())
    fail(Status::internal, "order_cocycle_table: identity must be listed first");
  size_t n = t.elems.size();
  t.f.assign(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t.f[i][j] = order_cocycle(c, t.elems[i], t.elems[j]);
  return t;
}

namespace {

struct EulerSystem {
  CocycleTable table;
  IMat m;                  // (n-1)^2 x (n-1)
  std::vector<Integer> b;  // f values, row per ordered pair of nontrivial elems
  SmithResult snf;
  std::vector<Integer> beta; // U b
};

EulerSystem build_system(const CircularOrder& c) {
  EulerSystem sys;
  sys.table = order_cocycle_table(c);
  const auto& elems = sys.table.elems;
  size_t n = elems.size();

  auto index_of = [&](const GroupElement& g) {
    for (size_t i = 0; i < n; ++i)
      if (elems[i] == g) return i;
    fail(Status::internal, "euler system: product left the element list");
  };

  for (size_t i = 1; i < n; ++i)
    for (size_t j = 1; j < n; ++j) {
      std::vector<Integer> row(n - 1, 0);
      row[i - 1] += 1;
      row[j - 1] += 1;
      size_t prod = index_of(elems[i] * elems[j]);
      if (prod != 0) row[prod - 1] -= 1;
      sys.m.push_back(std::move(row));
      sys.b.push_back(to_integer(sys.table.f[i][j]));
    }
  sys.snf = smith_normal_form(sys.m);
  sys.beta = mat_vec(sys.snf.u, sys.b);
  return sys;
}

} // namespace

EulerClassInfo euler_class_order(const CircularOrder& c) {
  EulerSystem sys = build_system(c);
  EulerClassInfo info;
  Integer k = 1;
  for (size_t i = 0; i < sys.beta.size(); ++i) {
    Integer d = i < sys.snf.diag.size() ? sys.snf.diag[i] : Integer(0);
    if (d == 0) {
      if (sys.beta[i] != 0) {
        info.torsion = false;
        info.order = 0;
        return info;
      }
    } else {
      k = int_lcm(k, d / int_gcd(d, sys.beta[i]));
    }
  }
  info.torsion = true;
  info.order = k;
  return info;
}

std::vector<Integer> eta_solve(const CircularOrder& c, const Integer& k) {
  if (k < 1) fail_arg("eta_solve: k must be >= 1");
  EulerSystem sys = build_system(c);
  size_t cols = sys.snf.cols;
  std::vector<Integer> y(cols, 0);
  for (size_t i = 0; i < sys.beta.size(); ++i) {
    Integer d = i < sys.snf.diag.size() ? sys.snf.diag[i] : Integer(0);
    Integer rhs = k * sys.beta[i];
    if (d == 0) {
      if (rhs != 0) fail_arg("eta_solve: no integral solution for this k");
      continue;
    }
    if (rhs % d != 0) fail_arg("eta_solve: no integral solution for this k");
    y[i] = rhs / d;
  }
  std::vector<Integer> eta_tail = mat_vec(sys.snf.v, y);

  std::vector<Integer> eta(sys.table.elems.size(), 0);
  for (size_t i = 1; i < eta.size(); ++i) eta[i] = eta_tail[i - 1];

  // the solver must reproduce every equation exactly
  const auto& elems = sys.table.elems;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      size_t prod = 0;
      for (size_t t = 0; t < elems.size(); ++t)
        if (elems[t] == elems[i] * elems[j]) prod = t;
      if (eta[i] + eta[j] - eta[prod] != k * to_integer(sys.table.f[i][j]))
        fail(Status::internal, "eta_solve: certificate check failed");
    }
  return eta;
}

LoNormalData lo_normal_subgroup(const CircularOrder& c) {
  EulerClassInfo info = euler_class_order(c);
  if (!info.torsion)
    fail(Status::unsupported, "lo_normal_subgroup: euler class has infinite order");
  LoNormalData out;
  out.k = info.order;
  std::vector<Integer> eta = eta_solve(c, info.order);
  out.phi.resize(eta.size());
  for (size_t i = 0; i < eta.size(); ++i) {
    out.phi[i] = eta[i] % out.k;
    if (out.phi[i] < 0) out.phi[i] += out.k;
  }

  CocycleTable table = order_cocycle_table(c);
  const auto& elems = table.elems;
  auto index_of = [&](const GroupElement& g) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == g) return i;
    fail(Status::internal, "lo_normal_subgroup: product left the element list");
  };
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      if ((out.phi[i] + out.phi[j] - out.phi[index_of(elems[i] * elems[j])]) % out.k != 0)
        fail_arg("lo_normal_subgroup: eta mod k is not a homomorphism");
  Integer span = out.k;
  for (const Integer& v : out.phi) span = int_gcd(span, v);
  if (span != 1 && out.k != 1)
    fail_arg("lo_normal_subgroup: eta mod k is not surjective");

  for (size_t i = 0; i < out.phi.size(); ++i)
    if (out.phi[i] == 0) out.kernel.push_back(i);
  return out;
}

} // namespace corda
