#include "corda/extensions.hpp"

#include <algorithm>
#include <cstdlib>

#include "corda/error.hpp"

namespace corda {

Int order_cocycle(const CircularOrder& c, const GroupElement& g, const GroupElement& h) {
  if (g.group() != c.group || h.group() != c.group)
    fail_arg("order_cocycle: element from another group");
  if (g.is_identity() || h.is_identity()) return 0;
  GroupElement gh = g * h;
  if (gh.is_identity()) return 1;
  int v = c.eval(c.group->identity(), g, gh);
  if (v == 0) fail(Status::internal, "order_cocycle: degenerate value on distinct triple");
  return (1 - v) / 2;
}

// ---- central extension -------------------------------------------------------

CentralExtensionGroup::CentralExtensionGroup(CircularOrder base_order)
    : base_order_(std::move(base_order)), base_(base_order_.group) {
  if (!base_) fail_arg("CentralExtensionGroup: order without group");
}

std::string CentralExtensionGroup::name() const { return "ext(" + base_->name() + ")"; }

std::vector<Int> CentralExtensionGroup::identity_data() const {
  std::vector<Int> d = {0};
  std::vector<Int> b = base_->identity_data();
  d.insert(d.end(), b.begin(), b.end());
  return d;
}

static std::vector<Int> payload_tail(const std::vector<Int>& a) {
  return std::vector<Int>(a.begin() + 1, a.end());
}

std::vector<Int> CentralExtensionGroup::multiply_data(const std::vector<Int>& a,
                                                      const std::vector<Int>& b) const {
  GroupElement ga(base_, payload_tail(a)), gb(base_, payload_tail(b));
  Int f = order_cocycle(base_order_, ga, gb);
  std::vector<Int> out = {a[0] + b[0] + f};
  std::vector<Int> prod = base_->multiply_data(ga.data(), gb.data());
  out.insert(out.end(), prod.begin(), prod.end());
  return out;
}

std::vector<Int> CentralExtensionGroup::inverse_data(const std::vector<Int>& a) const {
  GroupElement g(base_, payload_tail(a));
  GroupElement ginv = g.inverse();
  Int f = order_cocycle(base_order_, ginv, g);
  std::vector<Int> out = {-a[0] - f};
  out.insert(out.end(), ginv.data().begin(), ginv.data().end());
  return out;
}

bool CentralExtensionGroup::check_data(const std::vector<Int>& a) const {
  return !a.empty() && base_->check_data(payload_tail(a));
}

std::string CentralExtensionGroup::element_string(const std::vector<Int>& a) const {
  return "(" + std::to_string(a[0]) + "," + base_->element_string(payload_tail(a)) + ")";
}

GroupElement CentralExtensionGroup::make(Int level, const GroupElement& base) const {
  if (base.group() != base_) fail_arg("CentralExtensionGroup: base element from another group");
  std::vector<Int> d = {level};
  d.insert(d.end(), base.data().begin(), base.data().end());
  return GroupElement(shared_from_this(), d);
}

Int CentralExtensionGroup::level(const GroupElement& e) const {
  if (e.group().get() != this) fail_arg("level: element from another group");
  return e.data()[0];
}

GroupElement CentralExtensionGroup::base_part(const GroupElement& e) const {
  if (e.group().get() != this) fail_arg("base_part: element from another group");
  return GroupElement(base_, payload_tail(e.data()));
}

std::shared_ptr<const CentralExtensionGroup> central_extension(const CircularOrder& c) {
  return std::make_shared<CentralExtensionGroup>(c);
}

LeftOrder extension_left_order(const std::shared_ptr<const CentralExtensionGroup>& ext) {
  LeftOrder lo;
  lo.group = ext;
  lo.tag = "ext-order";
  GroupPtr base = ext->base_group();
  std::vector<Int> base_id = base->identity_data();
  lo.sign = [base_id](const GroupElement& e) {
    Int level = e.data()[0];
    if (level > 0) return 1;
    if (level < 0) return -1;
    bool base_is_id = std::equal(e.data().begin() + 1, e.data().end(), base_id.begin(),
                                 base_id.end());
    return base_is_id ? 0 : 1;
  };
  return lo;
}

// ---- floor and quotients -----------------------------------------------------

Int step_budget() {
  const char* env = std::getenv("CORDA_STEP_BUDGET");
  if (!env || !*env) return 1000000;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end || v < 1) fail_arg("CORDA_STEP_BUDGET must be a positive integer");
  return v;
}

Int floor_by_z(const LeftOrder& lo, const GroupElement& z, const GroupElement& g) {
  if (lo.group != z.group() || lo.group != g.group())
    fail_arg("floor_by_z: mismatched group");
  if (lo.sign(z) <= 0) fail_arg("floor_by_z: z must be positive");
  if (!(z * g == g * z)) fail_arg("floor_by_z: z must commute with g");

  const Int budget = step_budget();
  const Int magnitude_cap = Int(1) << 60;
  Int steps = 0;
  auto z_power_le = [&](Int a) { // z^a <= g
    if (++steps > budget)
      fail(Status::budget_exhausted, "cofinality not witnessed within step budget");
    return lo.sign(z.power(a).inverse() * g) >= 0;
  };

  Int low, high; // z^low <= g < z^high
  if (z_power_le(0)) {
    low = 0;
    high = 1;
    while (z_power_le(high)) {
      low = high;
      high *= 2;
      if (high > magnitude_cap)
        fail(Status::budget_exhausted, "cofinality not witnessed within step budget");
    }
  } else {
    high = 0;
    low = -1;
    while (!z_power_le(low)) {
      high = low;
      low *= 2;
      if (low < -magnitude_cap)
        fail(Status::budget_exhausted, "cofinality not witnessed within step budget");
    }
  }
  while (high - low > 1) {
    Int mid = low + (high - low) / 2;
    if (z_power_le(mid))
      low = mid;
    else
      high = mid;
  }
  return low;
}

QuotientGroup::QuotientGroup(LeftOrder order, GroupElement z)
    : order_(std::move(order)), z_(std::move(z)), total_(order_.group) {
  if (z_.group() != total_) fail_arg("QuotientGroup: z from another group");
  if (order_.sign(z_) <= 0) fail_arg("QuotientGroup: z must be positive");
}

std::string QuotientGroup::name() const { return "quot(" + total_->name() + ")"; }

std::vector<Int> QuotientGroup::reduce(const GroupElement& g) const {
  Int a = floor_by_z(order_, z_, g);
  return (g * z_.power(-a)).data();
}

std::vector<Int> QuotientGroup::identity_data() const { return total_->identity_data(); }

std::vector<Int> QuotientGroup::multiply_data(const std::vector<Int>& a,
                                              const std::vector<Int>& b) const {
  return reduce(GroupElement(total_, a) * GroupElement(total_, b));
}

std::vector<Int> QuotientGroup::inverse_data(const std::vector<Int>& a) const {
  return reduce(GroupElement(total_, a).inverse());
}

bool QuotientGroup::check_data(const std::vector<Int>& a) const {
  if (!total_->check_data(a)) return false;
  return floor_by_z(order_, z_, GroupElement(total_, a)) == 0;
}

std::string QuotientGroup::element_string(const std::vector<Int>& a) const {
  return total_->element_string(a);
}

GroupElement QuotientGroup::project(const GroupElement& g) const {
  if (g.group() != total_) fail_arg("project: element from another group");
  return GroupElement(shared_from_this(), reduce(g));
}

GroupElement QuotientGroup::representative(const GroupElement& q) const {
  if (q.group().get() != this) fail_arg("representative: element from another group");
  return GroupElement(total_, q.data());
}

QuotientOrder quotient_circular_order(const LeftOrder& lo, const GroupElement& z) {
  auto qg = std::make_shared<const QuotientGroup>(lo, z);
  CircularOrder c;
  c.group = qg;
  c.tag = "quotient(" + lo.tag + ")";
  GroupPtr total = lo.group;
  auto sign = lo.sign;
  c.eval = [total, sign](const GroupElement& q1, const GroupElement& q2, const GroupElement& q3) {
    if (q1 == q2 || q2 == q3 || q1 == q3) return 0;
    GroupElement r1(total, q1.data()), r2(total, q2.data()), r3(total, q3.data());
    auto less = [&](const GroupElement& a, const GroupElement& b) {
      return sign(a.inverse() * b) > 0;
    };
    return triple_sign(less(r1, r2), less(r1, r3), less(r2, r3));
  };
  return {qg, c};
}

QuotientOrder rot_one_over_p(const LeftOrder& lo, const GroupElement& z, Int p) {
  if (p < 1) fail_arg("rot_one_over_p: p must be >= 1");
  return quotient_circular_order(lo, z.power(p));
}

// ---- rotation numbers --------------------------------------------------------

RotationValue rot(const CircularOrder& c, const GroupElement& g, RotOptions opts) {
  if (g.group() != c.group) fail_arg("rot: element from another group");
  RotationValue rv;
  if (opts.use_exact_hook && c.exact_rot) {
    if (std::optional<Rational> v = c.exact_rot(g)) {
      rv.exact = true;
      rv.value = rational_mod1(*v);
      rv.lo = rv.hi = rv.value;
      return rv;
    }
  }
  if (opts.torsion_bound > 0) {
    GroupElement h = g;
    for (Int q = 1; q <= opts.torsion_bound; ++q) {
      if (h.is_identity()) {
        auto ext = central_extension(c);
        Int level = ext->level(ext->lift(g).power(q));
        rv.exact = true;
        rv.value = rational_mod1(make_rational(level, q));
        rv.lo = rv.hi = rv.value;
        return rv;
      }
      h = h * g;
    }
  }
  if (opts.iterations < 1) fail_arg("rot: iterations must be >= 1");
  auto ext = central_extension(c);
  LeftOrder lo = extension_left_order(ext);
  Int n = opts.iterations;
  Int a = floor_by_z(lo, ext->z(), ext->lift(g).power(n));
  rv.exact = false;
  rv.floor_n = a;
  rv.n = n;
  rv.lo = make_rational(a, n);
  rv.hi = make_rational(a + 1, n);
  return rv;
}

// ---- extension of an order on kZ to Z ---------------------------------------

CircularOrder extend_cyclic_order(Int k, const CircularOrder& sub, RotOptions opts) {
  auto zg = std::dynamic_pointer_cast<const CyclicGroup>(sub.group);
  if (!zg || zg->modulus() != 0) fail_arg("extend_cyclic_order: order must live on Z");
  if (k < 1) fail_arg("extend_cyclic_order: k must be >= 1");
  if (k == 1) return sub;

  RotationValue rv = rot(sub, sub.group->element({k}), opts);
  if (!rv.exact)
    fail(Status::unsupported,
         "extend_cyclic_order: exact rotation number of the generator unavailable");
  Integer p = rv.value.get_num();
  Integer q = rv.value.get_den();
  Integer qk = q * to_integer(k);
  Integer d_big = qk / int_gcd(p, to_integer(k));
  Integer pp_big = p == 0 ? Integer(0) : Integer(p / int_gcd(p, qk));
  if (!d_big.fits_slong_p() || !pp_big.fits_slong_p())
    fail(Status::unsupported, "extend_cyclic_order: extension modulus too large");
  Int d = d_big.get_si();
  Int pp = pp_big.get_si();
  Int g1 = int_gcd(p, to_integer(k)).get_si(); // gw ranges over qkZ, where sub has a kernel

  GroupPtr quotient = cyclic_group(d);
  ShortExactSequence ses;
  ses.total = sub.group;
  ses.quotient = quotient;
  ses.project = [quotient, d](const GroupElement& g) {
    return quotient->element({((g.data()[0] % d) + d) % d});
  };

  LeftOrder kernel;
  kernel.group = sub.group;
  kernel.tag = "extended-kernel";
  GroupPtr total = sub.group;
  auto subeval = sub.eval;
  kernel.sign = [total, subeval, g1](const GroupElement& w) {
    Int v = w.data()[0];
    if (v == 0) return 0;
    return subeval(total->element({-g1 * v}), total->identity(), total->element({g1 * v}));
  };

  CircularOrder out = lex_circular_order(ses, kernel, cyclic_rot_order(quotient, pp));
  out.tag = "extended(" + std::to_string(k) + ";" + sub.tag + ")";
  return out;
}

} // namespace corda
