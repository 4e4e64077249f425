#pragma once
#include <memory>

#include "corda/orders.hpp"

namespace corda {

// Inhomogeneous 2-cocycle of a circular order: 0 when either argument is the
// identity, 1 when h = g^-1 != id, otherwise (1 - c(id, g, gh)) / 2.
Int order_cocycle(const CircularOrder& c, const GroupElement& g, const GroupElement& h);

// Z x_f G for the cocycle of a circular order; payload [level, base...].
// z = (1, id) is central, positive and cofinal for the canonical left order.
class CentralExtensionGroup final : public Group {
public:
  explicit CentralExtensionGroup(CircularOrder base_order);

  std::string name() const override;
  std::vector<Int> identity_data() const override;
  std::vector<Int> multiply_data(const std::vector<Int>& a,
                                 const std::vector<Int>& b) const override;
  std::vector<Int> inverse_data(const std::vector<Int>& a) const override;
  bool check_data(const std::vector<Int>& a) const override;
  std::string element_string(const std::vector<Int>& a) const override;

  const CircularOrder& base_order() const { return base_order_; }
  const GroupPtr& base_group() const { return base_; }

  GroupElement make(Int level, const GroupElement& base) const;
  GroupElement lift(const GroupElement& base) const { return make(0, base); }
  GroupElement z() const { return make(1, base_->identity()); }
  Int level(const GroupElement& e) const;
  GroupElement base_part(const GroupElement& e) const;

private:
  CircularOrder base_order_;
  GroupPtr base_;
};

std::shared_ptr<const CentralExtensionGroup> central_extension(const CircularOrder& c);

// (a, g) is positive iff a > 0, or a = 0 and g != id.
LeftOrder extension_left_order(const std::shared_ptr<const CentralExtensionGroup>& ext);

// Number of order comparisons floor_by_z may spend before giving up; default
// 1000000, overridden by CORDA_STEP_BUDGET.
Int step_budget();

// The unique a with z^a <= g < z^{a+1}; z must be positive and commute with g.
// Exponential search plus bisection; throws budget_exhausted when z fails to
// bracket g within the step budget ("cofinality not witnessed").
Int floor_by_z(const LeftOrder& lo, const GroupElement& z, const GroupElement& g);

// G / <z> for a central positive cofinal z of a left-ordered group; payloads
// are the minimal representatives id <= g < z.
class QuotientGroup final : public Group {
public:
  QuotientGroup(LeftOrder order, GroupElement z);

  std::string name() const override;
  std::vector<Int> identity_data() const override;
  std::vector<Int> multiply_data(const std::vector<Int>& a,
                                 const std::vector<Int>& b) const override;
  std::vector<Int> inverse_data(const std::vector<Int>& a) const override;
  bool check_data(const std::vector<Int>& a) const override;
  std::string element_string(const std::vector<Int>& a) const override;

  GroupElement project(const GroupElement& g) const;        // total -> quotient
  GroupElement representative(const GroupElement& q) const; // quotient -> total
  const GroupPtr& total() const { return total_; }

private:
  std::vector<Int> reduce(const GroupElement& g) const;

  LeftOrder order_;
  GroupElement z_;
  GroupPtr total_;
};

struct QuotientOrder {
  std::shared_ptr<const QuotientGroup> group;
  CircularOrder order;
};

// The circular order on G / <z> comparing minimal representatives linearly.
QuotientOrder quotient_circular_order(const LeftOrder& lo, const GroupElement& z);

// G / <z^p>: the image of z rotates by exactly 1/p.
QuotientOrder rot_one_over_p(const LeftOrder& lo, const GroupElement& z, Int p);

struct RotOptions {
  Int iterations = 64;      // n for the bracketing interval
  bool use_exact_hook = true;
  Int torsion_bound = 512;  // search g^q = id up to this q; 0 disables
};

struct RotationValue {
  bool exact = false;
  Rational value; // in [0, 1) when exact
  Rational lo, hi; // enclosing interval [floor_n/n, (floor_n+1)/n]
  Int floor_n = 0;
  Int n = 0;
};

// Rotation number of g in the dynamical realization of c.  Exact when the
// order carries a hook or g has provable finite order (then g~^q = z^p gives
// p/q); otherwise the interval of width 1/iterations.
RotationValue rot(const CircularOrder& c, const GroupElement& g, RotOptions opts = {});

// Extend a circular order on kZ (elements of Z divisible by k) to all of Z,
// preserving the restriction and the rotation number of k.  Needs the exact
// rotation number of k; the new order has rot(1) = p'/d as dictated by it.
CircularOrder extend_cyclic_order(Int k, const CircularOrder& sub, RotOptions opts = {});

} // namespace corda
