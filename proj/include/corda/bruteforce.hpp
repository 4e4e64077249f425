#pragma once
#include "corda/orders.hpp"

namespace corda {

// A circular arrangement of a finite group: arr[p] is the element index (as
// listed by elements()) sitting at circle position p; arr[0] = 0 anchors the
// identity.  Left-invariant arrangements are exactly the circular orders.
using Arrangement = std::vector<size_t>;

bool is_left_invariant_arrangement(const GroupPtr& g, const Arrangement& arr);

// All left-invariant arrangements in lexicographic order.  The search is
// factorial; groups of order > 8 are refused.
std::vector<Arrangement> all_circular_arrangements(const GroupPtr& g);

std::optional<Arrangement> first_circular_arrangement(const GroupPtr& g);

bool is_circularly_orderable_bruteforce(const GroupPtr& g);

// The circular order an arrangement witnesses; rot(g) = position(g)/n.
CircularOrder arrangement_order(const GroupPtr& g, Arrangement arr);

} // namespace corda
