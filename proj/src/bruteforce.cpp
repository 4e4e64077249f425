#include "corda/bruteforce.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "corda/error.hpp"

namespace corda {

namespace {

struct FiniteTable {
  std::vector<GroupElement> elems;
  std::vector<std::vector<size_t>> mul; // index table
};

FiniteTable finite_table(const GroupPtr& g) {
  FiniteTable t;
  t.elems = g->elements();
  size_t n = t.elems.size();
  if (n == 0 || !t.elems[0].is_identity())
    fail(Status::internal, "finite_table: identity must be listed first");
  t.mul.assign(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      GroupElement p = t.elems[i] * t.elems[j];
      size_t idx = n;
      for (size_t k = 0; k < n; ++k)
        if (t.elems[k] == p) idx = k;
      if (idx == n) fail(Status::internal, "finite_table: product not listed");
      t.mul[i][j] = idx;
    }
  return t;
}

bool check_arrangement_shape(size_t n, const Arrangement& arr) {
  if (arr.size() != n || arr[0] != 0) return false;
  std::vector<bool> seen(n, false);
  for (size_t v : arr) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool invariant(const FiniteTable& t, const Arrangement& arr) {
  size_t n = arr.size();
  std::vector<size_t> pos(n);
  for (size_t p = 0; p < n; ++p) pos[arr[p]] = p;
  for (size_t h = 0; h < n; ++h) {
    size_t r = pos[t.mul[h][0]]; // h * id
    for (size_t p = 0; p < n; ++p)
      if (pos[t.mul[h][arr[p]]] != (p + r) % n) return false;
  }
  return true;
}

} // namespace

bool is_left_invariant_arrangement(const GroupPtr& g, const Arrangement& arr) {
  FiniteTable t = finite_table(g);
  if (!check_arrangement_shape(t.elems.size(), arr))
    fail_arg("arrangement must be a permutation of 0..n-1 starting at 0");
  return invariant(t, arr);
}

std::vector<Arrangement> all_circular_arrangements(const GroupPtr& g) {
  FiniteTable t = finite_table(g);
  size_t n = t.elems.size();
  if (n > 8) fail(Status::unsupported, "bruteforce search is limited to groups of order <= 8");
  if (n <= 2) {
    Arrangement arr(n);
    std::iota(arr.begin(), arr.end(), 0);
    return {arr};
  }

  // partition the search by the element at position 1, one task per choice
  auto scan = [&t, n](size_t first) {
    std::vector<Arrangement> found;
    std::vector<size_t> rest;
    for (size_t v = 1; v < n; ++v)
      if (v != first) rest.push_back(v);
    Arrangement arr(n);
    arr[0] = 0;
    arr[1] = first;
    do {
      std::copy(rest.begin(), rest.end(), arr.begin() + 2);
      if (invariant(t, arr)) found.push_back(arr);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return found;
  };

  std::vector<std::future<std::vector<Arrangement>>> tasks;
  for (size_t first = 1; first < n; ++first)
    tasks.push_back(std::async(std::launch::async, scan, first));
  std::vector<Arrangement> all;
  for (auto& task : tasks) {
    std::vector<Arrangement> part = task.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::optional<Arrangement> first_circular_arrangement(const GroupPtr& g) {
  std::vector<Arrangement> all = all_circular_arrangements(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_circularly_orderable_bruteforce(const GroupPtr& g) {
  return first_circular_arrangement(g).has_value();
}

CircularOrder arrangement_order(const GroupPtr& g, Arrangement arr) {
  FiniteTable t = finite_table(g);
  size_t n = t.elems.size();
  if (!check_arrangement_shape(n, arr))
    fail_arg("arrangement must be a permutation of 0..n-1 starting at 0");
  if (!invariant(t, arr)) fail_arg("arrangement is not left-invariant");

  auto pos = std::make_shared<std::vector<size_t>>(n);
  for (size_t p = 0; p < n; ++p) (*pos)[arr[p]] = p;
  auto elems = std::make_shared<std::vector<GroupElement>>(t.elems);

  auto position_of = [pos, elems, n](const GroupElement& e) {
    for (size_t i = 0; i < n; ++i)
      if ((*elems)[i] == e) return (*pos)[i];
    fail_arg("arrangement order: element not in the group listing");
  };

  CircularOrder c;
  c.group = g;
  c.tag = "arrangement";
  c.eval = [position_of, n](const GroupElement& a, const GroupElement& b, const GroupElement& g3) {
    size_t x = position_of(a), y = position_of(b), z = position_of(g3);
    if (x == y || y == z || x == z) return 0;
    size_t dy = (y + n - x) % n, dz = (z + n - x) % n;
    return dy < dz ? 1 : -1;
  };
  c.exact_rot = [position_of, n](const GroupElement& e) {
    return std::optional<Rational>(make_rational(static_cast<Int>(position_of(e)), static_cast<Int>(n)));
  };
  return c;
}

} // namespace corda
