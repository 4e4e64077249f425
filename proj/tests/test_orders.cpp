#include <doctest.h>

#include "corda/error.hpp"
#include "corda/orders.hpp"

using namespace corda;

namespace {

std::vector<GroupElement> integer_window(const GroupPtr& z, Int lo, Int hi) {
  std::vector<GroupElement> out;
  for (Int v = lo; v <= hi; ++v) out.push_back(z->element({v}));
  return out;
}

// all reduced words with at most `len` syllables
std::vector<GroupElement> short_words(const GroupPtr& g, const std::vector<GroupElement>& gens,
                                      int len) {
  std::vector<GroupElement> out = {g->identity()};
  size_t begin = 0;
  for (int step = 0; step < len; ++step) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (const GroupElement& x : gens) {
        GroupElement w = out[i] * x;
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
      }
    begin = end;
  }
  return out;
}

} // namespace

TEST_CASE("triple_sign parity") {
  CHECK(triple_sign(true, true, true) == 1);    // a<b<c
  CHECK(triple_sign(false, false, false) == -1); // c<b<a
  CHECK(triple_sign(false, true, true) == -1);  // b<a<c
  CHECK(triple_sign(false, false, true) == 1);  // b<c<a
  CHECK(triple_sign(true, false, false) == 1);  // c<a<b
  CHECK(triple_sign(true, true, false) == -1);  // a<c<b
}

TEST_CASE("circle_orientation") {
  CHECK(circle_orientation(Rational(0), make_rational(1, 3), make_rational(2, 3)) == 1);
  CHECK(circle_orientation(Rational(0), make_rational(2, 3), make_rational(1, 3)) == -1);
  CHECK(circle_orientation(make_rational(2, 3), Rational(0), make_rational(1, 3)) == 1);
  CHECK(circle_orientation(Rational(0), Rational(0), make_rational(1, 2)) == 0);
}

TEST_CASE("coordinate lex order") {
  GroupPtr z = cyclic_group(0);
  LeftOrder lo = coordinate_lex_order(z);
  CHECK(lo.sign(z->element({5})) == 1);
  CHECK(lo.sign(z->element({-3})) == -1);
  CHECK(lo.sign(z->identity()) == 0);
  CHECK(lo.less(z->element({2}), z->element({7})));
  CHECK(validate_left_order(lo, integer_window(z, -4, 4)).ok);

  GroupPtr l2 = lattice_group(2);
  LeftOrder lex = coordinate_lex_order(l2);
  CHECK(lex.sign(l2->element({0, -2})) == -1);
  CHECK(lex.sign(l2->element({1, -5})) == 1);
  LeftOrder opp = opposite_order(lex);
  CHECK(opp.sign(l2->element({1, -5})) == -1);

  CHECK_THROWS_AS(coordinate_lex_order(table_group("S3")), Error);
  CHECK_THROWS_AS(coordinate_lex_order(cyclic_group(5)), Error);
}

TEST_CASE("secret circular order of the standard order on Z") {
  GroupPtr z = cyclic_group(0);
  CircularOrder c = secret_circular_order(coordinate_lex_order(z));
  auto e = [&](Int a, Int b, Int g) { return c.eval(z->element({a}), z->element({b}), z->element({g})); };
  CHECK(e(0, 1, 2) == 1);
  CHECK(e(1, 0, 2) == -1);
  CHECK(e(2, 0, 1) == 1); // cyclic rotation
  CHECK(e(0, 0, 1) == 0);
  CHECK(*c.exact_rot(z->element({7})) == 0);
  CHECK(validate_circular_order(c, integer_window(z, -2, 3)).ok);

  CircularOrder rev = secret_circular_order(opposite_order(coordinate_lex_order(z)));
  CHECK(rev.eval(z->element({0}), z->element({1}), z->element({2})) == -1);
}

TEST_CASE("cyclic_rot_order") {
  GroupPtr z6 = cyclic_group(6);
  CircularOrder c1 = cyclic_rot_order(z6, 1);
  auto e1 = [&](Int a, Int b, Int g) {
    return c1.eval(z6->element({a}), z6->element({b}), z6->element({g}));
  };
  CHECK(e1(0, 1, 3) == 1);
  CHECK(e1(0, 3, 1) == -1);
  CHECK(e1(5, 0, 2) == 1);
  CHECK(validate_circular_order(c1).ok);
  CHECK(*c1.exact_rot(z6->element({1})) == make_rational(1, 6));

  CircularOrder c5 = cyclic_rot_order(z6, 5);
  CHECK(c5.eval(z6->element({0}), z6->element({1}), z6->element({3})) == -1);
  CHECK(validate_circular_order(c5).ok);
  CHECK(*c5.exact_rot(z6->element({1})) == make_rational(5, 6));
  CHECK(*c5.exact_rot(z6->element({2})) == make_rational(2, 3));

  CHECK_THROWS_AS(cyclic_rot_order(z6, 2), Error);
  CHECK_THROWS_AS(cyclic_rot_order(cyclic_group(0), 1), Error);
  CHECK_THROWS_AS(cyclic_rot_order(z6, 0), Error);
}

TEST_CASE("lex circular order on Z over Z/3") {
  GroupPtr z = cyclic_group(0);
  GroupPtr z3 = cyclic_group(3);
  ShortExactSequence ses;
  ses.total = z;
  ses.quotient = z3;
  ses.project = [z3](const GroupElement& g) {
    return z3->element({((g.data()[0] % 3) + 3) % 3});
  };
  CircularOrder c = lex_circular_order(ses, coordinate_lex_order(z), cyclic_rot_order(z3, 1));
  auto e = [&](Int a, Int b, Int g) { return c.eval(z->element({a}), z->element({b}), z->element({g})); };
  CHECK(e(0, 1, 2) == 1);  // distinct residues: quotient decides
  CHECK(e(0, 3, 1) == 1);  // fibre pair first
  CHECK(e(3, 0, 1) == -1);
  CHECK(e(0, 6, 3) == -1); // one fibre, odd permutation of 0<3<6
  CHECK(e(0, 3, 6) == 1);
  CHECK(e(0, 4, 2) == 1);
  CHECK(*c.exact_rot(z->element({1})) == make_rational(1, 3));
  CHECK(*c.exact_rot(z->element({3})) == 0);
  CHECK(*c.exact_rot(z->element({5})) == make_rational(2, 3));
  CHECK(validate_circular_order(c, integer_window(z, -3, 5)).ok);

  LeftOrder wrong = coordinate_lex_order(lattice_group(1));
  CHECK_THROWS_AS(lex_circular_order(ses, wrong, cyclic_rot_order(z3, 1)), Error);
}

TEST_CASE("lex left order matches coordinate lex on Z^2") {
  GroupPtr l2 = lattice_group(2);
  GroupPtr z = cyclic_group(0);
  ShortExactSequence ses;
  ses.total = l2;
  ses.quotient = z;
  ses.project = [z](const GroupElement& g) { return z->element({g.data()[0]}); };
  LeftOrder second;
  second.group = l2;
  second.tag = "coord2";
  second.sign = [](const GroupElement& g) {
    return g.data()[1] > 0 ? 1 : g.data()[1] < 0 ? -1 : 0;
  };
  LeftOrder built = lex_left_order(ses, second, coordinate_lex_order(z));
  LeftOrder direct = coordinate_lex_order(l2);
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      CHECK(built.sign(l2->element({a, b})) == direct.sign(l2->element({a, b})));
  CHECK(validate_left_order(built, short_words(l2, {l2->element({1, 0}), l2->element({0, 1}),
                                                    l2->element({-1, 0}), l2->element({0, -1})},
                                               2))
            .ok);
}

TEST_CASE("planar order on Z/2 * Z/3") {
  GroupPtr g = free_product_group({2, 3});
  auto fp = std::static_pointer_cast<const FreeProductGroup>(g);
  GroupElement x = fp->generator(0), y = fp->generator(1);
  GroupElement e = g->identity();
  CircularOrder c = planar_free_product_order(g);

  CHECK(c.eval(e, x, x * y) == -1); // pinned convention
  CHECK(c.eval(e, x, y) == 1);
  CHECK(c.eval(e, y, x) == -1);
  CHECK(c.eval(e, y, y * y) == 1);         // factor restriction = cyclic_rot(3,1)
  CHECK(c.eval(x, x * y, x * y * y) == 1); // left translate of the previous
  CHECK(c.eval(y, e, y * y) == -1);
  CHECK(c.eval(e, x, x) == 0);

  std::vector<GroupElement> words = short_words(g, {x, y, y * y}, 2);
  CHECK(words.size() == 8);
  CHECK(validate_circular_order(c, words).ok);
}

TEST_CASE("planar order with explicit factor orders") {
  GroupPtr g = free_product_group({2, 3});
  auto fp = std::static_pointer_cast<const FreeProductGroup>(g);
  GroupPtr f0 = cyclic_group(2), f1 = cyclic_group(3);
  CircularOrder c =
      planar_free_product_order(g, {cyclic_rot_order(f0, 1), cyclic_rot_order(f1, 2)});
  GroupElement y = fp->generator(1);
  CHECK(c.eval(g->identity(), y, y * y) == -1); // restriction is cyclic_rot(3,2)
  CHECK(validate_circular_order(c, short_words(g, {fp->generator(0), y, y * y}, 2)).ok);

  CHECK_THROWS_AS(planar_free_product_order(g, {cyclic_rot_order(f1, 1), cyclic_rot_order(f1, 1)}),
                  Error);
  CHECK_THROWS_AS(planar_free_product_order(cyclic_group(5)), Error);
}

TEST_CASE("planar order with an infinite factor") {
  GroupPtr g = free_product_group({0, 2});
  auto fp = std::static_pointer_cast<const FreeProductGroup>(g);
  GroupElement a = fp->generator(0), b = fp->generator(1);
  CircularOrder c = planar_free_product_order(g);
  std::vector<GroupElement> words = short_words(g, {a, a.inverse(), b}, 2);
  CHECK(validate_circular_order(c, words).ok);
  // restriction to the Z factor is its secret linear order
  CHECK(c.eval(g->identity(), a, a * a) == 1);
  CHECK(c.eval(a.inverse(), g->identity(), a) == 1);
}

TEST_CASE("validators catch broken orders") {
  GroupPtr z6 = cyclic_group(6);
  CircularOrder bad;
  bad.group = z6;
  bad.tag = "swapped-arrangement";
  // circle placement 0,2,1,3,4,5: a genuine cyclic arrangement, but not a
  // translation-invariant one (c(0,1,2) = -1 yet c(2,3,4) = +1)
  bad.eval = [](const GroupElement& a, const GroupElement& b, const GroupElement& g) {
    static const Int pos[6] = {0, 2, 1, 3, 4, 5};
    Int x = pos[a.data()[0]], y = pos[b.data()[0]], z = pos[g.data()[0]];
    if (x == y || y == z || x == z) return 0;
    Int dy = ((y - x) % 6 + 6) % 6, dz = ((z - x) % 6 + 6) % 6;
    return dy < dz ? 1 : -1;
  };
  CHECK(bad.eval(z6->element({0}), z6->element({1}), z6->element({2})) == -1);
  CHECK(bad.eval(z6->element({2}), z6->element({3}), z6->element({4})) == 1);
  AxiomReport rep = validate_circular_order(bad, {}, 5);
  CHECK(!rep.ok);
  CHECK(rep.violations.size() == 5); // capped
  CHECK(std::is_sorted(rep.violations.begin(), rep.violations.end()));
  bool mentions_invariance = false;
  for (const std::string& v : rep.violations)
    if (v.find("left invariance") != std::string::npos) mentions_invariance = true;
  CHECK(mentions_invariance);

  LeftOrder junk;
  junk.group = z6;
  junk.tag = "junk";
  junk.sign = [](const GroupElement&) { return 1; };
  AxiomReport lrep = validate_left_order(junk);
  CHECK(!lrep.ok);
}
