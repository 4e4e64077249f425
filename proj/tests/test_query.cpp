#include <doctest.h>
#include <json.hpp>

#include "corda/error.hpp"
#include "corda/query.hpp"
#include "corda/seifert.hpp"

using namespace corda;
using Json = nlohmann::json;

namespace {

Json ask(const Json& query) {
  Json req;
  req["schema"] = "corda/v1";
  req["query"] = query;
  return Json::parse(eval_query_json(req.dump()));
}

std::string datum(const Json& result, const std::string& key) {
  return result.at("data").at(key).get<std::string>();
}

} // namespace

TEST_CASE("envelope shape and determinism") {
  Json q = {{"op", "fibonacci"}, {"k", 2}, {"m", 2}};
  Json req = {{"schema", "corda/v1"}, {"query", q}};
  std::string first = eval_query_json(req.dump());
  std::string second = eval_query_json(req.dump());
  CHECK(first == second); // byte-identical replay
  CHECK(first.back() == '\n');

  Json out = Json::parse(first);
  CHECK(out.at("schema") == "corda/v1");
  CHECK(out.at("query") == q); // echoed verbatim
  CHECK(out.at("verdict") == "CO_CERTIFIED");
  CHECK(out.at("rule") == "fibonacci-epimorphism");
  CHECK(out.at("reason") == "");
  CHECK(out.at("citations").is_array());
  CHECK(!out.at("citations").empty());
  CHECK(out.at("hypotheses").is_array());
  CHECK(out.at("data").is_object());
  CHECK(datum(out, "group") == "F^2_4");
  CHECK(datum(out, "target") == "Z/2 * Z/2");
}

TEST_CASE("malformed requests are rejected") {
  CHECK_THROWS_AS(eval_query_json("not json"), Error);
  CHECK_THROWS_AS(eval_query_json("[1,2]"), Error);

  // wrong or missing schema tag
  CHECK_THROWS_WITH_AS(eval_query_json(R"({"query":{"op":"fibonacci","k":2,"m":2}})"),
                       doctest::Contains("schema"), Error);
  CHECK_THROWS_WITH_AS(
      eval_query_json(R"({"schema":"corda/v2","query":{"op":"fibonacci","k":2,"m":2}})"),
      doctest::Contains("corda/v1"), Error);

  // unknown fields, at the top level and inside the query
  CHECK_THROWS_WITH_AS(
      eval_query_json(R"({"schema":"corda/v1","extra":1,"query":{"op":"fibonacci","k":2,"m":2}})"),
      doctest::Contains("extra"), Error);
  CHECK_THROWS_WITH_AS(
      eval_query_json(
          R"({"schema":"corda/v1","query":{"op":"fibonacci","k":2,"m":2,"bogus":true}})"),
      doctest::Contains("bogus"), Error);

  // unknown and missing ops
  CHECK_THROWS_WITH_AS(eval_query_json(R"({"schema":"corda/v1","query":{"op":"frobnicate"}})"),
                       doctest::Contains("frobnicate"), Error);
  CHECK_THROWS_AS(eval_query_json(R"({"schema":"corda/v1","query":{}})"), Error);

  // floats never sneak in as integers or rationals
  CHECK_THROWS_AS(ask({{"op", "fibonacci"}, {"k", 2.5}, {"m", 2}}), Error);
  CHECK_THROWS_AS(ask({{"op", "surgery-window"}, {"p", 2}, {"q", 3}, {"c", 0.75}}), Error);
  CHECK_THROWS_AS(ask({{"op", "surgery-window"}, {"p", 2}, {"q", 3}, {"c", "3/0"}}), Error);
}

TEST_CASE("validate-order constructions") {
  Json cyc = ask({{"op", "validate-order"}, {"construction", "cyclic"}, {"n", 5}, {"k", 2}});
  CHECK(cyc.at("verdict") == "CO_CERTIFIED");
  CHECK(cyc.at("rule") == "axiom-validation");
  CHECK(datum(cyc, "group") == "Z/5");
  CHECK(datum(cyc, "violations") == "0");

  Json sec = ask({{"op", "validate-order"}, {"construction", "secret-z"}, {"range", 6}});
  CHECK(sec.at("verdict") == "CO_CERTIFIED");
  CHECK(datum(sec, "sample") == "13 elements");

  CHECK_THROWS_AS(ask({{"op", "validate-order"}, {"construction", "mystery"}}), Error);
  CHECK_THROWS_AS(ask({{"op", "validate-order"}, {"construction", "cyclic"}, {"n", 5}, {"k", 5}}),
                  Error); // gcd(k, n) != 1
}

TEST_CASE("finite-co over the group table") {
  Json q8 = ask({{"op", "finite-co"}, {"group", "q8"}});
  CHECK(q8.at("verdict") == "NOT_CO");
  CHECK(q8.at("rule") == "");
  CHECK(datum(q8, "order") == "8");
  CHECK(datum(q8, "cyclic") == "false");
  CHECK(datum(q8, "bruteforce") == "agrees");

  Json z5 = ask({{"op", "finite-co"}, {"group", "Z5"}});
  CHECK(z5.at("verdict") == "CO_CERTIFIED");
  CHECK(z5.at("rule") == "finite-cyclic");

  Json z12 = ask({{"op", "finite-co"}, {"group", "z12"}}); // case-insensitive
  CHECK(z12.at("verdict") == "CO_CERTIFIED");
  CHECK(datum(z12, "order") == "12");

  CHECK(ask({{"op", "finite-co"}, {"group", "Z2xZ2"}}).at("verdict") == "NOT_CO");
  CHECK_THROWS_AS(ask({{"op", "finite-co"}, {"group", "monster"}}), Error);
}

TEST_CASE("euler-order pipeline") {
  Json out = ask({{"op", "euler-order"}, {"n", 6}, {"k", 1}});
  CHECK(out.at("verdict") == "CO_CERTIFIED");
  CHECK(out.at("rule") == "euler-class-order");
  CHECK(datum(out, "euler-order") == "6");
  CHECK(datum(out, "quotient") == "Z/6");
  CHECK(datum(out, "kernel-size") == "1");

  Json ten = ask({{"op", "euler-order"}, {"n", 10}, {"k", 3}});
  CHECK(datum(ten, "euler-order") == "10");
}

TEST_CASE("rot constructions") {
  Json qz = ask({{"op", "rot"}, {"construction", "quotient-z"}, {"z", 3}, {"g", 1}, {"n", 1000}});
  CHECK(qz.at("verdict") == "CO_CERTIFIED");
  CHECK(qz.at("rule") == "rot-number");
  CHECK(datum(qz, "exact") == "true");
  CHECK(datum(qz, "value") == "1/3");

  Json g2 = ask({{"op", "rot"}, {"construction", "quotient-z"}, {"z", 5}, {"g", 2}});
  CHECK(datum(g2, "value") == "2/5");

  Json op7 = ask({{"op", "rot"}, {"construction", "one-over-p"}, {"p", 7}});
  CHECK(datum(op7, "exact") == "true");
  CHECK(datum(op7, "value") == "1/7");

  CHECK_THROWS_AS(ask({{"op", "rot"}, {"construction", "quotient-z"}, {"z", 3}, {"n", 0}}), Error);
}

TEST_CASE("seifert queries") {
  // Poincare sphere: S2((2,1),(3,1),(5,1)), b = -1
  Json poincare = ask({{"op", "seifert"},
                       {"data",
                        {{"baseOrientable", true},
                         {"genus", 0},
                         {"pairs", {{2, 1}, {3, 1}, {5, 1}}},
                         {"b", -1}}}});
  CHECK(poincare.at("verdict") == "NOT_CO");
  CHECK(poincare.at("reason") == std::string("finite non-cyclic fundamental group"));
  CHECK(datum(poincare, "h1") == "1");

  // T3 = S1-bundle of euler number 0 over the torus
  Json t3 = ask({{"op", "seifert"},
                 {"data", {{"baseOrientable", true}, {"genus", 1}, {"b", 0}}}});
  CHECK(t3.at("verdict") == "CO_CERTIFIED");
  CHECK(t3.at("rule") == "sfco-infinite");

  // trefoil exterior: bounded, so b1 >= 1
  Json tref = ask({{"op", "seifert"},
                   {"data",
                    {{"orientable", true},
                     {"baseOrientable", true},
                     {"genus", 0},
                     {"boundaries", 1},
                     {"pairs", {{2, 1}, {3, 1}}},
                     {"b", 0}}}});
  CHECK(tref.at("verdict") == "CO_CERTIFIED");
  CHECK(tref.at("rule") == "lo-surjection-b1");
  CHECK(datum(tref, "h1") == "0");
  CHECK(datum(tref, "longitude") == "(6,5)");
  CHECK(datum(tref, "longitude-order") == "1");

  CHECK_THROWS_AS(ask({{"op", "seifert"},
                       {"data", {{"orientable", false}, {"baseOrientable", true}, {"genus", 1}}}}),
                  Error);
  CHECK_THROWS_AS(
      ask({{"op", "seifert"}, {"data", {{"baseOrientable", true}, {"genus", 0}, {"bad", 1}}}}),
      Error);
}

TEST_CASE("graph and two-piece queries") {
  SeifertData tref = torus_knot_exterior(2, 3);
  Json node = {{"baseOrientable", tref.base_orientable},
               {"genus", tref.genus},
               {"boundaries", tref.boundary_count},
               {"pairs", Json::array()},
               {"b", tref.b}};
  for (const SeifertPair& p : tref.pairs) node["pairs"].push_back({p.alpha, p.beta});

  Json tree = {{"nodes", {node, node}},
               {"edges",
                {{{"a", 0},
                  {"aBdry", 0},
                  {"b", 1},
                  {"bBdry", 0},
                  {"matrix", {{-5, 6}, {1, -1}}}}}}};

  Json graph = ask({{"op", "graph"}, {"tree", tree}});
  CHECK(graph.at("verdict") == "CO_CERTIFIED");
  CHECK(graph.at("rule") == "two-piece-3a");
  CHECK(datum(graph, "h1") == "6");

  Json two = ask({{"op", "two-piece"}, {"tree", tree}});
  CHECK(two.at("rule") == "two-piece-3a");

  // hints pass through
  Json hinted = ask({{"op", "two-piece"},
                     {"tree", tree},
                     {"hints", {{"fill1Infinite", true}, {"fill2Infinite", true}}}});
  CHECK(hinted.at("verdict") == "CO_CERTIFIED");

  // determinant +1 gluings are rejected by tree validation
  Json badTree = tree;
  badTree["edges"][0]["matrix"] = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(ask({{"op", "graph"}, {"tree", badTree}}), Error);
  CHECK_THROWS_AS(ask({{"op", "graph"}, {"tree", {{"nodes", Json::array()}}}}), Error);
}

TEST_CASE("branched-cover queries") {
  Json three = ask({{"op", "branched-cover"}, {"torus", {2, 3}}, {"n", 3}});
  CHECK(three.at("verdict") == "NOT_CO");
  CHECK(three.at("reason").get<std::string>().find("quaternion") != std::string::npos);
  CHECK(datum(three, "pi1-order") == "8");

  Json req = {{"schema", "corda/v1"},
              {"query", {{"op", "branched-cover"}, {"torus", {2, 3}}, {"range", {2, 4}}}}};
  Json batch = Json::parse(eval_query_json(req.dump()));
  CHECK(batch.at("schema") == "corda/v1");
  REQUIRE(batch.at("results").size() == 3);
  CHECK(batch["results"][0].at("verdict") == "CO_CERTIFIED");
  CHECK(batch["results"][0].at("rule") == "finite-cyclic");
  CHECK(batch["results"][1].at("verdict") == "NOT_CO");
  CHECK(batch["results"][2].at("verdict") == "NOT_CO");
  CHECK(batch["results"][2].at("query").at("n") == 4);

  Json tb = ask({{"op", "branched-cover"}, {"twoBridge", {7, 4}}});
  CHECK(tb.at("verdict") == "CO_CERTIFIED");
  CHECK(datum(tb, "double-cover") == "L(7,4)");

  Json weeks = ask({{"op", "branched-cover"}, {"named", "weeks"}});
  CHECK(weeks.at("verdict") == "NOT_CO");
  CHECK(weeks.at("rule") == "");
  CHECK(datum(weeks, "manifold") == "Weeks manifold");

  Json unknown = ask({{"op", "branched-cover"}, {"named", "Sigma_2(4_1)"}});
  CHECK(unknown.at("verdict") == "UNKNOWN");
  CHECK(unknown.at("reason").get<std::string>().find("curated") != std::string::npos);

  CHECK_THROWS_AS(ask({{"op", "branched-cover"}, {"torus", {2, 3}}}), Error);
  CHECK_THROWS_AS(
      ask({{"op", "branched-cover"}, {"torus", {2, 3}}, {"n", 2}, {"range", {2, 3}}}), Error);
  CHECK_THROWS_AS(ask({{"op", "branched-cover"}, {"named", "weeks"}, {"n", 2}}), Error);
  CHECK_THROWS_AS(ask({{"op", "branched-cover"}, {"twoBridge", {7, 4}}, {"n", 3}}), Error);
  CHECK_THROWS_AS(ask({{"op", "branched-cover"}, {"torus", {2, 3}}, {"range", {4, 2}}}), Error);
}

TEST_CASE("surgery-window queries") {
  Json in = ask({{"op", "surgery-window"}, {"p", 2}, {"q", 3}, {"c", "3/4"}});
  CHECK(in.at("verdict") == "CO_CERTIFIED");
  CHECK(in.at("rule") == "surgery-window");
  CHECK(datum(in, "window") == "true");
  CHECK(datum(in, "pc") == "3/2");
  CHECK(in.at("hypotheses").size() == 2);

  Json out = ask({{"op", "surgery-window"}, {"p", 2}, {"q", 1}, {"c", "3/4"}});
  CHECK(out.at("verdict") == "UNKNOWN");
  CHECK(datum(out, "window") == "false");

  Json integral = ask({{"op", "surgery-window"}, {"p", 3}, {"q", 2}, {"c", 1}});
  CHECK(datum(integral, "pc") == "3");
  CHECK(integral.at("verdict") == "CO_CERTIFIED");

  CHECK_THROWS_AS(ask({{"op", "surgery-window"}, {"p", 0}, {"q", 1}, {"c", "1/2"}}), Error);
}

TEST_CASE("takahashi queries") {
  Json two = ask({{"op", "takahashi"},
                  {"pairs", {{2, 1, 3, 1}}},
                  {"n", 2},
                  {"prime", true}});
  CHECK(two.at("verdict") == "CO_CERTIFIED");
  CHECK(two.at("rule") == "takahashi-free-product");
  CHECK(datum(two, "free-product") == "Z/2 * Z/3");

  Json notPrime = ask({{"op", "takahashi"}, {"pairs", {{2, 1, 3, 1}}}, {"n", 2}});
  CHECK(notPrime.at("verdict") == "UNKNOWN"); // prime defaults to false

  CHECK_THROWS_AS(ask({{"op", "takahashi"}, {"pairs", {{2, 1, 3}}}, {"n", 2}}), Error);
}
