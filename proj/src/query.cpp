#include "corda/query.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "corda/apps.hpp"
#include "corda/bruteforce.hpp"
#include "corda/error.hpp"
#include "corda/euler.hpp"
#include "corda/extensions.hpp"

namespace corda {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw Error(Status::parse_error, what); }

void check_keys(const Json& obj, const std::string& where,
                std::initializer_list<const char*> known) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known)
      if (item.key() == k) ok = true;
    if (!ok) bad("unknown field '" + item.key() + "' in " + where);
  }
}

const Json& need(const Json& obj, const std::string& where, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(where + " needs field '" + key + "'");
  return obj.at(key);
}

Int get_int(const Json& v, const std::string& name) {
  if (!v.is_number_integer()) bad("field '" + name + "' must be an integer");
  return v.get<Int>();
}

bool get_bool(const Json& v, const std::string& name) {
  if (!v.is_boolean()) bad("field '" + name + "' must be a boolean");
  return v.get<bool>();
}

std::string get_string(const Json& v, const std::string& name) {
  if (!v.is_string()) bad("field '" + name + "' must be a string");
  return v.get<std::string>();
}

// Exact rationals only: an integer, or an "a/b" string.
Rational get_rational(const Json& v, const std::string& name) {
  if (v.is_number_integer()) return Rational(to_integer(v.get<Int>()));
  if (!v.is_string()) bad("field '" + name + "' must be an integer or an \"a/b\" string");
  Rational r;
  try {
    r = Rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    bad("field '" + name + "' is not a rational number");
  }
  if (r.get_den() == 0) bad("field '" + name + "' has zero denominator");
  r.canonicalize();
  return r;
}

SeifertData parse_seifert(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  check_keys(j, where, {"orientable", "baseOrientable", "genus", "boundaries", "pairs", "b"});
  if (j.contains("orientable") && !get_bool(j.at("orientable"), "orientable"))
    throw Error(Status::unsupported, "nonorientable total spaces are not supported");
  SeifertData sd;
  sd.base_orientable = get_bool(need(j, where, "baseOrientable"), "baseOrientable");
  sd.genus = get_int(need(j, where, "genus"), "genus");
  if (j.contains("boundaries")) sd.boundary_count = get_int(j.at("boundaries"), "boundaries");
  if (j.contains("pairs")) {
    const Json& ps = j.at("pairs");
    if (!ps.is_array()) bad("field 'pairs' must be an array of [alpha, beta] pairs");
    for (const Json& p : ps) {
      if (!p.is_array() || p.size() != 2)
        bad("field 'pairs' must be an array of [alpha, beta] pairs");
      sd.pairs.push_back({get_int(p[0], "alpha"), get_int(p[1], "beta")});
    }
  }
  if (j.contains("b")) sd.b = get_int(j.at("b"), "b");
  return sd;
}

JsjTree parse_tree(const Json& j) {
  if (!j.is_object()) bad("tree must be an object");
  check_keys(j, "tree", {"nodes", "edges"});
  JsjTree t;
  const Json& nodes = need(j, "tree", "nodes");
  if (!nodes.is_array() || nodes.empty()) bad("tree needs a nonempty nodes array");
  for (size_t i = 0; i < nodes.size(); ++i)
    t.nodes.push_back(parse_seifert(nodes[i], "nodes[" + std::to_string(i) + "]"));
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) bad("field 'edges' must be an array");
    for (const Json& e : edges) {
      if (!e.is_object()) bad("edges must be objects");
      check_keys(e, "edge", {"a", "aBdry", "b", "bBdry", "matrix"});
      const Json& m = need(e, "edge", "matrix");
      if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
          !m[1].is_array() || m[1].size() != 2)
        bad("edge field 'matrix' must be [[m00, m01], [m10, m11]]");
      JsjEdge edge;
      edge.node_a = static_cast<size_t>(get_int(need(e, "edge", "a"), "a"));
      edge.bdry_a = e.contains("aBdry") ? get_int(e.at("aBdry"), "aBdry") : 0;
      edge.node_b = static_cast<size_t>(get_int(need(e, "edge", "b"), "b"));
      edge.bdry_b = e.contains("bBdry") ? get_int(e.at("bBdry"), "bBdry") : 0;
      edge.glue = GluingMatrix{to_integer(get_int(m[0][0], "matrix")),
                               to_integer(get_int(m[0][1], "matrix")),
                               to_integer(get_int(m[1][0], "matrix")),
                               to_integer(get_int(m[1][1], "matrix"))};
      t.edges.push_back(edge);
    }
  }
  return t;
}

TwoPieceHints parse_hints(const Json& q) {
  TwoPieceHints hints;
  if (!q.contains("hints")) return hints;
  const Json& h = q.at("hints");
  if (!h.is_object()) bad("field 'hints' must be an object");
  check_keys(h, "hints", {"fill1Infinite", "fill2Infinite"});
  if (h.contains("fill1Infinite"))
    hints.fill1_infinite = get_bool(h.at("fill1Infinite"), "fill1Infinite");
  if (h.contains("fill2Infinite"))
    hints.fill2_infinite = get_bool(h.at("fill2Infinite"), "fill2Infinite");
  return hints;
}

std::string invariants_string(const std::vector<Integer>& inv) {
  if (inv.empty()) return "1"; // trivial group
  std::string out;
  for (size_t i = 0; i < inv.size(); ++i) out += (i ? "," : "") + inv[i].get_str();
  return out;
}

Json render_verdict(const Json& query, const Verdict& v) {
  Json out;
  out["query"] = query;
  out["verdict"] = v.answer == VerdictAnswer::co_certified ? "CO_CERTIFIED"
                   : v.answer == VerdictAnswer::not_co     ? "NOT_CO"
                                                           : "UNKNOWN";
  out["rule"] = v.rule;
  out["reason"] = v.reason;
  out["citations"] = v.citations;
  out["hypotheses"] = v.hypotheses;
  Json data = Json::object();
  for (const auto& [k, val] : v.data) data[k] = val;
  out["data"] = data;
  return out;
}

// ---- op handlers -------------------------------------------------------------

Verdict eval_validate_order(const Json& q) {
  check_keys(q, "query", {"op", "construction", "n", "k", "range"});
  std::string con = get_string(need(q, "query", "construction"), "construction");
  CircularOrder order;
  std::vector<GroupElement> sample;
  Verdict v;
  if (con == "cyclic") {
    Int n = get_int(need(q, "query", "n"), "n");
    Int k = q.contains("k") ? get_int(q.at("k"), "k") : 1;
    order = cyclic_rot_order(cyclic_group(n), k);
    v.data.emplace_back("group", cyclic_group(n)->name());
    v.hypotheses.push_back("axioms checked exhaustively over the whole group");
  } else if (con == "secret-z") {
    Int r = q.contains("range") ? get_int(q.at("range"), "range") : 10;
    if (r < 1) fail_arg("range must be positive");
    GroupPtr z = cyclic_group(0);
    order = secret_circular_order(coordinate_lex_order(z));
    for (Int i = -r; i <= r; ++i) sample.push_back(z->element({i}));
    v.data.emplace_back("group", z->name());
    v.data.emplace_back("sample", std::to_string(sample.size()) + " elements");
    v.hypotheses.push_back("axioms checked on the sample [-" + std::to_string(r) + ", " +
                           std::to_string(r) + "]; the order is secretly linear, and linear "
                           "orders induce circular orders on any group");
  } else {
    bad("unknown construction '" + con + "'");
  }
  AxiomReport report = validate_circular_order(order, sample);
  v.data.emplace_back("tag", order.tag);
  v.data.emplace_back("violations", std::to_string(report.violations.size()));
  if (!report.ok) {
    v.answer = VerdictAnswer::unknown;
    v.reason = "the map fails the circular order axioms: " + report.violations.front();
    return v;
  }
  v.answer = VerdictAnswer::co_certified;
  v.rule = "axiom-validation";
  v.citations = {"a map G^3 -> {-1,0,1} vanishing exactly on degenerate triples, "
                 "left-invariant and satisfying the cocycle identity is a circular order "
                 "and witnesses circular orderability"};
  return v;
}

Verdict eval_finite_co(const Json& q) {
  check_keys(q, "query", {"op", "group"});
  std::string raw = get_string(need(q, "query", "group"), "group");
  std::string canonical;
  for (const std::string& name : table_group_names()) {
    std::string lower = name;
    std::string want = raw;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    std::transform(want.begin(), want.end(), want.begin(), ::tolower);
    if (lower == want) canonical = name;
  }
  if (canonical.empty()) fail_arg("unknown group '" + raw + "'");
  GroupPtr g = table_group(canonical);
  size_t n = *g->size();

  bool cyclic = false;
  for (const GroupElement& e : g->elements()) {
    GroupElement p = e;
    size_t ord = 1;
    while (!p.is_identity()) {
      p = p * e;
      ++ord;
    }
    if (ord == n) cyclic = true;
  }

  Verdict v;
  v.data.emplace_back("group", canonical);
  v.data.emplace_back("order", std::to_string(n));
  v.data.emplace_back("cyclic", cyclic ? "true" : "false");
  if (n <= 8) {
    // cross-check against the exhaustive search
    if (is_circularly_orderable_bruteforce(g) != cyclic)
      fail(Status::internal, "brute force disagrees with cyclicity");
    v.data.emplace_back("bruteforce", "agrees");
  }
  if (cyclic) {
    v.answer = VerdictAnswer::co_certified;
    v.rule = "finite-cyclic";
    v.citations = {"a finite group is circularly orderable exactly when it is cyclic"};
    return v;
  }
  v.answer = VerdictAnswer::not_co;
  v.reason = "finite non-cyclic group";
  v.citations = {"a finite group is circularly orderable exactly when it is cyclic"};
  return v;
}

Verdict eval_euler_order(const Json& q) {
  check_keys(q, "query", {"op", "n", "k"});
  Int n = get_int(need(q, "query", "n"), "n");
  Int k = q.contains("k") ? get_int(q.at("k"), "k") : 1;
  CircularOrder c = cyclic_rot_order(cyclic_group(n), k);
  EulerClassInfo info = euler_class_order(c);
  LoNormalData lo = lo_normal_subgroup(c);

  Verdict v;
  v.answer = VerdictAnswer::co_certified;
  v.rule = "euler-class-order";
  v.data.emplace_back("group", cyclic_group(n)->name());
  v.data.emplace_back("euler-order", info.order.get_str());
  v.data.emplace_back("quotient", "Z/" + lo.k.get_str());
  v.data.emplace_back("kernel-size", std::to_string(lo.kernel.size()));
  v.citations = {"eta(g) + eta(h) - eta(gh) = k f_c(g,h) with eta(id) = 0 witnesses that k "
                 "kills the euler class of the order cocycle",
                 "eta mod k is a surjection onto Z/k whose kernel carries a left order"};
  return v;
}

Verdict eval_rot(const Json& q) {
  check_keys(q, "query", {"op", "construction", "z", "g", "n", "p"});
  std::string con = get_string(need(q, "query", "construction"), "construction");
  GroupPtr ints = cyclic_group(0);
  LeftOrder lo = coordinate_lex_order(ints);
  RotOptions opts;
  if (q.contains("n")) {
    opts.iterations = get_int(q.at("n"), "n");
    if (opts.iterations < 1) fail_arg("iteration count must be positive");
  }

  Verdict v;
  RotationValue rv;
  if (con == "quotient-z") {
    Int z = get_int(need(q, "query", "z"), "z");
    Int g = q.contains("g") ? get_int(q.at("g"), "g") : 1;
    QuotientOrder qo = quotient_circular_order(lo, ints->element({z}));
    rv = rot(qo.order, qo.group->project(ints->element({g})), opts);
    v.data.emplace_back("construction", "Z / <" + std::to_string(z) + ">");
    v.data.emplace_back("element", std::to_string(g));
    v.citations = {"the quotient of the ordered integers by a positive z, compared through "
                   "minimal representatives, is the rotation order on Z/z"};
  } else if (con == "one-over-p") {
    Int p = get_int(need(q, "query", "p"), "p");
    QuotientOrder qo = rot_one_over_p(lo, ints->element({1}), p);
    rv = rot(qo.order, qo.group->project(ints->element({1})), opts);
    v.data.emplace_back("construction", "Z / <z^" + std::to_string(p) + ">");
    v.data.emplace_back("element", "z");
    v.citations = {"in the quotient by z^p the image of the cofinal central element z has "
                   "rotation number exactly 1/p"};
  } else {
    bad("unknown construction '" + con + "'");
  }
  v.answer = VerdictAnswer::co_certified;
  v.rule = "rot-number";
  v.data.emplace_back("exact", rv.exact ? "true" : "false");
  if (rv.exact) {
    v.data.emplace_back("value", rational_string(rv.value));
  } else {
    v.data.emplace_back("interval",
                        "[" + rational_string(rv.lo) + ", " + rational_string(rv.hi) + "]");
  }
  v.citations.push_back("torsion forces exact rotation numbers: g~^q = z^p in the central "
                        "extension gives rot(g) = p/q");
  return v;
}

Verdict eval_seifert(const Json& q) {
  check_keys(q, "query", {"op", "data"});
  SeifertData sd = parse_seifert(need(q, "query", "data"), "data");
  validate_seifert(sd);
  if (sd.boundary_count == 0) {
    Verdict v = class_c_verdict({{sd}, {}});
    v.data.emplace_back("h1", invariants_string(h1_invariants(sd)));
    return v;
  }
  Verdict v;
  v.answer = VerdictAnswer::co_certified;
  v.rule = "lo-surjection-b1";
  v.data.emplace_back("h1", invariants_string(h1_invariants(sd)));
  RationalLongitude l = rational_longitude(sd);
  v.data.emplace_back("longitude", "(" + l.slope.a.get_str() + "," + l.slope.b.get_str() + ")");
  v.data.emplace_back("longitude-order", l.order.get_str());
  v.citations = {"a Seifert fibred space with nonempty boundary is irreducible",
                 "half of the boundary homology survives in H1, so the first Betti number "
                 "is positive",
                 "a compact orientable irreducible 3-manifold with positive first Betti "
                 "number has left-orderable fundamental group",
                 "left orders induce circular orders"};
  return v;
}

Verdict eval_graph(const Json& q, bool two_piece) {
  check_keys(q, "query", {"op", "tree", "hints"});
  JsjTree t = parse_tree(need(q, "query", "tree"));
  TwoPieceHints hints = parse_hints(q);
  Verdict v = two_piece ? two_piece_verdict(t, hints) : class_c_verdict(t, hints);
  v.data.emplace_back("h1", invariants_string(graph_h1_invariants(t)));
  return v;
}

Verdict eval_surgery_window(const Json& q) {
  check_keys(q, "query", {"op", "p", "q", "c"});
  Int p = get_int(need(q, "query", "p"), "p");
  Int qq = get_int(need(q, "query", "q"), "q");
  Rational c = get_rational(need(q, "query", "c"), "c");
  bool window = surgery_window(p, qq, c);

  Verdict v;
  v.data.emplace_back("pc", rational_string(Rational(c * to_integer(p))));
  v.data.emplace_back("window", window ? "true" : "false");
  v.hypotheses.push_back("the knot is fibred and hyperbolic in an irreducible integer "
                         "homology sphere (caller-asserted)");
  v.hypotheses.push_back("c is the fractional Dehn twist coefficient of the monodromy "
                         "(caller-supplied)");
  if (!window) {
    v.answer = VerdictAnswer::unknown;
    v.reason = "the surgery coefficient lies in the excluded window around p*c(h), or the "
               "slope is not reduced";
    return v;
  }
  v.answer = VerdictAnswer::co_certified;
  v.rule = "surgery-window";
  v.citations = {"for a fibred hyperbolic knot in an irreducible integer homology sphere, "
                 "p/q surgery with q outside the window around p*c(h) yields a manifold "
                 "whose universal abelian cover has left-orderable fundamental group",
                 "a manifold with left-orderable universal abelian cover group has "
                 "circularly orderable fundamental group"};
  return v;
}

Verdict eval_fibonacci(const Json& q) {
  check_keys(q, "query", {"op", "k", "m"});
  return fibonacci_verdict(get_int(need(q, "query", "k"), "k"),
                           get_int(need(q, "query", "m"), "m"));
}

Verdict eval_takahashi(const Json& q) {
  check_keys(q, "query", {"op", "pairs", "n", "prime"});
  const Json& ps = need(q, "query", "pairs");
  if (!ps.is_array()) bad("field 'pairs' must be an array of [p, q, r, s] rows");
  std::vector<TakahashiPair> pairs;
  for (const Json& p : ps) {
    if (!p.is_array() || p.size() != 4)
      bad("field 'pairs' must be an array of [p, q, r, s] rows");
    pairs.push_back({get_int(p[0], "p"), get_int(p[1], "q"), get_int(p[2], "r"),
                     get_int(p[3], "s")});
  }
  Int n = get_int(need(q, "query", "n"), "n");
  bool prime = q.contains("prime") && get_bool(q.at("prime"), "prime");
  return takahashi_verdict(pairs, n, prime);
}

// Single n, a two-bridge fraction, or a curated name; torus with a range
// produces a batch.
Json eval_branched_cover(const Json& q) {
  check_keys(q, "query", {"op", "torus", "twoBridge", "named", "n", "range"});
  int descriptors = (q.contains("torus") ? 1 : 0) + (q.contains("twoBridge") ? 1 : 0) +
                    (q.contains("named") ? 1 : 0);
  if (descriptors != 1) bad("branched-cover needs exactly one of torus, twoBridge, named");

  if (q.contains("named")) {
    if (q.contains("n") || q.contains("range")) bad("named lookup takes no degree");
    std::string name = get_string(q.at("named"), "named");
    Verdict v;
    v.data.emplace_back("name", name);
    if (auto entry = known_negative_lookup(name)) {
      v.answer = VerdictAnswer::not_co;
      v.reason = "curated non-circularly-orderable manifold";
      v.citations = {entry->citation};
      v.data.emplace_back("manifold", entry->name);
      v.data.emplace_back("identification", entry->identification);
    } else {
      v.answer = VerdictAnswer::unknown;
      v.reason = "not in the curated database";
    }
    return render_verdict(q, v);
  }

  if (q.contains("twoBridge")) {
    if (q.contains("range")) bad("twoBridge covers only the double branched cover");
    const Json& tb = q.at("twoBridge");
    if (!tb.is_array() || tb.size() != 2) bad("field 'twoBridge' must be [p, q]");
    if (q.contains("n") && get_int(q.at("n"), "n") != 2)
      bad("twoBridge covers only the double branched cover");
    return render_verdict(q,
                          two_bridge_double_cover_verdict(get_int(tb[0], "p"), get_int(tb[1], "q")));
  }

  const Json& tor = q.at("torus");
  if (!tor.is_array() || tor.size() != 2) bad("field 'torus' must be [p, q]");
  Int p = get_int(tor[0], "p"), knot_q = get_int(tor[1], "q");
  if (q.contains("n") == q.contains("range"))
    bad("torus branched cover needs exactly one of n, range");
  if (q.contains("n")) return render_verdict(q, torus_knot_cover_verdict(p, knot_q, get_int(q.at("n"), "n")));

  const Json& r = q.at("range");
  if (!r.is_array() || r.size() != 2) bad("field 'range' must be [lo, hi]");
  Int lo = get_int(r[0], "range"), hi = get_int(r[1], "range");
  if (lo < 2 || hi < lo) bad("range must satisfy 2 <= lo <= hi");
  if (hi - lo > 999) bad("range is limited to 1000 degrees");
  Json results = Json::array();
  for (Int n = lo; n <= hi; ++n) {
    Json single;
    single["op"] = "branched-cover";
    single["torus"] = Json::array({p, knot_q});
    single["n"] = n;
    results.push_back(render_verdict(single, torus_knot_cover_verdict(p, knot_q, n)));
  }
  Json out;
  out["results"] = results;
  return out;
}

} // namespace

std::string eval_query_json(const std::string& request) {
  Json doc;
  try {
    doc = Json::parse(request);
  } catch (const std::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("request must be an object");
  check_keys(doc, "request", {"schema", "query"});
  if (get_string(need(doc, "request", "schema"), "schema") != "corda/v1")
    bad("unsupported schema tag (expected \"corda/v1\")");
  const Json& q = need(doc, "request", "query");
  if (!q.is_object()) bad("query must be an object");
  std::string op = get_string(need(q, "query", "op"), "op");

  Json body;
  if (op == "validate-order") body = render_verdict(q, eval_validate_order(q));
  else if (op == "finite-co") body = render_verdict(q, eval_finite_co(q));
  else if (op == "euler-order") body = render_verdict(q, eval_euler_order(q));
  else if (op == "rot") body = render_verdict(q, eval_rot(q));
  else if (op == "seifert") body = render_verdict(q, eval_seifert(q));
  else if (op == "graph") body = render_verdict(q, eval_graph(q, false));
  else if (op == "two-piece") body = render_verdict(q, eval_graph(q, true));
  else if (op == "branched-cover") body = eval_branched_cover(q);
  else if (op == "surgery-window") body = render_verdict(q, eval_surgery_window(q));
  else if (op == "fibonacci") body = render_verdict(q, eval_fibonacci(q));
  else if (op == "takahashi") body = render_verdict(q, eval_takahashi(q));
  else bad("unknown op '" + op + "'");

  Json out;
  out["schema"] = "corda/v1";
  for (auto& [k, v] : body.items()) out[k] = v;
  return out.dump(2) + "\n";
}

} // namespace corda
