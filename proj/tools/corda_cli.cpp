// Command-line front end over the shared library's JSON interface.  Each
// subcommand assembles one "corda/v1" request; all validation and the actual
// mathematics live behind corda_eval_json.  Exit 0 on any verdict (UNKNOWN is
// an honest answer), 2 on rejected input, 3 on a replay mismatch.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corda/corda_c.h"

namespace {

using Json = nlohmann::ordered_json;

int emit(const Json& query, bool replay) {
  Json req;
  req["schema"] = "corda/v1";
  req["query"] = query;
  std::string body = req.dump();

  char* out = nullptr;
  corda_status s = corda_eval_json(body.c_str(), &out);
  if (s != CORDA_OK) {
    std::fprintf(stderr, "corda: %s: %s\n", corda_status_name(s), corda_last_error());
    return 2;
  }
  std::string doc(out);
  corda_string_free(out);

  if (replay) {
    char* second = nullptr;
    if (corda_eval_json(body.c_str(), &second) != CORDA_OK) {
      std::fprintf(stderr, "corda: replay failed: %s\n", corda_last_error());
      return 2;
    }
    std::string doc2(second);
    corda_string_free(second);
    if (doc2 != doc) {
      std::fprintf(stderr, "corda: replay mismatch: result is not deterministic\n");
      return 3;
    }
  }

  std::fwrite(doc.data(), 1, doc.size(), stdout);
  return 0;
}

// "-" (or nothing) reads standard input.
Json read_payload(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return Json::parse(text); // syntax only; field checking happens in the library
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"circular orderability toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", corda_version());
  bool replay = false;
  app.add_flag("--replay", replay, "evaluate twice and require byte-identical results");

  int rc = 0;
  auto run = [&rc, &replay](const Json& query) { rc = emit(query, replay); };

  // validate-order
  std::string vo_construction;
  int64_t vo_n = 0, vo_k = 0, vo_range = 0;
  CLI::App* vo = app.add_subcommand("validate-order", "check the circular order axioms");
  vo->add_option("--construction", vo_construction, "cyclic | secret-z")->required();
  CLI::Option* vo_n_opt = vo->add_option("--n", vo_n, "modulus for cyclic");
  CLI::Option* vo_k_opt = vo->add_option("--k", vo_k, "rotation parameter");
  CLI::Option* vo_range_opt = vo->add_option("--range", vo_range, "sample radius for secret-z");
  vo->callback([&] {
    Json q{{"op", "validate-order"}, {"construction", vo_construction}};
    if (*vo_n_opt) q["n"] = vo_n;
    if (*vo_k_opt) q["k"] = vo_k;
    if (*vo_range_opt) q["range"] = vo_range;
    run(q);
  });

  // finite-co
  std::string fc_group;
  CLI::App* fc = app.add_subcommand("finite-co", "circular orderability of a catalog group");
  fc->add_option("--group", fc_group, "catalog name, e.g. z5, q8, s3")->required();
  fc->callback([&] { run({{"op", "finite-co"}, {"group", fc_group}}); });

  // euler-order
  int64_t eo_n = 0, eo_k = 0;
  CLI::App* eo = app.add_subcommand("euler-order", "euler class order of a rotation order");
  eo->add_option("--n", eo_n, "cyclic group order")->required();
  CLI::Option* eo_k_opt = eo->add_option("--k", eo_k, "rotation parameter");
  eo->callback([&] {
    Json q{{"op", "euler-order"}, {"n", eo_n}};
    if (*eo_k_opt) q["k"] = eo_k;
    run(q);
  });

  // rot
  std::string rot_construction;
  int64_t rot_z = 0, rot_g = 0, rot_n = 0, rot_p = 0;
  CLI::App* ro = app.add_subcommand("rot", "rotation number in a quotient construction");
  ro->add_option("--construction", rot_construction, "quotient-z | one-over-p")->required();
  CLI::Option* rot_z_opt = ro->add_option("--z", rot_z, "central element for quotient-z");
  CLI::Option* rot_g_opt = ro->add_option("--g", rot_g, "element to rotate");
  CLI::Option* rot_n_opt = ro->add_option("--n", rot_n, "bracketing iterations");
  CLI::Option* rot_p_opt = ro->add_option("--p", rot_p, "power for one-over-p");
  ro->callback([&] {
    Json q{{"op", "rot"}, {"construction", rot_construction}};
    if (*rot_z_opt) q["z"] = rot_z;
    if (*rot_g_opt) q["g"] = rot_g;
    if (*rot_n_opt) q["n"] = rot_n;
    if (*rot_p_opt) q["p"] = rot_p;
    run(q);
  });

  // seifert / graph / two-piece read their payload from a file or stdin
  std::string sf_file = "-";
  CLI::App* sf = app.add_subcommand("seifert", "verdict for one Seifert fibred space");
  sf->add_option("--file", sf_file, "Seifert data document (default: stdin)");
  sf->callback([&] { run({{"op", "seifert"}, {"data", read_payload(sf_file)}}); });

  auto add_tree_command = [&](const char* name, const char* help, const char* op) {
    auto file = std::make_shared<std::string>("-");
    auto fill1 = std::make_shared<bool>(false);
    auto fill2 = std::make_shared<bool>(false);
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--file", *file, "JSJ tree document (default: stdin)");
    CLI::Option* f1 = cmd->add_option("--fill1-infinite", *fill1,
                                      "caller-verified: filling of piece 1 has infinite pi1");
    CLI::Option* f2 = cmd->add_option("--fill2-infinite", *fill2,
                                      "caller-verified: filling of piece 2 has infinite pi1");
    cmd->callback([&run, op, file, fill1, fill2, f1, f2] {
      Json q{{"op", op}, {"tree", read_payload(*file)}};
      if (*f1 || *f2) {
        Json hints = Json::object();
        if (*f1) hints["fill1Infinite"] = *fill1;
        if (*f2) hints["fill2Infinite"] = *fill2;
        q["hints"] = hints;
      }
      run(q);
    });
  };
  add_tree_command("graph", "verdict for a graph manifold given as a JSJ tree", "graph");
  add_tree_command("two-piece", "verdict for a union of two Seifert pieces", "two-piece");

  // branched-cover
  std::vector<int64_t> bc_torus, bc_two_bridge, bc_range;
  std::string bc_named;
  int64_t bc_n = 0;
  CLI::App* bc = app.add_subcommand("branched-cover", "cyclic branched cover verdicts");
  CLI::Option* bc_torus_opt =
      bc->add_option("--torus", bc_torus, "torus knot parameters p q")->expected(2);
  CLI::Option* bc_tb_opt =
      bc->add_option("--two-bridge", bc_two_bridge, "two-bridge fraction p q")->expected(2);
  CLI::Option* bc_named_opt = bc->add_option("--named", bc_named, "curated manifold name");
  CLI::Option* bc_n_opt = bc->add_option("--n", bc_n, "cover degree");
  CLI::Option* bc_range_opt =
      bc->add_option("--range", bc_range, "cover degrees lo hi")->expected(2);
  bc->callback([&] {
    Json q{{"op", "branched-cover"}};
    if (*bc_torus_opt) q["torus"] = bc_torus;
    if (*bc_tb_opt) q["twoBridge"] = bc_two_bridge;
    if (*bc_named_opt) q["named"] = bc_named;
    if (*bc_n_opt) q["n"] = bc_n;
    if (*bc_range_opt) q["range"] = bc_range;
    run(q);
  });

  // surgery-window
  int64_t sw_p = 0, sw_q = 0;
  std::string sw_c;
  CLI::App* sw = app.add_subcommand("surgery-window", "window criterion for p/q surgery");
  sw->add_option("--p", sw_p, "slope numerator")->required();
  sw->add_option("--q", sw_q, "slope denominator")->required();
  sw->add_option("--c", sw_c, "fractional Dehn twist coefficient, as a/b")->required();
  sw->callback([&] { run({{"op", "surgery-window"}, {"p", sw_p}, {"q", sw_q}, {"c", sw_c}}); });

  // fibonacci
  int64_t fb_k = 0, fb_m = 0;
  CLI::App* fb = app.add_subcommand("fibonacci", "generalized Fibonacci group verdict");
  fb->add_option("--k", fb_k)->required();
  fb->add_option("--m", fb_m)->required();
  fb->callback([&] { run({{"op", "fibonacci"}, {"k", fb_k}, {"m", fb_m}}); });

  // takahashi
  std::string tk_pairs;
  int64_t tk_n = 0;
  bool tk_prime = false;
  CLI::App* tk = app.add_subcommand("takahashi", "Takahashi manifold verdict");
  tk->add_option("--pairs", tk_pairs, "JSON rows [[p,q,r,s],...]")->required();
  tk->add_option("--n", tk_n, "number of chain pieces")->required();
  tk->add_flag("--prime", tk_prime, "assert the branch link is prime");
  tk->callback([&] {
    Json q{{"op", "takahashi"}, {"pairs", Json::parse(tk_pairs)}, {"n", tk_n}};
    if (tk_prime) q["prime"] = true;
    run(q);
  });

  // let --replay appear after the subcommand name as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "corda: %s\n", e.what());
    return 2;
  }
  return rc;
}
