#include <doctest.h>

#include "horobound/errors.hpp"
#include "horobound/graphs.hpp"
#include "horobound/report.hpp"

using namespace horobound;
using nlohmann::json;

namespace {

json run(const std::string& graph, const std::string& op, json params, unsigned workers = 1) {
  ScenarioSpec spec;
  spec.graph = graph;
  spec.operation = op;
  spec.params = std::move(params);
  spec.workers = workers;
  return run_scenario(spec);
}

struct Case {
  std::string graph, op;
  json params;
};

std::vector<Case> all_ops() {
  return {
      {"hex", "rigid-scan", {{"radius", 2}}},
      {"gamma1", "tail-bound", {{"pair", {"(1,1)", "(1,-1)"}}, {"radius", 4}, {"radius2", 6}}},
      {"gamma1", "witness", {{"pair", {"(1,1)", "(1,-1)"}}, {"radius", 8}, {"count", 3}}},
      {"gamma1", "fingerprints", {{"base", "(1,0)"}, {"annuli", {6, 8}}}},
      {"gamma1", "reachability", {{"base", "(1,0)"}, {"annuli", {6, 8}}, {"class", 0}, {"ray_length", 6}}},
      {"gamma1", "lipschitz", {{"other", "gamma2"}, {"radius", 4}}},
      {"heisenberg:std", "triple", {{"vertices", {"e", "abAB", "bbab"}}}},
      {"zd:2", "pathsjoin", {{"radius", 2}}},
      {"gamma1",
       "ray-check",
       {{"sequence", {"(1,1)", "(1,0)", "(2,0)", "(3,0)"}}, {"kind", "almost"}, {"epsilon", "1/2"}}},
  };
}

}  // namespace

TEST_CASE("the three command-line scenarios") {
  auto fp = run("gamma1", "fingerprints", {{"base", "(1,0)"}, {"r_test", 3}, {"annuli", {10, 12}}});
  CHECK(fp["results"]["stable_count"] == 3);

  auto rs = run("zd:2", "rigid-scan", {{"radius", 5}});
  CHECK(rs["results"]["rigid_count"] == 0);
  CHECK(rs["results"]["rigid"].empty());

  // abAb is (0,1,2) here; its witness family still has perimeters 10..16.
  auto w = run("heisenberg:std", "witness", {{"pair", {"e", "abAb"}}, {"radius", 10}, {"count", 4}});
  REQUIRE(w["results"]["found"] == true);
  std::vector<int> per;
  for (const auto& t : w["results"]["certificate"]["triples"]) per.push_back(t["perimeter"]);
  CHECK(per == std::vector<int>{10, 12, 14, 16});
}

TEST_CASE("every operation runs, reports its scenario and re-verifies") {
  for (const auto& c : all_ops()) {
    CAPTURE(c.op);
    auto r = run(c.graph, c.op, c.params);
    CHECK(r["schema_version"] == kSchemaVersion);
    CHECK(r["operation"] == c.op);
    CHECK(r["graph"] == c.graph);
    CHECK(r["provenance"]["deterministic"] == true);
    CHECK_FALSE(r["provenance"].contains("timestamp"));
    for (const auto& [k, v] : c.params.items()) CHECK(r["parameters"][k] == v);
    auto v = verify_report(r);
    CHECK(v.ok);
    CHECK(v.payload_identical);

    // Reports survive a text round trip byte for byte.
    auto text = r.dump(2);
    CHECK(json::parse(text).dump(2) == text);
    CHECK(verify_report(json::parse(text)).ok);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  for (const auto& c : all_ops()) {
    CAPTURE(c.op);
    CHECK(run(c.graph, c.op, c.params, 1).dump() == run(c.graph, c.op, c.params, 3).dump());
    CHECK(run(c.graph, c.op, c.params, 1).dump() == run(c.graph, c.op, c.params, 1).dump());
  }
}

TEST_CASE("tampered reports fail verification") {
  auto w = run("gamma1", "witness", {{"pair", {"(1,1)", "(1,-1)"}}, {"radius", 8}, {"count", 3}});
  auto bad = w;
  bad["results"]["certificate"]["triples"][0]["dca"] = 9;
  CHECK_FALSE(verify_report(bad).ok);
  bad = w;
  bad["results"]["found"] = false;
  CHECK_FALSE(verify_report(bad).ok);
  bad = w;
  bad["schema_version"] = 99;
  CHECK_FALSE(verify_report(bad).ok);
  bad = w;
  bad.erase("results");
  CHECK_THROWS_AS(verify_report(bad), InvalidInput);

  auto t = run("gamma1", "tail-bound", {{"pair", {"(1,1)", "(1,-1)"}}, {"radius", 5}});
  bad = t;
  bad["results"]["record"]["empirical_bound"] = 10;
  CHECK_FALSE(verify_report(bad).ok);
}

TEST_CASE("records round-trip through JSON") {
  LadderGraph g1(false);
  auto cert = nonbusemann_witness(g1, LadderGraph::vertex(1, 1), LadderGraph::vertex(1, -1), 10, 4);
  REQUIRE(cert.has_value());
  auto back = certificate_from_json(g1, to_json(*cert));
  CHECK(to_json(back) == to_json(*cert));
  CHECK(verify_certificate(g1, back).ok);

  auto rec = tail_bound_estimate(g1, LadderGraph::vertex(1, 1), LadderGraph::vertex(1, -1), 5);
  auto rec2 = tail_bound_from_json(g1, to_json(rec));
  CHECK(to_json(rec2) == to_json(rec));
  CHECK(verify_tail_bound(g1, rec2).ok);

  auto j = to_json(LadderGraph::vertex(3, -1));
  CHECK(vertex_from_json(g1, j) == LadderGraph::vertex(3, -1));
  j["label"] = "(4,-1)";
  CHECK_THROWS_AS(vertex_from_json(g1, j), VerificationFailure);

  auto tj = to_json(cert->triples[0]);
  tj["perimeter"] = 1;
  CHECK_THROWS_AS(triple_from_json(g1, tj), VerificationFailure);
}

TEST_CASE("CSV tables") {
  auto w = run("gamma1", "witness", {{"pair", {"(1,1)", "(1,-1)"}}, {"radius", 8}, {"count", 3}});
  CHECK(report_csv(w) ==
        "index,c,d_ac,d_bc,perimeter\n1,\"(2,0)\",2,2,6\n2,\"(3,0)\",3,3,8\n3,\"(4,0)\",4,4,10\n");
  auto t = run("gamma1", "tail-bound", {{"pair", {"(1,1)", "(1,-1)"}}, {"radius", 4}, {"radius2", 6}});
  CHECK(report_csv(t) == "radius,empirical_bound\n4,10\n6,14\n");
  auto r = run("free_product:2,3", "rigid-scan", {{"radius", 3}});
  CHECK(report_csv(r) == "side,max_rigid_perimeter\n1,3\n");
  CHECK_THROWS_AS(report_csv(run("gamma1", "lipschitz", {{"other", "gamma2"}, {"radius", 2}})), InvalidInput);
}

TEST_CASE("timestamps are opt-in") {
  ScenarioSpec spec{"zd:2", "rigid-scan", {{"radius", 1}}, 1, true};
  auto r = run_scenario(spec);
  REQUIRE(r["provenance"].contains("timestamp"));
  CHECK(r["provenance"]["timestamp"].get<std::string>().size() == 20);
  CHECK(verify_report(r).ok);
}

TEST_CASE("scenario validation") {
  auto bad = [](const std::string& graph, const std::string& op, json params) {
    ScenarioSpec s{graph, op, std::move(params)};
    return s;
  };
  std::vector<ScenarioSpec> invalid{
      bad("zd:2", "nosuch", json::object()),
      bad("zd:2", "rigid-scan", json::object()),
      bad("zd:2", "rigid-scan", {{"radius", "5"}}),
      bad("zd:2", "rigid-scan", {{"radius", 0}}),
      bad("zd:2", "witness", {{"pair", {"e"}}, {"radius", 3}}),
      bad("zd:2", "witness", {{"pair", {"e", "a"}}, {"radius", 3}, {"count", 1}}),
      bad("zd:2", "tail-bound", {{"pair", {"e", "a"}}, {"radius", 3}, {"radius2", 3}}),
      bad("gamma1", "fingerprints", {{"base", "(1,0)"}, {"r_test", 3}, {"annuli", {3, 5}}}),
      bad("gamma1", "fingerprints", {{"base", "(1,0)"}, {"annuli", json::array()}}),
      bad("gamma1", "ray-check", {{"sequence", {"(1,1)"}}, {"kind", "strong"}, {"epsilon", "1"}}),
      bad("gamma1", "ray-check", {{"sequence", {"(1,1)"}}, {"kind", "almost"}, {"epsilon", "0"}}),
      bad("gamma1", "ray-check", {{"sequence", {"(1,1)"}}, {"kind", "weak"}, {"epsilon", "1"}}),
      bad("zd:2", "triple", {{"vertices", {"e", "a", "b"}}, {"cap", 0}}),
      bad("zd:2", "rigid-scan", json::array()),
  };
  for (const auto& s : invalid) {
    CAPTURE(s.operation);
    CAPTURE(s.params.dump());
    CHECK_THROWS_AS(validate(s), InvalidInput);
    CHECK_THROWS_AS(run_scenario(s), InvalidInput);
  }
  CHECK_THROWS_AS(run("nosuch", "rigid-scan", {{"radius", 1}}), InvalidInput);
  CHECK_THROWS_AS(run("zd:2", "witness", {{"pair", {"e", "x"}}, {"radius", 3}}), InvalidInput);
  CHECK_NOTHROW(validate(bad("zd:2", "rigid-scan", {{"radius", 2}})));
}

TEST_CASE("resource limits surface as errors") {
  ScenarioSpec s{"zd:2", "rigid-scan", {{"radius", 6}}};
  Limits tight;
  tight.max_vertices = 20;
  CHECK_THROWS_AS(run_scenario(s, tight), ResourceLimit);
}
