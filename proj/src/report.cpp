#include "horobound/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "horobound/errors.hpp"
#include "horobound/graphs.hpp"

namespace horobound {

using nlohmann::json;

namespace {

const char* kSemantics =
    "finite-radius evidence: every verdict holds for the scanned ball only and does not by itself decide the infinite boundary";

int get_int(const json& p, const char* key) {
  if (!p.contains(key)) throw InvalidInput(std::string("missing parameter '") + key + "'");
  if (!p.at(key).is_number_integer()) throw InvalidInput(std::string("parameter '") + key + "' must be an integer");
  return p.at(key).get<int>();
}

std::string get_string(const json& p, const char* key) {
  if (!p.contains(key)) throw InvalidInput(std::string("missing parameter '") + key + "'");
  if (!p.at(key).is_string()) throw InvalidInput(std::string("parameter '") + key + "' must be a string");
  return p.at(key).get<std::string>();
}

std::vector<std::string> get_strings(const json& p, const char* key, std::size_t expected = 0) {
  if (!p.contains(key) || !p.at(key).is_array()) throw InvalidInput(std::string("parameter '") + key + "' must be a list");
  std::vector<std::string> out;
  for (const auto& x : p.at(key)) {
    if (!x.is_string()) throw InvalidInput(std::string("parameter '") + key + "' must list strings");
    out.push_back(x.get<std::string>());
  }
  if (expected && out.size() != expected) {
    throw InvalidInput(std::string("parameter '") + key + "' needs " + std::to_string(expected) + " entries");
  }
  return out;
}

std::vector<int> get_ints(const json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_array()) throw InvalidInput(std::string("parameter '") + key + "' must be a list");
  std::vector<int> out;
  for (const auto& x : p.at(key)) {
    if (!x.is_number_integer()) throw InvalidInput(std::string("parameter '") + key + "' must list integers");
    out.push_back(x.get<int>());
  }
  return out;
}

void require_positive(int v, const char* what) {
  if (v < 1) throw InvalidInput(std::string(what) + " must be positive");
}

// Fills defaults so the stored parameters fully determine the run.
json normalized(const ScenarioSpec& spec) {
  json p = spec.params.is_null() ? json::object() : spec.params;
  if (!p.is_object()) throw InvalidInput("parameters must be a JSON object");
  const auto& op = spec.operation;
  if (op == "rigid-scan" || op == "pathsjoin") {
    require_positive(get_int(p, "radius"), "radius");
    if (op == "rigid-scan") {
      if (!p.contains("side_cap")) p["side_cap"] = 0;
      get_int(p, "side_cap");
    }
    if (p.contains("center")) get_string(p, "center");
  } else if (op == "tail-bound" || op == "witness") {
    get_strings(p, "pair", 2);
    require_positive(get_int(p, "radius"), "radius");
    if (op == "tail-bound" && p.contains("radius2")) {
      if (get_int(p, "radius2") <= get_int(p, "radius")) throw InvalidInput("radius2 must exceed radius");
    }
    if (op == "witness") {
      if (!p.contains("count")) p["count"] = 5;
      if (get_int(p, "count") < 2) throw InvalidInput("count must be at least 2");
    }
  } else if (op == "fingerprints" || op == "reachability") {
    get_string(p, "base");
    if (!p.contains("r_test")) p["r_test"] = 3;
    if (get_int(p, "r_test") < 0) throw InvalidInput("r_test must be nonnegative");
    auto annuli = get_ints(p, "annuli");
    if (annuli.empty()) throw InvalidInput("annuli must be nonempty");
    for (int r : annuli) {
      if (r <= get_int(p, "r_test")) throw InvalidInput("every annulus radius must exceed r_test");
    }
    if (op == "reachability") {
      if (get_int(p, "class") < 0) throw InvalidInput("class index must be nonnegative");
      require_positive(get_int(p, "ray_length"), "ray_length");
      if (!p.contains("tail_window")) p["tail_window"] = 2;
      require_positive(get_int(p, "tail_window"), "tail_window");
    }
  } else if (op == "lipschitz") {
    get_string(p, "other");
    require_positive(get_int(p, "radius"), "radius");
    if (p.contains("center")) get_string(p, "center");
  } else if (op == "triple") {
    get_strings(p, "vertices", 3);
    if (!p.contains("cap")) p["cap"] = 64;
    require_positive(get_int(p, "cap"), "cap");
  } else if (op == "ray-check") {
    auto seq = get_strings(p, "sequence");
    if (seq.empty()) throw InvalidInput("sequence must be nonempty");
    auto kind = get_string(p, "kind");
    if (kind != "weak" && kind != "almost") throw InvalidInput("kind must be weak or almost");
    auto eps = Rational::parse(get_string(p, "epsilon"));
    if (eps.num <= 0) throw InvalidInput("epsilon must be positive");
    if (!p.contains("n_start")) p["n_start"] = 0;
    if (get_int(p, "n_start") < 0) throw InvalidInput("n_start must be nonnegative");
    if (kind == "weak") {
      get_string(p, "probe_center");
      if (get_int(p, "probe_radius") < 0) throw InvalidInput("probe_radius must be nonnegative");
    }
  } else {
    throw InvalidInput("unknown operation '" + op + "'");
  }
  return p;
}

VertexRef resolve(const Builtin& b, const std::string& text) { return b.oracle->parse_vertex(text); }

VertexRef center_of(const Builtin& b, const json& p) {
  return p.contains("center") ? resolve(b, p.at("center").get<std::string>()) : default_center(b);
}

json results_for(const Builtin& b, const ScenarioSpec& spec, const json& p, const Limits& limits) {
  const auto& op = spec.operation;
  const auto& g = *b.oracle;
  if (op == "rigid-scan") {
    auto r = rigid_scan(g, center_of(b, p), p.at("radius").get<int>(), p.at("side_cap").get<int>(), limits, spec.workers);
    json maxp = json::array();
    for (auto [side, per] : r.max_perimeter) maxp.push_back({{"side", side}, {"perimeter", per}});
    json rigid = json::array();
    for (const auto& t : r.rigid) rigid.push_back(to_json(t));
    return {{"center", to_json(r.center)},
            {"triples_examined", r.triples_examined},
            {"rigid_count", r.rigid.size()},
            {"max_perimeter", maxp},
            {"rigid", rigid}};
  }
  if (op == "tail-bound") {
    auto pair = get_strings(p, "pair", 2);
    auto a = resolve(b, pair[0]), c = resolve(b, pair[1]);
    if (p.contains("radius2")) {
      auto t = tail_bound_trend(g, a, c, p.at("radius").get<int>(), p.at("radius2").get<int>(), limits);
      return {{"record", to_json(t.inner)}, {"outer", to_json(t.outer)}, {"trend", t.trend()}};
    }
    return {{"record", to_json(tail_bound_estimate(g, a, c, p.at("radius").get<int>(), limits))}};
  }
  if (op == "witness") {
    auto pair = get_strings(p, "pair", 2);
    auto cert = nonbusemann_witness(g, resolve(b, pair[0]), resolve(b, pair[1]), p.at("radius").get<int>(),
                                    p.at("count").get<int>(), limits);
    return {{"found", cert.has_value()}, {"certificate", cert ? to_json(*cert) : json(nullptr)}};
  }
  if (op == "fingerprints" || op == "reachability") {
    auto fp = fingerprints(g, resolve(b, p.at("base").get<std::string>()), p.at("r_test").get<int>(),
                           get_ints(p, "annuli"), limits);
    json probes = json::array();
    for (const auto& v : fp.probes) probes.push_back(to_json(v));
    json classes = json::array();
    for (const auto& c : fp.classes) {
      json w = json::object();
      for (const auto& [radius, vs] : c.witnesses) {
        json list = json::array();
        for (const auto& v : vs) list.push_back(to_json(v));
        w[std::to_string(radius)] = list;
      }
      classes.push_back({{"values", c.values}, {"stable", c.stable}, {"witnesses", w}});
    }
    json out{{"base", to_json(fp.base)}, {"probes", probes}, {"classes", classes}, {"stable_count", fp.stable_count()}};
    if (op == "reachability") {
      auto idx = static_cast<std::size_t>(p.at("class").get<int>());
      auto r = busemann_reachability(g, fp, idx, p.at("ray_length").get<int>(), p.at("tail_window").get<int>(), limits);
      json ray = json::array();
      for (const auto& v : r.ray) ray.push_back(to_json(v));
      out["reachability"] = {{"class", idx},
                             {"reachable", r.reachable},
                             {"verdict", r.reachable ? "reachable" : "unreachable_within_radius"},
                             {"ray", ray},
                             {"note", r.note}};
    }
    return out;
  }
  if (op == "lipschitz") {
    auto other = builtin(p.at("other").get<std::string>());
    auto r = lipschitz_ratio(g, *other.oracle, center_of(b, p), p.at("radius").get<int>(), limits, spec.workers);
    return {{"other", other.descriptor}, {"b_over_a", r.b_over_a.str()}, {"a_over_b", r.a_over_b.str()}, {"pairs", r.pairs}};
  }
  if (op == "triple") {
    auto vs = get_strings(p, "vertices", 3);
    auto a = resolve(b, vs[0]), bb = resolve(b, vs[1]), c = resolve(b, vs[2]);
    const int cap = p.at("cap").get<int>();
    auto t = make_triple(g, a, bb, c, cap, limits);
    TripleRecord rec{a, bb, c, t.dab(), t.dbc(), t.dca()};
    return {{"triple", to_json(rec)},
            {"shares_tail_at_c", shares_tail(g, a, bb, c, cap, limits)},
            {"shares_tail_at_a", shares_tail(g, bb, c, a, cap, limits)},
            {"shares_tail_at_b", shares_tail(g, c, a, bb, cap, limits)},
            {"rigid", is_rigid_triple(g, a, bb, c, cap, limits)},
            {"geodesic_counts",
             {{"ab", count_geodesics(g, a, bb, cap, limits).str()},
              {"bc", count_geodesics(g, bb, c, cap, limits).str()},
              {"ca", count_geodesics(g, c, a, cap, limits).str()}}}};
  }
  if (op == "pathsjoin") {
    auto r = pathsjoin_check(g, center_of(b, p), p.at("radius").get<int>(), limits, spec.workers);
    json bound = json::array();
    for (auto [side, per] : r.rigid_bound) bound.push_back({{"side", side}, {"perimeter", per}});
    json viol = json::array();
    for (const auto& t : r.violations) viol.push_back(to_json(t));
    return {{"center", to_json(r.center)},
            {"rigid_bound", bound},
            {"checked", r.checked},
            {"violation_count", r.violations.size()},
            {"violations", viol}};
  }
  if (op == "ray-check") {
    std::vector<VertexRef> seq;
    for (const auto& s : get_strings(p, "sequence")) seq.push_back(resolve(b, s));
    auto eps = Rational::parse(p.at("epsilon").get<std::string>());
    const int n_start = p.at("n_start").get<int>();
    RayCheck r;
    if (p.at("kind") == "weak") {
      auto field = bfs(g, resolve(b, p.at("probe_center").get<std::string>()), p.at("probe_radius").get<int>(), limits);
      auto probes = field.order;
      std::sort(probes.begin(), probes.end());
      r = weakly_geodesic_check(g, seq, probes, eps, n_start, limits);
    } else {
      r = almost_geodesic_check(g, seq, eps, n_start, limits);
    }
    json out{{"ok", r.ok}, {"message", r.message}};
    if (!r.ok) out["violation"] = {{"s", r.s}, {"t", r.t}, {"probe", r.probe}, {"value", r.value}};
    return out;
  }
  throw InvalidInput("unknown operation '" + op + "'");
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<std::string>& scenario_operations() {
  static const std::vector<std::string> ops{"rigid-scan", "tail-bound", "witness",  "fingerprints", "reachability",
                                            "lipschitz",  "triple",     "pathsjoin", "ray-check"};
  return ops;
}

void validate(const ScenarioSpec& spec) {
  if (spec.graph.empty()) throw InvalidInput("no graph given");
  normalized(spec);
}

VertexRef default_center(const Builtin& b) {
  if (b.model) return b.model->identity();
  if (b.descriptor == "gamma1" || b.descriptor == "gamma2") return LadderGraph::vertex(1, 0);
  throw InvalidInput("graph '" + b.descriptor + "' has no default center; pass one");
}

json run_scenario(const ScenarioSpec& spec, const Limits& limits) {
  if (spec.graph.empty()) throw InvalidInput("no graph given");
  auto params = normalized(spec);
  auto b = builtin(spec.graph);
  json report{{"schema_version", kSchemaVersion},
              {"tool", "horobound"},
              {"graph", b.descriptor},
              {"operation", spec.operation},
              {"parameters", params},
              {"semantics", kSemantics}};
  if (params.contains("radius")) report["radius"] = params.at("radius");
  report["results"] = results_for(b, spec, params, limits);
  json provenance{{"deterministic", true}};
  if (spec.timestamp) provenance["timestamp"] = utc_now();
  report["provenance"] = provenance;
  return report;
}

ReportVerification verify_report(const json& report, const Limits& limits, unsigned workers) {
  ReportVerification out;
  try {
    if (report.value("schema_version", 0) != kSchemaVersion) {
      out.message = "unsupported schema version";
      return out;
    }
    ScenarioSpec spec;
    spec.graph = report.at("graph").get<std::string>();
    spec.operation = report.at("operation").get<std::string>();
    spec.params = report.at("parameters");
    spec.workers = workers;
    auto fresh = run_scenario(spec, limits);
    out.payload_identical = fresh.at("results").dump() == report.at("results").dump();
    if (!out.payload_identical) {
      out.message = "re-run produced a different payload";
      return out;
    }
    auto b = builtin(spec.graph);
    const auto& results = report.at("results");
    std::string detail = "payload reproduced";
    if (spec.operation == "witness" && results.at("found").get<bool>()) {
      auto v = verify_certificate(*b.oracle, certificate_from_json(*b.oracle, results.at("certificate")), limits);
      if (!v.ok) {
        out.message = "certificate: " + v.message;
        return out;
      }
      detail += "; certificate: " + v.message;
    }
    if (spec.operation == "tail-bound") {
      for (const char* key : {"record", "outer"}) {
        if (!results.contains(key)) continue;
        auto v = verify_tail_bound(*b.oracle, tail_bound_from_json(*b.oracle, results.at(key)), limits);
        if (!v.ok) {
          out.message = std::string(key) + ": " + v.message;
          return out;
        }
        detail += std::string("; ") + key + ": " + v.message;
      }
    }
    out.ok = true;
    out.message = detail;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
  return out;
}

std::string report_csv(const json& report) {
  std::ostringstream os;
  const auto& op = report.at("operation").get<std::string>();
  const auto& r = report.at("results");
  if (op == "rigid-scan") {
    os << "side,max_rigid_perimeter\n";
    for (const auto& row : r.at("max_perimeter")) os << row.at("side") << ',' << row.at("perimeter") << '\n';
  } else if (op == "pathsjoin") {
    os << "side,rigid_bound\n";
    for (const auto& row : r.at("rigid_bound")) os << row.at("side") << ',' << row.at("perimeter") << '\n';
  } else if (op == "witness") {
    os << "index,c,d_ac,d_bc,perimeter\n";
    if (!r.at("certificate").is_null()) {
      int i = 1;
      for (const auto& t : r.at("certificate").at("triples")) {
        os << i++ << ",\"" << t.at("c").at("label").get<std::string>() << "\"," << t.at("dca") << ',' << t.at("dbc")
           << ',' << t.at("perimeter") << '\n';
      }
    }
  } else if (op == "tail-bound") {
    os << "radius,empirical_bound\n";
    for (const char* key : {"record", "outer"}) {
      if (!r.contains(key)) continue;
      const auto& rec = r.at(key);
      os << rec.at("radius") << ',';
      if (!rec.at("empirical_bound").is_null()) os << rec.at("empirical_bound");
      os << '\n';
    }
  } else {
    throw InvalidInput("no CSV table for operation '" + op + "'");
  }
  return os.str();
}

// ---------------------------------------------------------------- records

json to_json(const VertexRef& v) { return {{"key", to_hex(v.key)}, {"label", v.display()}}; }

VertexRef vertex_from_json(const NeighborOracle& oracle, const json& j) {
  auto v = oracle.from_key(from_hex(j.at("key").get<std::string>()));
  if (v.display() != j.at("label").get<std::string>()) {
    throw VerificationFailure("vertex label " + j.at("label").get<std::string>() + " does not match its key");
  }
  return v;
}

json to_json(const TripleRecord& t) {
  return {{"a", to_json(t.a)},     {"b", to_json(t.b)},     {"c", to_json(t.c)},
          {"dab", t.dab},          {"dbc", t.dbc},          {"dca", t.dca},
          {"perimeter", t.perimeter()}};
}

TripleRecord triple_from_json(const NeighborOracle& oracle, const json& j) {
  TripleRecord t{vertex_from_json(oracle, j.at("a")), vertex_from_json(oracle, j.at("b")),
                 vertex_from_json(oracle, j.at("c")), j.at("dab").get<int>(), j.at("dbc").get<int>(),
                 j.at("dca").get<int>()};
  if (t.perimeter() != j.at("perimeter").get<int>()) throw VerificationFailure("perimeter does not equal the side sum");
  return t;
}

json to_json(const NonBusemannCertificate& cert) {
  json triples = json::array();
  for (const auto& t : cert.triples) triples.push_back(to_json(t));
  return {{"a", to_json(cert.a)}, {"b", to_json(cert.b)}, {"radius", cert.radius}, {"dab", cert.dab}, {"triples", triples}};
}

NonBusemannCertificate certificate_from_json(const NeighborOracle& oracle, const json& j) {
  NonBusemannCertificate cert;
  cert.a = vertex_from_json(oracle, j.at("a"));
  cert.b = vertex_from_json(oracle, j.at("b"));
  cert.radius = j.at("radius").get<int>();
  cert.dab = j.at("dab").get<int>();
  for (const auto& t : j.at("triples")) cert.triples.push_back(triple_from_json(oracle, t));
  return cert;
}

json to_json(const TailBoundRecord& rec) {
  return {{"a", to_json(rec.a)},
          {"b", to_json(rec.b)},
          {"radius", rec.radius},
          {"candidates", rec.candidates},
          {"no_tail", rec.no_tail},
          {"worst", rec.worst ? to_json(*rec.worst) : json(nullptr)},
          {"empirical_bound", rec.empirical_bound ? json(*rec.empirical_bound) : json(nullptr)}};
}

TailBoundRecord tail_bound_from_json(const NeighborOracle& oracle, const json& j) {
  TailBoundRecord rec;
  rec.a = vertex_from_json(oracle, j.at("a"));
  rec.b = vertex_from_json(oracle, j.at("b"));
  rec.radius = j.at("radius").get<int>();
  rec.candidates = j.at("candidates").get<std::uint64_t>();
  rec.no_tail = j.at("no_tail").get<std::uint64_t>();
  if (!j.at("worst").is_null()) rec.worst = triple_from_json(oracle, j.at("worst"));
  if (!j.at("empirical_bound").is_null()) rec.empirical_bound = j.at("empirical_bound").get<int>();
  return rec;
}

}  // namespace horobound
