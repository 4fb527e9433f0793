#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "horobound/acceptance.hpp"
#include "horobound/builtin.hpp"
#include "horobound/errors.hpp"
#include "horobound/garside.hpp"
#include "horobound/metric.hpp"
#include "horobound/models.hpp"
#include "horobound/report.hpp"
#include "horobound/rewriting.hpp"

using namespace horobound;
using nlohmann::json;

namespace {

// Splits on commas outside parentheses, so "(1,1),(1,-1)" is two items.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_top_level(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot read '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct RunArgs {
  std::string graph, op, out, csv, params_json;
  std::optional<int> radius, radius2, side_cap, count, r_test, cls, ray_length, tail_window, cap, n_start, probe_radius;
  std::optional<std::string> pair, base, annuli, other, vertices, center, sequence, kind, epsilon, probe_center;
  bool timestamp = false;
  unsigned workers = 1;
};

ScenarioSpec scenario_from(const RunArgs& a) {
  ScenarioSpec spec;
  spec.graph = a.graph;
  spec.operation = a.op;
  spec.workers = a.workers;
  spec.timestamp = a.timestamp;
  if (!a.params_json.empty()) {
    try {
      spec.params = json::parse(a.params_json);
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("--params is not valid JSON: ") + e.what());
    }
  }
  auto& p = spec.params;
  auto put_int = [&](const char* key, const std::optional<int>& v) {
    if (v) p[key] = *v;
  };
  auto put_str = [&](const char* key, const std::optional<std::string>& v) {
    if (v) p[key] = *v;
  };
  put_int("radius", a.radius);
  put_int("radius2", a.radius2);
  put_int("side_cap", a.side_cap);
  put_int("count", a.count);
  put_int("r_test", a.r_test);
  put_int("class", a.cls);
  put_int("ray_length", a.ray_length);
  put_int("tail_window", a.tail_window);
  put_int("cap", a.cap);
  put_int("n_start", a.n_start);
  put_int("probe_radius", a.probe_radius);
  put_str("base", a.base);
  put_str("other", a.other);
  put_str("center", a.center);
  put_str("kind", a.kind);
  put_str("epsilon", a.epsilon);
  put_str("probe_center", a.probe_center);
  if (a.pair) p["pair"] = split_top_level(*a.pair);
  if (a.vertices) p["vertices"] = split_top_level(*a.vertices);
  if (a.sequence) p["sequence"] = split_top_level(*a.sequence);
  if (a.annuli) p["annuli"] = parse_int_list(*a.annuli);
  return spec;
}

std::string group_word_normal_form(const Builtin& b, const std::string& word) {
  if (const auto* rw = dynamic_cast<const RewritingModel*>(b.model.get())) {
    const auto& rs = rw->system();
    auto nf = normal_form(rs, rs.alphabet.parse(word));
    return rs.alphabet.format(nf);
  }
  return b.oracle->parse_vertex(word).display();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horobound: metric boundary experiments on graphs and Cayley graphs"};
  app.require_subcommand(1);
  unsigned workers = 1;

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "run one scenario and emit a JSON report");
  run_cmd->add_option("--graph", run.graph, "graph descriptor, e.g. gamma1, zd:2, heisenberg:std")->required();
  run_cmd->add_option("--op", run.op, "operation")->required();
  run_cmd->add_option("--params", run.params_json, "operation parameters as a JSON object");
  run_cmd->add_option("--radius", run.radius);
  run_cmd->add_option("--radius2", run.radius2, "outer radius for tail-bound trends");
  run_cmd->add_option("--side-cap", run.side_cap);
  run_cmd->add_option("--count", run.count, "witness triples to collect");
  run_cmd->add_option("--pair", run.pair, "two vertices, e.g. \"e,abAB\" or \"(1,1),(1,-1)\"");
  run_cmd->add_option("--base", run.base);
  run_cmd->add_option("--r-test", run.r_test);
  run_cmd->add_option("--annuli", run.annuli, "annulus radii, e.g. 10,12");
  run_cmd->add_option("--class", run.cls, "class index for reachability");
  run_cmd->add_option("--ray-length", run.ray_length);
  run_cmd->add_option("--tail-window", run.tail_window);
  run_cmd->add_option("--other", run.other, "second graph for lipschitz");
  run_cmd->add_option("--vertices", run.vertices, "three vertices for triple");
  run_cmd->add_option("--cap", run.cap, "distance cap for triple");
  run_cmd->add_option("--center", run.center);
  run_cmd->add_option("--sequence", run.sequence, "vertex sequence for ray-check");
  run_cmd->add_option("--kind", run.kind, "weak or almost");
  run_cmd->add_option("--epsilon", run.epsilon, "e.g. 1/2");
  run_cmd->add_option("--n-start", run.n_start);
  run_cmd->add_option("--probe-center", run.probe_center);
  run_cmd->add_option("--probe-radius", run.probe_radius);
  run_cmd->add_option("--out", run.out, "report path (default stdout)");
  run_cmd->add_option("--csv", run.csv, "also write a perimeter table as CSV");
  run_cmd->add_flag("--timestamp", run.timestamp, "record the wall-clock time in the provenance block");
  run_cmd->add_option("--workers", run.workers)->check(CLI::Range(1u, 256u));

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-run a report and re-check its certificates");
  verify_cmd->add_option("report", verify_path)->required();
  verify_cmd->add_option("--workers", workers)->check(CLI::Range(1u, 256u));

  AcceptanceOptions acc;
  auto* check_cmd = app.add_subcommand("paper-check", "run the acceptance criteria");
  check_cmd->add_option("--only", acc.only, "criterion ids or tags")->delimiter(',');
  check_cmd->add_option("--mutate", acc.mutate, "negative control: corrupt this built-in graph");
  check_cmd->add_option("--workers", acc.workers)->check(CLI::Range(1u, 256u));

  std::string graph, center, from, to, word, presentation_path;
  int radius = 0;
  bool list = false;
  std::size_t limit = 100;
  auto* ball_cmd = app.add_subcommand("ball", "sphere sizes (and optionally vertices) of a ball");
  ball_cmd->add_option("--graph", graph)->required();
  ball_cmd->add_option("--center", center, "default: identity or (1,0)");
  ball_cmd->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_flag("--list", list, "list vertices with their distance");

  auto* geo_cmd = app.add_subcommand("geodesics", "count and list minimal paths");
  geo_cmd->add_option("--graph", graph)->required();
  geo_cmd->add_option("--from", from)->required();
  geo_cmd->add_option("--to", to)->required();
  geo_cmd->add_option("--limit", limit, "paths to list");

  auto* nf_cmd = app.add_subcommand("normal-form", "canonical form of a group word");
  nf_cmd->add_option("--graph", graph)->required();
  nf_cmd->add_option("--word", word)->required();

  KbBounds bounds;
  auto* kb_cmd = app.add_subcommand("kb-complete", "Knuth-Bendix completion of a presentation");
  auto* kb_graph = kb_cmd->add_option("--graph", graph, "built-in group");
  kb_cmd->add_option("--presentation", presentation_path, "presentation JSON file")->excludes(kb_graph);
  kb_cmd->add_option("--max-rule-length", bounds.max_rule_length);
  kb_cmd->add_option("--max-rules", bounds.max_rules);

  app.add_subcommand("graphs", "list built-in graph names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto limits = Limits::from_env();
    auto default_or = [&](const Builtin& b, const std::string& text) {
      return text.empty() ? default_center(b) : b.oracle->parse_vertex(text);
    };

    if (*run_cmd) {
      auto spec = scenario_from(run);
      auto report = run_scenario(spec, limits);
      write_text(run.out, report.dump(2) + "\n");
      if (!run.csv.empty()) write_text(run.csv, report_csv(report));
      return 0;
    }
    if (*verify_cmd) {
      auto result = verify_report(read_json_file(verify_path), limits, workers);
      json out{{"verified", result.ok}, {"payload_identical", result.payload_identical}, {"message", result.message}};
      std::cout << out.dump(2) << "\n";
      return result.ok ? 0 : 4;
    }
    if (*check_cmd) {
      acc.limits = limits;
      int failed = 0;
      run_acceptance(acc, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        if (r.status == "FAIL") ++failed;
      });
      if (failed) std::cout << failed << " criterion(s) failed" << std::endl;
      return failed ? 4 : 0;
    }
    if (*ball_cmd) {
      auto b = builtin(graph);
      auto c = default_or(b, center);
      auto field = bfs(*b.oracle, c, radius, limits);
      json spheres = json::array();
      for (int r = 0; r <= radius; ++r) spheres.push_back(field.sphere(r).size());
      json out{{"graph", b.descriptor}, {"center", to_json(c)}, {"radius", radius}, {"sphere_sizes", spheres},
               {"size", field.size()}};
      if (list) {
        json vs = json::array();
        for (const auto& v : field.order) vs.push_back({{"vertex", to_json(v)}, {"distance", *field.at(v)}});
        out["vertices"] = vs;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*geo_cmd) {
      auto b = builtin(graph);
      auto x = b.oracle->parse_vertex(from), y = b.oracle->parse_vertex(to);
      constexpr int kCap = 256;
      int d = distance_within(*b.oracle, x, y, kCap, limits);
      auto count = count_geodesics(*b.oracle, x, y, kCap, limits);
      auto en = enumerate_geodesics(*b.oracle, x, y, kCap, std::min(limit, limits.max_enumeration), limits);
      json paths = json::array();
      for (const auto& p : en.paths) {
        json path = json::array();
        for (const auto& v : p) path.push_back(v.display());
        paths.push_back(path);
      }
      json out{{"graph", b.descriptor}, {"from", to_json(x)}, {"to", to_json(y)},   {"distance", d},
               {"count", count.str()},  {"paths", paths},     {"truncated", en.truncated}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*nf_cmd) {
      auto b = builtin(graph);
      if (!b.model) throw InvalidInput("'" + graph + "' is not a group");
      auto v = b.oracle->parse_vertex(word);
      json out{{"graph", b.descriptor}, {"word", word}, {"normal_form", group_word_normal_form(b, word)},
               {"key", to_hex(v.key)}, {"metric_trusted", b.model->metric_trusted()}};
      if (!b.model->metric_trusted()) out["diagnostic"] = b.model->trust_diagnostic();
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*kb_cmd) {
      Presentation p;
      if (!presentation_path.empty()) {
        p = Presentation::load(presentation_path);
      } else if (!graph.empty()) {
        auto b = builtin(graph);
        if (!b.presentation) throw InvalidInput("'" + graph + "' has no presentation");
        p = *b.presentation;
      } else {
        throw InvalidInput("kb-complete needs --graph or --presentation");
      }
      auto rs = kb_complete(p, bounds);
      json rules = json::array();
      for (const auto& r : rs.rules) rules.push_back({rs.alphabet.format(r.lhs), rs.alphabet.format(r.rhs)});
      json out{{"presentation", p.to_json()}, {"status", to_string(rs.status)}, {"rule_count", rs.rules.size()},
               {"rules", rules},             {"diagnostic", rs.diagnostic}};
      if (rs.witness) {
        out["critical_pair"] = {{"left_normal_form", rs.alphabet.format(rs.witness->left_normal_form)},
                                {"right_normal_form", rs.alphabet.format(rs.witness->right_normal_form)}};
      }
      std::cout << out.dump(2) << "\n";
      return rs.status == Confluence::refuted ? 4 : 0;
    }
    for (const auto& name : builtin_names()) std::cout << name << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
