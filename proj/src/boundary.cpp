#include "horobound/boundary.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <tuple>

#include "horobound/errors.hpp"

namespace horobound {

// ---------------------------------------------------------------- Rational

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational Rational::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') throw InvalidInput("rational '" + std::string(text) + "' is negative");
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidInput("bad rational '" + std::string(text) + "'");
    }
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto frac = text.substr(dot + 1);
    if (frac.size() > 12) throw InvalidInput("too many decimals in '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    auto whole = text.substr(0, dot);
    std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    return make(w * den + f, den);
  }
  return make(parse_int(text), 1);
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

bool Rational::exceeds_abs(std::int64_t value) const { return (value < 0 ? -value : value) * den < num; }

int TripleRecord::min_side() const { return std::min({dab, dbc, dca}); }

namespace {

TripleRecord record(const LocalMetric& lm, std::size_t a, std::size_t b, std::size_t c) {
  return {lm.vertices[a], lm.vertices[b], lm.vertices[c], lm.d(a, b), lm.d(b, c), lm.d(c, a)};
}

bool key_order(const TripleRecord& x, const TripleRecord& y) {
  return std::tie(x.a.key, x.b.key, x.c.key) < std::tie(y.a.key, y.b.key, y.c.key);
}

// Distances from src to every target, widening the BFS until all are found.
std::vector<int> distances_from(const NeighborOracle& oracle, const VertexRef& src,
                                const std::vector<VertexRef>& targets, const Limits& limits, int start_radius = 8) {
  int r = std::max(1, start_radius);
  while (true) {
    auto field = bfs(oracle, src, r, limits);
    std::vector<int> out;
    out.reserve(targets.size());
    bool complete = true;
    for (const auto& t : targets) {
      auto d = field.at(t);
      if (!d) {
        complete = false;
        break;
      }
      out.push_back(*d);
    }
    if (complete) return out;
    if (field.frontier_complete) throw InvalidInput("graph is disconnected: target unreachable from " + src.display());
    r *= 2;
  }
}

struct Candidate {
  VertexRef c;
  int dac = 0, dbc = 0, mid = 0;
  bool shares = false;
};

struct PairScan {
  int dab = 0;
  std::vector<Candidate> candidates;  // witness-search order
};

PairScan scan_pair(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, int radius,
                   const Limits& limits) {
  if (a == b) throw InvalidInput("pair vertices must differ");
  if (radius < 1) throw InvalidInput("scan radius must be at least 1");
  PairScan scan;
  auto fa = bfs(oracle, a, radius + 1, limits);
  scan.dab = fa.at(b) ? *fa.at(b) : distance_within(oracle, a, b, 1 << 20, limits);
  auto fb = bfs(oracle, b, radius + 1 + scan.dab, limits);
  auto mid = pair_midpoint(oracle, a, b, limits);
  auto fm = bfs(oracle, mid, radius + scan.dab, limits);
  for (const auto& c : fa.order) {
    const int dac = fa.dist.at(c.key);
    if (dac > radius || c == a || c == b) continue;
    const int dbc = fb.dist.at(c.key);
    bool shares = false;
    for (const auto& u : oracle.neighbors(c)) {
      if (fa.dist.at(u.key) == dac - 1 && fb.dist.at(u.key) == dbc - 1) {
        shares = true;
        break;
      }
    }
    scan.candidates.push_back({c, dac, dbc, fm.dist.at(c.key), shares});
  }
  std::sort(scan.candidates.begin(), scan.candidates.end(),
            [](const Candidate& x, const Candidate& y) { return std::tie(x.mid, x.c.key) < std::tie(y.mid, y.c.key); });
  return scan;
}

TripleRecord pair_record(const VertexRef& a, const VertexRef& b, int dab, const Candidate& c) {
  return {a, b, c.c, dab, c.dbc, c.dac};
}

}  // namespace

// ---------------------------------------------------------------- rigid triples

namespace {

RigidScanResult rigid_from_local(const LocalMetric& lm, int radius, int side_cap, unsigned workers) {
  auto idx = lm.ball(radius);
  const std::size_t m = idx.size();
  struct Partial {
    std::vector<TripleRecord> rigid;
    std::uint64_t examined = 0;
  };
  std::vector<Partial> parts(std::max(1u, workers));
  parallel_chunks(m, workers, [&](std::size_t begin, std::size_t end, unsigned id) {
    auto& part = parts[id];
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) {
        for (std::size_t z = y + 1; z < m; ++z) {
          auto i = idx[x], j = idx[y], k = idx[z];
          ++part.examined;
          if (side_cap > 0 && std::min({lm.d(i, j), lm.d(j, k), lm.d(k, i)}) > side_cap) continue;
          if (lm.is_rigid(i, j, k)) part.rigid.push_back(record(lm, i, j, k));
        }
      }
    }
  });
  RigidScanResult out;
  out.center = lm.center;
  out.radius = radius;
  out.side_cap = side_cap;
  for (auto& part : parts) {
    out.triples_examined += part.examined;
    out.rigid.insert(out.rigid.end(), part.rigid.begin(), part.rigid.end());
  }
  std::sort(out.rigid.begin(), out.rigid.end(), [](const TripleRecord& x, const TripleRecord& y) {
    if (x.min_side() != y.min_side()) return x.min_side() < y.min_side();
    return key_order(x, y);
  });
  for (const auto& t : out.rigid) {
    auto& best = out.max_perimeter[t.min_side()];
    best = std::max(best, t.perimeter());
  }
  return out;
}

}  // namespace

RigidScanResult rigid_scan(const NeighborOracle& oracle, const VertexRef& center, int radius, int side_cap,
                           const Limits& limits, unsigned workers) {
  if (radius < 1) throw InvalidInput("rigid_scan radius must be at least 1");
  return rigid_from_local(build_local_metric(oracle, center, radius + 1, limits, workers), radius, side_cap, workers);
}

// ---------------------------------------------------------------- tail bounds

VertexRef pair_midpoint(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, const Limits& limits) {
  const int dab = distance_within(oracle, a, b, 1 << 20, limits);
  auto fb = bfs(oracle, b, dab + 1, limits);
  VertexRef cur = a;
  for (int step = 0; step < dab / 2; ++step) {
    const int here = fb.dist.at(cur.key);
    std::optional<VertexRef> next;
    for (const auto& u : oracle.neighbors(cur)) {
      auto d = fb.at(u);
      if (d && *d == here - 1 && (!next || u.key < next->key)) next = u;
    }
    cur = *next;
  }
  return cur;
}

TailBoundRecord tail_bound_estimate(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, int radius,
                                    const Limits& limits) {
  auto scan = scan_pair(oracle, a, b, radius, limits);
  TailBoundRecord rec;
  rec.a = a;
  rec.b = b;
  rec.radius = radius;
  rec.candidates = scan.candidates.size();
  for (const auto& c : scan.candidates) {
    if (c.shares) continue;
    ++rec.no_tail;
    auto t = pair_record(a, b, scan.dab, c);
    if (!rec.worst || t.perimeter() > rec.worst->perimeter()) rec.worst = t;
  }
  if (rec.worst) rec.empirical_bound = rec.worst->perimeter();
  return rec;
}

std::string TailBoundTrend::trend() const {
  int inner_bound = inner.empirical_bound.value_or(-1);
  int outer_bound = outer.empirical_bound.value_or(-1);
  return outer_bound > inner_bound ? "growing" : "stable";
}

TailBoundTrend tail_bound_trend(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, int inner_radius,
                                int outer_radius, const Limits& limits) {
  if (outer_radius <= inner_radius) throw InvalidInput("trend needs an outer radius larger than the inner one");
  return {tail_bound_estimate(oracle, a, b, inner_radius, limits), tail_bound_estimate(oracle, a, b, outer_radius, limits)};
}

std::optional<NonBusemannCertificate> nonbusemann_witness(const NeighborOracle& oracle, const VertexRef& a,
                                                          const VertexRef& b, int radius, int k,
                                                          const Limits& limits) {
  if (k < 2) throw InvalidInput("witness count must be at least 2");
  auto scan = scan_pair(oracle, a, b, radius, limits);
  std::map<int, const Candidate*> by_perimeter;
  for (const auto& c : scan.candidates) {
    if (c.shares) continue;
    int p = scan.dab + c.dac + c.dbc;
    if (p <= 2 * scan.dab) continue;  // c on a geodesic between a and b
    by_perimeter.try_emplace(p, &c);  // first in witness order wins
  }
  if (by_perimeter.size() < static_cast<std::size_t>(k)) return std::nullopt;
  NonBusemannCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.radius = radius;
  cert.dab = scan.dab;
  for (auto [p, c] : by_perimeter) {
    if (cert.triples.size() == static_cast<std::size_t>(k)) break;
    cert.triples.push_back(pair_record(a, b, scan.dab, *c));
  }
  return cert;
}

Verification verify_certificate(const NeighborOracle& oracle, const NonBusemannCertificate& cert,
                                const Limits& limits) {
  const int cap = 2 * cert.radius + cert.dab + 2;
  int dab = distance_within(oracle, cert.a, cert.b, cap, limits);
  if (dab != cert.dab) return {false, "d(a,b) is " + std::to_string(dab) + ", certificate says " + std::to_string(cert.dab)};
  if (cert.triples.size() < 2) return {false, "certificate lists fewer than two triples"};
  int previous = -1;
  for (const auto& t : cert.triples) {
    if (t.a != cert.a || t.b != cert.b) return {false, "triple does not use the certified pair"};
    auto fresh = make_triple(oracle, t.a, t.b, t.c, cap, limits);
    if (fresh.dab() != t.dab || fresh.dbc() != t.dbc || fresh.dca() != t.dca) {
      return {false, "distances for c = " + t.c.display() + " do not match"};
    }
    if (t.dca > cert.radius) return {false, "c = " + t.c.display() + " lies outside the certified radius"};
    if (t.perimeter() <= previous) return {false, "perimeters are not strictly increasing"};
    if (t.perimeter() <= 2 * dab) return {false, "degenerate triple for c = " + t.c.display()};
    if (shares_tail(oracle, t.a, t.b, t.c, cap, limits)) {
      return {false, "minimal paths into c = " + t.c.display() + " share a tail"};
    }
    previous = t.perimeter();
  }
  return {true, "all " + std::to_string(cert.triples.size()) + " triples re-verified"};
}

Verification verify_tail_bound(const NeighborOracle& oracle, const TailBoundRecord& record, const Limits& limits) {
  auto fresh = tail_bound_estimate(oracle, record.a, record.b, record.radius, limits);
  if (fresh.empirical_bound != record.empirical_bound) return {false, "fresh scan gives a different bound"};
  if (!record.worst) return {true, "fresh scan agrees: no triple without a shared tail"};
  const auto& t = *record.worst;
  const int cap = 2 * record.radius + t.dab + 2;
  auto tri = make_triple(oracle, t.a, t.b, t.c, cap, limits);
  if (tri.perimeter() != t.perimeter()) return {false, "worst triple perimeter does not match"};
  if (shares_tail(oracle, t.a, t.b, t.c, cap, limits)) return {false, "worst triple shares a tail"};
  return {true, "worst triple re-verified and fresh scan agrees"};
}

// ---------------------------------------------------------------- fingerprints

std::size_t FingerprintResult::stable_count() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.stable; }));
}

FingerprintResult fingerprints(const NeighborOracle& oracle, const VertexRef& base, int r_test,
                               const std::vector<int>& annuli, const Limits& limits) {
  if (r_test < 0) throw InvalidInput("r_test must be nonnegative");
  if (annuli.empty()) throw InvalidInput("at least one annulus radius is required");
  FingerprintResult out;
  out.base = base;
  out.r_test = r_test;
  out.annuli = annuli;
  std::sort(out.annuli.begin(), out.annuli.end());
  out.annuli.erase(std::unique(out.annuli.begin(), out.annuli.end()), out.annuli.end());
  if (out.annuli.front() <= r_test) throw InvalidInput("r_test must be smaller than every annulus radius");
  const int outer = out.annuli.back();

  auto probe_field = bfs(oracle, base, r_test, limits);
  out.probes = probe_field.order;
  std::sort(out.probes.begin(), out.probes.end());
  auto base_field = bfs(oracle, base, outer, limits);
  std::vector<DistanceField> fields;
  for (const auto& v : out.probes) fields.push_back(bfs(oracle, v, outer + r_test, limits));

  std::map<std::vector<int>, FingerprintClass> classes;
  for (int R : out.annuli) {
    for (const auto& w : base_field.sphere(R)) {
      std::vector<int> values;
      values.reserve(out.probes.size());
      for (std::size_t i = 0; i < out.probes.size(); ++i) {
        int value = R - fields[i].dist.at(w.key);
        if (std::abs(value) > probe_field.dist.at(out.probes[i].key)) {
          throw VerificationFailure("probe value exceeds d(base, probe); the oracle is not a metric graph");
        }
        values.push_back(value);
      }
      auto& cls = classes[values];
      cls.values = values;
      cls.witnesses[R].push_back(w);
    }
  }
  for (auto& [values, cls] : classes) {
    for (std::size_t i = 0; i + 1 < out.annuli.size(); ++i) {
      if (cls.witnesses.contains(out.annuli[i]) && cls.witnesses.contains(out.annuli[i + 1])) cls.stable = true;
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::vector<int> fingerprint_of(const NeighborOracle& oracle, const FingerprintResult& fp, const VertexRef& w,
                                const Limits& limits) {
  std::vector<VertexRef> targets{fp.base};
  targets.insert(targets.end(), fp.probes.begin(), fp.probes.end());
  auto d = distances_from(oracle, w, targets, limits);
  std::vector<int> values;
  for (std::size_t i = 1; i < d.size(); ++i) values.push_back(d[0] - d[i]);
  return values;
}

Reachability busemann_reachability(const NeighborOracle& oracle, const FingerprintResult& fp, std::size_t class_index,
                                   int ray_length, int tail_window, const Limits& limits) {
  if (class_index >= fp.classes.size()) throw InvalidInput("fingerprint class index out of range");
  const auto& cls = fp.classes[class_index];
  if (!cls.stable) throw InvalidInput("reachability needs a stable fingerprint class");
  if (ray_length < 1) throw InvalidInput("ray length must be positive");
  if (tail_window < 1 || tail_window > ray_length + 1) throw InvalidInput("tail window must be in 1..ray_length+1");

  Reachability out;
  out.ray_length = ray_length;
  out.tail_window = tail_window;
  auto dag = geodesic_dag(oracle, bfs(oracle, fp.base, ray_length, limits));
  std::vector<DistanceField> fields;
  for (const auto& v : fp.probes) fields.push_back(bfs(oracle, v, ray_length + fp.r_test, limits));

  std::unordered_map<std::string, int> run;
  for (const auto& w : dag.field.order) {
    const int t = dag.field.dist.at(w.key);
    bool match = true;
    for (std::size_t i = 0; i < fields.size() && match; ++i) match = t - fields[i].dist.at(w.key) == cls.values[i];
    int best = 0;
    if (match) {
      int longest = 0;
      if (auto it = dag.predecessors.find(w.key); it != dag.predecessors.end()) {
        for (const auto& p : it->second) longest = std::max(longest, run.at(p.key));
      }
      best = 1 + longest;
    }
    run[w.key] = best;
  }
  std::optional<VertexRef> end;
  for (const auto& w : dag.field.sphere(ray_length)) {
    if (run.at(w.key) >= tail_window) {
      end = w;
      break;
    }
  }
  if (!end) {
    out.note = "no geodesic of length " + std::to_string(ray_length) + " from the base ends in " +
               std::to_string(tail_window) + " consecutive class vertices (evidence at this radius, not proof)";
    return out;
  }
  std::vector<VertexRef> ray{*end};
  int needed = tail_window - 1;
  while (ray.back() != fp.base) {
    const auto& preds = dag.predecessors.at(ray.back().key);
    std::optional<VertexRef> pick;
    for (const auto& p : preds) {
      if (needed > 0 && run.at(p.key) < needed) continue;
      if (!pick || p.key < pick->key) pick = p;
    }
    ray.push_back(*pick);
    if (needed > 0) --needed;
  }
  std::reverse(ray.begin(), ray.end());
  auto check = is_geodesic_path(oracle, ray, limits);
  if (!check.geodesic) throw VerificationFailure("extracted ray failed the geodesic check: " + check.reason);
  out.reachable = true;
  out.ray = std::move(ray);
  out.note = "geodesic ray of length " + std::to_string(ray_length) + " verified";
  return out;
}

// ---------------------------------------------------------------- ray checks

RayCheck weakly_geodesic_check(const NeighborOracle& oracle, const std::vector<VertexRef>& sequence,
                               const std::vector<VertexRef>& probes, const Rational& epsilon, int n_start,
                               const Limits& limits) {
  if (sequence.empty()) throw InvalidInput("empty sequence");
  if (epsilon.num <= 0) throw InvalidInput("epsilon must be positive");
  if (n_start < 0) throw InvalidInput("N must be nonnegative");
  const int L = static_cast<int>(sequence.size()) - 1;
  auto from_start = distances_from(oracle, sequence.front(), sequence, limits);
  for (int t = n_start; t <= L; ++t) {
    std::int64_t v = from_start[t] - t;
    if (!epsilon.exceeds_abs(v)) {
      return {false, -1, t, -1, v, "|d(g(t), g(0)) - t| = " + std::to_string(std::abs(v)) + " at t = " + std::to_string(t)};
    }
  }
  for (std::size_t p = 0; p < probes.size(); ++p) {
    auto d = distances_from(oracle, probes[p], sequence, limits);
    for (int s = n_start; s <= L; ++s) {
      for (int t = s + 1; t <= L; ++t) {
        std::int64_t v = static_cast<std::int64_t>(d[t]) - d[s] - (t - s);
        if (!epsilon.exceeds_abs(v)) {
          return {false, s, t, static_cast<int>(p), v,
                  "|d(g(t), y) - d(g(s), y) - (t - s)| = " + std::to_string(std::abs(v)) + " for y = " +
                      probes[p].display() + ", s = " + std::to_string(s) + ", t = " + std::to_string(t)};
        }
      }
    }
  }
  return {true, -1, -1, -1, 0, "all inequalities hold"};
}

RayCheck almost_geodesic_check(const NeighborOracle& oracle, const std::vector<VertexRef>& sequence,
                               const Rational& epsilon, int n_start, const Limits& limits) {
  if (sequence.empty()) throw InvalidInput("empty sequence");
  if (epsilon.num <= 0) throw InvalidInput("epsilon must be positive");
  if (n_start < 0) throw InvalidInput("N must be nonnegative");
  const int L = static_cast<int>(sequence.size()) - 1;
  auto from_start = distances_from(oracle, sequence.front(), sequence, limits);
  for (int s = n_start; s <= L; ++s) {
    auto d = distances_from(oracle, sequence[s], sequence, limits);
    for (int t = s; t <= L; ++t) {
      std::int64_t v = static_cast<std::int64_t>(d[t]) + from_start[s] - t;
      if (!epsilon.exceeds_abs(v)) {
        return {false, s, t, -1, v,
                "|d(g(t), g(s)) + d(g(s), g(0)) - t| = " + std::to_string(std::abs(v)) + " for s = " +
                    std::to_string(s) + ", t = " + std::to_string(t)};
      }
    }
  }
  return {true, -1, -1, -1, 0, "all inequalities hold"};
}

// ---------------------------------------------------------------- Lipschitz

LipschitzResult lipschitz_ratio(const NeighborOracle& a, const NeighborOracle& b, const VertexRef& center, int radius,
                                const Limits& limits, unsigned workers) {
  if (radius < 1) throw InvalidInput("Lipschitz radius must be at least 1");
  auto lm = build_local_metric(a, center, radius, limits, workers);
  const std::size_t n = lm.size();
  std::vector<VertexRef> in_b;
  for (const auto& v : lm.vertices) {
    auto w = b.from_key(v.key);
    if (w.key != v.key) throw InvalidInput("the two graphs do not share a vertex key space");
    in_b.push_back(std::move(w));
  }
  struct Best {
    Rational ba{0, 1}, ab{0, 1};
    std::uint64_t pairs = 0;
  };
  std::vector<Best> parts(std::max(1u, workers));
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned id) {
    auto& best = parts[id];
    for (std::size_t i = begin; i < end; ++i) {
      std::vector<VertexRef> targets(in_b.begin() + static_cast<std::ptrdiff_t>(i) + 1, in_b.end());
      if (targets.empty()) continue;
      auto db = distances_from(b, in_b[i], targets, limits, 2 * radius);
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::int64_t da = lm.d(i, j);
        const std::int64_t dbv = db[j - i - 1];
        ++best.pairs;
        if (best.ba.num * da < dbv * best.ba.den) best.ba = {dbv, da};
        if (best.ab.num * dbv < da * best.ab.den) best.ab = {da, dbv};
      }
    }
  });
  LipschitzResult out{{0, 1}, {0, 1}, 0};
  for (const auto& p : parts) {
    out.pairs += p.pairs;
    if (out.b_over_a < p.ba) out.b_over_a = p.ba;
    if (out.a_over_b < p.ab) out.a_over_b = p.ab;
  }
  out.b_over_a = Rational::make(out.b_over_a.num, out.b_over_a.den);
  out.a_over_b = Rational::make(out.a_over_b.num, out.a_over_b.den);
  return out;
}

// ---------------------------------------------------------------- path joining

PathsJoinResult pathsjoin_check(const NeighborOracle& oracle, const VertexRef& center, int radius, const Limits& limits,
                                unsigned workers) {
  if (radius < 1) throw InvalidInput("pathsjoin radius must be at least 1");
  auto lm = build_local_metric(oracle, center, radius + 1, limits, workers);
  auto rigid = rigid_from_local(lm, radius, 0, workers);
  PathsJoinResult out;
  out.center = center;
  out.radius = radius;
  for (const auto& t : rigid.rigid) {
    for (int side : {t.dab, t.dbc, t.dca}) {
      auto& m = out.rigid_bound[side];
      m = std::max(m, t.perimeter());
    }
  }
  auto idx = lm.ball(radius);
  const std::size_t m = idx.size();
  int max_side = 0;
  for (auto i : idx) {
    for (auto j : idx) max_side = std::max(max_side, lm.d(i, j));
  }
  std::vector<int> threshold(static_cast<std::size_t>(max_side) + 1, 0);
  int running = 0;
  for (int n = 1; n <= max_side; ++n) {
    if (auto it = out.rigid_bound.find(n); it != out.rigid_bound.end()) running = std::max(running, it->second);
    threshold[n] = n + running;
  }
  struct Partial {
    std::uint64_t checked = 0;
    std::vector<TripleRecord> violations;
  };
  std::vector<Partial> parts(std::max(1u, workers));
  parallel_chunks(m, workers, [&](std::size_t begin, std::size_t end, unsigned id) {
    auto& part = parts[id];
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) {
        auto a = idx[x], b = idx[y];
        const int limit = threshold[lm.d(a, b)];
        for (std::size_t z = 0; z < m; ++z) {
          auto c = idx[z];
          if (c == a || c == b || lm.d(a, c) + lm.d(b, c) <= limit) continue;
          ++part.checked;
          if (!lm.shares_tail(a, b, c)) part.violations.push_back(record(lm, a, b, c));
        }
      }
    }
  });
  for (auto& p : parts) {
    out.checked += p.checked;
    out.violations.insert(out.violations.end(), p.violations.begin(), p.violations.end());
  }
  std::sort(out.violations.begin(), out.violations.end(), key_order);
  return out;
}

}  // namespace horobound
