#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horobound/limits.hpp"
#include "horobound/local_metric.hpp"
#include "horobound/metric.hpp"
#include "horobound/oracle.hpp"

namespace horobound {

/// Exact nonnegative rational, used for epsilons and Lipschitz ratios.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Accepts "3", "3/2" or "1.5". Throws InvalidInput.
  static Rational parse(std::string_view text);
  static Rational make(std::int64_t num, std::int64_t den);
  std::string str() const;
  /// |value| < *this, exactly.
  bool exceeds_abs(std::int64_t value) const;
  friend bool operator<(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }
  friend bool operator==(const Rational& x, const Rational& y) { return x.num == y.num && x.den == y.den; }
};

/// A triple as reported: vertices in caller order, sides d(a,b), d(b,c), d(c,a).
struct TripleRecord {
  VertexRef a, b, c;
  int dab = 0, dbc = 0, dca = 0;
  int perimeter() const { return dab + dbc + dca; }
  int min_side() const;
};

// ---------------------------------------------------------------- rigid triples

struct RigidScanResult {
  VertexRef center;
  int radius = 0;
  int side_cap = 0;
  std::uint64_t triples_examined = 0;
  std::vector<TripleRecord> rigid;       // vertices in key order; sorted by (min side, keys)
  std::map<int, int> max_perimeter;      // min side -> largest rigid perimeter
};

/// Every rigid triple inside B(center, radius) whose smallest side is at most
/// side_cap (side_cap <= 0 means no cap).
RigidScanResult rigid_scan(const NeighborOracle& oracle, const VertexRef& center, int radius, int side_cap = 0,
                           const Limits& limits = {}, unsigned workers = 1);

// ---------------------------------------------------------------- tail bounds

struct TailBoundRecord {
  VertexRef a, b;
  int radius = 0;
  std::optional<TripleRecord> worst;   // largest perimeter without a shared tail
  std::optional<int> empirical_bound;  // worst->perimeter(), or none found
  std::uint64_t candidates = 0;
  std::uint64_t no_tail = 0;
};

/// Scans every c in B(a, radius) other than a, b. Ties on perimeter go to the
/// first candidate in witness-search order.
TailBoundRecord tail_bound_estimate(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, int radius,
                                    const Limits& limits = {});

struct TailBoundTrend {
  TailBoundRecord inner, outer;
  /// "growing" when the bound increased with the radius, else "stable".
  std::string trend() const;
};

TailBoundTrend tail_bound_trend(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, int inner_radius,
                                int outer_radius, const Limits& limits = {});

// ---------------------------------------------------------------- witnesses

struct NonBusemannCertificate {
  VertexRef a, b;
  int radius = 0;
  int dab = 0;
  std::vector<TripleRecord> triples;  // (a, b, c_i); perimeters strictly increasing
};

/// Up to k no-shared-tail triples (a, b, c) with distinct perimeters above
/// the degenerate value 2 d(a,b): the k smallest such perimeters, each with
/// its first candidate in witness-search order. Returns nullopt when fewer
/// than two perimeters exist.
std::optional<NonBusemannCertificate> nonbusemann_witness(const NeighborOracle& oracle, const VertexRef& a,
                                                          const VertexRef& b, int radius, int k,
                                                          const Limits& limits = {});

/// Candidate order used by the witness and tail-bound scans: distance from
/// the midpoint of the key-first geodesic a -> b, then key.
VertexRef pair_midpoint(const NeighborOracle& oracle, const VertexRef& a, const VertexRef& b, const Limits& limits = {});

struct Verification {
  bool ok = true;
  std::string message;
};

/// Recomputes every listed triple from scratch with the definitional
/// predicates (fresh BFS fields, no local shortcuts).
Verification verify_certificate(const NeighborOracle& oracle, const NonBusemannCertificate& cert,
                                const Limits& limits = {});
/// Re-checks the worst triple definitionally and that a fresh scan agrees.
Verification verify_tail_bound(const NeighborOracle& oracle, const TailBoundRecord& record, const Limits& limits = {});

// ---------------------------------------------------------------- fingerprints

struct FingerprintClass {
  std::vector<int> values;                          // one per probe
  std::map<int, std::vector<VertexRef>> witnesses;  // annulus radius -> witnesses (key order)
  bool stable = false;
};

struct FingerprintResult {
  VertexRef base;
  int r_test = 0;
  std::vector<int> annuli;
  std::vector<VertexRef> probes;  // B(base, r_test), key order
  std::vector<FingerprintClass> classes;  // sorted by values

  std::size_t stable_count() const;
};

/// Probe values d(w, base) - d(w, v) for witnesses w on each annulus.
FingerprintResult fingerprints(const NeighborOracle& oracle, const VertexRef& base, int r_test,
                               const std::vector<int>& annuli, const Limits& limits = {});

/// Fingerprint of a single vertex against the result's probes.
std::vector<int> fingerprint_of(const NeighborOracle& oracle, const FingerprintResult& fp, const VertexRef& w,
                                const Limits& limits = {});

struct Reachability {
  bool reachable = false;
  std::vector<VertexRef> ray;  // verified geodesic from the base when reachable
  int ray_length = 0;
  int tail_window = 0;
  std::string note;
};

/// Looks for a geodesic path from the base of length ray_length whose last
/// tail_window vertices all carry the class fingerprint.
Reachability busemann_reachability(const NeighborOracle& oracle, const FingerprintResult& fp, std::size_t class_index,
                                   int ray_length, int tail_window = 2, const Limits& limits = {});

// ---------------------------------------------------------------- ray checks

struct RayCheck {
  bool ok = true;
  // First violation: times (s, t), probe index (-1 when not probe-based).
  int s = -1, t = -1;
  int probe = -1;
  std::int64_t value = 0;  // the offending integer expression
  std::string message;
};

/// Sequence gamma(0..L). Checks |d(g(t), g(0)) - t| < eps and
/// |d(g(t), y) - d(g(s), y) - (t - s)| < eps for every probe y
/// and all s, t >= N.
RayCheck weakly_geodesic_check(const NeighborOracle& oracle, const std::vector<VertexRef>& sequence,
                               const std::vector<VertexRef>& probes, const Rational& epsilon, int n_start,
                               const Limits& limits = {});

RayCheck almost_geodesic_check(const NeighborOracle& oracle, const std::vector<VertexRef>& sequence,
                               const Rational& epsilon, int n_start, const Limits& limits = {});

// ---------------------------------------------------------------- Lipschitz

struct LipschitzResult {
  Rational b_over_a;  // max d_B / d_A
  Rational a_over_b;  // max d_A / d_B
  std::uint64_t pairs = 0;
};

/// Exact maxima over all pairs of B_A(center, radius); both oracles must
/// accept the same vertex keys.
LipschitzResult lipschitz_ratio(const NeighborOracle& a, const NeighborOracle& b, const VertexRef& center, int radius,
                                const Limits& limits = {}, unsigned workers = 1);

// ---------------------------------------------------------------- path joining

struct PathsJoinResult {
  VertexRef center;
  int radius = 0;
  std::map<int, int> rigid_bound;  // side n -> M_n, largest rigid perimeter with a side n
  std::uint64_t checked = 0;       // triples over the threshold
  std::vector<TripleRecord> violations;
};

/// Finite form of the path-joining implication: every (a, b, c) in the ball
/// with d(a,c) + d(b,c) > d(a,b) + max{M_k : k <= d(a,b)} shares a tail.
PathsJoinResult pathsjoin_check(const NeighborOracle& oracle, const VertexRef& center, int radius,
                                const Limits& limits = {}, unsigned workers = 1);

}  // namespace horobound
