#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "horobound/builtin.hpp"
#include "horobound/errors.hpp"
#include "horobound/local_metric.hpp"
#include "horobound/metric.hpp"
#include "horobound/models.hpp"
#include "horobound/rewriting.hpp"
#include "oracles.hpp"

using namespace horobound;

namespace {

std::vector<std::size_t> model_spheres(const GroupModel& m, int radius) {
  std::vector<std::size_t> out(static_cast<std::size_t>(radius) + 1, 0);
  for (const auto& e : ball(m, radius)) ++out[static_cast<std::size_t>(e.length)];
  return out;
}

oracle::Mat heis(std::int64_t m, std::int64_t n, std::int64_t k) { return {{1, m, n}, {0, 1, k}, {0, 0, 1}}; }

auto identity_norm = [](const oracle::Mat& m) { return m; };

// PSL(2,Z): identify M with -M.
auto psl_norm = [](oracle::Mat m) {
  for (const auto& row : m)
    for (auto x : row) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& r : m)
          for (auto& y : r) y = -y;
      return m;
    }
  return m;
};

const std::vector<std::string> kGroups = {"zd:1", "zd:2", "zd:3", "free:2", "free:3", "free_product:2,3",
                                          "free_product:2,2,2", "free_product:3,0", "hex", "heisenberg:std",
                                          "heisenberg:extended", "braid:3", "braid:4", "one_relator_tietze"};

}  // namespace

TEST_CASE("cayley neighbors at the identity") {
  auto z = builtin("zd:2");
  auto n = z.oracle->neighbors(z.model->identity());
  CHECK(n.size() == 4);
  std::set<std::string> labels;
  for (const auto& v : n) labels.insert(v.label);
  CHECK(labels == std::set<std::string>{"(1,0)", "(-1,0)", "(0,1)", "(0,-1)"});

  auto fp = builtin("free_product:2,3");
  labels.clear();
  for (const auto& v : fp.oracle->neighbors(fp.model->identity())) labels.insert(v.key);
  CHECK(labels.size() == 3);
  CHECK(labels == std::set<std::string>{fp.oracle->parse_vertex("a").key, fp.oracle->parse_vertex("b").key,
                                        fp.oracle->parse_vertex("bb").key});
  CHECK(fp.oracle->parse_vertex("B") == fp.oracle->parse_vertex("bb"));

  auto h = builtin("heisenberg:std");
  auto hn = h.oracle->neighbors(h.model->identity());
  CHECK(std::set<std::string>{hn[0].key, hn[1].key, hn[2].key, hn[3].key}.size() == 4);
}

TEST_CASE("ball sizes") {
  CHECK(ball(*builtin("zd:2").model, 2).size() == 13);
  CHECK(model_spheres(*builtin("free:2").model, 3) == std::vector<std::size_t>{1, 4, 12, 36});
  CHECK(ball(*builtin("free:2").model, 3).size() == 53);

  auto hs = model_spheres(*builtin("heisenberg:std").model, 5);
  auto hs_ref = oracle::matrix_sphere_sizes({heis(1, 0, 0), heis(-1, 0, 0), heis(0, 0, 1), heis(0, 0, -1)}, 5,
                                            identity_norm);
  CHECK(hs == hs_ref);
  auto he = model_spheres(*builtin("heisenberg:extended").model, 4);
  auto he_ref = oracle::matrix_sphere_sizes(
      {heis(1, 0, 0), heis(-1, 0, 0), heis(0, 0, 1), heis(0, 0, -1), heis(0, 1, 0), heis(0, -1, 0)}, 4, identity_norm);
  CHECK(he == he_ref);

  // Z_2 * Z_3 as PSL(2,Z) with S = [[0,-1],[1,0]], U = [[0,-1],[1,1]].
  auto fp = model_spheres(*builtin("free_product:2,3").model, 8);
  auto fp_ref = oracle::matrix_sphere_sizes({{{0, -1}, {1, 0}}, {{0, -1}, {1, 1}}, {{1, 1}, {-1, 0}}}, 8, psl_norm);
  CHECK(fp == fp_ref);
}

TEST_CASE("braid spheres match the Burau representation") {
  auto m = builtin("braid:3").model;
  auto spheres = model_spheres(*m, 4);
  std::set<oracle::PolyMat> seen{oracle::burau_identity(3)};
  std::vector<oracle::PolyMat> layer{oracle::burau_identity(3)};
  std::vector<std::size_t> ref{1};
  for (int r = 1; r <= 4; ++r) {
    std::vector<oracle::PolyMat> next;
    for (const auto& x : layer)
      for (int l : {1, -1, 2, -2}) {
        auto y = oracle::burau_mul(x, oracle::burau_letter(3, l));
        if (seen.insert(y).second) next.push_back(y);
      }
    ref.push_back(next.size());
    layer = std::move(next);
  }
  CHECK(spheres == ref);
}

TEST_CASE("abelian models match closed-form norms") {
  auto z = builtin("zd:2");
  for (const auto& e : ball(*z.model, 5)) {
    auto v = keycodec::decode_ints(e.element.key);
    CHECK(e.length == std::abs(v[0]) + std::abs(v[1]));
  }
  auto h = builtin("hex");
  std::size_t count = 0;
  for (const auto& e : ball(*h.model, 5)) {
    auto v = keycodec::decode_ints(e.element.key);
    CHECK(e.length == std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[0] + v[1])}));
    ++count;
  }
  CHECK(count == 1 + 3 * 5 * 6);
}

TEST_CASE("relators hold in every structural model") {
  for (const auto& name : kGroups) {
    CAPTURE(name);
    auto b = builtin(name);
    REQUIRE(b.presentation.has_value());
    const auto& m = *b.model;
    for (const auto& r : b.presentation->relators) {
      CAPTURE(r);
      CHECK(m.evaluate(m.parse_word(r)) == m.identity());
    }
  }
  auto t = builtin("one_relator_tietze");
  CHECK(t.oracle->parse_vertex("b") == t.oracle->parse_vertex("AdCDa"));
}

TEST_CASE("group axioms on random words") {
  std::mt19937_64 rng(3);
  for (const auto& name : kGroups) {
    CAPTURE(name);
    auto b = builtin(name);
    const auto& m = *b.model;
    std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, m.generators().size() - 1);
    auto e = m.identity();
    for (int i = 0; i < 500; ++i) {
      Word w(len(rng)), u(len(rng));
      for (auto& s : w) s = pick(rng);
      for (auto& s : u) s = pick(rng);
      auto g = m.evaluate(w), h = m.evaluate(u);
      Word wu = w;
      wu.insert(wu.end(), u.begin(), u.end());
      CHECK(m.multiply(g, h) == m.evaluate(wu));
      CHECK(m.multiply(g, m.inverse(g)) == e);
      CHECK(m.multiply(e, g) == g);
      CHECK(m.from_key(g.key) == g);
      CHECK(m.parse_element(m.format_word(w)) == g);
      auto s = pick(rng);
      CHECK(m.act(m.act(g, s), m.inverse_of(s)) == g);
    }
  }
}

TEST_CASE("cayley graphs are vertex-transitive") {
  std::mt19937_64 rng(5);
  for (const std::string name : {"zd:2", "free_product:2,3", "hex", "heisenberg:std", "braid:3"}) {
    CAPTURE(name);
    auto b = builtin(name);
    const auto& m = *b.model;
    auto elems = ball(m, 3);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 60; ++i) {
      const auto& g = elems[pick(rng)].element;
      const auto& h = elems[pick(rng)].element;
      CHECK(distance_within(*b.oracle, g, h, 12) == distance_within(*b.oracle, m.identity(), m.multiply(m.inverse(g), h), 12));
    }
  }
}

TEST_CASE("verified rewriting models agree with structural models") {
  for (const std::string name : {"zd:2", "zd:3", "free:2", "free_product:2,3", "free_product:2,2,2"}) {
    CAPTURE(name);
    auto b = builtin(name);
    auto rs = kb_complete(*b.presentation);
    REQUIRE(rs.status == Confluence::verified);
    RewritingModel rm(name, std::move(rs));
    CHECK(model_spheres(rm, 5) == model_spheres(*b.model, 5));
  }
}

TEST_CASE("unverified rewriting systems refuse metric work") {
  auto b = builtin("one_relator_example");
  CHECK_FALSE(b.model->metric_trusted());
  CHECK_FALSE(b.model->trust_diagnostic().empty());
  CHECK_THROWS_AS(ball(*b.model, 2), VerificationFailure);
  CHECK_THROWS_AS(build_local_metric(*b.oracle, b.model->identity(), 2), VerificationFailure);
}

TEST_CASE("input validation") {
  auto z = builtin("zd:2");
  CHECK(z.model->parse_word("e").empty());
  CHECK(z.model->parse_word("a.b A").size() == 3);
  CHECK_THROWS_AS(z.model->parse_word("ax"), InvalidInput);
  CHECK(z.oracle->parse_vertex("(2,-3)") == z.oracle->parse_vertex("aaBBB"));
  CHECK_THROWS_AS(z.oracle->parse_vertex("(1,2,3)"), InvalidInput);
  for (const std::string bad : {"zd:0", "zd", "nosuch", "braid:1", "free_product:1", "free:0", "heisenberg:odd", "hex:2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(builtin(bad), InvalidInput);
  }
  auto line = builtin("zd:1");
  auto far = line.oracle->parse_vertex("(2147483647)");
  CHECK_THROWS_AS(line.model->act(far, 0), ResourceLimit);
}
