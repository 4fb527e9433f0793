#include <doctest.h>

#include <random>

#include "horobound/errors.hpp"
#include "horobound/garside.hpp"
#include "oracles.hpp"

using namespace horobound;
namespace gs = horobound::garside;

namespace {

std::vector<int> random_word(std::mt19937_64& rng, int strands, int max_len, bool positive = false) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, strands - 1), sign(0, 1);
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = (positive || sign(rng)) ? gen(rng) : -gen(rng);
  return w;
}

gs::GarsideElement nf(int n, std::vector<int> w) { return gs::normal_form(n, w); }

}  // namespace

TEST_CASE("braid relation examples") {
  CHECK(nf(3, {1, 2, 1}) == nf(3, {2, 1, 2}));
  CHECK(nf(4, {1, 3}) == nf(4, {3, 1}));
  CHECK(nf(4, {1, 2}) != nf(4, {2, 1}));

  auto e = nf(3, {1, -1});
  CHECK(e.inf == 0);
  CHECK(e.factors.empty());
  CHECK(e == gs::identity(3));

  // a bbb A = B aaa b
  CHECK(nf(3, {1, 2, 2, 2, -1}) == nf(3, {-2, 1, 1, 1, 2}));

  auto delta = nf(3, {1, 2, 1});
  CHECK(delta.inf == 1);
  CHECK(delta.factors.empty());
  CHECK(gs::to_string(delta) == "D^1");
  CHECK(nf(3, {-1}).inf == -1);
}

TEST_CASE("equal normal forms iff equal Burau matrices") {
  // The Burau representation is faithful on B_3; on B_4 equal normal forms
  // must still give equal matrices, and every pair tested here that differs
  // in normal form differs in Burau image too.
  std::mt19937_64 rng(17);
  for (int n : {3, 4}) {
    CAPTURE(n);
    std::vector<std::pair<std::vector<int>, gs::GarsideElement>> pool;
    for (int i = 0; i < 150; ++i) {
      auto w = random_word(rng, n, 7);
      pool.emplace_back(w, gs::normal_form(n, w));
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); j += 7) {
        bool same_nf = pool[i].second == pool[j].second;
        bool same_burau = oracle::burau(n, pool[i].first) == oracle::burau(n, pool[j].first);
        CHECK(same_nf == same_burau);
      }
      auto w = pool[i].first;
      CHECK(oracle::burau(n, gs::to_word(pool[i].second)) == oracle::burau(n, w));
    }
  }
}

TEST_CASE("positive words are equal iff related by the braid relations") {
  std::mt19937_64 rng(23);
  for (int n : {3, 4}) {
    CAPTURE(n);
    for (int i = 0; i < 80; ++i) {
      auto w = random_word(rng, n, 6, true);
      auto cls = oracle::positive_class(n, w);
      auto key = gs::encode_key(gs::normal_form(n, w));
      for (const auto& u : cls) CHECK(gs::encode_key(gs::normal_form(n, u)) == key);
      auto v = random_word(rng, n, 6, true);
      v.resize(w.size(), 1);
      CHECK((gs::normal_form(n, v) == gs::normal_form(n, w)) == (cls.count(v) > 0));
    }
  }
}

TEST_CASE("normal forms are left-weighted and round-trip") {
  std::mt19937_64 rng(29);
  for (int n : {2, 3, 4, 5}) {
    CAPTURE(n);
    for (int i = 0; i < 300; ++i) {
      auto w = random_word(rng, n, 12);
      auto x = gs::normal_form(n, w);
      const auto& f = x.factors;
      for (const auto& p : f) {
        CHECK(p != gs::half_twist(n));
        CHECK_FALSE(gs::reduced_word(p).empty());
      }
      for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        for (int j = 0; j + 1 < n; ++j) {
          if (gs::in_starting_set(f[k + 1], j)) CHECK(gs::in_finishing_set(f[k], j));
        }
      }
      CHECK(gs::normal_form(n, gs::to_word(x)) == x);
      CHECK(gs::decode_key(n, gs::encode_key(x)) == x);
      CHECK(gs::multiply(x, gs::inverse(x)) == gs::identity(n));
      CHECK(gs::multiply(gs::inverse(x), x) == gs::identity(n));
      auto y = gs::normal_form(n, random_word(rng, n, 8));
      auto wx = gs::to_word(x), wy = gs::to_word(y);
      wx.insert(wx.end(), wy.begin(), wy.end());
      CHECK(gs::multiply(x, y) == gs::normal_form(n, wx));
      CHECK(gs::word_length(x) == gs::to_word(x).size());
    }
  }
}

TEST_CASE("the half twist") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto d = gs::half_twist(n);
    CHECK(gs::reduced_word(d).size() == static_cast<std::size_t>(n * (n - 1) / 2));
    auto delta = gs::normal_form(n, gs::reduced_word(d));
    CHECK(delta.inf == 1);
    for (int i = 1; i < n; ++i) {
      // Delta sigma_i Delta^-1 = sigma_{n-i}
      auto conj = gs::multiply(gs::multiply(delta, nf(n, {i})), gs::inverse(delta));
      CHECK(conj == nf(n, {n - i}));
    }
  }
}

TEST_CASE("invalid letters and strand counts") {
  CHECK_THROWS_AS(nf(3, {3}), InvalidInput);
  CHECK_THROWS_AS(nf(3, {0}), InvalidInput);
  CHECK_THROWS_AS(nf(3, {-3}), InvalidInput);
  CHECK_THROWS_AS(nf(1, {}), InvalidInput);
  CHECK_THROWS_AS(gs::append_letter(gs::identity(3), 5), InvalidInput);
}
