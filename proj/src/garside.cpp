#include "horobound/garside.hpp"

#include <algorithm>
#include <numeric>

#include "horobound/errors.hpp"
#include "horobound/vertex.hpp"

namespace horobound::garside {

namespace {

Permutation identity_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

// Permutation of A * sigma_j: the crossing happens after A, on positions j, j+1.
void append_crossing(Permutation& p, int j) {
  for (auto& pos : p) {
    if (pos == j) pos = static_cast<std::uint8_t>(j + 1);
    else if (pos == j + 1) pos = static_cast<std::uint8_t>(j);
  }
}

// Permutation of sigma_j^{-1} * B for B starting with sigma_j.
void remove_leading_crossing(Permutation& p, int j) { std::swap(p[j], p[j + 1]); }

// Conjugation by Delta: sigma_j <-> sigma_{n-2-j}.
Permutation flip(const Permutation& p) {
  const auto n = p.size();
  Permutation out(n);
  for (std::size_t i = 0; i < n; ++i) out[n - 1 - i] = static_cast<std::uint8_t>(n - 1 - p[i]);
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

bool is_half_twist(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != p.size() - 1 - i) return false;
  }
  return true;
}

void check_letter(int strands, int letter) {
  if (letter == 0 || letter >= strands || -letter >= strands) {
    throw InvalidInput("braid letter " + std::to_string(letter) + " out of range for B_" + std::to_string(strands));
  }
}

// Makes every adjacent pair left-weighted, then moves Delta factors into inf
// and drops trailing identities.
void normalize(GarsideElement& x) {
  auto& f = x.factors;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      auto& left = f[i];
      auto& right = f[i + 1];
      for (int j = 0; j + 1 < x.strands; ++j) {
        if (in_starting_set(right, j) && !in_finishing_set(left, j)) {
          append_crossing(left, j);
          remove_leading_crossing(right, j);
          changed = true;
          j = -1;  // starting/finishing sets changed; rescan
        }
      }
    }
  }
  std::size_t lead = 0;
  while (lead < f.size() && is_half_twist(f[lead])) ++lead;
  // Delta^inf * Delta^lead * rest: Delta commutes past Delta, so just count.
  x.inf += static_cast<int>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && is_identity(f.back())) f.pop_back();
}

}  // namespace

Permutation half_twist(int strands) {
  Permutation p(static_cast<std::size_t>(strands));
  for (int i = 0; i < strands; ++i) p[i] = static_cast<std::uint8_t>(strands - 1 - i);
  return p;
}

bool in_starting_set(const Permutation& p, int position) { return p[position] > p[position + 1]; }

bool in_finishing_set(const Permutation& p, int position) {
  auto inv = inverse_perm(p);
  return inv[position] > inv[position + 1];
}

std::vector<int> reduced_word(const Permutation& p) {
  std::vector<int> word;
  Permutation rest = p;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t j = 0; j + 1 < rest.size(); ++j) {
      if (in_starting_set(rest, static_cast<int>(j))) {
        word.push_back(static_cast<int>(j) + 1);
        remove_leading_crossing(rest, static_cast<int>(j));
        found = true;
        break;
      }
    }
  }
  return word;
}

GarsideElement identity(int strands) {
  if (strands < 2) throw InvalidInput("braid groups need at least 2 strands");
  return GarsideElement{strands, 0, {}};
}

GarsideElement append_letter(const GarsideElement& x, int letter) {
  check_letter(x.strands, letter);
  GarsideElement y = x;
  int j = std::abs(letter) - 1;
  if (letter > 0) {
    Permutation s = identity_perm(x.strands);
    append_crossing(s, j);
    y.factors.push_back(std::move(s));
  } else {
    // P * sigma_j^{-1} = P * X * Delta^{-1} = Delta^{-1} * flip(P) * flip(X),
    // where X = sigma_j^{-1} * Delta is a permutation braid.
    for (auto& f : y.factors) f = flip(f);
    Permutation complement = half_twist(x.strands);
    remove_leading_crossing(complement, j);
    y.factors.push_back(flip(complement));
    y.inf -= 1;
  }
  normalize(y);
  return y;
}

GarsideElement normal_form(int strands, std::span<const int> word) {
  GarsideElement x = identity(strands);
  for (int letter : word) x = append_letter(x, letter);
  return x;
}

GarsideElement multiply(const GarsideElement& x, const GarsideElement& y) {
  if (x.strands != y.strands) throw InvalidInput("strand counts differ");
  // Delta^a P Delta^b Q = Delta^{a+b} flip^b(P) Q.
  GarsideElement out{x.strands, x.inf + y.inf, {}};
  for (const auto& f : x.factors) out.factors.push_back(std::abs(y.inf) % 2 == 1 ? flip(f) : f);
  out.factors.insert(out.factors.end(), y.factors.begin(), y.factors.end());
  normalize(out);
  return out;
}

std::vector<int> to_word(const GarsideElement& x) {
  std::vector<int> word;
  auto delta = reduced_word(half_twist(x.strands));
  for (int i = 0; i < std::abs(x.inf); ++i) {
    if (x.inf > 0) {
      word.insert(word.end(), delta.begin(), delta.end());
    } else {
      for (auto it = delta.rbegin(); it != delta.rend(); ++it) word.push_back(-*it);
    }
  }
  for (const auto& f : x.factors) {
    auto w = reduced_word(f);
    word.insert(word.end(), w.begin(), w.end());
  }
  return word;
}

std::size_t word_length(const GarsideElement& x) { return to_word(x).size(); }

GarsideElement inverse(const GarsideElement& x) {
  auto word = to_word(x);
  std::reverse(word.begin(), word.end());
  for (auto& letter : word) letter = -letter;
  return normal_form(x.strands, word);
}

std::string encode_key(const GarsideElement& x) {
  std::string key;
  keycodec::put_i32(key, x.inf);
  for (const auto& f : x.factors) {
    for (auto v : f) keycodec::put_u8(key, v);
  }
  return key;
}

GarsideElement decode_key(int strands, std::string_view key) {
  GarsideElement x = identity(strands);
  std::size_t pos = 0;
  x.inf = keycodec::get_i32(key, pos);
  if ((key.size() - pos) % static_cast<std::size_t>(strands) != 0) throw InvalidInput("malformed braid key");
  while (pos < key.size()) {
    Permutation p(static_cast<std::size_t>(strands));
    for (auto& v : p) {
      v = keycodec::get_u8(key, pos);
      if (v >= strands) throw InvalidInput("malformed braid key");
    }
    x.factors.push_back(std::move(p));
  }
  return x;
}

std::string to_string(const GarsideElement& x) {
  std::string out = "D^" + std::to_string(x.inf);
  for (const auto& f : x.factors) {
    out += '.';
    for (int letter : reduced_word(f)) out += static_cast<char>('a' + letter - 1);
  }
  return out;
}

}  // namespace horobound::garside
