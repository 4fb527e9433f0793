#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace horobound::garside {

/// A permutation braid on n strands, stored as the permutation sending the
/// top position of each strand to its bottom position (0-based).
using Permutation = std::vector<std::uint8_t>;

/// Left normal form Delta^inf * A_1 * ... * A_k with every A_i a proper,
/// nontrivial permutation braid and each pair (A_i, A_{i+1}) left-weighted.
struct GarsideElement {
  int strands = 2;
  int inf = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideElement&, const GarsideElement&) = default;
};

/// Braid letters are +k for sigma_k and -k for its inverse, 1 <= k < n.
/// Throws InvalidInput on n < 2 or an out-of-range index.
GarsideElement normal_form(int strands, std::span<const int> word);

GarsideElement identity(int strands);
GarsideElement multiply(const GarsideElement& x, const GarsideElement& y);
GarsideElement inverse(const GarsideElement& x);
/// x * sigma_k^{+-1}, renormalized.
GarsideElement append_letter(const GarsideElement& x, int letter);

/// A word for the element: Delta^inf spelled out, then each factor.
std::vector<int> to_word(const GarsideElement& x);
/// Length of the normal form in Artin generators (not the word metric).
std::size_t word_length(const GarsideElement& x);

std::string encode_key(const GarsideElement& x);
GarsideElement decode_key(int strands, std::string_view key);

/// e.g. "D^-1.ab.a" with a = sigma_1, b = sigma_2, ...
std::string to_string(const GarsideElement& x);

// Permutation-braid primitives, exposed for tests.
Permutation half_twist(int strands);
std::vector<int> reduced_word(const Permutation& p);
bool in_starting_set(const Permutation& p, int position);
bool in_finishing_set(const Permutation& p, int position);

}  // namespace horobound::garside
