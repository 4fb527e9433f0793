#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace horobound {

/// A vertex of a (possibly infinite) graph. Identity is the canonical key;
/// the label is for display only.
struct VertexRef {
  std::string key;
  std::string label;

  VertexRef() = default;
  VertexRef(std::string k, std::string l = {}) : key(std::move(k)), label(std::move(l)) {}

  const std::string& display() const { return label.empty() ? key : label; }

  friend bool operator==(const VertexRef& a, const VertexRef& b) { return a.key == b.key; }
  friend std::strong_ordering operator<=>(const VertexRef& a, const VertexRef& b) {
    return a.key.compare(b.key) <=> 0;
  }
};

struct VertexHash {
  std::size_t operator()(const VertexRef& v) const noexcept { return std::hash<std::string>{}(v.key); }
};

std::string to_hex(std::string_view bytes);
std::string from_hex(std::string_view hex);

// Order-preserving fixed-width integer encoding for keys: byte order of the
// encodings matches numeric order.
namespace keycodec {

void put_i32(std::string& out, std::int32_t v);
std::int32_t get_i32(std::string_view in, std::size_t& pos);
void put_u8(std::string& out, std::uint8_t v);
std::uint8_t get_u8(std::string_view in, std::size_t& pos);

std::string encode_ints(const std::vector<std::int32_t>& values);
std::vector<std::int32_t> decode_ints(std::string_view key);

}  // namespace keycodec

}  // namespace horobound
