#include "horobound/vertex.hpp"

#include <cstdlib>
#include <string>

#include "horobound/errors.hpp"
#include "horobound/limits.hpp"

namespace horobound {

std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char ch : bytes) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 0xF]);
  }
  return out;
}

std::string from_hex(std::string_view hex) {
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw InvalidInput("odd-length hex key");
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]);
    int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw InvalidInput("bad hex digit in key");
    out.push_back(static_cast<char>((hi << 4) | lo));
  }
  return out;
}

namespace keycodec {

void put_i32(std::string& out, std::int32_t v) {
  auto u = static_cast<std::uint32_t>(v) ^ 0x80000000u;
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((u >> shift) & 0xFF));
}

std::int32_t get_i32(std::string_view in, std::size_t& pos) {
  if (pos + 4 > in.size()) throw InvalidInput("truncated key");
  std::uint32_t u = 0;
  for (int i = 0; i < 4; ++i) u = (u << 8) | static_cast<unsigned char>(in[pos++]);
  return static_cast<std::int32_t>(u ^ 0x80000000u);
}

void put_u8(std::string& out, std::uint8_t v) { out.push_back(static_cast<char>(v)); }

std::uint8_t get_u8(std::string_view in, std::size_t& pos) {
  if (pos >= in.size()) throw InvalidInput("truncated key");
  return static_cast<std::uint8_t>(in[pos++]);
}

std::string encode_ints(const std::vector<std::int32_t>& values) {
  std::string out;
  out.reserve(values.size() * 4);
  for (auto v : values) put_i32(out, v);
  return out;
}

std::vector<std::int32_t> decode_ints(std::string_view key) {
  if (key.size() % 4 != 0) throw InvalidInput("malformed integer key");
  std::vector<std::int32_t> out;
  std::size_t pos = 0;
  while (pos < key.size()) out.push_back(get_i32(key, pos));
  return out;
}

}  // namespace keycodec

Limits Limits::from_env() {
  Limits limits;
  auto read = [](const char* name, std::size_t& slot) {
    if (const char* raw = std::getenv(name)) {
      char* end = nullptr;
      unsigned long long value = std::strtoull(raw, &end, 10);
      if (end == raw || *end != '\0' || value == 0) {
        throw InvalidInput(std::string(name) + " must be a positive integer");
      }
      slot = static_cast<std::size_t>(value);
    }
  };
  read("HOROBOUND_MAX_VERTICES", limits.max_vertices);
  read("HOROBOUND_MAX_ENUMERATION", limits.max_enumeration);
  return limits;
}

}  // namespace horobound
