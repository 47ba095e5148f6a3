#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <random>
#include <string>
#include <string_view>

#include "udc/errors.hpp"

namespace udc::detail {

// Compact SHA-1, only used for name-based (version 5) UUIDs.
class Sha1 {
 public:
  Sha1() { reset(); }

  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    total_ += len;
    while (len > 0) {
      const std::size_t take = std::min<std::size_t>(64 - fill_, len);
      std::memcpy(block_ + fill_, p, take);
      fill_ += take;
      p += take;
      len -= take;
      if (fill_ == 64) {
        process();
        fill_ = 0;
      }
    }
  }

  std::array<std::uint8_t, 20> digest() {
    const std::uint64_t bits = total_ * 8;
    std::uint8_t pad = 0x80;
    update(&pad, 1);
    const std::uint8_t zero = 0;
    while (fill_ != 56) update(&zero, 1);
    std::uint8_t len_be[8];
    for (int i = 0; i < 8; ++i) {
      len_be[i] = static_cast<std::uint8_t>(bits >> (56 - 8 * i));
    }
    update(len_be, 8);
    std::array<std::uint8_t, 20> out{};
    for (int i = 0; i < 5; ++i) {
      out[static_cast<std::size_t>(i) * 4 + 0] = static_cast<std::uint8_t>(h_[i] >> 24);
      out[static_cast<std::size_t>(i) * 4 + 1] = static_cast<std::uint8_t>(h_[i] >> 16);
      out[static_cast<std::size_t>(i) * 4 + 2] = static_cast<std::uint8_t>(h_[i] >> 8);
      out[static_cast<std::size_t>(i) * 4 + 3] = static_cast<std::uint8_t>(h_[i]);
    }
    reset();
    return out;
  }

 private:
  void reset() {
    h_ = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
    total_ = 0;
    fill_ = 0;
  }

  static std::uint32_t rol(std::uint32_t v, int bits) {
    return (v << bits) | (v >> (32 - bits));
  }

  void process() {
    std::uint32_t w[80];
    for (int i = 0; i < 16; ++i) {
      w[i] = (static_cast<std::uint32_t>(block_[i * 4]) << 24) |
             (static_cast<std::uint32_t>(block_[i * 4 + 1]) << 16) |
             (static_cast<std::uint32_t>(block_[i * 4 + 2]) << 8) |
             static_cast<std::uint32_t>(block_[i * 4 + 3]);
    }
    for (int i = 16; i < 80; ++i) {
      w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    }
    std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) { f = (b & c) | (~b & d); k = 0x5A827999u; }
      else if (i < 40) { f = b ^ c ^ d; k = 0x6ED9EBA1u; }
      else if (i < 60) { f = (b & c) | (b & d) | (c & d); k = 0x8F1BBCDCu; }
      else { f = b ^ c ^ d; k = 0xCA62C1D6u; }
      const std::uint32_t tmp = rol(a, 5) + f + e + k + w[i];
      e = d; d = c; c = rol(b, 30); b = a; a = tmp;
    }
    h_[0] += a; h_[1] += b; h_[2] += c; h_[3] += d; h_[4] += e;
  }

  std::array<std::uint32_t, 5> h_{};
  std::uint8_t block_[64]{};
  std::uint64_t total_ = 0;
  std::size_t fill_ = 0;
};

inline std::string sha1_hex(std::string_view data) {
  Sha1 h;
  h.update(data.data(), data.size());
  auto digest = h.digest();
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : digest) {
    out += hex[b >> 4];
    out += hex[b & 0xF];
  }
  return out;
}

inline std::array<std::uint8_t, 16> parse_uuid(std::string_view text) {
  std::array<std::uint8_t, 16> out{};
  std::size_t byte = 0;
  int half = 0;
  for (char c : text) {
    if (c == '-') continue;
    std::uint8_t v;
    if (c >= '0' && c <= '9') v = static_cast<std::uint8_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v = static_cast<std::uint8_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v = static_cast<std::uint8_t>(c - 'A' + 10);
    else throw Error(ErrorCode::MalformedDocument, "bad UUID: " + std::string(text));
    if (byte >= 16) throw Error(ErrorCode::MalformedDocument, "bad UUID length");
    if (half == 0) {
      out[byte] = static_cast<std::uint8_t>(v << 4);
      half = 1;
    } else {
      out[byte] |= v;
      half = 0;
      ++byte;
    }
  }
  if (byte != 16 || half != 0) {
    throw Error(ErrorCode::MalformedDocument, "bad UUID length");
  }
  return out;
}

inline std::string format_uuid(const std::array<std::uint8_t, 16>& bytes) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < 16; ++i) {
    if (i == 4 || i == 6 || i == 8 || i == 10) out += '-';
    out += hex[bytes[i] >> 4];
    out += hex[bytes[i] & 0xF];
  }
  return out;
}

/// Name-based UUID (version 5): SHA-1 over namespace bytes + name.
inline std::string uuid_v5(std::string_view namespace_uuid, std::string_view name) {
  auto ns = parse_uuid(namespace_uuid);
  Sha1 h;
  h.update(ns.data(), ns.size());
  h.update(name.data(), name.size());
  auto digest = h.digest();
  std::array<std::uint8_t, 16> bytes{};
  std::copy_n(digest.begin(), 16, bytes.begin());
  bytes[6] = static_cast<std::uint8_t>((bytes[6] & 0x0F) | 0x50);
  bytes[8] = static_cast<std::uint8_t>((bytes[8] & 0x3F) | 0x80);
  return format_uuid(bytes);
}

/// Random UUID (version 4).
inline std::string uuid_v4() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::array<std::uint8_t, 16> bytes{};
  for (std::size_t i = 0; i < 16; i += 8) {
    const std::uint64_t r = rng();
    for (std::size_t k = 0; k < 8; ++k) {
      bytes[i + k] = static_cast<std::uint8_t>(r >> (8 * k));
    }
  }
  bytes[6] = static_cast<std::uint8_t>((bytes[6] & 0x0F) | 0x40);
  bytes[8] = static_cast<std::uint8_t>((bytes[8] & 0x3F) | 0x80);
  return format_uuid(bytes);
}

}  // namespace udc::detail
