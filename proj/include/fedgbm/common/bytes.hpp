#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "fedgbm/common/errors.hpp"

namespace fedgbm {

using Bytes = std::vector<std::uint8_t>;

// Big-endian payload writer. All wire payloads go through this so byte
// layouts stay identical across platforms.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    buf_.push_back(static_cast<std::uint8_t>(v));
  }
  void u32(std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void u64(std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    u64(bits);
  }
  void raw(std::span<const std::uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  void blob(std::span<const std::uint8_t> b) {
    u32(static_cast<std::uint32_t>(b.size()));
    raw(b);
  }
  void str(const std::string& s) {
    blob(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  }

  Bytes take() { return std::move(buf_); }
  const Bytes& data() const { return buf_; }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> b) : buf_(b) {}

  std::uint8_t u8() { return take(1)[0]; }
  std::uint16_t u16() {
    auto b = take(2);
    return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
  }
  std::uint32_t u32() {
    auto b = take(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | b[i];
    return v;
  }
  std::uint64_t u64() {
    auto b = take(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
    return v;
  }
  double f64() {
    std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
  }
  std::span<const std::uint8_t> raw(std::size_t n) { return take(n); }
  std::span<const std::uint8_t> blob() { return take(u32()); }
  std::string str() {
    auto b = blob();
    return std::string(reinterpret_cast<const char*>(b.data()), b.size());
  }

  bool empty() const { return pos_ >= buf_.size(); }
  std::size_t remaining() const { return buf_.size() - pos_; }

 private:
  std::span<const std::uint8_t> take(std::size_t n) {
    if (pos_ + n > buf_.size()) {
      throw ProtocolError("truncated payload: need " + std::to_string(n) +
                          " bytes, have " + std::to_string(buf_.size() - pos_));
    }
    auto out = buf_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::span<const std::uint8_t> buf_;
  std::size_t pos_ = 0;
};

inline Bytes to_bytes(const std::string& s) {
  return Bytes(s.begin(), s.end());
}

}  // namespace fedgbm
