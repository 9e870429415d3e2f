#pragma once

#include <cstdint>
#include <string>

#include "fedgbm/common/bytes.hpp"

namespace fedgbm::net {

// Wire frame: magic "SGBM", version 0x01, msg_type, 8-byte big-endian
// payload length, payload. Anything that violates this layout aborts the
// session.
inline constexpr std::uint8_t kMagic[4] = {0x53, 0x47, 0x42, 0x4D};
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::uint64_t kMaxPayload = 1ULL << 30;  // 1 GiB
inline constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 8;

enum class MsgType : std::uint8_t {
  hello = 0x01,
  config_hash = 0x02,
  psi_offer = 0x03,
  psi_reply = 0x04,
  psi_result = 0x05,
  batch_announce = 0x10,
  enc_gradients = 0x11,
  split_candidates = 0x12,
  split_winner = 0x13,
  partition = 0x14,
  infer_route_req = 0x20,
  infer_route_resp = 0x21,
  abort = 0x30,
};

bool is_known_msg_type(std::uint8_t t);
std::string msg_type_name(MsgType t);

struct Frame {
  MsgType type = MsgType::abort;
  Bytes payload;

  std::uint64_t wire_size() const { return kHeaderSize + payload.size(); }
  Bytes encode() const;

  // Parses one frame from `buf`; throws ProtocolError on malformed input.
  static Frame decode(std::span<const std::uint8_t> buf);
};

}  // namespace fedgbm::net
