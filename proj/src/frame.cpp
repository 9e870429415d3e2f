#include "fedgbm/net/frame.hpp"

#include <cstring>

#include "fedgbm/common/errors.hpp"

namespace fedgbm::net {

bool is_known_msg_type(std::uint8_t t) {
  switch (static_cast<MsgType>(t)) {
    case MsgType::hello:
    case MsgType::config_hash:
    case MsgType::psi_offer:
    case MsgType::psi_reply:
    case MsgType::psi_result:
    case MsgType::batch_announce:
    case MsgType::enc_gradients:
    case MsgType::split_candidates:
    case MsgType::split_winner:
    case MsgType::partition:
    case MsgType::infer_route_req:
    case MsgType::infer_route_resp:
    case MsgType::abort:
      return true;
  }
  return false;
}

std::string msg_type_name(MsgType t) {
  switch (t) {
    case MsgType::hello: return "HELLO";
    case MsgType::config_hash: return "CONFIG_HASH";
    case MsgType::psi_offer: return "PSI_OFFER";
    case MsgType::psi_reply: return "PSI_REPLY";
    case MsgType::psi_result: return "PSI_RESULT";
    case MsgType::batch_announce: return "BATCH_ANNOUNCE";
    case MsgType::enc_gradients: return "ENC_GRADIENTS";
    case MsgType::split_candidates: return "SPLIT_CANDIDATES";
    case MsgType::split_winner: return "SPLIT_WINNER";
    case MsgType::partition: return "PARTITION";
    case MsgType::infer_route_req: return "INFER_ROUTE_REQ";
    case MsgType::infer_route_resp: return "INFER_ROUTE_RESP";
    case MsgType::abort: return "ABORT";
  }
  return "UNKNOWN";
}

Bytes Frame::encode() const {
  if (payload.size() > kMaxPayload) {
    throw ProtocolError("frame payload exceeds 1 GiB cap");
  }
  Bytes out;
  out.reserve(kHeaderSize + payload.size());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(type));
  const std::uint64_t len = payload.size();
  for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(len >> s));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Frame Frame::decode(std::span<const std::uint8_t> buf) {
  if (buf.size() < kHeaderSize) throw ProtocolError("truncated frame header");
  if (std::memcmp(buf.data(), kMagic, 4) != 0) throw ProtocolError("bad frame magic");
  if (buf[4] != kVersion) {
    throw ProtocolError("unsupported protocol version " + std::to_string(buf[4]));
  }
  if (!is_known_msg_type(buf[5])) {
    throw ProtocolError("unknown message type 0x" + std::to_string(buf[5]));
  }
  std::uint64_t len = 0;
  for (int i = 0; i < 8; ++i) len = (len << 8) | buf[6 + i];
  if (len > kMaxPayload) throw ProtocolError("frame length exceeds 1 GiB cap");
  if (buf.size() != kHeaderSize + len) throw ProtocolError("frame length mismatch");
  Frame f;
  f.type = static_cast<MsgType>(buf[5]);
  f.payload.assign(buf.begin() + kHeaderSize, buf.end());
  return f;
}

}  // namespace fedgbm::net
