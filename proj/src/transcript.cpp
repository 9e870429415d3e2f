#include "fedgbm/net/transcript.hpp"

#include <cstring>

#include "fedgbm/common/errors.hpp"

namespace fedgbm::net {

TranscriptWriter::TranscriptWriter(const std::string& path) : path_(path) {
  file_ = std::fopen(path.c_str(), "wb");
  if (file_ == nullptr) throw IoError("cannot open transcript file " + path);
}

TranscriptWriter::~TranscriptWriter() {
  if (file_ != nullptr) std::fclose(file_);
}

void TranscriptWriter::record(metrics::Direction dir, const Frame& f) {
  Bytes wire = f.encode();
  std::lock_guard<std::mutex> g(mu_);
  const std::uint8_t d = static_cast<std::uint8_t>(dir);
  std::fwrite(&d, 1, 1, file_);
  std::fwrite(wire.data(), 1, wire.size(), file_);
}

void TranscriptWriter::flush() {
  std::lock_guard<std::mutex> g(mu_);
  std::fflush(file_);
}

std::vector<TranscriptEntry> read_transcript(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) throw IoError("cannot open transcript file " + path);
  Bytes all;
  std::uint8_t buf[1 << 16];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) all.insert(all.end(), buf, buf + n);
  std::fclose(f);

  std::vector<TranscriptEntry> out;
  std::size_t pos = 0;
  while (pos < all.size()) {
    const auto dir = static_cast<metrics::Direction>(all[pos]);
    pos += 1;
    if (pos + kHeaderSize > all.size()) throw ProtocolError("truncated transcript record");
    std::uint64_t len = 0;
    for (int i = 0; i < 8; ++i) len = (len << 8) | all[pos + 6 + i];
    if (pos + kHeaderSize + len > all.size()) throw ProtocolError("truncated transcript record");
    Frame frame = Frame::decode(
        std::span<const std::uint8_t>(all.data() + pos, kHeaderSize + len));
    pos += kHeaderSize + len;
    out.push_back({dir, std::move(frame)});
  }
  return out;
}

bool transcript_contains(const std::string& path, std::span<const std::uint8_t> needle) {
  if (needle.empty()) return false;
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) throw IoError("cannot open transcript file " + path);
  Bytes all;
  std::uint8_t buf[1 << 16];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) all.insert(all.end(), buf, buf + n);
  std::fclose(f);
  if (all.size() < needle.size()) return false;
  return ::memmem(all.data(), all.size(), needle.data(), needle.size()) != nullptr;
}

}  // namespace fedgbm::net
