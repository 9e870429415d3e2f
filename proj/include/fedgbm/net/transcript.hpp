#pragma once

#include <cstdio>
#include <mutex>
#include <string>
#include <vector>

#include "fedgbm/metrics/counter.hpp"
#include "fedgbm/net/frame.hpp"

namespace fedgbm::net {

// Records every frame crossing a channel to a `.transcript` file. Record
// layout: direction byte (0 sent / 1 received) followed by the raw frame,
// which is self-delimiting via its length header. The leak-scan suite greps
// these files for planted canaries.
class TranscriptWriter {
 public:
  explicit TranscriptWriter(const std::string& path);
  ~TranscriptWriter();
  TranscriptWriter(const TranscriptWriter&) = delete;
  TranscriptWriter& operator=(const TranscriptWriter&) = delete;

  void record(metrics::Direction dir, const Frame& f);
  void flush();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::FILE* file_ = nullptr;
  std::mutex mu_;
};

struct TranscriptEntry {
  metrics::Direction dir;
  Frame frame;
};

// Parses a transcript file back into frames (test support).
std::vector<TranscriptEntry> read_transcript(const std::string& path);

// Whole-file byte scan used by the leak-scan suite.
bool transcript_contains(const std::string& path, std::span<const std::uint8_t> needle);

}  // namespace fedgbm::net
