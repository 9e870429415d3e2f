#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace fedgbm::metrics {

enum class Direction : std::uint8_t { sent = 0, received = 1 };

// Per-direction, per-msg-type, per-iteration frame byte tallies. Counts
// application frames (header + payload); transport overhead is out of scope.
class PayloadCounter {
 public:
  void set_iteration(std::uint32_t k) { iteration_ = k; }
  std::uint32_t iteration() const { return iteration_; }

  void record(Direction dir, std::uint8_t msg_type, std::uint64_t frame_bytes) {
    auto& per_iter = tallies_[static_cast<int>(dir)];
    per_iter[iteration_][msg_type] += frame_bytes;
    totals_[static_cast<int>(dir)] += frame_bytes;
    frame_counts_[static_cast<int>(dir)][iteration_][msg_type] += 1;
  }

  std::uint64_t total(Direction dir) const { return totals_[static_cast<int>(dir)]; }

  std::uint64_t iteration_bytes(Direction dir, std::uint32_t k) const {
    auto it = tallies_[static_cast<int>(dir)].find(k);
    if (it == tallies_[static_cast<int>(dir)].end()) return 0;
    std::uint64_t sum = 0;
    for (auto& [_, v] : it->second) sum += v;
    return sum;
  }

  std::uint64_t iteration_bytes_for(Direction dir, std::uint32_t k, std::uint8_t msg_type) const {
    auto it = tallies_[static_cast<int>(dir)].find(k);
    if (it == tallies_[static_cast<int>(dir)].end()) return 0;
    auto jt = it->second.find(msg_type);
    return jt == it->second.end() ? 0 : jt->second;
  }

  std::uint64_t frame_count(Direction dir, std::uint32_t k, std::uint8_t msg_type) const {
    auto it = frame_counts_[static_cast<int>(dir)].find(k);
    if (it == frame_counts_[static_cast<int>(dir)].end()) return 0;
    auto jt = it->second.find(msg_type);
    return jt == it->second.end() ? 0 : jt->second;
  }

  std::uint64_t total_bytes_for(Direction dir, std::uint8_t msg_type) const {
    std::uint64_t sum = 0;
    for (auto& [k, per_type] : tallies_[static_cast<int>(dir)]) {
      auto jt = per_type.find(msg_type);
      if (jt != per_type.end()) sum += jt->second;
    }
    return sum;
  }

  std::vector<std::uint32_t> iterations_seen() const {
    std::vector<std::uint32_t> out;
    for (auto& [k, _] : tallies_[0]) out.push_back(k);
    for (auto& [k, _] : tallies_[1]) {
      if (tallies_[0].find(k) == tallies_[0].end()) out.push_back(k);
    }
    return out;
  }

 private:
  std::uint32_t iteration_ = 0;
  std::array<std::map<std::uint32_t, std::map<std::uint8_t, std::uint64_t>>, 2> tallies_;
  std::array<std::map<std::uint32_t, std::map<std::uint8_t, std::uint64_t>>, 2> frame_counts_;
  std::array<std::uint64_t, 2> totals_ = {0, 0};
};

}  // namespace fedgbm::metrics
