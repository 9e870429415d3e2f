#pragma once

#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <string>

#include "fedgbm/metrics/counter.hpp"
#include "fedgbm/net/frame.hpp"

namespace fedgbm::net {

class TranscriptWriter;

// Blocking, ordered, bidirectional frame channel.
class Channel {
 public:
  virtual ~Channel() = default;
  virtual void send(const Frame& f) = 0;
  virtual Frame recv() = 0;

  // Receive and require a specific type; a received ABORT surfaces as a
  // ProtocolError carrying the peer's reason.
  Frame expect(MsgType t);

  void attach_counter(metrics::PayloadCounter* counter) { counter_ = counter; }
  void attach_transcript(TranscriptWriter* transcript) { transcript_ = transcript; }
  metrics::PayloadCounter* counter() const { return counter_; }

 protected:
  void observe(metrics::Direction dir, const Frame& f);

 private:
  metrics::PayloadCounter* counter_ = nullptr;
  TranscriptWriter* transcript_ = nullptr;
};

// In-memory duplex channel for single-process runs; make_loopback_pair
// returns the two endpoints.
class LoopbackChannel : public Channel {
 public:
  void send(const Frame& f) override;
  Frame recv() override;

  // Test hook: throw TransportError after `n` more successful sends.
  void fail_after_sends(std::uint64_t n) { fail_after_ = n; }
  void close();

  static std::pair<std::unique_ptr<LoopbackChannel>, std::unique_ptr<LoopbackChannel>>
  make_pair();

 private:
  struct Queue {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<Bytes> frames;
    bool closed = false;
  };
  std::shared_ptr<Queue> out_;
  std::shared_ptr<Queue> in_;
  std::uint64_t fail_after_ = UINT64_MAX;
};

// Blocking TCP transport. "host:port" addresses, IPv4.
class TcpChannel : public Channel {
 public:
  ~TcpChannel() override;
  TcpChannel(const TcpChannel&) = delete;
  TcpChannel& operator=(const TcpChannel&) = delete;

  void send(const Frame& f) override;
  Frame recv() override;

  static std::unique_ptr<TcpChannel> connect(const std::string& host_port);
  // Binds, accepts exactly one peer, returns the connected channel.
  static std::unique_ptr<TcpChannel> listen_accept(const std::string& host_port);

 private:
  explicit TcpChannel(int fd) : fd_(fd) {}
  void read_exact(std::uint8_t* dst, std::size_t n);
  int fd_ = -1;
};

}  // namespace fedgbm::net
