#include "fedgbm/net/channel.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include "fedgbm/common/bytes.hpp"
#include "fedgbm/common/errors.hpp"
#include "fedgbm/net/transcript.hpp"

namespace fedgbm::net {

Frame Channel::expect(MsgType t) {
  Frame f = recv();
  if (f.type == MsgType::abort) {
    ByteReader r(f.payload);
    const std::uint32_t code = r.u32();
    const std::string reason = r.str();
    throw ProtocolError("peer aborted (code " + std::to_string(code) + "): " + reason);
  }
  if (f.type != t) {
    throw ProtocolError("expected " + msg_type_name(t) + ", got " + msg_type_name(f.type));
  }
  return f;
}

void Channel::observe(metrics::Direction dir, const Frame& f) {
  if (counter_ != nullptr) {
    counter_->record(dir, static_cast<std::uint8_t>(f.type), f.wire_size());
  }
  if (transcript_ != nullptr) {
    transcript_->record(dir, f);
  }
}

std::pair<std::unique_ptr<LoopbackChannel>, std::unique_ptr<LoopbackChannel>>
LoopbackChannel::make_pair() {
  auto a = std::unique_ptr<LoopbackChannel>(new LoopbackChannel());
  auto b = std::unique_ptr<LoopbackChannel>(new LoopbackChannel());
  auto q_ab = std::make_shared<Queue>();
  auto q_ba = std::make_shared<Queue>();
  a->out_ = q_ab;
  a->in_ = q_ba;
  b->out_ = q_ba;
  b->in_ = q_ab;
  return {std::move(a), std::move(b)};
}

void LoopbackChannel::send(const Frame& f) {
  if (fail_after_ == 0) {
    close();
    throw TransportError("injected channel failure");
  }
  if (fail_after_ != UINT64_MAX) --fail_after_;
  Bytes wire = f.encode();
  {
    std::lock_guard<std::mutex> g(out_->mu);
    if (out_->closed) throw TransportError("loopback channel closed");
    out_->frames.push_back(std::move(wire));
  }
  out_->cv.notify_one();
  observe(metrics::Direction::sent, f);
}

Frame LoopbackChannel::recv() {
  Bytes wire;
  {
    std::unique_lock<std::mutex> g(in_->mu);
    in_->cv.wait(g, [&] { return !in_->frames.empty() || in_->closed; });
    if (in_->frames.empty()) throw TransportError("loopback channel closed by peer");
    wire = std::move(in_->frames.front());
    in_->frames.pop_front();
  }
  Frame f = Frame::decode(wire);
  observe(metrics::Direction::received, f);
  return f;
}

void LoopbackChannel::close() {
  for (auto& q : {out_, in_}) {
    if (!q) continue;
    {
      std::lock_guard<std::mutex> g(q->mu);
      q->closed = true;
    }
    q->cv.notify_all();
  }
}

namespace {

std::pair<std::string, std::uint16_t> parse_host_port(const std::string& hp) {
  const auto colon = hp.rfind(':');
  if (colon == std::string::npos) throw ConfigError("address must be host:port, got " + hp);
  const std::string host = hp.substr(0, colon);
  const int port = std::atoi(hp.substr(colon + 1).c_str());
  if (port <= 0 || port > 65535) throw ConfigError("bad port in " + hp);
  return {host.empty() ? "0.0.0.0" : host, static_cast<std::uint16_t>(port)};
}

sockaddr_in resolve(const std::string& host, std::uint16_t port) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
    hostent* he = gethostbyname(host.c_str());
    if (he == nullptr || he->h_addrtype != AF_INET) {
      throw TransportError("cannot resolve host " + host);
    }
    std::memcpy(&addr.sin_addr, he->h_addr_list[0], sizeof(addr.sin_addr));
  }
  return addr;
}

}  // namespace

TcpChannel::~TcpChannel() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<TcpChannel> TcpChannel::connect(const std::string& host_port) {
  auto [host, port] = parse_host_port(host_port);
  sockaddr_in addr = resolve(host, port);
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw TransportError("socket(): " + std::string(std::strerror(errno)));
  // Retry briefly so a just-started server has time to bind.
  int rc = -1;
  for (int attempt = 0; attempt < 50; ++attempt) {
    rc = ::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr);
    if (rc == 0) break;
    if (errno != ECONNREFUSED) break;
    ::usleep(100 * 1000);
  }
  if (rc != 0) {
    ::close(fd);
    throw TransportError("connect to " + host_port + ": " + std::strerror(errno));
  }
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  return std::unique_ptr<TcpChannel>(new TcpChannel(fd));
}

std::unique_ptr<TcpChannel> TcpChannel::listen_accept(const std::string& host_port) {
  auto [host, port] = parse_host_port(host_port);
  sockaddr_in addr = resolve(host, port);
  int lfd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (lfd < 0) throw TransportError("socket(): " + std::string(std::strerror(errno)));
  int one = 1;
  ::setsockopt(lfd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  if (::bind(lfd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
    ::close(lfd);
    throw TransportError("bind " + host_port + ": " + std::strerror(errno));
  }
  if (::listen(lfd, 1) != 0) {
    ::close(lfd);
    throw TransportError("listen: " + std::string(std::strerror(errno)));
  }
  int fd = ::accept(lfd, nullptr, nullptr);
  ::close(lfd);
  if (fd < 0) throw TransportError("accept: " + std::string(std::strerror(errno)));
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  return std::unique_ptr<TcpChannel>(new TcpChannel(fd));
}

void TcpChannel::send(const Frame& f) {
  Bytes wire = f.encode();
  std::size_t off = 0;
  while (off < wire.size()) {
    const ssize_t n = ::send(fd_, wire.data() + off, wire.size() - off, MSG_NOSIGNAL);
    if (n <= 0) throw TransportError("send: " + std::string(std::strerror(errno)));
    off += static_cast<std::size_t>(n);
  }
  observe(metrics::Direction::sent, f);
}

void TcpChannel::read_exact(std::uint8_t* dst, std::size_t n) {
  std::size_t off = 0;
  while (off < n) {
    const ssize_t got = ::recv(fd_, dst + off, n - off, 0);
    if (got == 0) throw TransportError("connection closed by peer");
    if (got < 0) throw TransportError("recv: " + std::string(std::strerror(errno)));
    off += static_cast<std::size_t>(got);
  }
}

Frame TcpChannel::recv() {
  Bytes buf(kHeaderSize);
  read_exact(buf.data(), kHeaderSize);
  std::uint64_t len = 0;
  for (int i = 0; i < 8; ++i) len = (len << 8) | buf[6 + i];
  if (len > kMaxPayload) throw ProtocolError("frame length exceeds 1 GiB cap");
  buf.resize(kHeaderSize + len);
  read_exact(buf.data() + kHeaderSize, len);
  Frame f = Frame::decode(buf);
  observe(metrics::Direction::received, f);
  return f;
}

}  // namespace fedgbm::net
