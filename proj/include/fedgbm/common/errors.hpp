#pragma once

#include <stdexcept>
#include <string>

namespace fedgbm {

// Error kinds map onto CLI exit codes (see tools/fedgbm_cli.cpp):
// data=2, config=3, transport=4, security=5; everything else exits 1.
enum class ErrorKind {
  generic,
  data,
  config,
  key,
  range,
  protocol,
  transport,
  security,
  metric,
  model,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct DataError : Error {
  explicit DataError(const std::string& w) : Error(ErrorKind::data, w) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorKind::config, w) {}
};
struct KeyError : Error {
  explicit KeyError(const std::string& w) : Error(ErrorKind::key, w) {}
};
struct RangeError : Error {
  explicit RangeError(const std::string& w) : Error(ErrorKind::range, w) {}
};
struct ProtocolError : Error {
  explicit ProtocolError(const std::string& w) : Error(ErrorKind::protocol, w) {}
};
struct TransportError : Error {
  explicit TransportError(const std::string& w) : Error(ErrorKind::transport, w) {}
};
struct SecurityError : Error {
  explicit SecurityError(const std::string& w) : Error(ErrorKind::security, w) {}
};
struct MetricError : Error {
  explicit MetricError(const std::string& w) : Error(ErrorKind::metric, w) {}
};
struct ModelError : Error {
  explicit ModelError(const std::string& w) : Error(ErrorKind::model, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorKind::io, w) {}
};

}  // namespace fedgbm
