#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace fedgbm::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Level comes from FEDGBM_LOG (error|warn|info|debug); default info.
inline Level threshold() {
  static Level lvl = [] {
    const char* env = std::getenv("FEDGBM_LOG");
    if (env == nullptr) return Level::info;
    if (std::strcmp(env, "error") == 0) return Level::error;
    if (std::strcmp(env, "warn") == 0) return Level::warn;
    if (std::strcmp(env, "debug") == 0) return Level::debug;
    return Level::info;
  }();
  return lvl;
}

inline void write(Level lvl, const std::string& msg) {
  if (lvl > threshold()) return;
  static const char* names[] = {"ERROR", "WARN", "INFO", "DEBUG"};
  std::fprintf(stderr, "[%s] %s\n", names[static_cast<int>(lvl)], msg.c_str());
}

inline void error(const std::string& m) { write(Level::error, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void debug(const std::string& m) { write(Level::debug, m); }

}  // namespace fedgbm::log
