#pragma once

#include <atomic>
#include <cstdio>
#include <string>

namespace evalkit {

enum class LogLevel : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

namespace detail {
inline std::atomic<int>& log_level_storage() {
  static std::atomic<int> level{static_cast<int>(LogLevel::Warn)};
  return level;
}
}  // namespace detail

inline void set_log_level(LogLevel level) {
  detail::log_level_storage().store(static_cast<int>(level));
}

inline LogLevel log_level() {
  return static_cast<LogLevel>(detail::log_level_storage().load());
}

inline bool parse_log_level(const std::string& name, LogLevel& out) {
  if (name == "error") out = LogLevel::Error;
  else if (name == "warn") out = LogLevel::Warn;
  else if (name == "info") out = LogLevel::Info;
  else if (name == "debug") out = LogLevel::Debug;
  else return false;
  return true;
}

// All diagnostics go to stderr; stdout is reserved for data.
inline void log_message(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > detail::log_level_storage().load()) return;
  const char* tag = "info";
  switch (level) {
    case LogLevel::Error: tag = "error"; break;
    case LogLevel::Warn: tag = "warn"; break;
    case LogLevel::Info: tag = "info"; break;
    case LogLevel::Debug: tag = "debug"; break;
  }
  std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

inline void log_error(const std::string& msg) { log_message(LogLevel::Error, msg); }
inline void log_warn(const std::string& msg) { log_message(LogLevel::Warn, msg); }
inline void log_info(const std::string& msg) { log_message(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_message(LogLevel::Debug, msg); }

}  // namespace evalkit
