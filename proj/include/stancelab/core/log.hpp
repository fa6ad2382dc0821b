#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace stancelab {

enum class LogLevel { debug, info, warn, error };

const char* to_string(LogLevel level);

using LogSink = std::function<void(LogLevel, const std::string&)>;

// Replaces the process-wide sink and returns the previous one.
// The default sink writes "[level] message" lines to stderr.
LogSink set_log_sink(LogSink sink);

void log_message(LogLevel level, const std::string& msg);

inline void log_debug(const std::string& msg) { log_message(LogLevel::debug, msg); }
inline void log_info(const std::string& msg) { log_message(LogLevel::info, msg); }
inline void log_warn(const std::string& msg) { log_message(LogLevel::warn, msg); }
inline void log_error(const std::string& msg) { log_message(LogLevel::error, msg); }

// Scoped capture of log output, used by tests that assert on warnings.
class LogCapture {
 public:
  LogCapture();
  ~LogCapture();
  LogCapture(const LogCapture&) = delete;
  LogCapture& operator=(const LogCapture&) = delete;

  const std::vector<std::pair<LogLevel, std::string>>& entries() const { return entries_; }
  bool contains(LogLevel level, const std::string& substring) const;

 private:
  std::vector<std::pair<LogLevel, std::string>> entries_;
  LogSink previous_;
};

}  // namespace stancelab
