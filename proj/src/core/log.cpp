#include "stancelab/core/log.hpp"

#include <iostream>
#include <mutex>

namespace stancelab {

namespace {

std::mutex g_mutex;

void default_sink(LogLevel level, const std::string& msg) {
  std::cerr << "[" << to_string(level) << "] " << msg << "\n";
}

LogSink& sink_ref() {
  static LogSink sink = default_sink;
  return sink;
}

}  // namespace

const char* to_string(LogLevel level) {
  switch (level) {
    case LogLevel::debug: return "debug";
    case LogLevel::info: return "info";
    case LogLevel::warn: return "warn";
    case LogLevel::error: return "error";
  }
  return "?";
}

LogSink set_log_sink(LogSink sink) {
  std::lock_guard<std::mutex> lock(g_mutex);
  LogSink prev = sink_ref();
  sink_ref() = std::move(sink);
  return prev;
}

void log_message(LogLevel level, const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_mutex);
  sink_ref()(level, msg);
}

LogCapture::LogCapture() {
  auto* entries = &entries_;
  previous_ = set_log_sink([entries](LogLevel level, const std::string& msg) {
    entries->emplace_back(level, msg);
  });
}

LogCapture::~LogCapture() { set_log_sink(previous_); }

bool LogCapture::contains(LogLevel level, const std::string& substring) const {
  for (const auto& [lvl, msg] : entries_) {
    if (lvl == level && msg.find(substring) != std::string::npos) return true;
  }
  return false;
}

}  // namespace stancelab
