#include "hetnet/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace hetnet {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("HETNET_LOG");
    if (!env) return LogLevel::Error;
    const std::string v(env);
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

void log_message(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const char* tag = level == LogLevel::Error ? "error" : level == LogLevel::Info ? "info" : "debug";
  std::cerr << "[hetnet " << tag << "] " << msg << "\n";
}

}  // namespace hetnet
