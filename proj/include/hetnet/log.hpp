#pragma once

#include <string>

namespace hetnet {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

/// Level comes from HETNET_LOG (error|info|debug), default error.
LogLevel log_level();

void log_message(LogLevel level, const std::string& msg);

inline void log_error(const std::string& msg) { log_message(LogLevel::Error, msg); }
inline void log_info(const std::string& msg) { log_message(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_message(LogLevel::Debug, msg); }

}  // namespace hetnet
