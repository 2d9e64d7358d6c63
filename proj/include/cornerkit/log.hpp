#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace cornerkit {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Level taken from CORNERKIT_LOG (error, warn, info, debug); defaults to
/// warn on unset or unknown values.
inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("CORNERKIT_LOG");
        std::string s = env ? env : "";
        if (s == "error") return LogLevel::Error;
        if (s == "info") return LogLevel::Info;
        if (s == "debug") return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

inline void log(LogLevel lvl, const std::string& msg) {
    if (lvl > log_level()) return;
    const char* tag = lvl == LogLevel::Error ? "error"
                      : lvl == LogLevel::Warn ? "warn"
                      : lvl == LogLevel::Info ? "info"
                                              : "debug";
    std::cerr << "[" << tag << "] " << msg << "\n";
}

} // namespace cornerkit
