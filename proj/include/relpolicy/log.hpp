#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace relpolicy {

/// Verbosity from RELPOLICY_LOG: 0 = warnings only (default), 1 = info, 2 = debug.
inline int log_level() {
  static int level = [] {
    const char* v = std::getenv("RELPOLICY_LOG");
    return v ? std::atoi(v) : 0;
  }();
  return level;
}

#define RELPOLICY_LOG_AT(lvl, tag, expr)                          \
  do {                                                            \
    if (::relpolicy::log_level() >= (lvl)) {                      \
      std::ostringstream oss__;                                   \
      oss__ << "[" tag "] " << expr << "\n";                      \
      std::cerr << oss__.str();                                   \
    }                                                             \
  } while (0)

#define LOG_WARN(expr) RELPOLICY_LOG_AT(0, "warn", expr)
#define LOG_INFO(expr) RELPOLICY_LOG_AT(1, "info", expr)
#define LOG_DEBUG(expr) RELPOLICY_LOG_AT(2, "debug", expr)

}  // namespace relpolicy
