#ifndef SUPEREND_LOG_HPP
#define SUPEREND_LOG_HPP

#include <string_view>

namespace superend::logging {

enum class Level { Error = 0, Info = 1, Debug = 2 };

// Level comes from SUPEREND_LOG={error|info|debug}; default error.
Level level();

void error(std::string_view msg);
void info(std::string_view msg);
void debug(std::string_view msg);

}  // namespace superend::logging

#endif
