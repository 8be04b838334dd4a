#include "superend/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace superend::logging {

Level level() {
    static const Level lvl = [] {
        const char* env = std::getenv("SUPEREND_LOG");
        if (!env) return Level::Error;
        const std::string s(env);
        if (s == "debug") return Level::Debug;
        if (s == "info") return Level::Info;
        return Level::Error;
    }();
    return lvl;
}

namespace {
void emit(std::string_view tag, std::string_view msg) {
    std::cerr << "[" << tag << "] " << msg << "\n";
}
}  // namespace

void error(std::string_view msg) { emit("error", msg); }

void info(std::string_view msg) {
    if (level() >= Level::Info) emit("info", msg);
}

void debug(std::string_view msg) {
    if (level() >= Level::Debug) emit("debug", msg);
}

}  // namespace superend::logging
