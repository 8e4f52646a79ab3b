#include "planforge/util/log.h"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace planforge::log {

static Level parse_env() {
    const char* env = std::getenv("PLANFORGE_LOG");
    if (env == nullptr)
        return Level::error;
    if (std::strcmp(env, "debug") == 0)
        return Level::debug;
    if (std::strcmp(env, "info") == 0)
        return Level::info;
    return Level::error;
}

Level threshold() {
    static Level cached = parse_env();
    return cached;
}

bool enabled(Level level) {
    return static_cast<int>(level) <= static_cast<int>(threshold());
}

void write(Level level, const std::string& message) {
    if (!enabled(level))
        return;
    const char* tag = level == Level::error ? "error" : level == Level::info ? "info" : "debug";
    std::fprintf(stderr, "planforge: %s: %s\n", tag, message.c_str());
}

static void vwrite(Level level, const char* fmt, va_list args) {
    if (!enabled(level))
        return;
    char buf[4096];
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    write(level, buf);
}

void errorf(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    vwrite(Level::error, fmt, args);
    va_end(args);
}

void infof(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    vwrite(Level::info, fmt, args);
    va_end(args);
}

void debugf(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    vwrite(Level::debug, fmt, args);
    va_end(args);
}

}  // namespace planforge::log
