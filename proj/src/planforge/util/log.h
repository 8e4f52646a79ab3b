#pragma once

#include <string>

namespace planforge::log {

enum class Level { error = 0, info = 1, debug = 2 };

// Threshold comes from PLANFORGE_LOG={error,info,debug}; defaults to error.
Level threshold();
bool enabled(Level level);

void write(Level level, const std::string& message);

void errorf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void infof(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void debugf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

}  // namespace planforge::log
