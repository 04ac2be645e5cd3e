#pragma once

#include <iosfwd>

namespace gme::cli {

inline constexpr int kExitOk          = 0;
inline constexpr int kExitIoError     = 1;
inline constexpr int kExitInvalidArgs = 2;

// Entry point of the gme tool with injectable streams.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace gme::cli
