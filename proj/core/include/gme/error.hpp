#pragma once

#include <stdexcept>
#include <string>

namespace gme {

// Bad party count, dimension list or index outside the supported range.
class InvalidArity : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Amplitude data that cannot form a normalized pure state.
class InvalidState : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A measure or sweep requested on a state shape it is not defined for.
class UnsupportedShape : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
  public:
    IoError(const std::string &path, const std::string &what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    [[nodiscard]] const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

} // namespace gme
