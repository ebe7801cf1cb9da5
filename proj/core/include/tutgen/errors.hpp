#pragma once

#include <stdexcept>
#include <string>

namespace tutgen {

enum class ErrorCode {
    MixedIndentation,
    MissingSection,
    MalformedLine,
    DuplicateSprite,
    CyclicHierarchy,
    UnknownAvatarClass,
    NoWinPath,
    MissingSlot,
    BadConfig,
    BadInvocation,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the whole toolchain. `code` discriminates the
/// failure, `line` is the 1-based source line when one applies (0 otherwise).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, int line = 0)
        : std::runtime_error(format(code, message, line)),
          code_(code),
          line_(line) {}

    ErrorCode code() const { return code_; }
    int line() const { return line_; }

private:
    static std::string format(ErrorCode code, const std::string& message, int line);

    ErrorCode code_;
    int line_;
};

} // namespace tutgen
