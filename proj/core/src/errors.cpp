#include "tutgen/errors.hpp"

namespace tutgen {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MixedIndentation: return "MixedIndentation";
    case ErrorCode::MissingSection: return "MissingSection";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DuplicateSprite: return "DuplicateSprite";
    case ErrorCode::CyclicHierarchy: return "CyclicHierarchy";
    case ErrorCode::UnknownAvatarClass: return "UnknownAvatarClass";
    case ErrorCode::NoWinPath: return "NoWinPath";
    case ErrorCode::MissingSlot: return "MissingSlot";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::BadInvocation: return "BadInvocation";
    }
    return "Unknown";
}

std::string Error::format(ErrorCode code, const std::string& message, int line) {
    std::string out = error_code_name(code);
    if (line > 0) {
        out += " at line " + std::to_string(line);
    }
    out += ": " + message;
    return out;
}

} // namespace tutgen
