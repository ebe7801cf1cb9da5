#include <cstddef>

#include "tutgen/vgdl.hpp"

namespace tutgen {

namespace {

constexpr int kSpacesPerUnit = 4;

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string rstrip(std::string text) {
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.pop_back();
    }
    return text;
}

} // namespace

std::vector<SourceLine> tokenize(const std::string& source) {
    std::vector<SourceLine> lines;
    char file_indent_char = '\0'; // first indentation character commits the file style

    std::size_t start = 0;
    int line_number = 0;
    while (start <= source.size()) {
        if (start == source.size() && line_number > 0) {
            break;
        }
        auto end = source.find('\n', start);
        std::string raw = source.substr(start, end == std::string::npos ? std::string::npos
                                                                        : end - start);
        start = end == std::string::npos ? source.size() + 1 : end + 1;
        ++line_number;

        std::string content = rstrip(strip_comment(raw));
        std::size_t lead = 0;
        bool saw_space = false;
        bool saw_tab = false;
        while (lead < content.size() && (content[lead] == ' ' || content[lead] == '\t')) {
            (content[lead] == ' ' ? saw_space : saw_tab) = true;
            ++lead;
        }
        if (lead == content.size()) {
            continue; // blank or comment-only
        }
        if (saw_space && saw_tab) {
            throw Error(ErrorCode::MixedIndentation,
                        "tabs and spaces mixed in leading whitespace", line_number);
        }
        int indent = 0;
        if (lead > 0) {
            char c = content[0];
            if (file_indent_char == '\0') {
                file_indent_char = c;
            } else if (file_indent_char != c) {
                throw Error(ErrorCode::MixedIndentation,
                            "indentation style differs from the rest of the file", line_number);
            }
            indent = c == '\t' ? static_cast<int>(lead)
                               : static_cast<int>(lead) / kSpacesPerUnit;
        }
        lines.push_back({line_number, indent, content.substr(lead)});
    }
    return lines;
}

} // namespace tutgen
