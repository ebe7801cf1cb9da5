#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tutgen/errors.hpp"

namespace tutgen {

struct Tables; // tables.hpp

/// Reserved pseudo-sprite naming the play-field boundary.
inline constexpr const char* kEos = "EOS";

/// A physical source line after comment stripping. Blank and comment-only
/// lines never reach this stage.
struct SourceLine {
    int line_number = 0; // 1-based
    int indent = 0;      // nesting units (4 spaces or 1 tab each)
    std::string content; // non-empty, trailing whitespace removed
};

struct SpriteDef {
    std::string name;
    std::string cls;                         // e.g. FlakAvatar; empty until hierarchy resolution
    std::map<std::string, std::string> params;
    std::optional<std::string> parent;
    std::vector<std::string> children;
    int line = 0; // provenance only, excluded from structural equality
};

struct InteractionRule {
    std::string subject; // first collision participant (the one the effect applies to)
    std::string object;  // second participant, may be EOS
    std::string effect;  // identifier, preserved even when unknown
    std::map<std::string, std::string> params;
    std::optional<int> score_change; // parsed from params["scoreChange"]
    int line = 0;
};

struct TerminationRule {
    std::string cls; // e.g. SpriteCounter, Timeout
    std::map<std::string, std::string> params;
    bool win = false; // always explicit in the source file
    int line = 0;
};

/// Fully parsed and hierarchy-resolved game description.
struct GameDescription {
    std::string game_class; // root line identifier, e.g. BasicGame
    std::vector<SpriteDef> sprites; // declaration order, params inherited
    std::map<char, std::vector<std::string>> level_mapping;
    bool has_level_mapping = false;
    std::vector<InteractionRule> interactions; // file order
    std::vector<TerminationRule> terminations; // file order
    std::string avatar_name; // empty when no sprite has an avatar class
    std::vector<std::pair<std::string, int>> ignored_sections; // unknown section name, line

    const SpriteDef* find_sprite(const std::string& name) const;
    bool has_sprite(const std::string& name) const;

    /// Ancestor chain of `name`, nearest first. Empty for unknown names and roots.
    std::vector<std::string> ancestors_of(const std::string& name) const;

    /// True when `name` resolves to a declared sprite or EOS.
    bool resolves(const std::string& name) const;
};

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Warning;
    std::string file; // filled by the CLI; empty for library-level runs
    std::optional<int> line;
    std::string message;
};

/// Splits raw file text into indented source lines. Strips `#` comments and
/// blank lines, accepts LF or CRLF, and rejects lines whose leading
/// whitespace mixes tabs and spaces (or disagrees with the file's style).
std::vector<SourceLine> tokenize(const std::string& source);

/// Builds a GameDescription from tokenized lines. The avatar is the first
/// sprite whose resolved class appears in the capability table.
GameDescription parse(const std::vector<SourceLine>& lines, const Tables& tables);
GameDescription parse(const std::vector<SourceLine>& lines);

/// Materializes inherited classes/params and parent/child links on a raw
/// sprite list. Throws on cyclic parent chains. parse() calls this; it is
/// exposed for programmatically built sprite lists.
std::vector<SpriteDef> resolve_hierarchy(std::vector<SpriteDef> sprites);

/// Non-throwing semantic checks. An empty result means the game is
/// tutorial-generable; Error-severity findings make generation meaningless.
std::vector<Diagnostic> validate(const GameDescription& game, const Tables& tables);
std::vector<Diagnostic> validate(const GameDescription& game);

/// Field-by-field equality over the spec-level content of two parses,
/// ignoring source line provenance.
bool structurally_equal(const GameDescription& a, const GameDescription& b);

} // namespace tutgen
