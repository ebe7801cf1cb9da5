#include <algorithm>
#include <sstream>

#include "tutgen/tables.hpp"
#include "tutgen/vgdl.hpp"

namespace tutgen {

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

// Splits "lhs > rhs" around the first standalone `>` token.
bool split_rule(const std::vector<std::string>& tokens,
                std::vector<std::string>& lhs, std::vector<std::string>& rhs) {
    auto arrow = std::find(tokens.begin(), tokens.end(), ">");
    if (arrow == tokens.end()) {
        return false;
    }
    lhs.assign(tokens.begin(), arrow);
    rhs.assign(arrow + 1, tokens.end());
    return true;
}

bool is_param(const std::string& token) {
    return token.find('=') != std::string::npos;
}

std::pair<std::string, std::string> split_param(const std::string& token, int line) {
    auto eq = token.find('=');
    std::string key = token.substr(0, eq);
    if (key.empty()) {
        throw Error(ErrorCode::MalformedLine, "parameter with empty key: " + token, line);
    }
    return {key, token.substr(eq + 1)};
}

std::optional<int> parse_score_change(const std::map<std::string, std::string>& params,
                                      int line) {
    auto it = params.find("scoreChange");
    if (it == params.end()) {
        return std::nullopt;
    }
    const std::string& text = it->second;
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedLine, "scoreChange is not an integer: " + text, line);
    }
}

std::string lowercased(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

struct SectionParser {
    GameDescription& game;
    std::vector<SpriteDef> raw_sprites;

    // indices into raw_sprites forming the current nesting chain
    std::vector<std::size_t> sprite_stack;

    void sprite_line(const SourceLine& line) {
        std::vector<std::string> lhs, rhs;
        if (!split_rule(split_tokens(line.content), lhs, rhs) || lhs.size() != 1) {
            throw Error(ErrorCode::MalformedLine,
                        "sprite line must be `name > [class] key=value ...`", line.line_number);
        }
        SpriteDef sprite;
        sprite.name = lhs[0];
        sprite.line = line.line_number;
        for (const auto& tok : rhs) {
            if (is_param(tok)) {
                auto [key, value] = split_param(tok, line.line_number);
                sprite.params[key] = value;
            } else if (sprite.cls.empty()) {
                sprite.cls = tok;
            } else {
                throw Error(ErrorCode::MalformedLine,
                            "sprite line has two class identifiers", line.line_number);
            }
        }
        for (const auto& existing : raw_sprites) {
            if (existing.name == sprite.name) {
                throw Error(ErrorCode::DuplicateSprite, sprite.name, line.line_number);
            }
        }

        int depth = line.indent - 2; // nesting inside the SpriteSet body
        if (depth < 0 || depth > static_cast<int>(sprite_stack.size())) {
            throw Error(ErrorCode::MalformedLine, "unexpected indentation", line.line_number);
        }
        sprite_stack.resize(depth);
        if (!sprite_stack.empty()) {
            auto& parent = raw_sprites[sprite_stack.back()];
            sprite.parent = parent.name;
            parent.children.push_back(sprite.name);
        }
        raw_sprites.push_back(sprite);
        sprite_stack.push_back(raw_sprites.size() - 1);
    }

    void mapping_line(const SourceLine& line) {
        std::vector<std::string> lhs, rhs;
        if (!split_rule(split_tokens(line.content), lhs, rhs) || lhs.size() != 1 ||
            lhs[0].size() != 1 || rhs.empty()) {
            throw Error(ErrorCode::MalformedLine,
                        "level mapping line must be `char > sprite ...`", line.line_number);
        }
        game.level_mapping[lhs[0][0]] = rhs;
    }

    void interaction_line(const SourceLine& line) {
        std::vector<std::string> lhs, rhs;
        if (!split_rule(split_tokens(line.content), lhs, rhs) || lhs.size() < 2 ||
            rhs.empty() || is_param(rhs[0])) {
            throw Error(ErrorCode::MalformedLine,
                        "interaction line must be `subject object... > effect key=value ...`",
                        line.line_number);
        }
        InteractionRule rule;
        rule.subject = lhs[0];
        rule.effect = rhs[0];
        rule.line = line.line_number;
        for (std::size_t i = 1; i < rhs.size(); ++i) {
            auto [key, value] = split_param(rhs[i], line.line_number);
            rule.params[key] = value;
        }
        rule.score_change = parse_score_change(rule.params, line.line_number);
        // `a b c > effect` means the effect applies to a against b and to a
        // against c; expand to one binary rule per object, in order.
        for (std::size_t i = 1; i < lhs.size(); ++i) {
            rule.object = lhs[i];
            game.interactions.push_back(rule);
        }
    }

    void termination_line(const SourceLine& line) {
        auto tokens = split_tokens(line.content);
        if (tokens.empty() || is_param(tokens[0])) {
            throw Error(ErrorCode::MalformedLine,
                        "termination line must be `Class key=value ... win=...`",
                        line.line_number);
        }
        TerminationRule rule;
        rule.cls = tokens[0];
        rule.line = line.line_number;
        bool have_win = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            auto [key, value] = split_param(tokens[i], line.line_number);
            if (key == "win") {
                std::string flag = lowercased(value);
                if (flag != "true" && flag != "false") {
                    throw Error(ErrorCode::MalformedLine,
                                "win must be True or False, got " + value, line.line_number);
                }
                rule.win = flag == "true";
                have_win = true;
            } else {
                rule.params[key] = value;
            }
        }
        if (!have_win) {
            throw Error(ErrorCode::MalformedLine,
                        "termination rule lacks an explicit win=...", line.line_number);
        }
        game.terminations.push_back(rule);
    }
};

} // namespace

GameDescription parse(const std::vector<SourceLine>& lines, const Tables& tables) {
    GameDescription game;
    if (lines.empty()) {
        throw Error(ErrorCode::MissingSection, "SpriteSet");
    }
    if (lines[0].indent != 0) {
        throw Error(ErrorCode::MalformedLine, "file must start with an unindented game line",
                    lines[0].line_number);
    }
    game.game_class = split_tokens(lines[0].content)[0];

    SectionParser sections{game};
    enum class Section { None, Sprites, Mapping, Interactions, Terminations, Ignored };
    Section current = Section::None;
    std::vector<std::string> seen;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const SourceLine& line = lines[i];
        if (line.indent == 0) {
            throw Error(ErrorCode::MalformedLine, "unexpected second top-level line",
                        line.line_number);
        }
        if (line.indent == 1) {
            std::string name = line.content;
            if (std::find(seen.begin(), seen.end(), name) != seen.end()) {
                throw Error(ErrorCode::MalformedLine, "duplicate section " + name,
                            line.line_number);
            }
            seen.push_back(name);
            if (name == "SpriteSet") {
                current = Section::Sprites;
            } else if (name == "LevelMapping") {
                current = Section::Mapping;
                game.has_level_mapping = true;
            } else if (name == "InteractionSet") {
                current = Section::Interactions;
            } else if (name == "TerminationSet") {
                current = Section::Terminations;
            } else {
                current = Section::Ignored;
                game.ignored_sections.emplace_back(name, line.line_number);
            }
            continue;
        }
        switch (current) {
        case Section::None:
            throw Error(ErrorCode::MalformedLine, "content before any section header",
                        line.line_number);
        case Section::Sprites:
            sections.sprite_line(line);
            break;
        case Section::Mapping:
            if (line.indent != 2) {
                throw Error(ErrorCode::MalformedLine, "unexpected indentation", line.line_number);
            }
            sections.mapping_line(line);
            break;
        case Section::Interactions:
            if (line.indent != 2) {
                throw Error(ErrorCode::MalformedLine, "unexpected indentation", line.line_number);
            }
            sections.interaction_line(line);
            break;
        case Section::Terminations:
            if (line.indent != 2) {
                throw Error(ErrorCode::MalformedLine, "unexpected indentation", line.line_number);
            }
            sections.termination_line(line);
            break;
        case Section::Ignored:
            break;
        }
    }

    for (const char* required : {"SpriteSet", "InteractionSet", "TerminationSet"}) {
        if (std::find(seen.begin(), seen.end(), required) == seen.end()) {
            throw Error(ErrorCode::MissingSection, required);
        }
    }

    game.sprites = resolve_hierarchy(std::move(sections.raw_sprites));
    for (const auto& sprite : game.sprites) {
        if (tables.is_avatar_class(sprite.cls)) {
            game.avatar_name = sprite.name;
            break;
        }
    }
    return game;
}

GameDescription parse(const std::vector<SourceLine>& lines) {
    return parse(lines, Tables::builtin());
}

const SpriteDef* GameDescription::find_sprite(const std::string& name) const {
    for (const auto& sprite : sprites) {
        if (sprite.name == name) {
            return &sprite;
        }
    }
    return nullptr;
}

bool GameDescription::has_sprite(const std::string& name) const {
    return find_sprite(name) != nullptr;
}

std::vector<std::string> GameDescription::ancestors_of(const std::string& name) const {
    std::vector<std::string> chain;
    const SpriteDef* sprite = find_sprite(name);
    while (sprite && sprite->parent) {
        chain.push_back(*sprite->parent);
        sprite = find_sprite(*sprite->parent);
    }
    return chain;
}

bool GameDescription::resolves(const std::string& name) const {
    return name == kEos || has_sprite(name);
}

bool structurally_equal(const GameDescription& a, const GameDescription& b) {
    auto sprite_eq = [](const SpriteDef& x, const SpriteDef& y) {
        return x.name == y.name && x.cls == y.cls && x.params == y.params &&
               x.parent == y.parent && x.children == y.children;
    };
    auto interaction_eq = [](const InteractionRule& x, const InteractionRule& y) {
        return x.subject == y.subject && x.object == y.object && x.effect == y.effect &&
               x.params == y.params && x.score_change == y.score_change;
    };
    auto termination_eq = [](const TerminationRule& x, const TerminationRule& y) {
        return x.cls == y.cls && x.params == y.params && x.win == y.win;
    };
    if (a.game_class != b.game_class || a.level_mapping != b.level_mapping ||
        a.has_level_mapping != b.has_level_mapping || a.avatar_name != b.avatar_name) {
        return false;
    }
    if (a.sprites.size() != b.sprites.size() || a.interactions.size() != b.interactions.size() ||
        a.terminations.size() != b.terminations.size() ||
        a.ignored_sections.size() != b.ignored_sections.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.sprites.size(); ++i) {
        if (!sprite_eq(a.sprites[i], b.sprites[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.interactions.size(); ++i) {
        if (!interaction_eq(a.interactions[i], b.interactions[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.terminations.size(); ++i) {
        if (!termination_eq(a.terminations[i], b.terminations[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.ignored_sections.size(); ++i) {
        if (a.ignored_sections[i].first != b.ignored_sections[i].first) {
            return false;
        }
    }
    return true;
}

} // namespace tutgen
