#include <algorithm>
#include <set>

#include "tutgen/tables.hpp"
#include "tutgen/vgdl.hpp"

namespace tutgen {

namespace {

bool is_sprite_param(const std::string& key) {
    return key.rfind("stype", 0) == 0; // stype, stype1, stype2, ...
}

} // namespace

std::vector<Diagnostic> validate(const GameDescription& game, const Tables& tables) {
    std::vector<Diagnostic> out;
    auto error = [&](std::optional<int> line, std::string message) {
        out.push_back({Diagnostic::Severity::Error, "", line, std::move(message)});
    };
    auto warning = [&](std::optional<int> line, std::string message) {
        out.push_back({Diagnostic::Severity::Warning, "", line, std::move(message)});
    };

    std::set<std::string> referenced;
    auto check_reference = [&](const std::string& name, int line, const char* where) {
        referenced.insert(name);
        if (!game.resolves(name)) {
            error(line, std::string(where) + " references undeclared sprite '" + name + "'");
        }
    };

    for (const auto& rule : game.interactions) {
        check_reference(rule.subject, rule.line, "interaction");
        check_reference(rule.object, rule.line, "interaction");
    }
    for (const auto& rule : game.terminations) {
        for (const auto& [key, value] : rule.params) {
            if (is_sprite_param(key)) {
                check_reference(value, rule.line, "termination");
            }
        }
    }
    for (const auto& [symbol, names] : game.level_mapping) {
        for (const auto& name : names) {
            referenced.insert(name);
            if (!game.resolves(name)) {
                warning(std::nullopt, std::string("level mapping '") + symbol +
                                          "' references undeclared sprite '" + name + "'");
            }
        }
    }
    // Sprite params can reference other sprites too (projectiles, spawn types).
    for (const auto& sprite : game.sprites) {
        for (const auto& [key, value] : sprite.params) {
            if (is_sprite_param(key) && game.has_sprite(value)) {
                referenced.insert(value);
            }
        }
    }

    bool has_win = std::any_of(game.terminations.begin(), game.terminations.end(),
                               [](const TerminationRule& t) { return t.win; });
    if (!has_win) {
        error(std::nullopt, "no winning termination");
    }

    if (game.avatar_name.empty()) {
        error(std::nullopt, "no sprite has a recognized avatar class");
    } else {
        referenced.insert(game.avatar_name);
        bool past_first = false;
        for (const auto& sprite : game.sprites) {
            if (!tables.is_avatar_class(sprite.cls)) {
                continue;
            }
            if (past_first) {
                warning(sprite.line, "additional avatar-class sprite '" + sprite.name +
                                         "' ignored; '" + game.avatar_name + "' is the avatar");
            }
            past_first = true;
        }
        const SpriteDef* avatar = game.find_sprite(game.avatar_name);
        const AvatarCapability* cap = tables.capability(avatar->cls);
        if (cap && cap->can_shoot && !avatar->params.count("stype")) {
            warning(avatar->line, "avatar class " + avatar->cls +
                                      " can shoot but has no stype parameter");
        }
    }

    if (!game.has_level_mapping) {
        warning(std::nullopt, "no LevelMapping section");
    }
    for (const auto& [name, line] : game.ignored_sections) {
        warning(line, "unknown section " + name + " ignored");
    }

    auto reachable = [&](const SpriteDef& sprite) {
        if (referenced.count(sprite.name)) {
            return true;
        }
        for (const auto& ancestor : game.ancestors_of(sprite.name)) {
            if (referenced.count(ancestor)) {
                return true;
            }
        }
        for (const auto& name : referenced) {
            auto chain = game.ancestors_of(name);
            if (std::find(chain.begin(), chain.end(), sprite.name) != chain.end()) {
                return true;
            }
        }
        return false;
    };
    for (const auto& sprite : game.sprites) {
        if (!reachable(sprite)) {
            warning(sprite.line, "sprite '" + sprite.name +
                                     "' is never referenced by a rule or the level mapping");
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return a.line.value_or(0) < b.line.value_or(0);
    });
    return out;
}

std::vector<Diagnostic> validate(const GameDescription& game) {
    return validate(game, Tables::builtin());
}

} // namespace tutgen
