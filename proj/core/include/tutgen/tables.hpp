#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

namespace tutgen {

enum class Movement { None, Horizontal, Vertical, FourWay };

struct AvatarCapability {
    std::string cls;
    Movement movement = Movement::None;
    bool can_shoot = false;
    std::string shoot_button; // button tag, set when can_shoot
};

/// Data-driven lookup tables behind mechanic discovery. The built-ins cover
/// the common GVG-AI classes and effects; a plain-text config file can add or
/// override entries without code changes:
///
///     # one entry per line
///     FlakAvatar: horizontal,shoot      # avatar capability
///     Bomber: shooter                   # non-avatar class that emits its stype
///     stepBack: cannot-move-past        # effect -> action verb
struct Tables {
    std::map<std::string, AvatarCapability> avatar_caps;
    std::set<std::string> shooter_classes;       // emit their stype param as a projectile
    std::map<std::string, std::string> effect_verbs;

    static const Tables& builtin();

    /// builtin() plus entries read from `path`. Throws Error(BadConfig).
    static Tables load(const std::string& path);

    bool is_avatar_class(const std::string& cls) const;
    const AvatarCapability* capability(const std::string& cls) const;

    /// Action verb for an interaction effect. Unknown effects narrate as a
    /// plain collision.
    std::string verb_for_effect(const std::string& effect) const;
};

std::optional<Movement> movement_from_string(std::string text);
const char* movement_name(Movement movement);

} // namespace tutgen
