#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tutgen/tables.hpp"
#include "tutgen/vgdl.hpp"

namespace tutgen {

enum class MechanicKind { Control, Interaction, Termination };

const char* mechanic_kind_name(MechanicKind kind);

/// A sprite reference as written in a rule, with its ancestor chain attached
/// so later stages can relate rules without the GameDescription in hand.
struct SpriteRef {
    std::string name;
    std::vector<std::string> ancestors; // nearest first; empty for EOS and roots

    bool is_eos() const { return name == kEos; }

    /// Two references relate when one names the other or one of its ancestors.
    bool matches(const SpriteRef& other) const;

    /// The name both references share (the more general of the two).
    std::string shared_name(const SpriteRef& other) const;
};

/// One atomic teachable fact: a control, an interaction effect, or a
/// termination condition.
struct Mechanic {
    std::string id;          // deterministic; "ctrl:", "int:", "spawn:", "term:" prefixed
    MechanicKind kind = MechanicKind::Interaction;
    std::vector<SpriteRef> sprites;    // rule order; [avatar(,projectile)] for controls
    std::string action;      // actionVerb tag, or the cannot-move-past marker
    std::string raw_effect;  // originating effect/class identifier
    std::vector<std::string> buttons;  // Control only; primary button first
    std::optional<int> score_delta;    // Interaction only
    std::optional<bool> win;           // Termination only
    std::string source;      // human-readable provenance
    int source_line = 0;

    // Chain bookkeeping used by the graph module.
    bool starts_chain = false;              // movement controls only
    std::vector<std::string> requires_refs; // sprite names that must be produced upstream
    std::vector<std::string> produces;      // projectile / transform product names
    std::vector<std::string> destroys;      // sprite names removed when this fires
    bool destroys_avatar = false;           // kill-type effect with the avatar as subject

    std::string termination_class;          // Termination only
    std::optional<int> termination_limit;   // Termination only
};

/// Action verb tag for stepBack-style blocking; rendered through the
/// "can not move past" surface rule rather than the plain verb alphabet.
inline constexpr const char* kCannotMovePast = "cannot-move-past";

/// Control mechanics for the avatar's class: a movement mechanic and, for
/// shooter classes, a shoot mechanic targeting the avatar's stype projectile.
/// Throws Error(UnknownAvatarClass) when the avatar class is untabled.
std::vector<Mechanic> discover_controls(const GameDescription& game, const Tables& tables);

/// One Interaction mechanic per interaction rule, in file order.
std::vector<Mechanic> discover_interactions(const GameDescription& game, const Tables& tables);

/// Interaction mechanics for non-avatar sprites whose class emits a
/// projectile (e.g. a Bomber alien shooting its stype), in declaration order.
std::vector<Mechanic> discover_spawners(const GameDescription& game, const Tables& tables);

/// One Termination mechanic per termination rule, in file order.
std::vector<Mechanic> discover_terminations(const GameDescription& game);

/// All mechanics in canonical order: controls, interactions, spawners,
/// terminations.
std::vector<Mechanic> discover_all(const GameDescription& game, const Tables& tables);

} // namespace tutgen
