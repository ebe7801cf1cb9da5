#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tutgen/graph.hpp"

namespace tutgen {

/// One grammar symbol: a quoted literal or a nonterminal reference.
struct GrammarSymbol {
    enum class Type { Literal, Nonterminal };
    Type type = Type::Literal;
    std::string text;
};

using Production = std::vector<GrammarSymbol>; // empty production = epsilon

/// The fixed tutorial grammar. Productions and terminal alphabets are
/// constant; only the sprite terminals vary per game.
struct TutorialGrammar {
    std::map<std::string, std::vector<Production>> productions;

    // Terminal alphabets (epsilon is represented by an empty production).
    std::vector<std::string> action_verbs;
    std::vector<std::string> control_verbs;
    std::vector<std::string> buttons;
    std::vector<std::string> helping_adjs;
    std::vector<std::string> helping_verbs;

    /// Sprite name -> display text, e.g. alienMissile -> "alien missile",
    /// the avatar -> "player", EOS -> "the edge of the screen".
    std::map<std::string, std::string> sprite_terminals;

    std::string display(const std::string& sprite_name) const;
};

/// Grammar with the game's sprite display names injected.
TutorialGrammar make_grammar(const GameDescription& game);

/// Display-name derivation used for sprite terminals (camelCase and
/// snake_case split to lowercase words).
std::string sprite_display_name(const std::string& name);

enum class SentenceForm { Control, Mech, Win, Lose, Positive, Negative };

const char* sentence_form_name(SentenceForm form);

/// The grammar nonterminal a form expands.
const char* form_nonterminal(SentenceForm form);

/// Primary sentence form for a classified mechanic. Controls and
/// terminations map by kind; interactions map by score classification and
/// otherwise narrate as plain mechanic sentences.
SentenceForm select_form(const Mechanic& mechanic, NodeClass classification);

/// Expands the form's nonterminal with slots filled from the mechanic.
/// Genuinely free terminal choices are sampled from the seed; everything the
/// mechanic determines is fixed. Deterministic given (mechanic, form, seed).
/// Throws Error(MissingSlot) when the mechanic cannot fill a required slot.
std::string realize(const Mechanic& mechanic, SentenceForm form,
                    const TutorialGrammar& grammar, std::uint64_t seed);

/// True iff the sentence derives from the form's nonterminal after inverting
/// the surface rules (capitalization, third-person -s, pluralization after
/// all/every/some, and the "move past" insertion).
bool check_membership(const std::string& sentence, SentenceForm form,
                      const TutorialGrammar& grammar);

struct TutorialSentence {
    std::string text;
    std::string mechanic_id;
};

/// Ordered, realized tutorial. Section order follows the grammar's tutorial
/// production: win, lose, negative, positive, mechanics, controls.
struct TutorialDocument {
    std::string game_name;
    std::uint64_t seed = 0;
    std::vector<TutorialSentence> win;
    std::vector<TutorialSentence> lose;
    std::vector<TutorialSentence> negative;
    std::vector<TutorialSentence> positive;
    std::vector<TutorialSentence> mechanics;
    std::vector<TutorialSentence> controls;

    /// Sections in grammar order, paired with their names.
    std::vector<std::pair<std::string, const std::vector<TutorialSentence>*>> sections() const;
};

/// Assembles the document from a classified graph: the win sentence from the
/// win path's terminal, lose sentences from loss-path terminals, score
/// sections from the sign sets, mechanic sentences from interactions
/// (Optional-classified ones only when include_optional), and control
/// sentences from controls. Within a section, sentences are ordered by
/// critical-path position then node id; duplicate texts collapse.
TutorialDocument generate_tutorial(const MechanicGraph& graph, const CriticalPathSet& paths,
                                   const TutorialGrammar& grammar, std::uint64_t seed,
                                   bool include_optional, const std::string& game_name = "");

/// Plain-text rendering: a header comment line per non-empty section, one
/// sentence per line, blank line between sections.
std::string render_text(const TutorialDocument& doc);

} // namespace tutgen
