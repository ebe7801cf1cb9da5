#include <map>
#include <set>
#include <sstream>

#include "tutgen/vgdl.hpp"

namespace tutgen {

std::vector<SpriteDef> resolve_hierarchy(std::vector<SpriteDef> sprites) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < sprites.size(); ++i) {
        if (!index.emplace(sprites[i].name, i).second) {
            throw Error(ErrorCode::DuplicateSprite, sprites[i].name, sprites[i].line);
        }
    }

    // Rebuild child links from parent links so both sides agree even for
    // programmatically assembled sprite lists.
    for (auto& sprite : sprites) {
        sprite.children.clear();
    }
    for (const auto& sprite : sprites) {
        if (sprite.parent) {
            auto it = index.find(*sprite.parent);
            if (it == index.end()) {
                throw Error(ErrorCode::CyclicHierarchy,
                            sprite.name + " has unknown parent " + *sprite.parent, sprite.line);
            }
            sprites[it->second].children.push_back(sprite.name);
        }
    }

    for (auto& sprite : sprites) {
        std::set<std::string> visited{sprite.name};
        std::vector<std::string> chain{sprite.name};
        const SpriteDef* cursor = &sprite;
        while (cursor->parent) {
            const SpriteDef& parent = sprites[index.at(*cursor->parent)];
            if (!visited.insert(parent.name).second) {
                std::ostringstream names;
                for (const auto& name : chain) {
                    names << name << " -> ";
                }
                names << parent.name;
                throw Error(ErrorCode::CyclicHierarchy, names.str(), sprite.line);
            }
            chain.push_back(parent.name);
            if (sprite.cls.empty() && !parent.cls.empty()) {
                sprite.cls = parent.cls;
            }
            for (const auto& [key, value] : parent.params) {
                sprite.params.emplace(key, value); // nearest ancestor wins
            }
            cursor = &parent;
        }
    }
    return sprites;
}

} // namespace tutgen
