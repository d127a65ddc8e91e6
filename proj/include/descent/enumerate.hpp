#pragma once

// Exhaustive generation of rooted tree shapes (one representative per
// isomorphism class, by canonical level-sequence successor) and of marked
// trees (every shape paired with every descent subset).

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "descent/tree.hpp"

namespace descent {

// Canonical level sequences of rooted trees on s vertices, root at level 1,
// in lexicographically decreasing order: start from the path and repeatedly
// rewind the rightmost level > 2 onto its previous attachment point.
inline std::vector<std::vector<int>> rooted_tree_level_sequences(int s) {
    if (s < 1 || s > 13)
        throw std::invalid_argument("rooted_tree_level_sequences: size must be in 1..13");
    std::vector<std::vector<int>> out;
    std::vector<int> level(s);
    for (int i = 0; i < s; ++i) level[i] = i + 1;
    for (;;) {
        out.push_back(level);
        int p = -1;
        for (int i = s - 1; i >= 0; --i)
            if (level[i] > 2) {
                p = i;
                break;
            }
        if (p == -1) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < s; ++i) level[i] = level[i - (p - q)];
    }
    return out;
}

inline MarkedTree tree_from_level_sequence(const std::vector<int>& level) {
    const int s = static_cast<int>(level.size());
    std::vector<int> parents(s, -1);
    std::vector<int> last_at_level(s + 2, -1);
    for (int i = 0; i < s; ++i) {
        parents[i] = level[i] == 1 ? -1 : last_at_level[level[i] - 1];
        last_at_level[level[i]] = i;
    }
    return MarkedTree::from_parents(std::move(parents), std::vector<char>(s, 0));
}

// One tree per isomorphism class of rooted trees on s vertices, all marks
// clear.  Counts for s = 1..: 1, 1, 2, 4, 9, 20, 48, 115, 286, ...
inline std::vector<MarkedTree> enum_rooted_trees(int s) {
    std::vector<MarkedTree> out;
    for (const auto& level : rooted_tree_level_sequences(s))
        out.push_back(tree_from_level_sequence(level));
    return out;
}

inline MarkedTree with_descent_mask(const MarkedTree& shape, std::uint64_t mask) {
    std::vector<int> parents(shape.size());
    std::vector<char> flags(shape.size());
    for (int v = 0; v < shape.size(); ++v) {
        parents[v] = shape.parent(v);
        flags[v] = (mask >> v) & 1 ? 1 : 0;
    }
    return MarkedTree::from_parents(std::move(parents), std::move(flags));
}

// Every (shape, descent subset) pair, subsets in mask order within a shape.
inline void for_each_marked_tree(int s, const std::function<void(const MarkedTree&)>& fn) {
    for (const MarkedTree& shape : enum_rooted_trees(s))
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask)
            fn(with_descent_mask(shape, mask));
}

inline std::vector<MarkedTree> enum_marked_trees(int s) {
    std::vector<MarkedTree> out;
    for_each_marked_tree(s, [&](const MarkedTree& t) { out.push_back(t); });
    return out;
}

}  // namespace descent
