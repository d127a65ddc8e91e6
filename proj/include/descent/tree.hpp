#pragma once

// Rooted trees with a marked descent set: parsing, serialization, hook
// lengths, chain extension, labelings, and the derived-tree surgery the
// counting recursions are built from.
//
// Vertex numbering convention: trees built by the parser or by the surgery
// helpers are numbered in depth-first pre-order from the root, children in
// stored order.  extend() is the one exception: it keeps the original
// indices and numbers the added chain after them, bottom-up.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descent/numeric.hpp"

namespace descent {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

struct TreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mark { Ascent, Descent };

class MarkedTree {
public:
    // Validates: exactly one -1 entry, indices in range, acyclic and connected.
    static MarkedTree from_parents(std::vector<int> parents, std::vector<char> descent_flags) {
        const int s = static_cast<int>(parents.size());
        if (s == 0) throw TreeError("tree must have at least one vertex");
        if (static_cast<int>(descent_flags.size()) != s)
            throw TreeError("descent flag count does not match vertex count");
        MarkedTree t;
        t.parent_ = std::move(parents);
        t.descent_ = std::move(descent_flags);
        t.root_ = -1;
        for (int v = 0; v < s; ++v) {
            const int p = t.parent_[v];
            if (p == -1) {
                if (t.root_ != -1) throw TreeError("more than one root");
                t.root_ = v;
            } else if (p < 0 || p >= s) {
                throw TreeError("parent index out of range for vertex " + std::to_string(v));
            }
        }
        if (t.root_ == -1) throw TreeError("no root");
        // Walk every vertex up to the root; a revisit of an in-progress path is a cycle.
        std::vector<int> state(s, 0);  // 0 unseen, 1 on current path, 2 done
        std::vector<int> path;
        for (int v = 0; v < s; ++v) {
            int u = v;
            path.clear();
            while (u != -1 && state[u] == 0) {
                state[u] = 1;
                path.push_back(u);
                u = t.parent_[u];
            }
            if (u != -1 && state[u] == 1) throw TreeError("parent links contain a cycle");
            for (int w : path) state[w] = 2;
        }
        t.children_.assign(s, {});
        for (int v = 0; v < s; ++v)
            if (v != t.root_) t.children_[t.parent_[v]].push_back(v);
        return t;
    }

    static MarkedTree from_parents(std::vector<int> parents, const std::vector<int>& descents) {
        std::vector<char> flags(parents.size(), 0);
        for (int v : descents) {
            if (v < 0 || v >= static_cast<int>(parents.size()))
                throw TreeError("descent index out of range: " + std::to_string(v));
            flags[v] = 1;
        }
        return from_parents(std::move(parents), std::move(flags));
    }

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }

    int parent(int v) const {
        check_vertex(v);
        return parent_[v];
    }

    const std::vector<int>& children(int v) const {
        check_vertex(v);
        return children_[v];
    }

    bool is_descent(int v) const {
        check_vertex(v);
        return descent_[v] != 0;
    }

    bool is_leaf(int v) const { return children(v).empty(); }

    const std::vector<char>& descent_flags() const { return descent_; }

    std::vector<int> descent_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (descent_[v]) out.push_back(v);
        return out;
    }

    int descent_count() const {
        int c = 0;
        for (char f : descent_) c += f != 0;
        return c;
    }

    // Vertices in depth-first pre-order following stored child order.
    std::vector<int> preorder() const {
        std::vector<int> order;
        order.reserve(size());
        std::vector<int> stack{root_};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            const auto& ch = children_[v];
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
        }
        return order;
    }

    std::vector<int> depths() const {
        std::vector<int> d(size(), 0);
        for (int v : preorder())
            if (v != root_) d[v] = d[parent_[v]] + 1;
        return d;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= size())
            throw TreeError("vertex index out of range: " + std::to_string(v));
    }

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<char> descent_;
    int root_ = 0;
};

// ---------------------------------------------------------------------------
// compact grammar:  tree := ('a'|'d') ('[' tree (',' tree)* ']')?
// ---------------------------------------------------------------------------

inline MarkedTree parse_tree(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };
    std::vector<int> parents;
    std::vector<char> flags;

    // Explicit stack of open vertices; avoids recursion on deep chains.
    std::vector<int> open;
    skip_ws();
    if (pos == text.size()) throw ParseError("empty input", pos);

    auto read_vertex = [&](int parent) {
        skip_ws();
        if (pos == text.size()) throw ParseError("expected 'a' or 'd'", pos);
        const char c = text[pos];
        if (c != 'a' && c != 'd') throw ParseError("expected 'a' or 'd'", pos);
        ++pos;
        parents.push_back(parent);
        flags.push_back(c == 'd' ? 1 : 0);
        return static_cast<int>(parents.size()) - 1;
    };

    int current = read_vertex(-1);
    for (;;) {
        skip_ws();
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            open.push_back(current);
            current = read_vertex(open.back());
            continue;
        }
        // close as many frames as the input demands
        for (;;) {
            skip_ws();
            if (!open.empty() && pos < text.size() && text[pos] == ',') {
                ++pos;
                current = read_vertex(open.back());
                break;
            }
            if (!open.empty() && pos < text.size() && text[pos] == ']') {
                ++pos;
                current = open.back();
                open.pop_back();
                continue;
            }
            if (!open.empty())
                throw ParseError("expected ',' or ']'", pos);
            if (pos != text.size()) throw ParseError("trailing input", pos);
            return MarkedTree::from_parents(std::move(parents), std::move(flags));
        }
    }
}

inline std::string serialize_compact(const MarkedTree& t) {
    std::string out;
    // frames: (vertex, next child index)
    std::vector<std::pair<int, std::size_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& ch = t.children(v);
        if (next == 0) out += t.is_descent(v) ? 'd' : 'a';
        if (next < ch.size()) {
            out += next == 0 ? '[' : ',';
            int c = ch[next];
            ++next;
            stack.emplace_back(c, 0);
        } else {
            if (!ch.empty()) out += ']';
            stack.pop_back();
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// surgery helpers
// ---------------------------------------------------------------------------

namespace detail {

// Rebuild a tree given explicit child lists over old ids, renumbering
// pre-order from new_root.  old_to_new, when given, receives -1 for dropped
// vertices.
inline MarkedTree rebuild_preorder(int new_root,
                                   const std::vector<std::vector<int>>& kids,
                                   const std::vector<char>& marks,
                                   std::vector<int>* old_to_new = nullptr) {
    std::vector<int> map(marks.size(), -1);
    std::vector<int> order;
    std::vector<int> stack{new_root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        map[v] = static_cast<int>(order.size());
        order.push_back(v);
        const auto& ch = kids[v];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    const int s = static_cast<int>(order.size());
    std::vector<int> parents(s, -1);
    std::vector<char> flags(s, 0);
    for (int old : order) {
        flags[map[old]] = marks[old];
        for (int c : kids[old]) parents[map[c]] = map[old];
    }
    if (old_to_new) *old_to_new = std::move(map);
    return MarkedTree::from_parents(std::move(parents), std::move(flags));
}

inline std::vector<std::vector<int>> child_lists(const MarkedTree& t) {
    std::vector<std::vector<int>> kids(t.size());
    for (int v = 0; v < t.size(); ++v) kids[v] = t.children(v);
    return kids;
}

inline std::vector<char> mark_flags(const MarkedTree& t) { return t.descent_flags(); }

}  // namespace detail

// Per-vertex subtree sizes.
inline std::vector<int> hook_lengths(const MarkedTree& t) {
    std::vector<int> hooks(t.size(), 1);
    auto order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (v != t.root()) hooks[t.parent(v)] += hooks[v];
    }
    return hooks;
}

// Number of labelings with no descent at all: s! / prod of hook lengths.
inline BigInt natlab(const MarkedTree& t) {
    BigInt denom = 1;
    for (int h : hook_lengths(t)) denom *= h;
    return factorial(t.size()) / denom;
}

// G(T;n): chain of n - size() ascent vertices grafted above the root.
inline MarkedTree extend(const MarkedTree& t, int n) {
    const int s = t.size();
    if (n < s) throw TreeError("extend: n below tree size");
    if (n == s) return t;
    std::vector<int> parents(n);
    std::vector<char> flags(n, 0);
    for (int v = 0; v < s; ++v) {
        parents[v] = t.parent(v);
        flags[v] = t.is_descent(v) ? 1 : 0;
    }
    parents[t.root()] = s;
    for (int v = s; v < n - 1; ++v) parents[v] = v + 1;
    parents[n - 1] = -1;
    return MarkedTree::from_parents(std::move(parents), std::move(flags));
}

struct Labeling {
    int tree_size = 0;            // n
    std::vector<int> labels;      // labels[v] in 1..n, bijective
};

// {v : w(v) > w(parent(v))}, root excluded; validates the bijection.
inline std::vector<int> descent_set_of(const MarkedTree& g, const Labeling& w) {
    if (w.tree_size != g.size() || static_cast<int>(w.labels.size()) != g.size())
        throw TreeError("labeling size does not match tree");
    std::vector<char> seen(g.size() + 1, 0);
    for (int l : w.labels) {
        if (l < 1 || l > g.size() || seen[l]) throw TreeError("labels are not a bijection onto 1..n");
        seen[l] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (v != g.root() && w.labels[v] > w.labels[g.parent(v)]) out.push_back(v);
    return out;
}

// A labeling of G(T;n) whose descent set is exactly the marked set: descent
// vertices take n, n-1, ... deepest level first, then ascent vertices take
// 1, 2, ... in the same sweep order.  Within a level: stored order.
inline Labeling witness_labeling(const MarkedTree& t, int n) {
    if (n <= t.size()) throw TreeError("witness_labeling: need n > tree size");
    MarkedTree g = extend(t, n);
    auto depth = g.depths();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return depth[a] > depth[b]; });
    Labeling w;
    w.tree_size = n;
    w.labels.assign(n, 0);
    int hi = n, lo = 1;
    for (int v : order)
        if (g.is_descent(v)) w.labels[v] = hi--;
    for (int v : order)
        if (!g.is_descent(v)) w.labels[v] = lo++;
    return w;
}

inline MarkedTree toggle(const MarkedTree& t, int v, Mark to) {
    t.check_vertex(v);
    std::vector<int> parents(t.size());
    auto flags = detail::mark_flags(t);
    for (int u = 0; u < t.size(); ++u) parents[u] = t.parent(u);
    flags[v] = to == Mark::Descent ? 1 : 0;
    return MarkedTree::from_parents(std::move(parents), std::move(flags));
}

// (subtree rooted at v, remainder); the remainder is empty when v is the root.
inline std::pair<MarkedTree, std::optional<MarkedTree>> split(const MarkedTree& t, int v) {
    t.check_vertex(v);
    auto kids = detail::child_lists(t);
    auto marks = detail::mark_flags(t);
    MarkedTree sub = detail::rebuild_preorder(v, kids, marks);
    if (v == t.root()) return {std::move(sub), std::nullopt};
    auto& pk = kids[t.parent(v)];
    pk.erase(std::find(pk.begin(), pk.end(), v));
    MarkedTree rest = detail::rebuild_preorder(t.root(), kids, marks);
    return {std::move(sub), std::move(rest)};
}

// The 2^{c(v)} trees with v contracted into its parent; configuration r is a
// bitmask, bit i marking the i-th former child (stored order) as a descent.
inline std::vector<MarkedTree> contract_configs(const MarkedTree& t, int v) {
    t.check_vertex(v);
    if (v == t.root()) throw TreeError("contract_configs: cannot contract the root");
    auto kids = detail::child_lists(t);
    auto marks = detail::mark_flags(t);
    const std::vector<int> moved = kids[v];
    auto& pk = kids[t.parent(v)];
    auto at = std::find(pk.begin(), pk.end(), v);
    at = pk.erase(at);
    pk.insert(at, moved.begin(), moved.end());
    kids[v].clear();
    const int c = static_cast<int>(moved.size());
    std::vector<MarkedTree> out;
    out.reserve(std::size_t{1} << c);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << c); ++r) {
        auto cfg = marks;
        for (int i = 0; i < c; ++i) cfg[moved[i]] = (r >> i) & 1 ? 1 : 0;
        out.push_back(detail::rebuild_preorder(t.root(), kids, cfg));
    }
    return out;
}

// Descent vertices none of whose proper ancestors is a descent.
inline std::vector<int> maximal_descents(const MarkedTree& t) {
    std::vector<char> blocked(t.size(), 0);
    std::vector<int> out;
    for (int v : t.preorder()) {
        const bool above = v != t.root() && (blocked[t.parent(v)] || t.is_descent(t.parent(v)));
        blocked[v] = above ? 1 : 0;
        if (t.is_descent(v) && !above) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Degree of the descent polynomial: sum of hooks over maximal descents.
inline int degree(const MarkedTree& t) {
    auto hooks = hook_lengths(t);
    int h = 0;
    for (int v : maximal_descents(t)) h += hooks[v];
    return h;
}

inline MarkedTree add_ascent_root(const MarkedTree& t) {
    const int s = t.size();
    std::vector<int> parents(s + 1);
    std::vector<char> flags(s + 1, 0);
    // new root takes index 0; old vertices shift by one, preserving order
    parents[0] = -1;
    for (int v = 0; v < s; ++v) {
        parents[v + 1] = t.parent(v) == -1 ? 0 : t.parent(v) + 1;
        flags[v + 1] = t.is_descent(v) ? 1 : 0;
    }
    auto lifted = MarkedTree::from_parents(std::move(parents), std::move(flags));
    // renumber so the result is in pre-order regardless of t's numbering
    return detail::rebuild_preorder(0, detail::child_lists(lifted), detail::mark_flags(lifted));
}

// Mark-aware encoding invariant under reordering of sibling subtrees.
inline std::string canonical_key(const MarkedTree& t) {
    std::vector<std::string> key(t.size());
    auto order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> parts;
        parts.reserve(t.children(v).size());
        for (int c : t.children(v)) parts.push_back(std::move(key[c]));
        std::sort(parts.begin(), parts.end());
        std::string k(1, t.is_descent(v) ? 'd' : 'a');
        if (!parts.empty()) {
            k += '[';
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) k += ',';
                k += parts[i];
            }
            k += ']';
        }
        key[v] = std::move(k);
    }
    return key[t.root()];
}

}  // namespace descent
