#pragma once

// d(T;n), the number of labelings of G(T;n) whose descent set is exactly the
// marked set, computed by five mutually independent algorithms:
//
//   count_brute       enumerate all n! labelings (guarded by a cap)
//   count_cut         recursion pivoting at a descent vertex
//   count_ascent_cut  recursion pivoting at an ascent vertex
//   poly_explicit     signed sum over subsets of the descent set
//   count_shift       upward iteration of the n -> n+1 contraction identity
//
// All routes agree; the sweep harness checks that exhaustively.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "descent/numeric.hpp"
#include "descent/polynomial.hpp"
#include "descent/tree.hpp"

namespace descent {

inline constexpr int kDefaultBruteCap = 10;

enum class Algo { Brute, Cut, AscentCut, Explicit, Shift, Auto };

inline std::string algo_name(Algo a) {
    switch (a) {
        case Algo::Brute: return "brute";
        case Algo::Cut: return "cut";
        case Algo::AscentCut: return "ascent-cut";
        case Algo::Explicit: return "explicit";
        case Algo::Shift: return "shift";
        case Algo::Auto: return "auto";
    }
    return "?";
}

// Keyed by (canonical form, n); a cached value always equals a fresh
// computation, so caches may be shared between the recursive algorithms or
// instantiated per worker.
class MemoCache {
public:
    const BigInt* find(const std::string& key) const {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }

    void store(std::string key, BigInt value) { map_.emplace(std::move(key), std::move(value)); }

    std::size_t size() const { return map_.size(); }
    void clear() { map_.clear(); }

private:
    std::unordered_map<std::string, BigInt> map_;
};

namespace detail {

inline std::string memo_key(const MarkedTree& t, int n) {
    return canonical_key(t) + '|' + std::to_string(n);
}

inline void require_n_at_least_size(const MarkedTree& t, int n, const char* who) {
    if (n < t.size())
        throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                    " below tree size " + std::to_string(t.size()));
}

}  // namespace detail

// Exact |D(T;n)| by enumerating every labeling of G(T;n).  Cost n! * n.
inline BigInt count_brute(const MarkedTree& t, int n, int cap = kDefaultBruteCap) {
    detail::require_n_at_least_size(t, n, "count_brute");
    if (n > cap)
        throw std::invalid_argument("count_brute: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    const MarkedTree g = extend(t, n);
    // the root of G is never a descent, so a marked root is unrealizable
    if (g.is_descent(g.root())) return 0;
    std::vector<int> parent(n), want(n);
    for (int v = 0; v < n; ++v) {
        parent[v] = g.parent(v);
        want[v] = g.is_descent(v) ? 1 : 0;
    }
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v + 1;
    BigInt count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (parent[v] == -1) continue;
            ok = (labels[v] > labels[parent[v]]) == (want[v] == 1);
        }
        if (ok) ++count;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return count;
}

inline BigInt count_cut(const MarkedTree& t, int n, MemoCache& cache);
inline BigInt count_ascent_cut(const MarkedTree& t, int n, MemoCache& cache);
inline BigInt count_shift(const MarkedTree& t, int n, MemoCache& cache);

namespace detail {

// Pivot choice: a maximal descent vertex of maximal depth, smallest index on ties.
inline int cut_pivot(const MarkedTree& t) {
    auto maxdesc = maximal_descents(t);
    auto depth = t.depths();
    int best = maxdesc.front();
    for (int v : maxdesc)
        if (depth[v] > depth[best]) best = v;
    return best;
}

// Deepest non-root ascent vertex, smallest index on ties; -1 if none.
inline int ascent_pivot(const MarkedTree& t) {
    auto depth = t.depths();
    int best = -1;
    for (int v = 0; v < t.size(); ++v) {
        if (v == t.root() || t.is_descent(v)) continue;
        if (best == -1 || depth[v] > depth[best]) best = v;
    }
    return best;
}

}  // namespace detail

// d(T;n) = C(n,h_v) d(up(T)|_v ; h_v) d(T minus T_v ; n-h_v) - d(up(T); n)
// at a descent pivot v, where up(T) flips v to an ascent; d(empty;k) = 1.
inline BigInt count_cut(const MarkedTree& t, int n, MemoCache& cache) {
    detail::require_n_at_least_size(t, n, "count_cut");
    if (t.descent_count() == 0) return natlab(t);
    const std::string key = detail::memo_key(t, n);
    if (const BigInt* hit = cache.find(key)) return *hit;

    const int v = detail::cut_pivot(t);
    const int hv = hook_lengths(t)[v];
    auto [sub, rest] = split(t, v);
    const MarkedTree sub_up = toggle(sub, sub.root(), Mark::Ascent);
    BigInt middle = count_cut(sub_up, hv, cache);
    BigInt outside = rest ? count_cut(*rest, n - hv, cache) : BigInt(1);
    BigInt flipped = count_cut(toggle(t, v, Mark::Ascent), n, cache);
    BigInt result = binomial(BigInt(n), hv) * middle * outside - flipped;
    cache.store(key, result);
    return result;
}

// Same cut identity applied at an ascent pivot: the subtracted term gains a
// descent instead of losing one.  Falls back to count_cut once no non-root
// ascent vertex remains.
inline BigInt count_ascent_cut(const MarkedTree& t, int n, MemoCache& cache) {
    detail::require_n_at_least_size(t, n, "count_ascent_cut");
    if (t.descent_count() == 0) return natlab(t);
    const int v = detail::ascent_pivot(t);
    if (v == -1) return count_cut(t, n, cache);
    const std::string key = detail::memo_key(t, n);
    if (const BigInt* hit = cache.find(key)) return *hit;

    const int hv = hook_lengths(t)[v];
    auto [sub, rest] = split(t, v);
    BigInt middle = count_ascent_cut(sub, hv, cache);
    BigInt outside = count_ascent_cut(*rest, n - hv, cache);
    BigInt flipped = count_ascent_cut(toggle(t, v, Mark::Descent), n, cache);
    BigInt result = binomial(BigInt(n), hv) * middle * outside - flipped;
    cache.store(key, result);
    return result;
}

namespace detail {

// The contraction trees summed over in the n -> n+1 identity.  For a
// non-root vertex this is contract_configs; contracting the root folds it
// into the chain of G(T;n+1), which is the same tree with the root turned
// into an ascent and its children re-marked per configuration.
inline std::vector<MarkedTree> shift_configs(const MarkedTree& t, int v) {
    if (v != t.root()) return contract_configs(t, v);
    const auto& ch = t.children(v);
    const int c = static_cast<int>(ch.size());
    std::vector<MarkedTree> out;
    out.reserve(std::size_t{1} << c);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << c); ++r) {
        MarkedTree cfg = toggle(t, v, Mark::Ascent);
        for (int i = 0; i < c; ++i)
            cfg = toggle(cfg, ch[i], (r >> i) & 1 ? Mark::Descent : Mark::Ascent);
        out.push_back(std::move(cfg));
    }
    return out;
}

}  // namespace detail

// d(T;m+1) = d(T;m) + sum over descent leaves of d(T/v;m)
//                   + sum over non-leaf descents with no descent child of
//                     sum_r d((T/v)_r;m),
// iterated upward from d(T;s), which is taken from count_cut.
inline BigInt count_shift(const MarkedTree& t, int n, MemoCache& cache) {
    detail::require_n_at_least_size(t, n, "count_shift");
    const std::string key = detail::memo_key(t, n);
    if (const BigInt* hit = cache.find(key)) return *hit;

    BigInt result;
    if (n == t.size()) {
        result = count_cut(t, n, cache);
    } else {
        const int m = n - 1;
        result = count_shift(t, m, cache);
        for (int v : t.descent_vertices()) {
            if (t.is_leaf(v)) {
                if (v == t.root()) {
                    result += 1;  // the single vertex contracts into the chain
                } else {
                    result += count_shift(contract_configs(t, v).front(), m, cache);
                }
            } else {
                bool any_descent_child = false;
                for (int c : t.children(v)) any_descent_child |= t.is_descent(c);
                if (any_descent_child) continue;
                for (const MarkedTree& cfg : detail::shift_configs(t, v))
                    result += count_shift(cfg, m, cache);
            }
        }
    }
    cache.store(key, result);
    return result;
}

// Signed sum over subsets N of the descent set.  Cutting the parent edges of
// N inside G(T;n) leaves cut components plus a root component whose chain
// hooks telescope against n!, so the term for N is
//   t_N! * n(n-1)...(n-m_N+1) / prod of within-component hooks,
// with m_N the total size of the cut components and t_N = s - m_N.
inline ExactPolynomial poly_explicit(const MarkedTree& t) {
    const int s = t.size();
    std::vector<int> descents = t.descent_vertices();
    const int ds = static_cast<int>(descents.size());
    if (ds > 30) throw std::invalid_argument("poly_explicit: descent set too large");
    std::vector<int> slot(s, -1);
    for (int i = 0; i < ds; ++i) slot[descents[i]] = i;
    const auto order = t.preorder();
    std::vector<ExactPolynomial> ffact(s + 1);
    for (int m = 0; m <= s; ++m) ffact[m] = falling_factorial_poly(m);

    ExactPolynomial sum;
    std::vector<char> in_cut(s, 0);   // vertex lies weakly below a cut vertex
    std::vector<BigInt> hc(s);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ds); ++mask) {
        int cut_count = 0;
        for (int v : order) {
            const bool is_cut = slot[v] >= 0 && ((mask >> slot[v]) & 1);
            in_cut[v] = is_cut || (v != t.root() && in_cut[t.parent(v)]) ? 1 : 0;
            cut_count += is_cut;
        }
        int m_n = 0;
        for (int v = 0; v < s; ++v) m_n += in_cut[v];
        const int t_n = s - m_n;
        // hooks truncated at cut points give the within-component hooks
        BigInt denom = 1;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int v = *it;
            BigInt h = 1;
            for (int c : t.children(v))
                if (!(slot[c] >= 0 && ((mask >> slot[c]) & 1))) h += hc[c];
            hc[v] = h;
            denom *= h;
        }
        BigInt num = factorial(t_n);
        if ((ds - cut_count) % 2 != 0) num = -num;
        sum += ffact[m_n] * Rational(num, denom);
    }
    return sum;
}

// For value-based algorithms, interpolate from the h+1 samples at
// n = s .. s+h; the explicit algorithm builds the polynomial directly.
inline ExactPolynomial descent_polynomial(const MarkedTree& t, Algo algo = Algo::Auto,
                                          int brute_cap = kDefaultBruteCap) {
    if (algo == Algo::Explicit) return poly_explicit(t);
    const int s = t.size();
    const int h = degree(t);
    MemoCache cache;
    std::vector<std::pair<BigInt, BigInt>> samples;
    samples.reserve(h + 1);
    for (int n = s; n <= s + h; ++n) {
        BigInt y;
        switch (algo) {
            case Algo::Brute: y = count_brute(t, n, brute_cap); break;
            case Algo::AscentCut: y = count_ascent_cut(t, n, cache); break;
            case Algo::Shift: y = count_shift(t, n, cache); break;
            case Algo::Cut:
            case Algo::Auto:
            default: y = count_cut(t, n, cache); break;
        }
        samples.emplace_back(BigInt(n), std::move(y));
    }
    return interpolate(samples);
}

// Closed form when the root is the only descent: (C(n,s) - 1) * natlab(T).
inline ExactPolynomial poly_root_only(const MarkedTree& t) {
    if (!(t.descent_count() == 1 && t.is_descent(t.root())))
        throw std::invalid_argument("poly_root_only: descent set must be exactly the root");
    ExactPolynomial p = binomial_basis_poly(0, t.size());
    p -= ExactPolynomial::constant(1);
    return p * Rational(natlab(t));
}

// Convenience overloads with a private cache.
inline BigInt count_cut(const MarkedTree& t, int n) {
    MemoCache c;
    return count_cut(t, n, c);
}
inline BigInt count_ascent_cut(const MarkedTree& t, int n) {
    MemoCache c;
    return count_ascent_cut(t, n, c);
}
inline BigInt count_shift(const MarkedTree& t, int n) {
    MemoCache c;
    return count_shift(t, n, c);
}

}  // namespace descent
