#pragma once

// The poset attached to a marked tree (descent children sit above their
// parent, ascent children below), linear-extension counting over downset
// bitmasks, height polynomials, and the height description of the ABAR
// coefficients.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "descent/basis.hpp"
#include "descent/expansions.hpp"
#include "descent/numeric.hpp"
#include "descent/tree.hpp"

namespace descent {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const BigInt& default_extension_cap() {
    static const BigInt cap(10'000'000);
    return cap;
}

struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers;  // (lower, upper), irredundant
    std::vector<std::uint32_t> below;         // strictly-lower sets, transitive
    std::vector<std::uint32_t> above;

    static Poset from_covers(int n, std::vector<std::pair<int, int>> covers) {
        if (n < 0 || n > 31) throw std::invalid_argument("poset: size must be in 0..31");
        Poset p;
        p.n = n;
        p.below.assign(n, 0);
        p.above.assign(n, 0);
        for (auto [lo, hi] : covers)
            if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
                throw std::invalid_argument("poset: bad cover relation");
        // transitive closure to a fixpoint; cheap at these sizes
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [lo, hi] : covers) {
                const std::uint32_t want = p.below[lo] | (std::uint32_t{1} << lo);
                if ((p.below[hi] & want) != want) {
                    p.below[hi] |= want;
                    changed = true;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (p.below[v] & (std::uint32_t{1} << v))
                throw std::invalid_argument("poset: relation contains a cycle");
            for (int u = 0; u < n; ++u)
                if (p.below[v] & (std::uint32_t{1} << u)) p.above[u] |= std::uint32_t{1} << v;
        }
        // drop covers implied through an intermediate element
        for (auto [lo, hi] : covers) {
            const std::uint32_t between = p.above[lo] & p.below[hi];
            if (between == 0) p.covers.emplace_back(lo, hi);
        }
        std::sort(p.covers.begin(), p.covers.end());
        p.covers.erase(std::unique(p.covers.begin(), p.covers.end()), p.covers.end());
        return p;
    }

    bool less(int a, int b) const { return (below[b] >> a) & 1; }
};

// One element per tree vertex; a descent child lies above its parent, an
// ascent child below.
inline Poset build_poset(const MarkedTree& t) {
    std::vector<std::pair<int, int>> covers;
    for (int v = 0; v < t.size(); ++v) {
        if (v == t.root()) continue;
        if (t.is_descent(v))
            covers.emplace_back(t.parent(v), v);
        else
            covers.emplace_back(v, t.parent(v));
    }
    return Poset::from_covers(t.size(), std::move(covers));
}

namespace detail {

// Linear-extension count of the subposet induced on `mask`, memoized.
class ExtensionCounter {
public:
    explicit ExtensionCounter(const Poset& p) : p_(p) {}

    const BigInt& count(std::uint32_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        BigInt total = 0;
        if (mask == 0) {
            total = 1;
        } else {
            for (int v = 0; v < p_.n; ++v) {
                const std::uint32_t bit = std::uint32_t{1} << v;
                if (!(mask & bit)) continue;
                if (p_.below[v] & mask) continue;  // not minimal in the induced poset
                total += count(mask ^ bit);
            }
        }
        return memo_.emplace(mask, std::move(total)).first->second;
    }

private:
    const Poset& p_;
    std::unordered_map<std::uint32_t, BigInt> memo_;
};

}  // namespace detail

inline BigInt count_linear_extensions(const Poset& p) {
    if (p.n > 24) throw CapExceeded("poset too large for exact extension counting");
    detail::ExtensionCounter counter(p);
    const std::uint32_t full = p.n == 0 ? 0 : (std::uint32_t{1} << p.n) - 1;
    return counter.count(full);
}

// Exact count plus an enumerator that yields each extension once, as the
// element sequence in extension order.
struct LinearExtensions {
    Poset poset;
    BigInt count;

    void for_each(const std::function<void(const std::vector<int>&)>& fn) const {
        std::vector<int> seq;
        seq.reserve(poset.n);
        const std::uint32_t full = poset.n == 0 ? 0 : (std::uint32_t{1} << poset.n) - 1;
        enumerate(full, seq, fn);
    }

private:
    void enumerate(std::uint32_t remaining, std::vector<int>& seq,
                   const std::function<void(const std::vector<int>&)>& fn) const {
        if (remaining == 0) {
            fn(seq);
            return;
        }
        for (int v = 0; v < poset.n; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << v;
            if (!(remaining & bit)) continue;
            if (poset.below[v] & remaining) continue;
            seq.push_back(v);
            enumerate(remaining ^ bit, seq, fn);
            seq.pop_back();
        }
    }
};

inline LinearExtensions linear_extensions(const Poset& p,
                                          const BigInt& cap = default_extension_cap()) {
    BigInt c = count_linear_extensions(p);
    if (c > cap) throw CapExceeded("linear extension count " + c.str() + " exceeds cap");
    return LinearExtensions{p, std::move(c)};
}

struct HeightPolynomial {
    int element = 0;
    std::vector<BigInt> counts;  // counts[k] = extensions placing the element at k+1

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
};

// counts[k] = number of linear extensions with element v at position k+1:
// sum over k-element downsets D containing everything below v of
// ext(D) * ext(complement minus v).
inline HeightPolynomial height_polynomial(const Poset& p, int v,
                                          const BigInt& cap = default_extension_cap()) {
    if (v < 0 || v >= p.n) throw std::invalid_argument("height_polynomial: bad element");
    if (p.n > 24) throw CapExceeded("poset too large for exact extension counting");
    detail::ExtensionCounter counter(p);
    const std::uint32_t full = (std::uint32_t{1} << p.n) - 1;
    if (counter.count(full) > cap)
        throw CapExceeded("linear extension count exceeds cap");
    HeightPolynomial out;
    out.element = v;
    out.counts.assign(p.n, BigInt(0));
    const std::uint32_t vbit = std::uint32_t{1} << v;
    for (std::uint32_t d = 0; d <= full; ++d) {
        if (d & vbit) continue;
        if ((p.below[v] & d) != p.below[v]) continue;
        bool downset = true;
        for (int u = 0; u < p.n && downset; ++u)
            if ((d >> u) & 1) downset = (p.below[u] & d) == p.below[u];
        if (!downset) continue;
        const int k = __builtin_popcount(d);
        out.counts[k] += counter.count(d) * counter.count(full & ~(d | vbit));
    }
    return out;
}

// ABAR coefficients read off the root element's height counts, for trees
// whose root is an ascent with all children descents: with h = degree,
// abar_{-1} = 0 and abar_k = counts[h-1-k].
inline BasisExpansion abar_via_heights(const MarkedTree& t,
                                       const BigInt& cap = default_extension_cap()) {
    if (classify(t) != QualifyingClass::AscentRootAllDescentChildren)
        throw std::invalid_argument(
            "abar_via_heights: root must be an ascent with all children descents");
    const int h = degree(t);  // = size - 1
    const HeightPolynomial hp = height_polynomial(build_poset(t), t.root(), cap);
    BasisExpansion e;
    e.basis = Basis::Abar;
    e.degree_param = h;
    e.coeffs.assign(h + 1, BigInt(0));
    for (int k = 0; k + 1 <= h; ++k) e.coeffs[1 + k] = hp.counts[h - 1 - k];
    return e;
}

}  // namespace descent
