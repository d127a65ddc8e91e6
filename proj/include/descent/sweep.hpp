#pragma once

// Exhaustive property sweep: enumerate every marked tree up to a size bound,
// run the selected check suites in parallel, and emit a deterministic
// machine-readable report.  Reports from different worker counts are
// identical apart from the wall-time field.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "descent/basis.hpp"
#include "descent/engine.hpp"
#include "descent/enumerate.hpp"
#include "descent/expansions.hpp"
#include "descent/poset.hpp"
#include "descent/roots.hpp"
#include "descent/tree.hpp"

namespace descent {

enum class Check { Agreement, Degree, Roots, Expansions, Poset, Identities, Witness, Natlab };

inline const std::vector<std::pair<Check, std::string>>& all_checks() {
    static const std::vector<std::pair<Check, std::string>> v = {
        {Check::Agreement, "agreement"}, {Check::Degree, "degree"},
        {Check::Roots, "roots"},         {Check::Expansions, "expansions"},
        {Check::Poset, "poset"},         {Check::Identities, "identities"},
        {Check::Witness, "witness"},     {Check::Natlab, "natlab"},
    };
    return v;
}

inline std::string check_name(Check c) {
    for (const auto& [check, name] : all_checks())
        if (check == c) return name;
    return "?";
}

inline Check check_from_name(const std::string& name) {
    for (const auto& [check, n] : all_checks())
        if (n == name) return check;
    throw std::invalid_argument("unknown check: " + name);
}

struct SweepConfig {
    int max_size = 6;
    std::vector<Check> checks;  // empty = all
    int brute_cap = kDefaultBruteCap;
    int worker_count = 1;
    std::string out_path;       // echoed into the report; writing is the caller's job
    std::string tree_filter;    // compact form; restricts the sweep to one marked tree
    bool inject_natlab_fault = false;  // harness self-test hook

    std::vector<Check> effective_checks() const {
        if (!checks.empty()) return checks;
        std::vector<Check> v;
        for (const auto& [check, name] : all_checks()) v.push_back(check);
        return v;
    }
};

struct Counterexample {
    std::string tree;    // compact form
    std::string detail;  // failing fact, values, and a reproducer command line
};

struct CheckStats {
    std::string name;
    long long pass = 0;
    long long fail = 0;
    std::vector<Counterexample> counterexamples;
};

struct SweepReport {
    SweepConfig config;
    long long marked_trees = 0;
    long long pass = 0;
    long long fail = 0;
    std::vector<CheckStats> checks;
    long long wall_time_ms = 0;

    bool all_pass() const { return fail == 0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        nlohmann::ordered_json cfg;
        cfg["max_size"] = config.max_size;
        nlohmann::ordered_json names = nlohmann::json::array();
        for (Check c : config.effective_checks()) names.push_back(check_name(c));
        cfg["checks"] = names;
        cfg["brute_cap"] = config.brute_cap;
        cfg["worker_count"] = config.worker_count;
        cfg["out"] = config.out_path;
        cfg["tree_filter"] = config.tree_filter;
        cfg["inject_natlab_fault"] = config.inject_natlab_fault;
        j["config"] = cfg;
        j["totals"] = {{"marked_trees", marked_trees}, {"pass", pass}, {"fail", fail}};
        j["checks"] = nlohmann::json::array();
        for (const auto& cs : checks) {
            nlohmann::ordered_json c;
            c["name"] = cs.name;
            c["pass"] = cs.pass;
            c["fail"] = cs.fail;
            c["counterexamples"] = nlohmann::json::array();
            for (const auto& ce : cs.counterexamples)
                c["counterexamples"].push_back({{"tree", ce.tree}, {"detail", ce.detail}});
            j["checks"].push_back(c);
        }
        j["wall_time_ms"] = wall_time_ms;
        return j;
    }
};

namespace detail {

struct SweepWorkerState {
    MemoCache cut_cache;                 // persists across trees within the worker
    std::set<std::string> downgrades;    // logged once at the end of the sweep
};

using FailList = std::vector<std::string>;

inline MarkedTree reversed_children(const MarkedTree& t) {
    auto kids = child_lists(t);
    for (auto& k : kids) std::reverse(k.begin(), k.end());
    return rebuild_preorder(t.root(), kids, mark_flags(t));
}

// Reattach `sub` (the subtree split off at v) under v's original parent at
// v's original position and rebuild; must reproduce t exactly.
inline MarkedTree regraft(const MarkedTree& t, int v, const MarkedTree& sub,
                          const MarkedTree& rest) {
    // position of v's parent within the pruned pre-order equals its new index
    std::vector<char> dropped(t.size(), 0);
    {
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            dropped[u] = 1;
            for (int c : t.children(u)) stack.push_back(c);
        }
    }
    const int p_old = t.parent(v);
    int pos = 0;
    for (int c : t.children(p_old)) {
        if (c == v) break;
        ++pos;
    }
    int p_new = 0, seen = 0;
    for (int u : t.preorder()) {
        if (dropped[u]) continue;
        if (u == p_old) {
            p_new = seen;
            break;
        }
        ++seen;
    }
    const int nr = rest.size(), ns = sub.size();
    std::vector<std::vector<int>> kids(nr + ns);
    std::vector<char> marks(nr + ns, 0);
    for (int u = 0; u < nr; ++u) {
        kids[u] = rest.children(u);
        marks[u] = rest.is_descent(u) ? 1 : 0;
    }
    for (int u = 0; u < ns; ++u) {
        for (int c : sub.children(u)) kids[nr + u].push_back(nr + c);
        marks[nr + u] = sub.is_descent(u) ? 1 : 0;
    }
    kids[p_new].insert(kids[p_new].begin() + pos, nr + sub.root());
    return rebuild_preorder(rest.root(), kids, marks);
}

inline std::string repro_command(const SweepConfig& cfg, Check c, const MarkedTree& t) {
    return "descent sweep --max-size " + std::to_string(t.size()) + " --checks " +
           check_name(c) + " --brute-cap " + std::to_string(cfg.brute_cap) + " --tree '" +
           serialize_compact(t) + "' --out -";
}

inline FailList check_agreement(const MarkedTree& t, const SweepConfig& cfg,
                                SweepWorkerState& ws) {
    FailList fails;
    const int s = t.size();
    const ExactPolynomial exp_poly = poly_explicit(t);
    MemoCache ac_cache, sh_cache;
    for (int n = s; n <= s + 2; ++n) {
        const BigInt cut = count_cut(t, n, ws.cut_cache);
        if (count_cut(t, n) != cut)
            fails.push_back("cut with shared cache differs from fresh at n=" + std::to_string(n));
        const BigInt asc = count_ascent_cut(t, n, ac_cache);
        if (asc != cut)
            fails.push_back("ascent-cut " + asc.str() + " != cut " + cut.str() + " at n=" +
                            std::to_string(n));
        const BigInt shf = count_shift(t, n, sh_cache);
        if (shf != cut)
            fails.push_back("shift " + shf.str() + " != cut " + cut.str() + " at n=" +
                            std::to_string(n));
        const Rational ev = exp_poly(BigInt(n));
        if (ev != Rational(cut))
            fails.push_back("explicit " + to_string(ev) + " != cut " + cut.str() + " at n=" +
                            std::to_string(n));
        if (n <= cfg.brute_cap) {
            const BigInt brute = count_brute(t, n, cfg.brute_cap);
            if (brute != cut)
                fails.push_back("brute " + brute.str() + " != cut " + cut.str() + " at n=" +
                                std::to_string(n));
        } else {
            ws.downgrades.insert("agreement: brute comparison skipped for n > " +
                                 std::to_string(cfg.brute_cap) +
                                 " (cap); four-way agreement still checked");
        }
    }
    return fails;
}

inline FailList check_degree(const MarkedTree& t, const ExactPolynomial& p) {
    FailList fails;
    const int h = degree(t);
    if (p.degree() != h)
        fails.push_back("polynomial degree " + std::to_string(p.degree()) +
                        " != hook degree " + std::to_string(h));
    else if (!(p.leading() > 0))
        fails.push_back("leading coefficient not positive: " + to_string(p.leading()));
    for (int n = t.size() + 1; n <= t.size() + 3; ++n) {
        const Rational v = p(BigInt(n));
        if (!is_integer(v) || v <= 0)
            fails.push_back("value at n=" + std::to_string(n) +
                            " is not a positive integer: " + to_string(v));
    }
    return fails;
}

inline FailList check_roots(const MarkedTree& t, const ExactPolynomial& p) {
    FailList fails;
    const RootReport rep = verify_roots(t, p);
    for (const auto& v : rep.verdicts)
        if (v.applicable && !v.pass)
            fails.push_back(v.name + (v.detail.empty() ? "" : ": " + v.detail));
    return fails;
}

inline FailList check_expansions(const MarkedTree& t, const ExactPolynomial& p,
                                 SweepWorkerState& ws) {
    FailList fails;
    const int h = degree(t);
    BasisExpansion ea, eb;
    for (Basis b : {Basis::A, Basis::Abar, Basis::C, Basis::Nk}) {
        BasisExpansion e;
        try {
            e = to_basis(p, b, h);
        } catch (const NonIntegerCoefficients& ex) {
            fails.push_back(basis_name(b) + "-basis: " + ex.what());
            continue;
        }
        if (from_basis(e) != p) fails.push_back(basis_name(b) + "-basis round trip failed");
        if (b == Basis::A) ea = e;
        if (b == Basis::Abar) eb = e;
    }
    if (!fails.empty()) return fails;
    if (classify(t) == QualifyingClass::Other) return fails;

    const SeqPredicates ap = seq_predicates(ea.coeffs);
    if (ea.coeffs.front() != 0) fails.push_back("a_0 != 0: " + ea.coeffs.front().str());
    if (!ap.nonnegative) fails.push_back("a-coefficients not nonnegative");
    if (!ap.log_concave) fails.push_back("a-coefficients not log-concave");

    if (eb.coeffs.front() != 0) fails.push_back("abar_{-1} != 0: " + eb.coeffs.front().str());
    const std::vector<BigInt> tail(eb.coeffs.begin() + 1, eb.coeffs.end());
    const SeqPredicates bp = seq_predicates(tail);
    if (!bp.nonnegative) fails.push_back("abar-coefficients not nonnegative");
    if (!bp.increasing) fails.push_back("abar-coefficients not increasing");
    if (!bp.log_concave) fails.push_back("abar-coefficients not log-concave");

    if (!identity_eq5_holds(ea, eb))
        fails.push_back("a(x) != x * abar(x+1)");

    if (h <= 4) {
        for (int k = 0; k <= h; ++k) {
            const BigInt oracle = a_coeff_oracle(t, k);
            if (oracle != ea.coeffs[k]) {
                fails.push_back("labeling-count oracle a_" + std::to_string(k) + " = " +
                                oracle.str() + " != expansion " + ea.coeffs[k].str());
                break;
            }
        }
    } else {
        ws.downgrades.insert(
            "expansions: labeling-count oracle skipped for degree > 4 (cap)");
    }
    return fails;
}

inline FailList check_poset(const MarkedTree& t, const ExactPolynomial& p) {
    FailList fails;
    const Poset poset = build_poset(t);
    const BigInt total = count_linear_extensions(poset);
    for (int v = 0; v < poset.n; ++v) {
        if (height_polynomial(poset, v).total() != total) {
            fails.push_back("height counts of element " + std::to_string(v) +
                            " do not sum to the extension count");
            break;
        }
    }
    if (classify(t) == QualifyingClass::AscentRootAllDescentChildren) {
        const BasisExpansion via = abar_via_heights(t);
        const BasisExpansion direct = to_basis(p, Basis::Abar, degree(t));
        if (via.coeffs != direct.coeffs)
            fails.push_back("height-read abar coefficients differ from the direct expansion");
        const HeightPolynomial hp = height_polynomial(poset, t.root());
        std::vector<BigInt> rev(hp.counts.rbegin(), hp.counts.rend());
        const SeqPredicates sp = seq_predicates(rev);
        if (!sp.increasing) fails.push_back("root height counts not decreasing");
        if (!sp.log_concave) fails.push_back("root height counts not log-concave");
    }
    return fails;
}

inline FailList check_identities(const MarkedTree& t, const ExactPolynomial& p,
                                 SweepWorkerState& ws) {
    FailList fails;
    const int h = degree(t);
    try {
        to_basis(p, Basis::C, h);
    } catch (const NonIntegerCoefficients& ex) {
        fails.push_back(std::string("c-basis integrality: ") + ex.what());
    }
    const MarkedTree lifted = add_ascent_root(t);
    ExactPolynomial lifted_poly;
    {
        std::vector<std::pair<BigInt, BigInt>> samples;
        for (int n = lifted.size(); n <= lifted.size() + degree(lifted); ++n)
            samples.emplace_back(BigInt(n), count_cut(lifted, n, ws.cut_cache));
        lifted_poly = interpolate(samples);
    }
    if (lifted_poly != p) fails.push_back("grafting an ascent root changed the polynomial");
    const MarkedTree rev = reversed_children(t);
    if (canonical_key(rev) != canonical_key(t))
        fails.push_back("canonical key changed under sibling reversal");
    {
        std::vector<std::pair<BigInt, BigInt>> samples;
        for (int n = rev.size(); n <= rev.size() + degree(rev); ++n)
            samples.emplace_back(BigInt(n), count_cut(rev, n, ws.cut_cache));
        if (interpolate(samples) != p)
            fails.push_back("sibling reversal changed the polynomial");
    }
    return fails;
}

inline FailList check_witness(const MarkedTree& t) {
    FailList fails;
    const std::vector<int> want = t.descent_vertices();
    for (int n = t.size() + 1; n <= t.size() + 3; ++n) {
        const Labeling w = witness_labeling(t, n);
        if (descent_set_of(extend(t, n), w) != want) {
            fails.push_back("witness labeling does not realize the marked set at n=" +
                            std::to_string(n));
        }
    }
    return fails;
}

inline FailList check_natlab(const MarkedTree& t, const SweepConfig& cfg,
                             SweepWorkerState& ws) {
    FailList fails;
    const int s = t.size();
    const auto hooks = hook_lengths(t);
    if (hooks[t.root()] != s) fails.push_back("root hook != tree size");
    for (int v = 0; v < s; ++v) {
        int sum = 1;
        for (int c : t.children(v)) sum += hooks[c];
        if (hooks[v] != sum) fails.push_back("hook inconsistency at vertex " + std::to_string(v));
        if (t.is_leaf(v) && hooks[v] != 1) fails.push_back("leaf hook != 1");
    }
    BigInt nat = natlab(t);
    if (cfg.inject_natlab_fault) nat += 1;
    if (s <= cfg.brute_cap) {
        std::vector<int> parents(s);
        for (int v = 0; v < s; ++v) parents[v] = t.parent(v);
        const MarkedTree unmarked =
            MarkedTree::from_parents(std::move(parents), std::vector<char>(s, 0));
        const BigInt brute = count_brute(unmarked, s, cfg.brute_cap);
        if (brute != nat)
            fails.push_back("hook-length count " + nat.str() +
                            " != brute natural-labeling count " + brute.str());
    } else {
        ws.downgrades.insert("natlab: brute comparison skipped for size > " +
                             std::to_string(cfg.brute_cap) + " (cap)");
    }
    for (int v = 0; v < s; ++v) {
        if (v == t.root()) continue;
        auto [sub, rest] = split(t, v);
        if (serialize_compact(regraft(t, v, sub, *rest)) != serialize_compact(t)) {
            fails.push_back("split/regraft at vertex " + std::to_string(v) +
                            " does not reproduce the tree");
        }
    }
    return fails;
}

}  // namespace detail

inline SweepReport run_sweep(const SweepConfig& cfg) {
    if (cfg.max_size < 1) throw std::invalid_argument("run_sweep: max_size must be >= 1");
    const auto started = std::chrono::steady_clock::now();
    const std::vector<Check> enabled = cfg.effective_checks();

    std::string filter_key;
    if (!cfg.tree_filter.empty()) filter_key = canonical_key(parse_tree(cfg.tree_filter));

    struct Task {
        int size;
        int shape_index;
    };
    std::vector<Task> tasks;
    std::vector<std::vector<MarkedTree>> shapes_by_size(cfg.max_size + 1);
    for (int s = 1; s <= cfg.max_size; ++s) {
        shapes_by_size[s] = enum_rooted_trees(s);
        for (int i = 0; i < static_cast<int>(shapes_by_size[s].size()); ++i)
            tasks.push_back({s, i});
    }

    struct TaggedCounterexample {
        long long order;  // (size, shape, mask) collapsed for sorting
        Counterexample ce;
    };
    struct LocalResult {
        std::vector<long long> pass, fail;
        std::vector<std::vector<TaggedCounterexample>> ces;
        long long trees = 0;
        std::set<std::string> downgrades;
    };

    const int workers = std::max(1, cfg.worker_count);
    std::vector<LocalResult> results(workers);
    std::atomic<std::size_t> next_task{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker_fn = [&](int wid) {
        LocalResult& local = results[wid];
        local.pass.assign(enabled.size(), 0);
        local.fail.assign(enabled.size(), 0);
        local.ces.resize(enabled.size());
        detail::SweepWorkerState ws;
        try {
            for (;;) {
                const std::size_t ti = next_task.fetch_add(1);
                if (ti >= tasks.size()) break;
                const Task task = tasks[ti];
                const MarkedTree& shape = shapes_by_size[task.size][task.shape_index];
                const int s = task.size;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
                    const MarkedTree t = with_descent_mask(shape, mask);
                    if (!filter_key.empty() && canonical_key(t) != filter_key) continue;
                    ++local.trees;
                    // shared polynomial for the checks that consume it
                    ExactPolynomial poly;
                    bool have_poly = false;
                    auto polynomial = [&]() -> const ExactPolynomial& {
                        if (!have_poly) {
                            std::vector<std::pair<BigInt, BigInt>> samples;
                            for (int n = s; n <= s + degree(t); ++n)
                                samples.emplace_back(BigInt(n), count_cut(t, n, ws.cut_cache));
                            poly = interpolate(samples);
                            have_poly = true;
                        }
                        return poly;
                    };
                    const long long order =
                        ((static_cast<long long>(task.size) * 100000) +
                         task.shape_index) * (1LL << 20) + static_cast<long long>(mask);
                    for (std::size_t ci = 0; ci < enabled.size(); ++ci) {
                        detail::FailList fails;
                        try {
                            switch (enabled[ci]) {
                                case Check::Agreement:
                                    fails = detail::check_agreement(t, cfg, ws);
                                    break;
                                case Check::Degree:
                                    fails = detail::check_degree(t, polynomial());
                                    break;
                                case Check::Roots:
                                    fails = detail::check_roots(t, polynomial());
                                    break;
                                case Check::Expansions:
                                    fails = detail::check_expansions(t, polynomial(), ws);
                                    break;
                                case Check::Poset:
                                    fails = detail::check_poset(t, polynomial());
                                    break;
                                case Check::Identities:
                                    fails = detail::check_identities(t, polynomial(), ws);
                                    break;
                                case Check::Witness:
                                    fails = detail::check_witness(t);
                                    break;
                                case Check::Natlab:
                                    fails = detail::check_natlab(t, cfg, ws);
                                    break;
                            }
                        } catch (const std::exception& e) {
                            fails.push_back(std::string("exception: ") + e.what());
                        }
                        if (fails.empty()) {
                            ++local.pass[ci];
                        } else {
                            ++local.fail[ci];
                            std::string detail;
                            for (const auto& f : fails) {
                                if (!detail.empty()) detail += "; ";
                                detail += f;
                            }
                            detail += "; repro: " + detail::repro_command(cfg, enabled[ci], t);
                            local.ces[ci].push_back(
                                {order, {serialize_compact(t), std::move(detail)}});
                        }
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
        local.downgrades = std::move(ws.downgrades);
    };

    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker_fn, w);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    SweepReport report;
    report.config = cfg;
    report.checks.resize(enabled.size());
    std::set<std::string> downgrades;
    for (std::size_t ci = 0; ci < enabled.size(); ++ci) {
        auto& cs = report.checks[ci];
        cs.name = check_name(enabled[ci]);
        std::vector<TaggedCounterexample> all;
        for (const auto& local : results) {
            if (local.pass.empty()) continue;
            cs.pass += local.pass[ci];
            cs.fail += local.fail[ci];
            all.insert(all.end(), local.ces[ci].begin(), local.ces[ci].end());
        }
        std::sort(all.begin(), all.end(),
                  [](const TaggedCounterexample& a, const TaggedCounterexample& b) {
                      return a.order < b.order;
                  });
        for (auto& tc : all) cs.counterexamples.push_back(std::move(tc.ce));
        report.pass += cs.pass;
        report.fail += cs.fail;
    }
    for (const auto& local : results) {
        report.marked_trees += local.trees;
        downgrades.insert(local.downgrades.begin(), local.downgrades.end());
    }
    for (const auto& note : downgrades) std::cerr << "[sweep] downgrade: " << note << "\n";
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    return report;
}

}  // namespace descent
