#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "descent/enumerate.hpp"
#include "descent/sweep.hpp"

using namespace descent;

TEST_CASE("rooted tree shape counts") {
    const std::vector<std::size_t> want = {1, 1, 2, 4, 9, 20, 48, 115, 286};
    for (std::size_t s = 1; s <= want.size(); ++s)
        CHECK(enum_rooted_trees(static_cast<int>(s)).size() == want[s - 1]);
    CHECK_THROWS_AS(enum_rooted_trees(0), std::invalid_argument);
    CHECK_THROWS_AS(enum_rooted_trees(14), std::invalid_argument);
}

TEST_CASE("shape enumeration is duplicate-free and complete") {
    // oracle: every rooted tree has a numbering with parent[i] < i, so walking
    // all such parent vectors and deduplicating by canonical key enumerates
    // every isomorphism class
    for (int s = 1; s <= 6; ++s) {
        std::set<std::string> canonical;
        std::vector<int> parents(s, -1);
        const auto recurse = [&](auto&& self, int v) -> void {
            if (v == s) {
                canonical.insert(
                    canonical_key(MarkedTree::from_parents(parents, std::vector<char>(s, 0))));
                return;
            }
            for (int p = 0; p < v; ++p) {
                parents[v] = p;
                self(self, v + 1);
            }
        };
        recurse(recurse, 1);
        std::set<std::string> generated;
        for (const MarkedTree& t : enum_rooted_trees(s)) generated.insert(canonical_key(t));
        CHECK(generated.size() == enum_rooted_trees(s).size());  // duplicate-free
        CHECK(generated == canonical);                           // complete
    }
}

TEST_CASE("marked tree enumeration") {
    CHECK(enum_marked_trees(1).size() == 2);
    CHECK(enum_marked_trees(2).size() == 4);
    CHECK(enum_marked_trees(4).size() == 64);
}

TEST_CASE("sweep runs clean on small sizes") {
    SweepConfig cfg;
    cfg.max_size = 3;
    const SweepReport rep = run_sweep(cfg);
    CHECK(rep.marked_trees == 22);  // 2 + 4 + 16
    CHECK(rep.fail == 0);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 8);
    for (const auto& c : rep.checks) {
        CHECK(c.pass == 22);
        CHECK(c.counterexamples.empty());
    }
}

TEST_CASE("every check is reachable on its own") {
    for (const auto& [check, name] : all_checks()) {
        SweepConfig cfg;
        cfg.max_size = 2;
        cfg.checks = {check};
        const SweepReport rep = run_sweep(cfg);
        REQUIRE(rep.checks.size() == 1);
        CHECK(rep.checks[0].name == name);
        CHECK(rep.checks[0].pass == 6);
        CHECK(check_from_name(name) == check);
    }
    CHECK_THROWS_AS(check_from_name("nonsense"), std::invalid_argument);
}

namespace {

// pass/fail content only: the config echo legitimately records worker_count,
// and wall time varies run to run
std::string report_content(const SweepReport& rep) {
    auto j = rep.to_json();
    j.erase("wall_time_ms");
    j.erase("config");
    return j.dump();
}

}  // namespace

TEST_CASE("sweep reports are deterministic and worker-count independent") {
    SweepConfig cfg;
    cfg.max_size = 4;
    cfg.worker_count = 1;
    const std::string serial = report_content(run_sweep(cfg));
    CHECK(report_content(run_sweep(cfg)) == serial);
    cfg.worker_count = 3;
    const std::string parallel = report_content(run_sweep(cfg));
    CHECK(parallel == serial);
}

TEST_CASE("an injected fault produces counterexamples with reproducers") {
    SweepConfig cfg;
    cfg.max_size = 2;
    cfg.checks = {Check::Natlab};
    cfg.inject_natlab_fault = true;
    const SweepReport rep = run_sweep(cfg);
    CHECK(rep.fail > 0);
    CHECK_FALSE(rep.all_pass());
    REQUIRE_FALSE(rep.checks[0].counterexamples.empty());
    for (const auto& ce : rep.checks[0].counterexamples) {
        CHECK(ce.detail.find("repro: descent sweep") != std::string::npos);
        CHECK(ce.detail.find("--tree") != std::string::npos);
    }
}

TEST_CASE("the tree filter narrows a sweep") {
    SweepConfig cfg;
    cfg.max_size = 2;
    cfg.checks = {Check::Agreement};
    cfg.tree_filter = "a[d]";
    const SweepReport rep = run_sweep(cfg);
    CHECK(rep.marked_trees == 1);
    CHECK(rep.fail == 0);
    SECTION("isomorphic markings all match the filter") {
        SweepConfig iso;
        iso.max_size = 3;
        iso.checks = {Check::Agreement};
        iso.tree_filter = "a[d,a]";
        CHECK(run_sweep(iso).marked_trees == 2);  // the two leaf markings of the star
    }
}
