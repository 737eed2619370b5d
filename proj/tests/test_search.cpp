#include <random>
#include <stdexcept>

#include "acfg/enumerate.hpp"
#include "acfg/instances.hpp"
#include "acfg/search.hpp"
#include "doctest.h"

using namespace acfg;

TEST_CASE("nash construction peels friendless players") {
    BuiltinFixture fix = builtin("fig2_altruism");
    CoalitionStructure gamma = nash_construct(fix.graph);
    CHECK(format_partition(gamma) == "1 2 3 4 5 6 | 7 | 8 | 9 | 10");
    for (Model m : kAllModels) CHECK(verify(fix.graph, m, Notion::Nash, gamma).stable);

    // a path loses its endpoints' neighbors never: whole path is one block
    BuiltinFixture path = builtin("fig1_path4");
    CHECK(nash_construct(path.graph) == CoalitionStructure::grand(4));

    // peeling cascades: once 1's only friend 0 leaves nobody, 0 goes first
    // star center removed scenario: 0-1 edge only, 2 isolated
    FriendGraph g(3);
    g.add_edge(0, 1);
    CHECK(format_partition(nash_construct(g)) == "1 2 | 3");

    CHECK(nash_construct(FriendGraph(3)) == CoalitionStructure::singletons(3));
    CHECK(nash_construct(FriendGraph(0)).block_count() == 0);
}

TEST_CASE("nash construction is stable on random graphs, all models") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng() % 9);  // up to 10
        FriendGraph g = random_graph(n, 0.15 + 0.07 * static_cast<double>(round % 10), rng());
        CoalitionStructure gamma = nash_construct(g);
        for (Model m : kAllModels) {
            CAPTURE(model_name(m));
            CHECK(verify(g, m, Notion::Nash, gamma).stable);
        }
    }
}

TEST_CASE("components structure") {
    BuiltinFixture fix = builtin("fig2_altruism");
    CoalitionStructure comp = components_structure(fix.graph);
    CHECK(format_partition(comp) == "1 2 3 4 5 6 | 7 | 8 | 9 | 10");

    BuiltinFixture chain = builtin("fig8_blocking");
    CHECK(components_structure(chain.graph) == CoalitionStructure::grand(10));

    // strictly core stable under the selfish-first models
    std::mt19937_64 rng(71);
    for (int round = 0; round < 30; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        FriendGraph g = random_graph(n, 0.35, rng());
        CoalitionStructure parts = components_structure(g);
        CHECK(verify(g, Model::SumSF, Notion::StrictCore, parts).stable);
        CHECK(verify(g, Model::MinSF, Notion::StrictCore, parts).stable);
    }
}

TEST_CASE("individual rationality has a closed form") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 6);  // up to 6
        FriendGraph g = random_graph(n, 0.15 + 0.7 * (static_cast<double>(rng() % 100) / 100.0),
                                     rng());
        enumerate_partitions(n, [&](const CoalitionStructure& gamma) {
            for (Model m : kAllModels) {
                bool closed = check_ir_characterization(g, m, gamma);
                bool brute = verify(g, m, Notion::IndividuallyRational, gamma).stable;
                CHECK(closed == brute);
            }
            return true;
        });
    }
}

TEST_CASE("a dragged-down friendless player sinks rationality everywhere") {
    // 0-1 friends; the grand coalition hands the friendless 2 two enemies.
    // Walking out lifts 2's own value from -2 to 0, and with no friends the
    // inclusive aggregates are just that own value: leaving wins under every
    // model, so no model calls the grand coalition individually rational.
    FriendGraph g(3);
    g.add_edge(0, 1);
    CoalitionStructure grand = CoalitionStructure::grand(3);
    for (Model m : kAllModels) {
        CHECK_FALSE(check_ir_characterization(g, m, grand));
        CHECK_FALSE(verify(g, m, Notion::IndividuallyRational, grand).stable);
    }
    // splitting the pair off leaves everyone at least their alone value
    CoalitionStructure split = parse_partition("1 2 | 3", 3);
    for (Model m : kAllModels) {
        CHECK(check_ir_characterization(g, m, split));
        CHECK(verify(g, m, Notion::IndividuallyRational, split).stable);
    }
}

TEST_CASE("selfish-first perfect structures need clique components") {
    // two disjoint triangles: perfect, and the components are the answer
    FriendGraph cliques(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}) {
        cliques.add_edge(u, v);
    }
    ExistenceResult found = sf_perfect(cliques);
    CHECK(found.found);
    REQUIRE(found.structure.has_value());
    CHECK(*found.structure == components_structure(cliques));
    CHECK(found.partitions_examined == 0);
    CHECK(verify(cliques, Model::SumSF, Notion::Perfect, *found.structure).stable);
    CHECK(verify(cliques, Model::MinSF, Notion::Perfect, *found.structure).stable);

    // the four-player path is connected but no clique: nothing is perfect
    BuiltinFixture path = builtin("fig1_path4");
    ExistenceResult missing = sf_perfect(path.graph);
    CHECK_FALSE(missing.found);
    enumerate_partitions(4, [&](const CoalitionStructure& gamma) {
        CHECK_FALSE(verify(path.graph, Model::SumSF, Notion::Perfect, gamma).stable);
        CHECK_FALSE(verify(path.graph, Model::MinSF, Notion::Perfect, gamma).stable);
        return true;
    });
}

TEST_CASE("selfish-first perfect agrees with brute force") {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 50; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);  // up to 6
        FriendGraph g = random_graph(n, 0.3 + 0.5 * (static_cast<double>(rng() % 100) / 100.0),
                                     rng());
        for (Model m : {Model::SumSF, Model::MinSF}) {
            ExistenceResult fast = sf_perfect(g);
            std::optional<CoalitionStructure> brute;
            enumerate_partitions(n, [&](const CoalitionStructure& gamma) {
                if (verify(g, m, Notion::Perfect, gamma).stable) {
                    brute = gamma;
                    return false;
                }
                return true;
            });
            CHECK(fast.found == brute.has_value());
            if (fast.found && brute) CHECK(*fast.structure == *brute);
        }
    }
}

TEST_CASE("the equal-treatment perfectness filter") {
    BuiltinFixture fix = builtin("fig10_eq_not_perfect");
    CoalitionStructure grand = fix.structures.at("gamma");
    // the filter passes the grand coalition (single component, diameter 2)...
    CHECK(eq_perfect_necessary(fix.graph, grand));
    // ...yet it is not actually perfect, so the condition is not sufficient
    CHECK_FALSE(verify(fix.graph, Model::SumEQ, Notion::Perfect, grand).stable);

    // any non-components structure fails the filter
    CHECK_FALSE(eq_perfect_necessary(fix.graph, fix.structures.at("delta")));
    // connected but diameter 3 fails too
    BuiltinFixture path = builtin("fig1_path4");
    CHECK_FALSE(eq_perfect_necessary(path.graph, CoalitionStructure::grand(4)));

    // the filter really is necessary: no perfect structure ever fails it
    std::mt19937_64 rng(83);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);
        FriendGraph g = random_graph(n, 0.5, rng());
        enumerate_partitions(n, [&](const CoalitionStructure& gamma) {
            if (verify(g, Model::SumEQ, Notion::Perfect, gamma).stable)
                CHECK(eq_perfect_necessary(g, gamma));
            return true;
        });
    }
}

TEST_CASE("existence by construction skips enumeration") {
    // n = 25 is far beyond any enumeration cap; the constructive routes answer
    FriendGraph g(25);
    for (int v = 0; v + 1 < 25; ++v) g.add_edge(v, v + 1);  // a path: no clique components
    for (Notion s : {Notion::Nash, Notion::IndividuallyRational, Notion::IndividuallyStable,
                     Notion::ContractuallyIndividuallyStable,
                     Notion::TotallyIndividuallyStable}) {
        for (Model m : kAllModels) {
            ExistenceResult r = exists_stable(g, m, s);
            CHECK(r.found);
            CHECK(r.partitions_examined == 0);
            REQUIRE(r.structure.has_value());
            CHECK(verify(g, m, s, *r.structure).stable);
        }
    }
    for (Model m : {Model::SumSF, Model::MinSF}) {
        for (Notion s : {Notion::Core, Notion::StrictCore}) {
            ExistenceResult r = exists_stable(g, m, s);
            CHECK(r.found);
            CHECK(r.partitions_examined == 0);
            CHECK(*r.structure == components_structure(g));
        }
        // sf perfect negative above the cap is also settled without a scan
        ExistenceResult p = exists_stable(g, m, Notion::Perfect);
        CHECK_FALSE(p.found);
        CHECK(p.partitions_examined == 0);
    }
}

TEST_CASE("existence by enumeration returns the first hit") {
    FriendGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    for (Model m : {Model::SumEQ, Model::MinAL}) {
        ExistenceResult r = exists_stable(g, m, Notion::Core);
        REQUIRE(r.found);
        CHECK(verify(g, m, Notion::Core, *r.structure).stable);
        // partitions_examined = index of the hit + 1: everything before fails
        uint64_t at = 0;
        enumerate_partitions(5, [&](const CoalitionStructure& gamma) {
            ++at;
            if (at == r.partitions_examined) {
                CHECK(gamma == *r.structure);
                return false;
            }
            CHECK_FALSE(verify(g, m, Notion::Core, gamma).stable);
            return true;
        });
    }
}

TEST_CASE("popularity searches count the full sweep when empty-handed") {
    BuiltinFixture fix = builtin("fig9_no_popular");
    ExistenceResult r = exists_stable(fix.graph, Model::MinSF, Notion::Popular, 2);
    CHECK_FALSE(r.found);
    CHECK(r.partitions_examined == 115975);

    // a graph that does have a popular structure: two disjoint edges
    FriendGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    ExistenceResult hit = exists_stable(g, Model::SumSF, Notion::Popular);
    REQUIRE(hit.found);
    CHECK(*hit.structure == components_structure(g));
    CHECK(hit.partitions_examined >= 1);
    CHECK(verify(g, Model::SumSF, Notion::Popular, *hit.structure).stable);
}

TEST_CASE("perfect search under equal treatment") {
    // two disjoint edges: the components structure is perfect under sumEQ
    FriendGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    ExistenceResult r = exists_stable(g, Model::SumEQ, Notion::Perfect);
    REQUIRE(r.found);
    CHECK(verify(g, Model::SumEQ, Notion::Perfect, *r.structure).stable);

    // the path has none, and the scan is exhaustive
    BuiltinFixture path = builtin("fig1_path4");
    ExistenceResult missing = exists_stable(path.graph, Model::SumEQ, Notion::Perfect);
    CHECK_FALSE(missing.found);
    CHECK(missing.partitions_examined == bell_u64(4));
}

TEST_CASE("existence searches refuse oversized enumerations") {
    FriendGraph g13(13);
    CHECK_THROWS_WITH_AS(exists_stable(g13, Model::SumEQ, Notion::Core),
                         "core existence search capped at n = 12 (got n = 13)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(exists_stable(g13, Model::SumSF, Notion::Popular),
                         "popularity existence search capped at n = 12 (got n = 13)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(exists_stable(g13, Model::MinEQ, Notion::Perfect),
                         "perfectness existence search capped at n = 12 (got n = 13)",
                         std::invalid_argument);

    // the cap can be lowered...
    FriendGraph g4(4);
    CHECK_THROWS_WITH_AS(exists_stable(g4, Model::SumEQ, Notion::Core, 1, 3),
                         "core existence search capped at n = 3 (got n = 4)",
                         std::invalid_argument);
    // ...or raised, but never beyond the enumeration ceiling
    FriendGraph g21(21);
    CHECK_THROWS_WITH_AS(exists_stable(g21, Model::SumEQ, Notion::Popular, 1, 25),
                         "popularity existence search capped at n = 20 (got n = 21)",
                         std::invalid_argument);

    // constructions are exempt; the edgeless graph is a union of 1-cliques,
    // so even selfish-first perfectness is answered (positively) at n = 13
    CHECK(exists_stable(g13, Model::SumEQ, Notion::Nash).found);
    CHECK(exists_stable(g13, Model::SumSF, Notion::Core).found);
    ExistenceResult lone = exists_stable(g13, Model::MinSF, Notion::Perfect);
    CHECK(lone.found);
    CHECK(*lone.structure == CoalitionStructure::singletons(13));
    CHECK(lone.partitions_examined == 0);
}

TEST_CASE("existence searches are deterministic across thread counts") {
    FriendGraph g = random_graph(7, 0.3, 131);
    for (Notion s : {Notion::Popular, Notion::StrictlyPopular, Notion::Perfect}) {
        ExistenceResult a = exists_stable(g, Model::MinEQ, s, 1);
        ExistenceResult b = exists_stable(g, Model::MinEQ, s, 4);
        CHECK(a.found == b.found);
        CHECK(a.partitions_examined == b.partitions_examined);
        CHECK(a.structure.has_value() == b.structure.has_value());
        if (a.structure && b.structure) CHECK(*a.structure == *b.structure);
    }
}

TEST_CASE("found structures satisfy their notion across the board") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 12; ++round) {
        int n = 3 + static_cast<int>(rng() % 5);  // up to 7
        FriendGraph g = random_graph(n, 0.4, rng());
        for (Model m : kAllModels) {
            for (Notion s : kAllNotions) {
                ExistenceResult r = exists_stable(g, m, s);
                if (r.found) {
                    REQUIRE(r.structure.has_value());
                    CHECK(verify(g, m, s, *r.structure).stable);
                } else {
                    // a completed scan really scanned everything
                    CHECK(r.partitions_examined == bell_u64(n));
                }
            }
        }
    }
}
