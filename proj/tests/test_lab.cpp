#include "doctest.h"

#include <iostream>

#include "arason/lab.hpp"

using namespace arason;
using namespace arason::lab;

TEST_CASE("every check passes on a small default run")
{
    for (auto const& name : check_names()) {
        GenConfig cfg;
        cfg.seed = 7;
        cfg.trials = name == "deg8_td" ? 30 : 60;
        auto rep = run_check(name, cfg);
        INFO(name << ": " << to_json(rep).dump());
        CHECK(rep.passed());
    }
}

TEST_CASE("generators are deterministic")
{
    GenConfig cfg;
    cfg.seed = 99;
    cfg.trials = 3;
    auto ctx = HermContext::of(-3);
    CHECK(gen_herm(cfg, ctx, 4) == gen_herm(cfg, ctx, 4));
    for (auto const& h : gen_herm(cfg, ctx, 5))
        for (auto const& a : h.diag())
            CHECK(a.representative() != 0);
    auto a = gen_matched_pair(cfg, ctx, 4), b = gen_matched_pair(cfg, ctx, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first.rep() == b[i].first.rep());
        CHECK(a[i].second.rep() == b[i].second.rep());
        CHECK(disc_algebra(a[i].first) == disc_algebra(a[i].second));
    }
    auto r1 = run_check("order2", cfg), r2 = run_check("order2", cfg);
    CHECK(to_json(r1, false) == to_json(r2, false));
}

TEST_CASE("matched pairs include non-isomorphic ones")
{
    GenConfig cfg;
    cfg.seed = 4;
    cfg.trials = 60;
    auto pairs = gen_matched_pair(cfg, HermContext::of(-1), 4);
    int non_iso = 0;
    for (auto const& [t0, t] : pairs)
        non_iso += !is_similar_h(t0.rep(), t.rep()).has_value();
    CHECK(non_iso > 0);
}

TEST_CASE("holzer oracle")
{
    CHECK(holzer_isotropic(1, 1, -2));
    CHECK(holzer_isotropic(1, -1, 5));
    CHECK_FALSE(holzer_isotropic(1, 1, 1));
    CHECK_FALSE(holzer_isotropic(1, 1, -3));
    CHECK(holzer_isotropic(3, 5, -2));
    CHECK(holzer_isotropic(6, 10, -15));  // not pairwise coprime
    CHECK_FALSE(holzer_isotropic(2, 3, -7));  // obstructed at 3
}

TEST_CASE("replay and minimization")
{
    Json good = {{"a", 6}, {"b", -35}};
    CHECK_FALSE(replay("reciprocity", good).has_value());
    CHECK_THROWS_AS(replay("no_such_check", good), std::invalid_argument);
    Json invalid = {{"tau0", {{"delta", -1}, {"diag", {1, 1}}}}, {"tau", {{"delta", -1}, {"diag", {1, -1}}}}};
    auto msg = replay("order2", invalid);
    REQUIRE(msg.has_value());
    CHECK(msg->find("precondition") != std::string::npos);
}
