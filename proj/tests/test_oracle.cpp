#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lrct/errors.hpp"
#include "lrct/lr_engine.hpp"
#include "lrct/oracle.hpp"

using namespace lrct;

namespace {

Partition P(std::string_view s) { return Partition::parse(s); }

GlWeight W(std::string_view plus, std::string_view minus, int n) {
    return GlWeight(P(plus), P(minus), n);
}

MarginSpec adjoint_margins(int r, int n) {
    std::vector<GlWeight> ws;
    for (int i = 0; i < r; ++i) ws.push_back(W("[1]", "[1]", n));
    return MarginSpec(std::move(ws));
}

}  // namespace

TEST_CASE("determinant-twist route reproduces known invariant counts") {
    CHECK(oracle_gl_invariants(adjoint_margins(1, 2)) == 0);
    CHECK(oracle_gl_invariants(adjoint_margins(2, 4)) == 1);
    CHECK(oracle_gl_invariants(adjoint_margins(3, 6)) == 2);
    CHECK(oracle_gl_invariants(adjoint_margins(4, 8)) == 9);

    MarginSpec pair({W("[2]", "[1,1]", 6), W("[1,1]", "[2]", 6)});
    CHECK(oracle_gl_invariants(pair) == 1);

    MarginSpec mismatched({W("[2]", "[1]", 6), W("[1]", "[1]", 6)});
    CHECK(oracle_gl_invariants(mismatched) == 0);
}

TEST_CASE("twist route agrees with the table sum on stable margins") {
    const std::vector<std::vector<GlWeight>> margin_sets = {
        {W("[2]", "[1]", 8), W("[1,1]", "[2]", 8), W("[1]", "[1,1]", 8)},
        {W("[2,1]", "[1]", 8), W("[1]", "[2,1]", 8)},
        {W("[1]", "[]", 6), W("[1]", "[]", 6), W("[]", "[1]", 6), W("[]", "[1]", 6)},
        {W("[2,2]", "[2,1]", 10), W("[2,1]", "[2,2]", 10)},
        {W("[3]", "[1]", 9), W("[1]", "[2]", 9), W("[]", "[1]", 9)},
    };
    for (const auto& ws : margin_sets) {
        MarginSpec m(ws);
        REQUIRE(m.in_stable_range());
        CHECK(oracle_gl_invariants(m) == lrc_zero(m));
    }
}

TEST_CASE("twist route works below the stable threshold") {
    // two boxes against two antiboxes in GL_2: V tensor V tensor (V* tensor V*)
    MarginSpec m({W("[1]", "[]", 2), W("[1]", "[]", 2), W("[]", "[1,1]", 2)});
    CHECK_FALSE(m.in_stable_range());
    // Hom(V tensor V, Lambda^2) in GL_2: Lambda^2 appears once in V tensor V
    CHECK(oracle_gl_invariants(m) == 1);

    // adjoint square of GL_2 still has its Killing invariant
    CHECK(oracle_gl_invariants(adjoint_margins(2, 2)) == 1);
    // but the cube collapses below the threshold: in GL_2 the adjoint cube
    // invariants shrink from 2 to 1 (the two stable invariants coincide)
    CHECK(oracle_gl_invariants(adjoint_margins(3, 2)) == 1);
}

TEST_CASE("extra determinant twists never change the value") {
    const MarginSpec m({W("[2]", "[1]", 8), W("[1,1]", "[2]", 8), W("[1]", "[1,1]", 8)});
    const BigInt base = oracle_gl_invariants(m);
    const std::vector<std::vector<int>> twist_sets = {
        {0, 0, 0}, {1, 0, 0}, {0, 2, 1}, {3, 3, 3}, {5, 0, 2}};
    for (const auto& tw : twist_sets) CHECK(oracle_gl_invariants(m, tw) == base);
}

TEST_CASE("pairwise stable products expand correctly") {
    // one box times one box: trivial + two classical shapes
    const ExpansionMap got = newell_littlewood_product(P("[1]"), P("[1]"));
    ExpansionMap want;
    want.emplace(P("[]"), 1);
    want.emplace(P("[2]"), 1);
    want.emplace(P("[1,1]"), 1);
    CHECK(got == want);

    // an empty factor is the identity
    for (const Partition& mu : {P("[]"), P("[1]"), P("[2,1]"), P("[3,2,1]")}) {
        const ExpansionMap e = newell_littlewood_product(mu, P("[]"));
        REQUIRE(e.size() == 1);
        CHECK(coefficient(e, mu) == 1);
    }
}

TEST_CASE("pairwise coefficients: parity, symmetry, contraction") {
    // coefficient extraction matches the full product
    for (const auto& [mu, nu] : std::vector<std::pair<Partition, Partition>>{
             {P("[2,1]"), P("[2,1]")}, {P("[2]"), P("[1,1]")}, {P("[3,1]"), P("[2,2]")}}) {
        const ExpansionMap prod = newell_littlewood_product(mu, nu);
        for (int size = 0; size <= static_cast<int>(mu.size() + nu.size()); ++size)
            for (const Partition& lambda : partitions_of(size, size))
                CHECK(newell_littlewood_coefficient(lambda, mu, nu) == coefficient(prod, lambda));
    }

    // fully symmetric in all three labels
    const std::vector<Partition> shapes = {P("[1]"), P("[2]"), P("[1,1]"), P("[2,1]"), P("[2,2]")};
    for (const Partition& a : shapes)
        for (const Partition& b : shapes)
            for (const Partition& c : shapes) {
                const BigInt v = newell_littlewood_coefficient(a, b, c);
                CHECK(newell_littlewood_coefficient(a, c, b) == v);
                CHECK(newell_littlewood_coefficient(b, a, c) == v);
                CHECK(newell_littlewood_coefficient(c, b, a) == v);
            }

    // odd total size can never appear
    CHECK(newell_littlewood_coefficient(P("[1]"), P("[1]"), P("[1]")) == 0);
    CHECK(newell_littlewood_coefficient(P("[2]"), P("[2,1]"), P("[2]")) == 0);
    // contraction against the empty shape is the delta
    CHECK(newell_littlewood_coefficient(P("[]"), P("[2,1]"), P("[2,1]")) == 1);
    CHECK(newell_littlewood_coefficient(P("[]"), P("[2,1]"), P("[3]")) == 0);
    // agrees with the classical coefficient at full size
    CHECK(newell_littlewood_coefficient(P("[3,2,1]"), P("[2,1]"), P("[2,1]")) == 2);
}

TEST_CASE("pairwise route reproduces the symmetric-table sums") {
    for (int r = 1; r <= 6; ++r) {
        SymMarginSpec boxes(std::vector<Partition>(static_cast<size_t>(r), P("[1]")), 2 * r);
        CHECK(oracle_osp_invariants(boxes) == osp_invariant_dim(boxes));
    }
    const std::vector<std::vector<Partition>> margin_sets = {
        {P("[2]"), P("[2]"), P("[2]")},
        {P("[2,1]"), P("[2,1]")},
        {P("[2,1]"), P("[1,1]"), P("[1]")},
        {P("[2]"), P("[1]"), P("[1]")},
        {P("[3,1]"), P("[2,1]"), P("[1,1]")},
    };
    for (const auto& ms : margin_sets) {
        int threshold = 0;
        for (const Partition& p : ms) threshold += 2 * p.length();
        SymMarginSpec m(ms, threshold);
        CHECK(oracle_osp_invariants(m) == osp_invariant_dim(m));
    }
}

TEST_CASE("pairwise route refuses unstable ranks") {
    SymMarginSpec low({P("[1]"), P("[1]")}, 3);
    CHECK_THROWS_AS(oracle_osp_invariants(low), OutsideStableRange);
}

TEST_CASE("hook identity holds at and above its threshold") {
    CHECK(hook_identity_check(1, 2));
    CHECK(hook_identity_check(1, 3));
    CHECK(hook_identity_check(1, 5));

    CHECK_THROWS_AS(hook_identity_check(1, 1), PreconditionViolated);
    CHECK_THROWS_AS(hook_identity_check(2, 5), PreconditionViolated);
    CHECK_THROWS_AS(hook_identity_check(0, 5), PreconditionViolated);
}
