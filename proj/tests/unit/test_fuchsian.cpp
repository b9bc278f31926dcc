#include <doctest.h>

#include "bergstab/fuchsian.hpp"
#include "test_support.hpp"

using namespace bergstab;
using namespace bergstab::testing;

TEST_CASE("injectivity radius of the scaling group is certified") {
    GroupSpec cyc = cyclic_scaling_group(9.0);
    ModelPoint i{{0.0, 1.0}, Model::halfplane};

    InjectivityRadius tau = injectivity_radius(cyc, full_group_predicate(), i, 10);
    CHECK(tau.certified);
    // d(i, 9i) = log 9, so tau = log 3.
    CHECK(std::abs(tau.tau - std::log(3.0)) < 1e-13);

    TowerSpec t{TowerKind::cyclic_powers, {2, 4, 8, 16}, TowerTop::trivial};
    for (int j = 1; j <= 4; ++j) {
        InjectivityRadius tj = injectivity_radius(cyc, level_predicate(t, j, 1), i, 40);
        CHECK(tj.certified);
        double expected = std::pow(2.0, j - 1) * std::log(9.0);
        CHECK(std::abs(tj.tau - expected) < 1e-11 * expected);
    }
}

TEST_CASE("displacement distance keeps full precision for far translates") {
    // For the scaling by lambda, d(x, gamma^n x) = n log lambda on the axis.
    GroupSpec half = cyclic_scaling_group(std::exp(0.55));
    GroupSpec disc = half.to_disc();
    MoebiusMap ph = MoebiusMap::identity(Model::halfplane);
    MoebiusMap pd = MoebiusMap::identity(Model::disc);
    for (int n = 1; n <= 64; ++n) {
        ph = compose(ph, half.generators[0]);
        pd = compose(pd, disc.generators[0]);
        double expected = 0.55 * n;
        CHECK(std::abs(displacement_distance(ph, halfplane_point({0.0, 1.0})) - expected) <
              1e-12 * expected);
        CHECK(std::abs(displacement_distance(pd, ModelPoint{{0.0, 0.0}, Model::disc}) -
                       expected) < 1e-12 * expected);
    }
    // Off the axis the two routes agree wherever the generic formula is stable.
    ModelPoint x = halfplane_point({0.7, 2.2});
    MoebiusMap g3 = compose(half.generators[0],
                            compose(half.generators[0], half.generators[0]));
    CHECK(std::abs(displacement_distance(g3, x) - hyp_distance(x, apply(g3, x))) < 1e-12);
}

TEST_CASE("injectivity radius grows along the tower and is subgroup-invariant") {
    GroupSpec cyc = cyclic_scaling_group(4.0);
    TowerSpec t{TowerKind::cyclic_powers, {2, 4, 8}, TowerTop::trivial};
    auto gen = rng(30);
    for (int trial = 0; trial < 8; ++trial) {
        ModelPoint x{random_halfplane_point(gen), Model::halfplane};
        double prev = 0.0;
        for (int j = 1; j <= 3; ++j) {
            InjectivityRadius tj = injectivity_radius(cyc, level_predicate(t, j, 1), x, 40);
            CHECK(tj.tau >= prev - 1e-12);
            prev = tj.tau;
        }
        // Replacing x by gamma^2 x (a member of level 1) leaves tau_1 fixed.
        MoebiusMap g2 = compose(cyc.generators[0], cyc.generators[0]);
        InjectivityRadius t1 = injectivity_radius(cyc, level_predicate(t, 1, 1), x, 40);
        InjectivityRadius t1m = injectivity_radius(cyc, level_predicate(t, 1, 1),
                                                   apply(g2, x), 40);
        CHECK(std::abs(t1.tau - t1m.tau) < 1e-10 * (1.0 + t1.tau));
    }
}

TEST_CASE("injectivity radius for rank 2 is an enumerated upper bound") {
    GroupSpec sch = schottky_group();
    ModelPoint x{{0.0, 0.0}, Model::disc};
    InjectivityRadius tau = injectivity_radius(sch, full_group_predicate(), x, 4);
    CHECK(!tau.certified);
    // The generators translate 0 by log((1+0.8)/(1-0.8)) = log 9.
    CHECK(std::abs(tau.tau - 0.5 * std::log(9.0)) < 1e-12);

    InjectivityRadius none =
        injectivity_radius(sch, identity_only_predicate(), x, 4);
    CHECK(std::isinf(none.tau));
    CHECK(!none.certified);
}

TEST_CASE("dirichlet domain membership is strict") {
    GroupSpec cyc = cyclic_scaling_group(9.0);
    ModelPoint x{{0.0, 1.0}, Model::halfplane};
    MembershipPredicate all = full_group_predicate();

    CHECK(dirichlet_contains(cyc, all, x, x, 10));
    // Anything closer than tau(x) stays inside.
    CHECK(dirichlet_contains(cyc, all, x, ModelPoint{{0.2, 1.3}, Model::halfplane}, 10));
    // The translate 9i is equidistant from x and gamma x: strictly outside.
    CHECK(!dirichlet_contains(cyc, all, x, ModelPoint{{0.0, 9.0}, Model::halfplane}, 10));
    CHECK(!dirichlet_contains(cyc, all, x, ModelPoint{{0.0, 3.0}, Model::halfplane}, 10));

    // Points inside the certified injectivity ball are inside the domain.
    auto gen = rng(31);
    InjectivityRadius tau = injectivity_radius(cyc, all, x, 10);
    for (int trial = 0; trial < 10; ++trial) {
        Complex p = random_halfplane_point(gen);
        ModelPoint z{p, Model::halfplane};
        if (hyp_distance(x, z) < tau.tau) CHECK(dirichlet_contains(cyc, all, x, z, 10));
    }
}

TEST_CASE("the injectivity ball sits inside the dirichlet domain (rank 2)") {
    GroupSpec sch = schottky_group();
    MembershipPredicate all = full_group_predicate();
    auto gen = rng(32);
    for (int trial = 0; trial < 6; ++trial) {
        ModelPoint x{random_disc_point(gen, 0.4), Model::disc};
        InjectivityRadius tau = injectivity_radius(sch, all, x, 4);
        int inside = 0;
        for (int k = 0; k < 20; ++k) {
            ModelPoint z{random_disc_point(gen, 0.9), Model::disc};
            if (hyp_distance(x, z) >= tau.tau) continue;
            ++inside;
            CHECK(dirichlet_contains(sch, all, x, z, 4));
        }
        (void)inside;
    }
}

TEST_CASE("convergence diagnostic fits the scaling-group decay") {
    // Increments for <w -> 9w> decay like 1/9 per unit length.
    ConvergenceDiagnostic diag = convergence_diagnostic(cyclic_scaling_group(9.0), 12);
    CHECK(diag.likely_convergent);
    CHECK(std::abs(diag.fitted_ratio - 1.0 / 9.0) < 0.01 / 9.0);
    for (std::size_t i = 1; i < diag.partial_sums.size(); ++i)
        CHECK(diag.partial_sums[i] >= diag.partial_sums[i - 1]);

    ConvergenceDiagnostic sch = convergence_diagnostic(schottky_group(), 7);
    CHECK(sch.likely_convergent);
    CHECK(sch.fitted_ratio < 1.0);
    // Regression baseline: growth 3 per shell against decay ~ 1/9 per letter.
    CHECK(sch.fitted_ratio > 0.5);
    CHECK(sch.fitted_ratio < 0.65);
}
