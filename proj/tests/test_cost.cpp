#include <random>

#include "beings/cost.hpp"
#include "beings/rng.hpp"
#include "doctest.h"

using namespace beings;

namespace {

SceneModel open_scene() {
    SceneModel scene;
    scene.bounds = Eigen::AlignedBox3d(Vec3(0, 0, 0), Vec3(10, 10, 2));
    scene.goal_pose = Pose(8, 5, 1, 0);
    scene.boxes.push_back({box_from_center(Vec3(9, 5, 1), Vec3(0.2, 2, 1.5)), {0.9f, 0.2f, 0.1f}});
    scene.boxes.push_back({box_from_center(Vec3(2, 8, 1), Vec3(1, 1, 2)), {0.1f, 0.4f, 0.9f}});
    return scene;
}

}  // namespace

TEST_CASE("movement cost reproduces the pinned constants") {
    const CostConfig cfg;
    CHECK(cfg.distance_rate == 50.0);
    CHECK(cfg.collision_penalty == 1000.0);

    SceneModel scene = open_scene();
    // 0.2 m straight move, no collision: 50 * 0.2 = 10
    CHECK(movement_cost(scene, Pose(1, 1, 1, 0), Pose(1.2, 1, 1, 0), cfg) ==
          doctest::Approx(10.0).epsilon(1e-12));
    // binary-exact delta of 0.25 m gives the product exactly
    CHECK(movement_cost(scene, Pose(1, 1, 1, 0), Pose(1.25, 1, 1, 0), cfg) == 12.5);
    // yaw-only step moves nothing
    CHECK(movement_cost(scene, Pose(1, 1, 1, 0), Pose(1, 1, 1, 0.7), cfg) == 0.0);
    // the same 0.2 m through an obstacle adds exactly 1000
    scene.obstacles.push_back(box_from_center(Vec3(5, 5, 1), Vec3(0.5, 0.5, 1.5)));
    CHECK(movement_cost(scene, Pose(4.9, 5, 1, 0), Pose(5.1, 5, 1, 0), cfg) ==
          doctest::Approx(1010.0).epsilon(1e-12));
    CHECK(movement_cost(scene, Pose(5, 4.75, 1, 0), Pose(5, 5.25, 1, 0), cfg) == 1025.0);
    // vertical motion counts as distance too
    CHECK(movement_cost(scene, Pose(1, 1, 1, 0), Pose(1, 1, 1.5, 0), cfg) == 25.0);
}

TEST_CASE("exploration cost") {
    const CostConfig cfg;
    CHECK(exploration_cost(10.0, 0.5, 0.5, cfg) == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(exploration_cost(0.0, 0.123, 0.456, cfg) == 0.0);
    CHECK(exploration_cost(10.0, 0.0, 1.0, cfg) == doctest::Approx(1e7).epsilon(1e-12));
}

TEST_CASE("exploration cost monotonicity and linearity") {
    const CostConfig cfg;
    std::mt19937_64 rng(67);
    for (int i = 0; i < 300; ++i) {
        const double c = uniform_range(rng, 0.01, 100.0);
        const double p = uniform_range(rng, 0.01, 1.0);
        const double q = uniform_range(rng, 0.01, 1.0);
        const double base = exploration_cost(c, p, q, cfg);
        CHECK(exploration_cost(c, std::min(1.0, p + 0.1), q, cfg) <= base);
        CHECK(exploration_cost(c, p, std::min(1.0, q + 0.1), cfg) <= base);
        CHECK(exploration_cost(2.0 * c, p, q, cfg) == doctest::Approx(2.0 * base).epsilon(1e-12));
    }
}

TEST_CASE("rollout cost: empty horizon is the terminal term only") {
    const SceneModel scene = open_scene();
    const Camera cam = Camera::from_fov(64, 48, M_PI / 2);
    const CostConfig cfg;
    const GridBelief belief = init_uniform(CellGrid(Vec2(0, 0), 1.0, 10, 10));
    const Descriptor goal = describe(render(scene, cam, scene.goal_pose));

    const Pose s(3, 4, 1, 0.3);
    const double expect = dissimilarity(goal, describe(render(scene, cam, s)));
    CHECK(rollout_cost(scene, cam, goal, belief, {s}, {}, cfg) ==
          doctest::Approx(expect).epsilon(1e-12));

    // K=0 at the goal pose itself: zero
    CHECK(rollout_cost(scene, cam, goal, belief, {scene.goal_pose}, {}, cfg) == 0.0);
}

TEST_CASE("rollout cost at the goal with zero-magnitude controls is zero") {
    const SceneModel scene = open_scene();
    const Camera cam = Camera::from_fov(64, 48, M_PI / 2);
    const CostConfig cfg;
    const GridBelief belief = init_uniform(CellGrid(Vec2(0, 0), 1.0, 10, 10));
    const Descriptor goal = describe(render(scene, cam, scene.goal_pose));

    ControlSequence hold{{{Channel::VX, 0.0}, {Channel::VY, 0.0}, {Channel::VZ, 0.0}}};
    const auto trajectory = propagate(scene.goal_pose, hold);
    CHECK(rollout_cost(scene, cam, goal, belief, trajectory, hold, cfg) == 0.0);
}

TEST_CASE("rollout cost recomposes from its public ingredients") {
    const SceneModel scene = open_scene();
    const Camera cam = Camera::from_fov(64, 48, M_PI / 2);
    CostConfig cfg;
    cfg.terminal_weight = 0.7;
    GridBelief belief = bayes_update(init_uniform(CellGrid(Vec2(0, 0), 1.0, 10, 10)), 44, 0.6);
    const Descriptor goal = describe(render(scene, cam, scene.goal_pose));

    const Pose s0(3, 4, 1, 0.3);
    ControlSequence seq{{{Channel::VX, 0.8}, {Channel::YAW, 0.4}, {Channel::VY, -0.5}}};
    const auto trajectory = propagate(s0, seq);

    double expect = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double c = movement_cost(scene, trajectory[k], trajectory[k + 1], cfg);
        const double p = prob_mass(belief, trajectory[k + 1]);
        const double q =
            detection_prob(goal, describe(render(scene, cam, trajectory[k + 1])));
        expect += exploration_cost(c, p, q, cfg);
    }
    expect += cfg.terminal_weight *
              dissimilarity(goal, describe(render(scene, cam, trajectory.back())));

    const double got = rollout_cost(scene, cam, goal, belief, trajectory, seq, cfg);
    CHECK(got == doctest::Approx(expect).epsilon(1e-12));

    // purity: bit-identical on the second evaluation
    CHECK(rollout_cost(scene, cam, goal, belief, trajectory, seq, cfg) == got);
}

TEST_CASE("rollout cost rejects inconsistent trajectories") {
    const SceneModel scene = open_scene();
    const Camera cam = Camera::from_fov(64, 48, M_PI / 2);
    const CostConfig cfg;
    const GridBelief belief = init_uniform(CellGrid(Vec2(0, 0), 1.0, 10, 10));
    const Descriptor goal = describe(render(scene, cam, scene.goal_pose));

    ControlSequence seq{{{Channel::VX, 0.5}}};
    auto trajectory = propagate(Pose(3, 4, 1, 0), seq);
    CHECK_THROWS_AS(rollout_cost(scene, cam, goal, belief, {trajectory[0]}, seq, cfg),
                    std::invalid_argument);
    trajectory[1].x += 0.01;
    CHECK_THROWS_AS(rollout_cost(scene, cam, goal, belief, trajectory, seq, cfg),
                    std::invalid_argument);
}

TEST_CASE("weight") {
    CHECK(weight(0.0) == 1.0);
    CHECK(weight(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(weight(std::numeric_limits<double>::infinity()) == 0.0);
    CHECK_THROWS_AS(weight(std::nan("")), std::invalid_argument);

    // strictly decreasing: lower cost, higher weight
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
        const double a = uniform_range(rng, 0.0, 50.0);
        const double b = a + uniform_range(rng, 1e-6, 10.0);
        CHECK(weight(a) > weight(b));
    }
}
