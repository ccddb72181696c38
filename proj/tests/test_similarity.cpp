#include <random>

#include "beings/render.hpp"
#include "beings/rng.hpp"
#include "beings/similarity.hpp"
#include "beings/task.hpp"
#include "doctest.h"

using namespace beings;

TEST_CASE("uniform image maps to the fallback basis descriptor") {
    const Image img = Image::filled(64, 48, {0.5f, 0.5f, 0.5f});
    const Descriptor d = describe(img);
    CHECK(d.values[0] == doctest::Approx(1.0));
    CHECK(d.values.tail(kDescriptorDim - 1).norm() == doctest::Approx(0.0));
}

TEST_CASE("describe is deterministic") {
    std::mt19937_64 rng(41);
    Image img(64, 48);
    for (int i = 0; i < img.pixels.cols(); ++i)
        img.pixels.col(i) = Eigen::Vector3f(float(uniform01(rng)), float(uniform01(rng)),
                                            float(uniform01(rng)));
    const Descriptor a = describe(img);
    const Descriptor b = describe(img);
    CHECK(a.values == b.values);
}

TEST_CASE("single white pixel on black: one dominant coordinate per channel") {
    Image img(16, 16);  // descriptor grid size, so downsampling is the identity
    img.pixels.col(img.index(3, 2)) = Eigen::Vector3f::Ones();
    const Descriptor d = describe(img);
    // hand arithmetic: white cell carries 255/256 per channel after centering,
    // the others -1/256; the norm over 3 channels is sqrt(3*255/256)
    const double dominant = (255.0 / 256.0) / std::sqrt(3.0 * 255.0 / 256.0);
    const double rest = (-1.0 / 256.0) / std::sqrt(3.0 * 255.0 / 256.0);
    const int base = (2 * 16 + 3) * 3;
    for (int c = 0; c < 3; ++c) {
        CHECK(d.values[base + c] == doctest::Approx(dominant).epsilon(1e-12));
        CHECK(d.values[(5 * 16 + 9) * 3 + c] == doctest::Approx(rest).epsilon(1e-12));
    }
    CHECK(dominant == doctest::Approx(0.576221528).epsilon(1e-8));
}

TEST_CASE("dissimilarity endpoint and symmetry cases") {
    Eigen::VectorXd e0 = Eigen::VectorXd::Zero(8), e1 = Eigen::VectorXd::Zero(8);
    e0[0] = 1.0;
    e1[1] = 1.0;
    const Descriptor a(e0), b(e1), na(Eigen::VectorXd(-e0));
    CHECK(dissimilarity(a, a) == 0.0);
    CHECK(dissimilarity(a, na) == 1.0);
    CHECK(dissimilarity(a, b) == 0.5);
    CHECK(dissimilarity(a, b) == dissimilarity(b, a));
    const Descriptor wrong(Eigen::VectorXd::Ones(4));
    CHECK_THROWS_AS(dissimilarity(a, wrong), std::invalid_argument);
}

TEST_CASE("detection probability complements dissimilarity") {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(8);
    v[0] = 0.4;
    v[1] = std::sqrt(1.0 - 0.16);
    Eigen::VectorXd e0 = Eigen::VectorXd::Zero(8);
    e0[0] = 1.0;
    const Descriptor goal(e0), obs(v);
    CHECK(dissimilarity(goal, obs) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(detection_prob(goal, obs) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(detection_prob(goal, goal) == 1.0);
    CHECK(detection_prob(goal, Descriptor(Eigen::VectorXd(-e0))) == 0.0);
}

TEST_CASE("dissimilarity stays in [0,1] for random descriptor pairs") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 500; ++i) {
        Eigen::VectorXd u(16), v(16);
        for (int j = 0; j < 16; ++j) {
            u[j] = normal(rng);
            v[j] = normal(rng);
        }
        const Descriptor a(u), b(v);
        const double d = dissimilarity(a, b);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        CHECK(d == dissimilarity(b, a));
    }
}

TEST_CASE("dissimilarity is mostly non-increasing along a straight approach") {
    const Task task = make_task(Difficulty::Easy, 12345);
    const Camera cam = Camera::from_fov(256, 192, 80.0 * M_PI / 180.0);
    const Descriptor goal = describe(render(task.scene, cam, task.scene.goal_pose));

    const Pose g = task.scene.goal_pose;
    const Vec2 dir(std::cos(g.theta), std::sin(g.theta));
    const int samples = 30;
    int improving = 0;
    double prev = 0.0;
    for (int k = 0; k <= samples; ++k) {
        const double back = 3.0 * (1.0 - double(k) / samples);
        const Pose p(g.x - back * dir.x(), g.y - back * dir.y(), g.z, g.theta);
        const double d = dissimilarity(goal, describe(render(task.scene, cam, p)));
        if (k > 0 && d <= prev + 1e-9) ++improving;
        prev = d;
    }
    CHECK(improving >= int(0.8 * samples));
}
