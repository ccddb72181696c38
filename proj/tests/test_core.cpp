#include <random>

#include "beings/core.hpp"
#include "beings/rng.hpp"
#include "doctest.h"

using namespace beings;

TEST_CASE("wrap_angle basics") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(wrap_angle(2.0 * M_PI) == doctest::Approx(0.0));
    CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
}

TEST_CASE("wrap_angle is idempotent and congruent mod 2pi") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const double theta = uniform_range(rng, -50.0, 50.0);
        const double w = wrap_angle(theta);
        CHECK(w > -M_PI);
        CHECK(w <= M_PI);
        CHECK(wrap_angle(w) == w);
        // congruence: difference is an integer multiple of 2pi
        const double k = (theta - w) / (2.0 * M_PI);
        CHECK(std::abs(k - std::round(k)) < 1e-9);
    }
}

TEST_CASE("cell_index examples") {
    const CellGrid grid(Vec2(0, 0), 1.0, 10, 10);
    CHECK(cell_index(grid, Pose(0.5, 0.5, 1, 0)) == 0);
    CHECK(cell_index(grid, Pose(9.9, 9.9, 1, 0)) == 99);
    CHECK(cell_index(grid, Pose(3.2, 7.8, 1, 0)) == 73);  // 7*10 + 3
    CHECK_THROWS_AS(cell_index(grid, Pose(-0.1, 5, 1, 0)), std::out_of_range);
    CHECK_THROWS_AS(cell_index(grid, Pose(5, 10.5, 1, 0)), std::out_of_range);
    // far edge closes into the last row/column
    CHECK(cell_index(grid, Pose(10.0, 10.0, 1, 0)) == 99);
}

TEST_CASE("cell_index marginalizes z and theta") {
    const CellGrid grid(Vec2(-2, 3), 0.5, 8, 6);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const double x = uniform_range(rng, -2.0, 2.0);
        const double y = uniform_range(rng, 3.0, 6.0);
        const int base = cell_index(grid, Pose(x, y, 0, 0));
        CHECK(cell_index(grid, Pose(x, y, uniform_range(rng, -5, 5),
                                    uniform_range(rng, -3, 3))) == base);
    }
}

TEST_CASE("cells partition the footprint") {
    const CellGrid grid(Vec2(1, 2), 0.7, 5, 4);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const double x = uniform_range(rng, 1.0, 1.0 + grid.width());
        const double y = uniform_range(rng, 2.0, 2.0 + grid.height());
        const int idx = cell_index(grid, Pose(x, y, 0, 0));
        CHECK(idx >= 0);
        CHECK(idx < grid.cell_count());
        // the reported cell actually contains the point (with edge closure)
        const Vec2 c = cell_center(grid, idx);
        CHECK(std::abs(c.x() - x) <= grid.cell_size / 2 + 1e-12);
        CHECK(std::abs(c.y() - y) <= grid.cell_size / 2 + 1e-12);
    }
}

TEST_CASE("pose wraps theta at construction") {
    CHECK(Pose(0, 0, 0, 3 * M_PI).theta == doctest::Approx(M_PI));
    CHECK(Pose(0, 0, 0, -M_PI).theta == doctest::Approx(M_PI));
}

TEST_CASE("image and descriptor invariants") {
    Image img = Image::filled(8, 8, {0.25f, 0.5f, 0.75f});
    CHECK(img.pixels.cols() == 64);
    CHECK(img.at(3, 2).y() == doctest::Approx(0.5f));
    CHECK_THROWS_AS(Image(0, 4), std::invalid_argument);

    Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
    v[1] = 2.0;
    const Descriptor d(v);
    CHECK(d.values.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(Descriptor(Eigen::VectorXd::Zero(4)), std::invalid_argument);
}
