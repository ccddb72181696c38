#include <random>

#include "beings/belief.hpp"
#include "beings/rng.hpp"
#include "doctest.h"

using namespace beings;

namespace {

CellGrid small_grid(int nx, int ny) { return CellGrid(Vec2(0, 0), 1.0, nx, ny); }

// independent oracle: explicit joint likelihood of the whole observation
// history (miss probability 1-q in the observed cell, 1 elsewhere), applied
// to the prior in one shot and renormalized
Eigen::VectorXd posterior_oracle(const Eigen::VectorXd& prior,
                                 const std::vector<std::pair<int, double>>& observations) {
    Eigen::VectorXd like = Eigen::VectorXd::Ones(prior.size());
    for (const auto& [cell, q] : observations) like[cell] *= 1.0 - std::min(q, 1.0 - 1e-6);
    const Eigen::VectorXd joint = prior.cwiseProduct(like);
    return joint / joint.sum();
}

}  // namespace

TEST_CASE("init_uniform") {
    CHECK(init_uniform(small_grid(2, 2)).masses.isApproxToConstant(0.25));
    CHECK(init_uniform(small_grid(1, 1)).masses[0] == 1.0);
    const auto b = init_uniform(small_grid(10, 10));
    CHECK(b.masses.size() == 100);
    CHECK(b.masses[57] == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("init_with_masses validates") {
    Eigen::VectorXd m(4);
    m << 0.1, 0.2, 0.3, 0.4;
    CHECK(init_with_masses(small_grid(2, 2), m).masses == m);
    m << 0.5, 0.2, 0.3, 0.4;
    CHECK_THROWS_AS(init_with_masses(small_grid(2, 2), m), std::invalid_argument);
    CHECK_THROWS_AS(init_with_masses(small_grid(3, 2), m), std::invalid_argument);
}

TEST_CASE("bayes_update hand-computed case") {
    // uniform M=4, observed cell 0, q = 0.5: denominator 1 - 0.25*0.5 = 0.875
    const auto b = bayes_update(init_uniform(small_grid(2, 2)), 0, 0.5);
    CHECK(b.masses[0] == doctest::Approx(0.25 * 0.5 / 0.875).epsilon(1e-12));
    CHECK(b.masses[0] == doctest::Approx(0.1428571428571428).epsilon(1e-12));
    for (int i = 1; i < 4; ++i)
        CHECK(b.masses[i] == doctest::Approx(0.2857142857142857).epsilon(1e-12));
    CHECK(b.masses.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bayes_update trivial cases") {
    const auto uniform = init_uniform(small_grid(2, 2));
    CHECK(bayes_update(uniform, 2, 0.0).masses == uniform.masses);

    Eigen::VectorXd m(4);
    m << 0.0, 0.5, 0.25, 0.25;
    const auto zero_prior = init_with_masses(small_grid(2, 2), m);
    const auto updated = bayes_update(zero_prior, 0, 0.9);
    CHECK(updated.masses.isApprox(zero_prior.masses, 1e-15));
}

TEST_CASE("bayes_update argument and degeneracy errors") {
    const auto b = init_uniform(small_grid(2, 2));
    CHECK_THROWS_AS(bayes_update(b, 0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(bayes_update(b, 0, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(bayes_update(b, 0, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(bayes_update(b, 7, 0.5), std::out_of_range);

    // certain detection at a certain prior, yet the target was not found
    Eigen::VectorXd one_hot(4);
    one_hot << 1.0, 0.0, 0.0, 0.0;
    const auto certain = init_with_masses(small_grid(2, 2), one_hot);
    CHECK_THROWS_AS(bayes_update(certain, 0, 1.0), std::runtime_error);
    CHECK_NOTHROW(bayes_update(certain, 0, 0.5));
}

TEST_CASE("normalization is preserved across long update sequences") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const int nx = 1 + uniform_int(rng, 10);
        const int ny = 1 + uniform_int(rng, 10);
        GridBelief b = init_uniform(small_grid(nx, ny));
        for (int k = 0; k < 200; ++k) {
            const int cell = uniform_int(rng, nx * ny);
            const double q = uniform_range(rng, 0.0, 1.0 - 1e-6);
            b = bayes_update(b, cell, q);
            CHECK(std::abs(b.masses.sum() - 1.0) < 1e-9);
            CHECK((b.masses.array() >= 0.0).all());
        }
    }
}

TEST_CASE("monotone evidence") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::VectorXd m(6);
        for (int i = 0; i < 6; ++i) m[i] = 0.05 + uniform01(rng);
        m /= m.sum();
        const auto b = init_with_masses(small_grid(3, 2), m);
        const int cell = uniform_int(rng, 6);
        const double q = uniform_range(rng, 0.01, 0.99);
        const auto after = bayes_update(b, cell, q);
        CHECK(after.masses[cell] < b.masses[cell]);
        for (int i = 0; i < 6; ++i)
            if (i != cell) CHECK(after.masses[i] > b.masses[i]);
    }
}

TEST_CASE("updates on different cells commute") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        GridBelief b = init_uniform(small_grid(3, 3));
        const int c1 = uniform_int(rng, 9);
        int c2 = uniform_int(rng, 9);
        if (c2 == c1) c2 = (c2 + 1) % 9;
        const double q1 = uniform_range(rng, 0.0, 0.99);
        const double q2 = uniform_range(rng, 0.0, 0.99);
        const auto ab = bayes_update(bayes_update(b, c1, q1), c2, q2);
        const auto ba = bayes_update(bayes_update(b, c2, q2), c1, q1);
        CHECK((ab.masses - ba.masses).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("sequential updates match the joint-likelihood oracle") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const int nx = 1 + uniform_int(rng, 5);
        const int ny = 1 + uniform_int(rng, 2);  // M <= 10
        const int m = nx * ny;
        Eigen::VectorXd prior(m);
        for (int i = 0; i < m; ++i) prior[i] = 0.05 + uniform01(rng);
        prior /= prior.sum();

        GridBelief b = init_with_masses(small_grid(nx, ny), prior);
        std::vector<std::pair<int, double>> history;
        for (int k = 0; k < 30; ++k) {
            const int cell = uniform_int(rng, m);
            const double q = uniform_range(rng, 0.0, 1.0 - 1e-6);
            history.emplace_back(cell, q);
            b = bayes_update(b, cell, q);
        }
        const Eigen::VectorXd expect = posterior_oracle(prior, history);
        CHECK((b.masses - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("prob_mass") {
    const auto uniform = init_uniform(small_grid(10, 10));
    CHECK(prob_mass(uniform, Pose(3.7, 8.1, 1, 0.4)) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(prob_mass(uniform, Pose(-1, 5, 0, 0)) == 0.0);

    const auto updated = bayes_update(init_uniform(small_grid(2, 2)), 0, 0.5);
    CHECK(prob_mass(updated, Pose(0.5, 0.5, 0, 0)) ==
          doctest::Approx(0.1428571428571428).epsilon(1e-12));
}
