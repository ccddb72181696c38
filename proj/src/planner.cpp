#include "beings/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace beings {

ControlInput sample_input(std::mt19937_64& rng, const ControlBounds& bounds) {
    const int k = uniform_int(rng, 8);
    const Channel channel = static_cast<Channel>(k >> 1);
    const double sign = (k & 1) ? -1.0 : 1.0;
    return {channel, sign * uniform_open0(rng, bounds.limit(channel))};
}

RolloutEnsemble init_ensemble(const PlannerConfig& cfg) {
    if (cfg.rollouts < 2 || cfg.horizon < 1)
        throw std::invalid_argument("init_ensemble: need rollouts >= 2 and horizon >= 1");
    RolloutEnsemble e;
    e.rng.seed(cfg.seed);
    e.sequences.resize(cfg.rollouts);
    for (auto& seq : e.sequences) {
        seq.inputs.resize(cfg.horizon);
        for (auto& u : seq.inputs) u = sample_input(e.rng, cfg.bounds);
    }
    e.weights = Eigen::VectorXd::Constant(cfg.rollouts, 1.0 / cfg.rollouts);
    return e;
}

Eigen::VectorXd normalize_weights(const Eigen::VectorXd& costs, double temperature) {
    if (!(temperature > 0.0)) throw std::invalid_argument("normalize_weights: temperature <= 0");
    const int n = static_cast<int>(costs.size());
    if (n == 0) throw std::invalid_argument("normalize_weights: empty cost vector");

    std::vector<double> finite;
    finite.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (std::isnan(costs[i])) throw std::invalid_argument("normalize_weights: NaN cost");
        if (std::isfinite(costs[i])) finite.push_back(costs[i]);
    }
    if (finite.empty())
        throw std::runtime_error("normalize_weights: ensemble collapse, all weights zero");

    std::sort(finite.begin(), finite.end());
    const double jmin = finite.front();
    const double median = (finite.size() % 2 == 1)
                              ? finite[finite.size() / 2]
                              : 0.5 * (finite[finite.size() / 2 - 1] + finite[finite.size() / 2]);
    const double tau = std::max(temperature, median - jmin);

    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i)
        w[i] = std::isfinite(costs[i]) ? std::exp(-(costs[i] - jmin) / tau) : 0.0;
    const double sum = w.sum();
    if (!(sum > 0.0))
        throw std::runtime_error("normalize_weights: ensemble collapse, all weights zero");
    return w / sum;
}

std::vector<int> systematic_resample(const Eigen::VectorXd& weights, int n, double u01) {
    if (n < 1) throw std::invalid_argument("systematic_resample: n < 1");
    if (!(u01 >= 0.0 && u01 < 1.0))
        throw std::invalid_argument("systematic_resample: u01 outside [0,1)");
    const int m = static_cast<int>(weights.size());
    std::vector<int> ancestors(n);
    double cumulative = weights[0];
    int i = 0;
    for (int j = 0; j < n; ++j) {
        const double threshold = (u01 + j) / n;
        while (threshold > cumulative && i + 1 < m) {
            ++i;
            cumulative += weights[i];
        }
        ancestors[j] = i;
    }
    return ancestors;
}

void score(RolloutEnsemble& ensemble, const Pose& s, const SceneModel& scene,
           const Camera& camera, const Descriptor& goal_desc, const GridBelief& belief,
           const CostConfig& cost_cfg, const PlannerConfig& planner_cfg) {
    const int n = static_cast<int>(ensemble.sequences.size());
    ensemble.costs.resize(n);

    auto eval_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const auto trajectory = propagate(s, ensemble.sequences[i]);
            ensemble.costs[i] = rollout_cost(scene, camera, goal_desc, belief, trajectory,
                                             ensemble.sequences[i], cost_cfg);
        }
    };

    const int threads = std::clamp(planner_cfg.threads, 1, n);
    if (threads == 1) {
        eval_range(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            const int begin = n * t / threads;
            const int end = n * (t + 1) / threads;
            pool.emplace_back(eval_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    ensemble.weights = normalize_weights(ensemble.costs, planner_cfg.temperature);
    ensemble.scored = true;
}

void resample_and_shift(RolloutEnsemble& ensemble, const PlannerConfig& cfg) {
    const int n = static_cast<int>(ensemble.sequences.size());
    const double u = uniform01(ensemble.rng);
    const std::vector<int> ancestors = systematic_resample(ensemble.weights, n, u);

    std::vector<ControlSequence> offspring(n);
    for (int j = 0; j < n; ++j) {
        ControlSequence seq = ensemble.sequences[ancestors[j]];
        seq.inputs.erase(seq.inputs.begin());
        seq.inputs.push_back(sample_input(ensemble.rng, cfg.bounds));
        for (auto& input : seq.inputs) {
            if (uniform01(ensemble.rng) < cfg.mutation_prob) {
                input = sample_input(ensemble.rng, cfg.bounds);
            } else {
                input.magnitude += cfg.magnitude_sigma * normal(ensemble.rng);
                input = clamp_input(input, cfg.bounds);
            }
        }
        offspring[j] = std::move(seq);
    }
    ensemble.sequences = std::move(offspring);
    ensemble.weights = Eigen::VectorXd::Constant(n, 1.0 / n);
    ensemble.scored = false;
    ensemble.costs.resize(0);
}

int best_rollout_index(const RolloutEnsemble& ensemble) {
    if (!ensemble.scored) throw std::logic_error("best_control: ensemble not scored");
    int best = 0;
    for (int i = 1; i < ensemble.weights.size(); ++i)
        if (ensemble.weights[i] > ensemble.weights[best]) best = i;
    return best;
}

ControlInput best_control(const RolloutEnsemble& ensemble) {
    return ensemble.sequences[best_rollout_index(ensemble)].inputs.front();
}

PlanStepResult plan_step(const Pose& s, const Image& measurement, PlannerState& state,
                         const SceneModel& scene, const Camera& planner_camera,
                         const Descriptor& goal_desc, const PlanConfig& cfg) {
    PlanStepResult res;
    res.measured_dissimilarity = dissimilarity(goal_desc, describe(measurement));
    if (res.measured_dissimilarity < cfg.epsilon) {
        res.done = true;
        state.done = true;
        return res;
    }

    if (cfg.use_bayes) {
        if (const auto cell = try_cell_index(state.belief.grid, s)) {
            const double q = 1.0 - res.measured_dissimilarity;
            state.belief = bayes_update(state.belief, *cell, q);
        }
    }

    const int n = static_cast<int>(state.ensemble.sequences.size());
    res.rollouts.reserve(n);
    for (const auto& seq : state.ensemble.sequences) res.rollouts.push_back(propagate(s, seq));

    if (cfg.use_scoring) {
        score(state.ensemble, s, scene, planner_camera, goal_desc, state.belief, cfg.cost,
              cfg.planner);
    } else {
        state.ensemble.weights = Eigen::VectorXd::Constant(n, 1.0 / n);
        state.ensemble.costs = Eigen::VectorXd::Zero(n);
        state.ensemble.scored = true;
    }

    res.best = best_rollout_index(state.ensemble);
    res.weights = state.ensemble.weights;
    res.costs = state.ensemble.costs;
    res.control = state.ensemble.sequences[res.best].inputs.front();
    res.best_cost = state.ensemble.costs[res.best];
    if (cfg.use_scoring) {
        res.best_terminal_dissimilarity = dissimilarity(
            goal_desc, describe(render(scene, planner_camera, res.rollouts[res.best].back())));
    }

    resample_and_shift(state.ensemble, cfg.planner);
    return res;
}

}  // namespace beings
