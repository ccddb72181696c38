#pragma once

#include <random>
#include <vector>

#include "beings/cost.hpp"
#include "beings/rng.hpp"

namespace beings {

struct PlannerConfig {
    int rollouts = 32;             // N
    int horizon = 5;               // K
    double mutation_prob = 0.2;
    double magnitude_sigma = 0.15;  // m or rad
    std::uint64_t seed = 0;
    ControlBounds bounds;
    double temperature = 1.0;
    int threads = 1;
};

// Particle representation of the control distribution: N control sequences
// with normalized weights.
struct RolloutEnsemble {
    std::vector<ControlSequence> sequences;
    Eigen::VectorXd weights;
    std::mt19937_64 rng;
    bool scored = false;
    Eigen::VectorXd costs;  // diagnostics from the last score() call
};

// One control draw: channel uniform over {VX+-, VY+-, VZ+-, YAW+-},
// magnitude uniform in (0, bound].
ControlInput sample_input(std::mt19937_64& rng, const ControlBounds& bounds);

// N random sequences of length K with uniform weights. Same seed, same ensemble.
RolloutEnsemble init_ensemble(const PlannerConfig& cfg);

// Softmax of -costs. Costs are shifted by the batch minimum and divided by
// max(temperature, median - min) over the finite costs, which keeps weight
// ratios exact for small spreads and prevents total underflow for large ones;
// neither transform changes the argmax. Infinite costs get weight 0; throws
// if every weight vanishes.
Eigen::VectorXd normalize_weights(const Eigen::VectorXd& costs, double temperature);

// Systematic resampling: thresholds (u + j)/n against the weight CDF. The
// offspring count of particle i is floor(n*W_i) or ceil(n*W_i).
std::vector<int> systematic_resample(const Eigen::VectorXd& weights, int n, double u01);

// Scores every rollout from start pose s with rollout_cost and stores
// normalized weights. Rollout evaluation parallelizes across
// planner_cfg.threads; results are bit-identical for any thread count.
void score(RolloutEnsemble& ensemble, const Pose& s, const SceneModel& scene,
           const Camera& camera, const Descriptor& goal_desc, const GridBelief& belief,
           const CostConfig& cost_cfg, const PlannerConfig& planner_cfg);

// Draw N survivors proportional to weight, shift each one step (drop the
// first input, append a fresh draw), then mutate: every input is replaced
// with probability mutation_prob, surviving magnitudes get zero-mean noise of
// scale magnitude_sigma and are clamped to bounds. Weights reset to uniform.
void resample_and_shift(RolloutEnsemble& ensemble, const PlannerConfig& cfg);

int best_rollout_index(const RolloutEnsemble& ensemble);

// First input of the maximum-weight sequence; ties break to the lowest
// rollout index. Throws if the ensemble has not been scored.
ControlInput best_control(const RolloutEnsemble& ensemble);

struct PlannerState {
    RolloutEnsemble ensemble;
    GridBelief belief;
    bool done = false;
};

struct PlanConfig {
    PlannerConfig planner;
    CostConfig cost;
    double epsilon = 0.05;   // success threshold on the measured dissimilarity
    bool use_scoring = true; // false: uniform weights (scoring ablated)
    bool use_bayes = true;   // false: belief frozen (estimator ablated)
};

struct PlanStepResult {
    bool done = false;
    ControlInput control;
    double measured_dissimilarity = 0.0;
    Eigen::VectorXd weights;
    Eigen::VectorXd costs;
    std::vector<std::vector<Pose>> rollouts;  // trajectories scored this step
    int best = -1;
    double best_cost = 0.0;
    double best_terminal_dissimilarity = 0.0;
};

// One control step: check the success threshold on the real measurement,
// apply the Bayesian update from it, score the ensemble against the updated
// belief, pick the control to execute, and resample/shift the ensemble for
// the next step. Rollout images never touch the belief.
PlanStepResult plan_step(const Pose& s, const Image& measurement, PlannerState& state,
                         const SceneModel& scene, const Camera& planner_camera,
                         const Descriptor& goal_desc, const PlanConfig& cfg);

}  // namespace beings
