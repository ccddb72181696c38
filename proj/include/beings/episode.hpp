#pragma once

#include <optional>
#include <string>

#include "beings/planner.hpp"
#include "beings/task.hpp"

namespace beings {

enum class Strategy { BEINGS, Directly, Random, BayesOnly, MCMPCOnly };

std::string to_string(Strategy s);
std::string to_string(Difficulty d);
std::optional<Strategy> strategy_from_string(const std::string& name);
std::optional<Difficulty> difficulty_from_string(const std::string& name);

struct EpisodeConfig {
    Difficulty difficulty = Difficulty::Easy;
    std::string scene_path;                // when set, overrides difficulty
    std::optional<Pose> start_pose;        // required with scene_path
    Strategy strategy = Strategy::BEINGS;
    int max_steps = 50;
    double epsilon = 0.05;
    int trials = 50;
    std::uint64_t seed = 0;
    double cell_size = 1.0;
    int batch_threads = 1;
    PlannerConfig planner;
    CostConfig cost;
    Camera measurement_camera = Camera::from_fov(256, 192, 110.0 * M_PI / 180.0);
    Camera planner_camera = Camera::from_fov(64, 48, 110.0 * M_PI / 180.0);
};

struct StepRecord {
    int step = 0;
    Pose pose;                    // pose after executing the control
    ControlInput control;
    double step_cost = 0.0;
    double dissimilarity = 0.0;   // measured at the pre-step pose
    bool collided = false;
    Eigen::VectorXd belief;       // post-update masses
    Eigen::VectorXd weights;
    std::vector<std::vector<Pose>> rollouts;
    int best_rollout = -1;
};

struct EpisodeResult {
    bool success = false;
    int steps = 0;
    double total_cost = 0.0;
    Pose final_pose;
    double ne = 0.0;       // final distance to the goal position
    double min_ne = 0.0;   // minimum distance over the executed trajectory
    int collisions = 0;
    double final_dissimilarity = 1.0;
    std::vector<Pose> trajectory;  // starts with the initial pose
    std::vector<Eigen::VectorXd> belief_snapshots;
    std::vector<StepRecord> records;
    std::string diagnostic;
};

struct EpisodeRun {
    Task task;
    EpisodeResult result;
};

// Greedy baseline: yaw toward the center of the argmax-mass cell, then
// translate toward it, ignoring obstacles.
ControlInput strategy_directly(const SceneModel& scene, const GridBelief& belief, const Pose& s,
                               const ControlBounds& bounds);

// Runs measure -> plan -> execute until the measured dissimilarity drops
// below epsilon or max_steps controls have been executed. Executed poses are
// clamped to the arena bounds; obstacle pass-through is penalized, not
// blocked.
EpisodeResult run_episode(const EpisodeConfig& cfg, const Task& task);
EpisodeRun run_episode(const EpisodeConfig& cfg);

struct BatchSummary {
    double sr = 0.0;
    double spc = 0.0;
    double ne_mean = 0.0;
    int ns_min = -1;       // -1 when no trial succeeded
    double ns_mean = -1.0;
    int trials = 0;
};

// Header "SR,SPC,NE,NS_min,NS_mean" plus one data row.
std::string batch_csv(const BatchSummary& summary);

// Independent trials with per-trial task and planner seeds derived from
// cfg.seed. Runs trials in parallel across cfg.batch_threads; aggregation is
// a fixed-order reduction, so results are identical for any thread count.
BatchSummary run_batch(const EpisodeConfig& cfg, std::vector<EpisodeRun>* episodes = nullptr);

}  // namespace beings
