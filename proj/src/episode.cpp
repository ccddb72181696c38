#include "beings/episode.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "beings/astar.hpp"
#include "beings/scene.hpp"

namespace beings {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::BEINGS: return "beings";
        case Strategy::Directly: return "directly";
        case Strategy::Random: return "random";
        case Strategy::BayesOnly: return "bayes-only";
        case Strategy::MCMPCOnly: return "mcmpc-only";
    }
    return "?";
}

std::string to_string(Difficulty d) {
    switch (d) {
        case Difficulty::Easy: return "easy";
        case Difficulty::Medium: return "medium";
        case Difficulty::Hard: return "hard";
    }
    return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
    if (name == "beings") return Strategy::BEINGS;
    if (name == "directly") return Strategy::Directly;
    if (name == "random") return Strategy::Random;
    if (name == "bayes-only") return Strategy::BayesOnly;
    if (name == "mcmpc-only") return Strategy::MCMPCOnly;
    return std::nullopt;
}

std::optional<Difficulty> difficulty_from_string(const std::string& name) {
    if (name == "easy") return Difficulty::Easy;
    if (name == "medium") return Difficulty::Medium;
    if (name == "hard") return Difficulty::Hard;
    return std::nullopt;
}

ControlInput strategy_directly(const SceneModel& /*scene*/, const GridBelief& belief,
                               const Pose& s, const ControlBounds& bounds) {
    int best = 0;
    for (int i = 1; i < belief.masses.size(); ++i)
        if (belief.masses[i] > belief.masses[best]) best = i;
    const Vec2 target = cell_center(belief.grid, best);
    const Vec2 delta = target - s.xy();
    const double dist = delta.norm();
    if (dist < 0.05) return {Channel::VX, 0.0};
    const double dyaw = wrap_angle(std::atan2(delta.y(), delta.x()) - s.theta);
    if (std::abs(dyaw) > 0.1)
        return {Channel::YAW, std::clamp(dyaw, -bounds.yaw, bounds.yaw)};
    return {Channel::VX, std::min(dist, bounds.translation)};
}

namespace {

Pose clamp_to_bounds(const SceneModel& scene, const Pose& p) {
    return Pose(std::clamp(p.x, scene.bounds.min().x(), scene.bounds.max().x()),
                std::clamp(p.y, scene.bounds.min().y(), scene.bounds.max().y()),
                std::clamp(p.z, scene.bounds.min().z(), scene.bounds.max().z()), p.theta);
}

}  // namespace

EpisodeResult run_episode(const EpisodeConfig& cfg, const Task& task) {
    const SceneModel& scene = task.scene;
    const Descriptor goal_desc =
        describe(render(scene, cfg.measurement_camera, scene.goal_pose));

    PlanConfig pc;
    pc.planner = cfg.planner;
    pc.cost = cfg.cost;
    pc.epsilon = cfg.epsilon;
    pc.use_scoring = cfg.strategy == Strategy::BEINGS || cfg.strategy == Strategy::MCMPCOnly;
    pc.use_bayes = cfg.strategy == Strategy::BEINGS || cfg.strategy == Strategy::BayesOnly ||
                   cfg.strategy == Strategy::Directly;

    PlannerState state;
    state.belief = init_uniform(grid_for_scene(scene, cfg.cell_size));
    if (cfg.strategy != Strategy::Directly) state.ensemble = init_ensemble(cfg.planner);

    EpisodeResult result;
    Pose s = task.start;
    result.trajectory.push_back(s);
    const Vec3 goal_pos = scene.goal_pose.position();
    result.min_ne = (s.position() - goal_pos).norm();

    try {
        while (true) {
            const Image measurement = render(scene, cfg.measurement_camera, s);
            ControlInput u;
            StepRecord rec;
            if (cfg.strategy == Strategy::Directly) {
                const double d = dissimilarity(goal_desc, describe(measurement));
                result.final_dissimilarity = d;
                rec.dissimilarity = d;
                if (d < cfg.epsilon) {
                    result.success = true;
                    break;
                }
                if (const auto cell = try_cell_index(state.belief.grid, s))
                    state.belief = bayes_update(state.belief, *cell, 1.0 - d);
                u = strategy_directly(scene, state.belief, s, cfg.planner.bounds);
            } else {
                const PlanStepResult res =
                    plan_step(s, measurement, state, scene, cfg.planner_camera, goal_desc, pc);
                result.final_dissimilarity = res.measured_dissimilarity;
                rec.dissimilarity = res.measured_dissimilarity;
                if (res.done) {
                    result.success = true;
                    break;
                }
                u = res.control;
                rec.weights = res.weights;
                rec.rollouts = res.rollouts;
                rec.best_rollout = res.best;
            }
            if (result.steps >= cfg.max_steps) break;

            const Pose s_next = clamp_to_bounds(scene, step(s, u));
            const double c = movement_cost(scene, s, s_next, cfg.cost);
            const bool collided = segment_collides(scene, s, s_next, cfg.cost.robot_radius);

            rec.step = result.steps;
            rec.pose = s_next;
            rec.control = u;
            rec.step_cost = c;
            rec.collided = collided;
            rec.belief = state.belief.masses;

            result.total_cost += c;
            result.collisions += collided ? 1 : 0;
            result.trajectory.push_back(s_next);
            result.belief_snapshots.push_back(state.belief.masses);
            result.records.push_back(std::move(rec));
            ++result.steps;
            s = s_next;
            result.min_ne = std::min(result.min_ne, (s.position() - goal_pos).norm());
        }
    } catch (const std::runtime_error& e) {
        result.success = false;
        result.diagnostic = e.what();
    }

    result.final_pose = s;
    result.ne = (s.position() - goal_pos).norm();
    return result;
}

EpisodeRun run_episode(const EpisodeConfig& cfg) {
    Task task;
    if (!cfg.scene_path.empty()) {
        task.scene = load_scene(cfg.scene_path);
        if (!cfg.start_pose)
            throw std::invalid_argument("run_episode: custom scene requires a start pose");
        task.start = *cfg.start_pose;
    } else {
        task = make_task(cfg.difficulty, cfg.seed);
    }
    EpisodeRun run{std::move(task), {}};
    run.result = run_episode(cfg, run.task);
    return run;
}

std::string batch_csv(const BatchSummary& b) {
    std::ostringstream out;
    out << "SR,SPC,NE,NS_min,NS_mean\n";
    out.precision(10);
    out << b.sr << "," << b.spc << "," << b.ne_mean << "," << b.ns_min << "," << b.ns_mean
        << "\n";
    return out.str();
}

BatchSummary run_batch(const EpisodeConfig& cfg, std::vector<EpisodeRun>* episodes) {
    if (cfg.trials < 1) throw std::invalid_argument("run_batch: trials must be >= 1");

    std::vector<EpisodeRun> runs(cfg.trials);
    auto run_trial = [&](int i) {
        EpisodeConfig tc = cfg;
        tc.planner.seed = derive_seed(cfg.seed, 2 * i + 1);
        tc.seed = derive_seed(cfg.seed, 2 * i);
        runs[i] = run_episode(tc);
    };

    const int threads = std::clamp(cfg.batch_threads, 1, cfg.trials);
    if (threads == 1) {
        for (int i = 0; i < cfg.trials; ++i) run_trial(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < cfg.trials; i = next.fetch_add(1))
                    run_trial(i);
            });
        for (auto& th : pool) th.join();
    }

    BatchSummary summary;
    summary.trials = cfg.trials;
    int successes = 0;
    double spc_sum = 0.0, ne_sum = 0.0, ns_sum = 0.0;
    int ns_min = std::numeric_limits<int>::max();
    for (const auto& run : runs) {
        const auto& r = run.result;
        ne_sum += r.ne;
        if (!r.success) continue;
        ++successes;
        ns_sum += r.steps;
        ns_min = std::min(ns_min, r.steps);
        const double optimal =
            cfg.cost.distance_rate *
            shortest_path_length(run.task.scene, run.task.start.xy(),
                                 run.task.scene.goal_pose.xy(), cfg.cost.robot_radius);
        const double denom = std::max(r.total_cost, optimal);
        spc_sum += denom <= 1e-12 ? 1.0 : optimal / denom;
    }
    summary.sr = double(successes) / cfg.trials;
    summary.spc = spc_sum / cfg.trials;
    summary.ne_mean = ne_sum / cfg.trials;
    summary.ns_min = successes > 0 ? ns_min : -1;
    summary.ns_mean = successes > 0 ? ns_sum / successes : -1.0;

    if (episodes != nullptr) *episodes = std::move(runs);
    return summary;
}

}  // namespace beings
